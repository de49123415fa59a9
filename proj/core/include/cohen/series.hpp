#pragma once

#include <vector>

#include "cohen/scalar.hpp"

namespace cohen {

/// Truncated univariate series sum_{j <= order} c_j theta^j.
class ThetaSeries {
 public:
  ThetaSeries() : ThetaSeries(0) {}
  explicit ThetaSeries(int order);

  static ThetaSeries one(int order);

  int order() const noexcept { return order_; }
  const ScalarSum& coefficient(int j) const;
  void set(int j, ScalarSum c);
  bool is_zero() const;

  ThetaSeries truncated(int order) const;
  /// Value of d^k/dtheta^k at theta = 0, i.e. k! c_k.
  ScalarSum derivative_at_zero(int k) const;
  /// Multiplicative inverse; requires c_0 == 1.
  ThetaSeries inverse() const;
  ThetaSeries pow(int exponent) const;

  ThetaSeries& operator+=(const ThetaSeries& o);
  ThetaSeries& operator-=(const ThetaSeries& o);
  ThetaSeries& operator*=(const ScalarSum& s);

  friend ThetaSeries operator+(ThetaSeries a, const ThetaSeries& b) { return a += b; }
  friend ThetaSeries operator-(ThetaSeries a, const ThetaSeries& b) { return a -= b; }
  friend ThetaSeries operator*(const ThetaSeries& a, const ThetaSeries& b);
  friend ThetaSeries operator*(ThetaSeries a, const ScalarSum& s) { return a *= s; }
  friend bool operator==(const ThetaSeries& a, const ThetaSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

 private:
  int order_;
  std::vector<ScalarSum> c_;
};

/// Truncated bivariate Taylor series of a kernel at the origin:
/// f(theta, tau) ~ sum_{j + k <= order} c_jk theta^j tau^k.
///
/// `marginal()` records whether the exact kernel satisfies
/// f(0, tau) = f(theta, 0) = 1; it is a property of the kernel, not of the
/// truncated data, but the data must agree with it.
class KernelSeries {
 public:
  KernelSeries() : KernelSeries(0) {}
  explicit KernelSeries(int order, bool marginal = false);

  static KernelSeries one(int order);

  int order() const noexcept { return order_; }
  bool marginal() const noexcept { return marginal_; }
  void set_marginal(bool marginal) { marginal_ = marginal; }

  const ScalarSum& coefficient(int j, int k) const;
  void set(int j, int k, ScalarSum c);

  /// a_k(theta) = sum_j c_jk theta^j, truncated at theta order `order() - k`.
  ThetaSeries tau_slice(int k) const;
  /// True when c_j0 = c_0k = 0 for all j, k >= 1 in the stored data.
  bool data_satisfies_marginal_condition() const;

  KernelSeries truncated(int order) const;

  KernelSeries& operator+=(const KernelSeries& o);
  KernelSeries& operator*=(const ScalarSum& s);

  friend KernelSeries operator+(KernelSeries a, const KernelSeries& b) { return a += b; }
  friend KernelSeries operator*(const KernelSeries& a, const KernelSeries& b);
  friend KernelSeries operator*(KernelSeries a, const ScalarSum& s) { return a *= s; }
  friend bool operator==(const KernelSeries& a, const KernelSeries& b) {
    return a.order_ == b.order_ && a.marginal_ == b.marginal_ && a.c_ == b.c_;
  }

 private:
  std::size_t index(int j, int k) const;

  int order_;
  bool marginal_;
  std::vector<ScalarSum> c_;  // triangular, grouped by total degree
};

}  // namespace cohen
