#pragma once

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <map>
#include <optional>
#include <string>

namespace cohen {

using Rational = mpq_class;

/// Exact complex number with rational real and imaginary parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im = 0);

  static GaussianRational i() { return {0, 1}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  GaussianRational reciprocal() const;
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_ = 0;
  Rational im_ = 0;
};

/// i^k for any integer k.
GaussianRational i_pow(long k);

/// Powers of hbar and of 2*pi attached to a coefficient.
struct Grade {
  int hbar = 0;
  int twopi = 0;

  friend auto operator<=>(const Grade&, const Grade&) = default;
  friend Grade operator+(Grade a, Grade b) { return {a.hbar + b.hbar, a.twopi + b.twopi}; }
};

/// A single graded coefficient: value * hbar^grade.hbar * (2 pi)^grade.twopi.
struct Scalar {
  GaussianRational value;
  Grade grade;
};

/// Finite sum of graded coefficients. No zero entries are ever stored, so the
/// default-constructed sum is the canonical zero.
class ScalarSum {
 public:
  using Map = std::map<Grade, GaussianRational>;

  ScalarSum() = default;
  ScalarSum(GaussianRational value, Grade grade = {});  // NOLINT(google-explicit-constructor)
  ScalarSum(long value) : ScalarSum(GaussianRational(value)) {}  // NOLINT(google-explicit-constructor)
  ScalarSum(const Scalar& s) : ScalarSum(s.value, s.grade) {}  // NOLINT(google-explicit-constructor)

  static ScalarSum hbar(int power = 1) { return {GaussianRational(1), Grade{power, 0}}; }
  /// Planck's constant h = 2 pi hbar, raised to `power`.
  static ScalarSum planck(int power = 1) { return {GaussianRational(1), Grade{power, power}}; }

  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of a given grade (zero when absent).
  GaussianRational at(Grade g) const;
  /// The single graded term, if this sum has exactly one.
  std::optional<Scalar> as_scalar() const;

  ScalarSum conj() const;
  /// Inverse of a single-term sum; throws DomainError otherwise.
  ScalarSum reciprocal() const;
  std::complex<double> evaluate(double hbar) const;

  void add(const GaussianRational& value, Grade grade);

  ScalarSum& operator+=(const ScalarSum& o);
  ScalarSum& operator-=(const ScalarSum& o);
  ScalarSum& operator*=(const ScalarSum& o);
  ScalarSum& operator*=(const GaussianRational& c);

  friend ScalarSum operator+(ScalarSum a, const ScalarSum& b) { return a += b; }
  friend ScalarSum operator-(ScalarSum a, const ScalarSum& b) { return a -= b; }
  friend ScalarSum operator*(const ScalarSum& a, const ScalarSum& b);
  friend ScalarSum operator*(ScalarSum a, const GaussianRational& c) { return a *= c; }
  friend ScalarSum operator*(const GaussianRational& c, ScalarSum a) { return a *= c; }
  friend ScalarSum operator-(const ScalarSum& a);
  friend bool operator==(const ScalarSum& a, const ScalarSum& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

/// Addition of two single-grade scalars; throws DomainError when grades differ.
Scalar add_same_grade(const Scalar& a, const Scalar& b);

/// n! and binomial(n, k) as exact integers.
Rational factorial(int n);
Rational binomial(int n, int k);

/// "a" or "a/b" in lowest terms.
std::string to_string(const Rational& r);

}  // namespace cohen
