#pragma once

#include <complex>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cohen/scalar.hpp"
#include "cohen/series.hpp"

namespace cohen {

enum class KernelKind {
  weyl,              // 1
  rivier_cos,        // cos(theta tau hbar / 2)
  born_jordan_sinc,  // 2 sin(theta tau hbar / 2) / (theta tau hbar)
  standard,          // exp(-i theta tau hbar / 2)
  antistandard,      // exp(+i theta tau hbar / 2)
  sudarshan_p,       // exp(+hbar/4 [(tau lambda)^2 + (theta / lambda)^2])
  husimi_q,          // exp(-hbar/4 [(tau lambda)^2 + (theta / lambda)^2])
  custom,
};

/// A Cohen kernel f(theta, tau): one of the tabulated closed forms, or a custom
/// series. Custom kernels are either exact polynomials (every coefficient past
/// the stored order is zero) or truncated series that cannot be extended.
class KernelSpec {
 public:
  static KernelSpec weyl() { return KernelSpec(KernelKind::weyl); }
  static KernelSpec rivier_cos() { return KernelSpec(KernelKind::rivier_cos); }
  static KernelSpec born_jordan_sinc() { return KernelSpec(KernelKind::born_jordan_sinc); }
  static KernelSpec standard() { return KernelSpec(KernelKind::standard); }
  static KernelSpec antistandard() { return KernelSpec(KernelKind::antistandard); }
  static KernelSpec sudarshan_p(Rational lambda);
  static KernelSpec husimi_q(Rational lambda);
  static KernelSpec custom(KernelSeries series, bool exact_polynomial);

  /// The seven tabulated kernels, with lambda for the P and Q rows.
  static std::vector<KernelSpec> table(const Rational& lambda = 1);

  KernelKind kind() const noexcept { return kind_; }
  const std::optional<Rational>& lambda() const noexcept { return lambda_; }
  const KernelSeries* custom_series() const noexcept { return custom_.get(); }
  bool custom_is_exact() const noexcept { return custom_exact_; }

  /// Whether f(0, tau) = f(theta, 0) = 1 holds.
  bool marginal() const;
  /// CLI name: weyl, cos, sinc, standard, antistandard, p-function, q-function, custom.
  std::string name() const;

 private:
  explicit KernelSpec(KernelKind kind) : kind_(kind) {}

  KernelKind kind_;
  std::optional<Rational> lambda_;
  std::shared_ptr<const KernelSeries> custom_;
  bool custom_exact_ = false;
};

/// Resolves a CLI kernel name or alias. `custom:<file>` loads a coefficient file.
/// `lambda` applies to p-function / q-function (default 1) and is rejected otherwise.
KernelSpec parse_kernel(std::string_view name, std::optional<Rational> lambda = std::nullopt);

/// Reads `j k re_num/re_den im_num/im_den hbar_pow` lines ('#' starts a comment).
/// The listed coefficients define a polynomial kernel exactly.
KernelSeries read_custom_series(std::istream& in);

struct KernelInfo {
  std::string name;
  std::vector<std::string> aliases;
  std::string distribution;
  std::string rule;
  std::string formula;
};

/// Catalog rows for the `kernels` listing.
const std::vector<KernelInfo>& kernel_catalog();

/// Exact Taylor coefficients at the origin through total degree `order`.
KernelSeries taylor(const KernelSpec& spec, int order);

/// Series t with s * t = 1 through the order of s. Requires c_00 = 1.
KernelSeries invert_series(const KernelSeries& s);

/// Determinant of the lower-Hessenberg banded matrix
///   | a1 a0 0  ...  0  |
///   | a2 a1 a0 ...  0  |
///   | ...              |
///   | ak ...      a2 a1|
/// over theta series; D_0 = 1. `a` must hold a_0 .. a_k.
ThetaSeries banded_determinant(const std::vector<ThetaSeries>& a, int k);

/// D_k built from a_n(theta) = (1/n!) d^n f / d tau^n at tau = 0.
ThetaSeries inverse_derivative_determinant(const KernelSeries& s, int k);

/// (d^k / d tau^k) f^{-1} at tau = 0, as a theta series of order `s.order() - k`:
///   k! (-1)^k D_k / f(theta, 0)^{k+1}.
/// Only origin data of f is used, so kernel zeros away from the origin are harmless.
ThetaSeries inverse_tau_derivative(const KernelSeries& s, int k);

/// Pointwise closed-form value. Custom kernels throw KernelError.
std::complex<double> evaluate(const KernelSpec& spec, double theta, double tau, double hbar);

/// max(0, log|f(theta, tau)|): zero for every bounded kernel, the exact quadratic
/// exponent for the P-function kernel. Computed without overflow.
double log_growth(const KernelSpec& spec, double theta, double tau, double hbar);

}  // namespace cohen
