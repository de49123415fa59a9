#include "cohen/kernels.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "cohen/errors.hpp"

namespace cohen {

namespace {

Rational checked_lambda(Rational lambda) {
  lambda.canonicalize();
  if (sgn(lambda) == 0) throw KernelError("lambda must be nonzero");
  return lambda;
}

Rational rational_pow(const Rational& base, int e) {
  Rational out = 1;
  Rational b = e >= 0 ? base : Rational(1 / base);
  for (int i = 0; i < std::abs(e); ++i) out *= b;
  return out;
}

// Coefficients of a function of x = theta tau hbar / 2 given by its Maclaurin
// coefficients in x: c_jj = coeff(j) / 2^j with hbar grade j.
KernelSeries product_kernel(int order, bool marginal, GaussianRational (*coeff)(int)) {
  KernelSeries s(order, marginal);
  for (int j = 0; 2 * j <= order; ++j) {
    GaussianRational c = coeff(j);
    if (c.is_zero()) continue;
    c *= GaussianRational(Rational(1, 1) / rational_pow(2, j));
    s.set(j, j, ScalarSum(c, Grade{j, 0}));
  }
  return s;
}

GaussianRational cos_coeff(int j) {
  if (j % 2) return {};
  return GaussianRational(Rational(j % 4 == 0 ? 1 : -1) / factorial(j));
}

GaussianRational sinc_coeff(int j) {
  if (j % 2) return {};
  return GaussianRational(Rational(j % 4 == 0 ? 1 : -1) / factorial(j + 1));
}

GaussianRational exp_minus_i_coeff(int j) { return i_pow(-j) * GaussianRational(1 / factorial(j)); }
GaussianRational exp_plus_i_coeff(int j) { return i_pow(j) * GaussianRational(1 / factorial(j)); }

// exp(sign * hbar/4 [(tau lambda)^2 + (theta/lambda)^2]).
KernelSeries gaussian_kernel(int order, int sign, const Rational& lambda) {
  KernelSeries s(order, false);
  for (int a = 0; 2 * a <= order; ++a) {
    for (int b = 0; 2 * (a + b) <= order; ++b) {
      Rational c = rational_pow(Rational(sign, 4), a + b) * rational_pow(lambda, 2 * b - 2 * a) /
                   (factorial(a) * factorial(b));
      s.set(2 * a, 2 * b, ScalarSum(GaussianRational(c), Grade{a + b, 0}));
    }
  }
  return s;
}

Rational parse_rational(const std::string& text, int line) {
  Rational r;
  if (r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw KernelError("custom kernel line " + std::to_string(line) + ": bad rational '" + text + "'");
  }
  r.canonicalize();
  return r;
}

}  // namespace

KernelSpec KernelSpec::sudarshan_p(Rational lambda) {
  KernelSpec s(KernelKind::sudarshan_p);
  s.lambda_ = checked_lambda(std::move(lambda));
  return s;
}

KernelSpec KernelSpec::husimi_q(Rational lambda) {
  KernelSpec s(KernelKind::husimi_q);
  s.lambda_ = checked_lambda(std::move(lambda));
  return s;
}

KernelSpec KernelSpec::custom(KernelSeries series, bool exact_polynomial) {
  KernelSpec s(KernelKind::custom);
  series.set_marginal(series.data_satisfies_marginal_condition());
  s.custom_ = std::make_shared<const KernelSeries>(std::move(series));
  s.custom_exact_ = exact_polynomial;
  return s;
}

std::vector<KernelSpec> KernelSpec::table(const Rational& lambda) {
  return {weyl(),        rivier_cos(),        born_jordan_sinc(), standard(),
          antistandard(), sudarshan_p(lambda), husimi_q(lambda)};
}

bool KernelSpec::marginal() const {
  switch (kind_) {
    case KernelKind::sudarshan_p:
    case KernelKind::husimi_q: return false;
    case KernelKind::custom: return custom_->marginal();
    default: return true;
  }
}

std::string KernelSpec::name() const {
  switch (kind_) {
    case KernelKind::weyl: return "weyl";
    case KernelKind::rivier_cos: return "cos";
    case KernelKind::born_jordan_sinc: return "sinc";
    case KernelKind::standard: return "standard";
    case KernelKind::antistandard: return "antistandard";
    case KernelKind::sudarshan_p: return "p-function";
    case KernelKind::husimi_q: return "q-function";
    case KernelKind::custom: return "custom";
  }
  return "custom";
}

KernelSpec parse_kernel(std::string_view name, std::optional<Rational> lambda) {
  auto no_lambda = [&](KernelSpec spec) {
    if (lambda) throw KernelError("--lambda only applies to p-function and q-function kernels");
    return spec;
  };
  if (name == "weyl") return no_lambda(KernelSpec::weyl());
  if (name == "cos" || name == "rivier" || name == "margenau-hill") return no_lambda(KernelSpec::rivier_cos());
  if (name == "sinc" || name == "born-jordan") return no_lambda(KernelSpec::born_jordan_sinc());
  if (name == "standard" || name == "kirkwood+") return no_lambda(KernelSpec::standard());
  if (name == "antistandard" || name == "kirkwood-") return no_lambda(KernelSpec::antistandard());
  if (name == "p-function") return KernelSpec::sudarshan_p(lambda.value_or(1));
  if (name == "q-function") return KernelSpec::husimi_q(lambda.value_or(1));
  if (name.starts_with("custom:")) {
    std::string path(name.substr(7));
    std::ifstream in(path);
    if (!in) throw KernelError("cannot open custom kernel file '" + path + "'");
    return no_lambda(KernelSpec::custom(read_custom_series(in), true));
  }
  throw KernelError("unknown kernel '" + std::string(name) + "'");
}

KernelSeries read_custom_series(std::istream& in) {
  struct Entry {
    int j, k;
    Scalar value;
  };
  std::vector<Entry> entries;
  int order = 0;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string j, k, re, im, hbar, extra;
    if (!(fields >> j)) continue;
    if (!(fields >> k >> re >> im >> hbar) || (fields >> extra)) {
      throw KernelError("custom kernel line " + std::to_string(lineno) +
                        ": expected 'j k re_num/re_den im_num/im_den hbar_pow'");
    }
    int jj = 0, kk = 0, hp = 0;
    try {
      std::size_t used = 0;
      jj = std::stoi(j, &used);
      if (used != j.size()) throw std::invalid_argument(j);
      kk = std::stoi(k, &used);
      if (used != k.size()) throw std::invalid_argument(k);
      hp = std::stoi(hbar, &used);
      if (used != hbar.size()) throw std::invalid_argument(hbar);
    } catch (const std::logic_error&) {
      throw KernelError("custom kernel line " + std::to_string(lineno) + ": bad integer field");
    }
    if (jj < 0 || kk < 0) throw KernelError("custom kernel line " + std::to_string(lineno) + ": negative power");
    entries.push_back({jj, kk, Scalar{GaussianRational(parse_rational(re, lineno), parse_rational(im, lineno)), Grade{hp, 0}}});
    order = std::max(order, jj + kk);
  }
  KernelSeries s(order);
  for (const auto& e : entries) s.set(e.j, e.k, s.coefficient(e.j, e.k) + ScalarSum(e.value));
  s.set_marginal(s.data_satisfies_marginal_condition());
  return s;
}

const std::vector<KernelInfo>& kernel_catalog() {
  static const std::vector<KernelInfo> catalog = {
      {"weyl", {}, "Wigner", "Weyl", "1"},
      {"cos", {"rivier", "margenau-hill"}, "Margenau-Hill", "Rivier (symmetrization)", "cos(theta*tau*hbar/2)"},
      {"sinc", {"born-jordan"}, "Shankara", "Born-Jordan", "2*sin(theta*tau*hbar/2)/(theta*tau*hbar)"},
      {"standard", {"kirkwood+"}, "Kirkwood K+", "standard", "exp(-i*theta*tau*hbar/2)"},
      {"antistandard", {"kirkwood-"}, "Kirkwood K-", "antistandard", "exp(i*theta*tau*hbar/2)"},
      {"p-function", {}, "P-function (Sudarshan-Glauber)", "normal",
       "exp(hbar/4*((tau*lambda)^2 + (theta/lambda)^2))"},
      {"q-function", {}, "Q-function (Husimi)", "antinormal",
       "exp(-hbar/4*((tau*lambda)^2 + (theta/lambda)^2))"},
  };
  return catalog;
}

KernelSeries taylor(const KernelSpec& spec, int order) {
  if (order < 0) throw OrderError("series order must be nonnegative");
  switch (spec.kind()) {
    case KernelKind::weyl: return KernelSeries::one(order);
    case KernelKind::rivier_cos: return product_kernel(order, true, cos_coeff);
    case KernelKind::born_jordan_sinc: return product_kernel(order, true, sinc_coeff);
    case KernelKind::standard: return product_kernel(order, true, exp_minus_i_coeff);
    case KernelKind::antistandard: return product_kernel(order, true, exp_plus_i_coeff);
    case KernelKind::sudarshan_p: return gaussian_kernel(order, 1, *spec.lambda());
    case KernelKind::husimi_q: return gaussian_kernel(order, -1, *spec.lambda());
    case KernelKind::custom: break;
  }
  const KernelSeries* data = spec.custom_series();
  if (data == nullptr) throw KernelError("custom kernel without series data");
  if (!data->coefficient(0, 0).is_one()) throw KernelError("custom kernel must satisfy f(0,0) = 1");
  if (order <= data->order()) return data->truncated(order);
  if (!spec.custom_is_exact()) {
    throw OrderError("custom kernel series has order " + std::to_string(data->order()) +
                     ", requested " + std::to_string(order));
  }
  KernelSeries out(order, data->marginal());
  for (int d = 0; d <= data->order(); ++d)
    for (int k = 0; k <= d; ++k) out.set(d - k, k, data->coefficient(d - k, k));
  return out;
}

KernelSeries invert_series(const KernelSeries& s) {
  if (!s.coefficient(0, 0).is_one()) throw KernelError("series inversion requires c_00 = 1");
  const int order = s.order();
  KernelSeries t(order, s.marginal());
  t.set(0, 0, ScalarSum(1));
  for (int d = 1; d <= order; ++d) {
    for (int k = 0; k <= d; ++k) {
      const int j = d - k;
      ScalarSum acc;
      for (int a = 0; a <= j; ++a) {
        for (int b = 0; b <= k; ++b) {
          if (a == 0 && b == 0) continue;
          const ScalarSum& sa = s.coefficient(a, b);
          if (sa.is_zero()) continue;
          const ScalarSum& tb = t.coefficient(j - a, k - b);
          if (tb.is_zero()) continue;
          acc += sa * tb;
        }
      }
      t.set(j, k, -acc);
    }
  }
  return t;
}

ThetaSeries banded_determinant(const std::vector<ThetaSeries>& a, int k) {
  if (k < 0) throw OrderError("determinant size must be nonnegative");
  if (static_cast<int>(a.size()) <= k) throw OrderError("determinant needs a_0 .. a_k");
  int order = a[0].order();
  for (int n = 1; n <= k; ++n) order = std::min(order, a[n].order());

  // Entry (r, c), 1-based: a_{r-c+1}, zero above the superdiagonal.
  auto entry = [&](int r, int c) -> const ThetaSeries* {
    int idx = r - c + 1;
    return idx >= 0 ? &a[idx] : nullptr;
  };

  // Leading principal minors of a lower-Hessenberg matrix:
  //   P_r = sum_{i=1}^{r} (-1)^{r-i} H(r,i) prod_{t=i}^{r-1} H(t,t+1) P_{i-1}.
  std::vector<ThetaSeries> minors;
  minors.push_back(ThetaSeries::one(order));
  for (int r = 1; r <= k; ++r) {
    ThetaSeries sum(order);
    for (int i = 1; i <= r; ++i) {
      ThetaSeries term = *entry(r, i) * minors[i - 1];
      for (int t = i; t < r; ++t) term = term * *entry(t, t + 1);
      if ((r - i) % 2) sum -= term;
      else sum += term;
    }
    minors.push_back(std::move(sum));
  }
  return minors[k];
}

ThetaSeries inverse_derivative_determinant(const KernelSeries& s, int k) {
  if (k > s.order()) {
    throw OrderError("inverse tau derivative of order " + std::to_string(k) +
                     " needs series order >= " + std::to_string(k) + ", have " +
                     std::to_string(s.order()));
  }
  std::vector<ThetaSeries> a;
  for (int n = 0; n <= k; ++n) a.push_back(s.tau_slice(n));
  return banded_determinant(a, k).truncated(s.order() - k);
}

ThetaSeries inverse_tau_derivative(const KernelSeries& s, int k) {
  if (!s.coefficient(0, 0).is_one()) throw KernelError("inverse derivative requires f(0,0) = 1");
  ThetaSeries d = inverse_derivative_determinant(s, k);
  GaussianRational scale(factorial(k) * (k % 2 ? -1 : 1));
  d *= ScalarSum(scale);
  if (s.marginal()) return d;
  // f(theta, 0) differs from 1: divide by its (k+1)-th power as a theta series.
  ThetaSeries f0 = s.tau_slice(0).truncated(s.order() - k);
  return d * f0.inverse().pow(k + 1);
}

std::complex<double> evaluate(const KernelSpec& spec, double theta, double tau, double hbar) {
  if (!std::isfinite(theta) || !std::isfinite(tau) || !std::isfinite(hbar)) {
    throw KernelError("kernel arguments must be finite");
  }
  if (!(hbar > 0)) throw KernelError("hbar must be positive");
  const double x = theta * tau * hbar / 2.0;
  switch (spec.kind()) {
    case KernelKind::weyl: return 1.0;
    case KernelKind::rivier_cos: return std::cos(x);
    case KernelKind::born_jordan_sinc: {
      if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
      }
      return std::sin(x) / x;
    }
    case KernelKind::standard: return std::polar(1.0, -x);
    case KernelKind::antistandard: return std::polar(1.0, x);
    case KernelKind::sudarshan_p:
    case KernelKind::husimi_q: {
      const double lambda = spec.lambda()->get_d();
      const double e = hbar / 4.0 * (tau * tau * lambda * lambda + theta * theta / (lambda * lambda));
      return std::exp(spec.kind() == KernelKind::sudarshan_p ? e : -e);
    }
    case KernelKind::custom: break;
  }
  throw KernelError("custom kernels are series-only and have no closed-form evaluation");
}

double log_growth(const KernelSpec& spec, double theta, double tau, double hbar) {
  if (spec.kind() == KernelKind::custom) {
    throw KernelError("custom kernels are series-only and have no closed-form evaluation");
  }
  if (spec.kind() != KernelKind::sudarshan_p) return 0.0;
  const double lambda = spec.lambda()->get_d();
  return hbar / 4.0 * (tau * tau * lambda * lambda + theta * theta / (lambda * lambda));
}

}  // namespace cohen
