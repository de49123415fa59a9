#pragma once

// Reference implementations used only by the tests. None of them call the
// monomial engines, the determinant route, or standard_order: images are built
// from the Fourier-multiplier relation between kernels, and operator products
// from explicit matrices or single commutator swaps.

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cohen/kernels.hpp"
#include "cohen/polynomial.hpp"

namespace oracle {

using cohen::GaussianRational;
using cohen::Grade;
using cohen::Monomial;
using cohen::OperatorPoly;
using cohen::OperatorWord;
using cohen::PhasePoly;
using cohen::Rational;
using cohen::ScalarSum;

inline Rational factorial(int n) {
  Rational out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

inline Rational choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

inline GaussianRational rational_power(const GaussianRational& base, int e) {
  GaussianRational out(1);
  for (int k = 0; k < e; ++k) out *= base;
  return out;
}

/// Truncated bivariate series sum c_jk theta^j tau^k, j + k <= order.
struct Series2 {
  int order = 0;
  std::map<std::pair<int, int>, ScalarSum> c;

  ScalarSum at(int j, int k) const {
    auto it = c.find({j, k});
    return it == c.end() ? ScalarSum{} : it->second;
  }
  void add(int j, int k, const ScalarSum& v) {
    if (j + k > order || v.is_zero()) return;
    ScalarSum& slot = c[{j, k}];
    slot += v;
    if (slot.is_zero()) c.erase({j, k});
  }
};

inline Series2 one(int order) {
  Series2 s{order, {}};
  s.add(0, 0, 1);
  return s;
}

inline Series2 multiply(const Series2& a, const Series2& b) {
  Series2 out{std::min(a.order, b.order), {}};
  for (const auto& [ia, va] : a.c)
    for (const auto& [ib, vb] : b.c) out.add(ia.first + ib.first, ia.second + ib.second, va * vb);
  return out;
}

/// 1/s as the geometric series in (1 - s); requires s_00 = 1.
inline Series2 inverse(const Series2& s) {
  Series2 x{s.order, {}};
  for (const auto& [idx, v] : s.c) {
    if (idx != std::pair{0, 0}) x.add(idx.first, idx.second, -v);
  }
  Series2 term = one(s.order);
  Series2 sum = one(s.order);
  for (int k = 1; k <= s.order; ++k) {
    term = multiply(term, x);
    for (const auto& [idx, v] : term.c) sum.add(idx.first, idx.second, v);
  }
  return sum;
}

/// f(theta, tau) -> f(-theta, -tau).
inline Series2 reflect(const Series2& s) {
  Series2 out{s.order, {}};
  for (const auto& [idx, v] : s.c) out.add(idx.first, idx.second, (idx.first + idx.second) % 2 ? -v : v);
  return out;
}

inline Series2 from_kernel_series(const cohen::KernelSeries& s) {
  Series2 out{s.order(), {}};
  for (int d = 0; d <= s.order(); ++d)
    for (int k = 0; k <= d; ++k) out.add(d - k, k, s.coefficient(d - k, k));
  return out;
}

inline cohen::KernelSeries to_kernel_series(const Series2& s, bool marginal) {
  cohen::KernelSeries out(s.order, marginal);
  for (const auto& [idx, v] : s.c) out.set(idx.first, idx.second, v);
  return out;
}

/// sum_k w_k (hbar theta tau)^k with weights w_k.
template <class Weight>
Series2 theta_tau_series(int order, Weight weight) {
  Series2 s{order, {}};
  for (int k = 0; 2 * k <= order; ++k) {
    const GaussianRational w = weight(k);
    if (!w.is_zero()) s.add(k, k, ScalarSum(w, Grade{k, 0}));
  }
  return s;
}

/// exp(c hbar theta tau).
inline Series2 exp_theta_tau(const GaussianRational& c, int order) {
  return theta_tau_series(order, [&](int k) { return rational_power(c, k) * GaussianRational(1 / factorial(k)); });
}

/// Taylor data of the tabulated kernels from their elementary power series.
inline Series2 closed_form(const std::string& name, int order, const Rational& lambda = 1) {
  const Rational half(1, 2);
  if (name == "weyl") return one(order);
  if (name == "cos") {
    return theta_tau_series(order, [&](int k) {
      if (k % 2) return GaussianRational(0);
      const int m = k / 2;
      Rational v = (m % 2 ? -1 : 1) / factorial(k);
      for (int e = 0; e < k; ++e) v *= half;
      return GaussianRational(v);
    });
  }
  if (name == "sinc") {
    return theta_tau_series(order, [&](int k) {
      if (k % 2) return GaussianRational(0);
      const int m = k / 2;
      Rational v = (m % 2 ? -1 : 1) / factorial(k + 1);
      for (int e = 0; e < k; ++e) v *= half;
      return GaussianRational(v);
    });
  }
  if (name == "standard") return exp_theta_tau(GaussianRational(0, -half), order);
  if (name == "antistandard") return exp_theta_tau(GaussianRational(0, half), order);
  if (name == "p-function" || name == "q-function") {
    const int sign = name == "p-function" ? 1 : -1;
    Series2 s{order, {}};
    const Rational l2 = lambda * lambda;
    for (int a = 0; 2 * a <= order; ++a) {
      for (int b = 0; 2 * (a + b) <= order; ++b) {
        Rational v = 1 / (factorial(a) * factorial(b));
        for (int e = 0; e < a + b; ++e) v *= Rational(sign, 4);
        for (int e = 0; e < b; ++e) v *= l2;
        for (int e = 0; e < a; ++e) v /= l2;
        s.add(2 * a, 2 * b, ScalarSum(GaussianRational(v), Grade{a + b, 0}));
      }
    }
    return s;
  }
  throw std::invalid_argument("no closed form for " + name);
}

/// Applies t(-i d/dq, -i d/dp) to c q^n p^m, accumulating into `out`.
template <class Poly>
void apply_multiplier(const Series2& t, int n, int m, const ScalarSum& c, Poly& out) {
  const GaussianRational minus_i(0, -1);
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= m; ++b) {
      const ScalarSum tab = t.at(a, b);
      if (tab.is_zero()) continue;
      const GaussianRational factor =
          GaussianRational(choose(n, a) * choose(m, b) * factorial(a) * factorial(b)) * rational_power(minus_i, a + b);
      out.add_term({n - a, m - b}, c * tab * factor);
    }
  }
}

/// Observable image of a standard-ordered operator under the kernel with series f:
/// the standard kernel sends qh^n ph^m to q^n p^m, and images under two kernels
/// differ by the Fourier multiplier f_standard / f.
inline PhasePoly dequantize(const OperatorPoly& op, const Series2& f) {
  const Series2 t = multiply(exp_theta_tau(GaussianRational(0, Rational(-1, 2)), f.order), inverse(f));
  PhasePoly out;
  for (const auto& [mono, c] : op.terms()) apply_multiplier(t, mono.q, mono.p, c, out);
  return out;
}

/// Quantization with kernel series f, via the multiplier f / f_standard.
inline OperatorPoly quantize(const PhasePoly& g, const Series2& f) {
  const Series2 s = multiply(f, exp_theta_tau(GaussianRational(0, Rational(1, 2)), f.order));
  PhasePoly standard_symbol;
  for (const auto& [mono, c] : g.terms()) apply_multiplier(s, mono.q, mono.p, c, standard_symbol);
  OperatorPoly out;
  for (const auto& [mono, c] : standard_symbol.terms()) out.add_term(mono, c);
  return out;
}

inline ScalarSum planck(int power) { return ScalarSum(GaussianRational(1), Grade{power, power}); }

/// rho -> F: (1/h) times the observable image under the kernel 1 / f(-theta, -tau).
inline PhasePoly state_forward(const OperatorPoly& rho, const Series2& f) {
  return dequantize(rho, inverse(reflect(f))) * planck(-1);
}

inline OperatorPoly state_inverse(const PhasePoly& F, const Series2& f) {
  return quantize(F, inverse(reflect(f))) * planck(1);
}

/// Standard order by repeated single swaps ph qh -> qh ph - i hbar.
inline OperatorPoly normal_order_by_swaps(const std::string& word, const ScalarSum& coefficient) {
  std::map<std::string, ScalarSum> pending{{word, coefficient}};
  OperatorPoly out;
  const ScalarSum minus_i_hbar(GaussianRational(0, -1), Grade{1, 0});
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::string& w = node.key();
    const auto swap_at = w.find("pq");
    if (swap_at == std::string::npos) {
      const int q = static_cast<int>(std::count(w.begin(), w.end(), 'q'));
      out.add_term({q, static_cast<int>(w.size()) - q}, node.mapped());
      continue;
    }
    std::string swapped = w;
    swapped[swap_at] = 'q';
    swapped[swap_at + 1] = 'p';
    std::string contracted = w.substr(0, swap_at) + w.substr(swap_at + 2);
    pending[swapped] += node.mapped();
    pending[contracted] += node.mapped() * minus_i_hbar;
  }
  return out;
}

/// Word string such as "qqpq" for an OperatorWord.
inline std::string spell(const OperatorWord& word) {
  std::string out;
  for (const auto& run : word.runs) out.append(run.power, run.letter == cohen::Letter::q ? 'q' : 'p');
  return out;
}

using Matrix = Eigen::MatrixXcd;

/// qh and ph in the truncated harmonic-oscillator basis (m omega = 1).
inline std::pair<Matrix, Matrix> canonical_pair(int dim, double hbar) {
  Matrix a = Matrix::Zero(dim, dim);
  for (int k = 1; k < dim; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  const Matrix ad = a.adjoint();
  const double s = std::sqrt(hbar / 2.0);
  Matrix q = s * (a + ad);
  Matrix p = std::complex<double>(0, s) * (ad - a);
  return {q, p};
}

inline Matrix matrix_of_word(const std::string& word, int dim, double hbar) {
  const auto [q, p] = canonical_pair(dim, hbar);
  Matrix out = Matrix::Identity(dim, dim);
  for (char c : word) out = out * (c == 'q' ? q : p);
  return out;
}

inline Matrix matrix_of(const OperatorPoly& poly, int dim, double hbar) {
  const auto [q, p] = canonical_pair(dim, hbar);
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& [mono, c] : poly.terms()) {
    Matrix term = Matrix::Identity(dim, dim);
    for (int k = 0; k < mono.q; ++k) term = term * q;
    for (int k = 0; k < mono.p; ++k) term = term * p;
    out += c.evaluate(hbar) * term;
  }
  return out;
}

/// Random exact rational with numerator and denominator of up to `digits` digits.
inline Rational random_rational(std::mt19937_64& rng, int digits) {
  std::uniform_int_distribution<int> len(1, digits);
  std::uniform_int_distribution<int> digit(0, 9);
  auto number = [&](bool nonzero) {
    std::string s;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) s += static_cast<char>('0' + digit(rng));
    Rational v(s, 10);
    if (nonzero && v == 0) v = 1;
    return v;
  };
  Rational r = number(false) / number(true);
  r.canonicalize();
  if (rng() % 2) r = -r;
  return r;
}

inline ScalarSum random_scalar(std::mt19937_64& rng, int digits, bool with_grades) {
  std::uniform_int_distribution<int> grade(-2, 3);
  ScalarSum out;
  const int terms = with_grades ? 1 + static_cast<int>(rng() % 2) : 1;
  for (int t = 0; t < terms; ++t) {
    GaussianRational value(rng() % 3 == 0 ? Rational(0) : random_rational(rng, digits),
                           rng() % 2 ? random_rational(rng, digits) : Rational(0));
    Grade g = with_grades ? Grade{grade(rng), rng() % 4 == 0 ? grade(rng) : 0} : Grade{};
    out += ScalarSum(value, g);
  }
  return out;
}

template <class Poly>
Poly random_poly(std::mt19937_64& rng, int max_degree, int max_terms, int digits, bool with_grades) {
  std::uniform_int_distribution<int> exponent(0, max_degree);
  std::uniform_int_distribution<int> terms(0, max_terms);
  Poly out;
  const int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    int q = exponent(rng);
    int p = std::uniform_int_distribution<int>(0, max_degree - q)(rng);
    out.add_term({q, p}, random_scalar(rng, digits, with_grades));
  }
  return out;
}

}  // namespace oracle
