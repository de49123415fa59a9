#include "cohen/polynomial.hpp"

#include "cohen/errors.hpp"

namespace cohen {

namespace {

template <class Poly>
Poly pow_impl(const Poly& base, int exponent) {
  if (exponent < 0) throw DomainError("negative polynomial power");
  Poly result = Poly::constant(1);
  Poly factor = base;
  while (exponent > 0) {
    if (exponent & 1) result = result * factor;
    exponent >>= 1;
    if (exponent > 0) factor = factor * factor;
  }
  return result;
}

// Coefficient (-i hbar)^k k! C(m,k) C(n,k) of qh^(n-k) ph^(m-k) in ph^m qh^n.
ScalarSum swap_coefficient(int m, int n, int k) {
  GaussianRational c = i_pow(-k);
  c *= GaussianRational(factorial(k) * binomial(m, k) * binomial(n, k));
  return {c, Grade{k, 0}};
}

}  // namespace

PhasePoly operator*(const PhasePoly& a, const PhasePoly& b) {
  PhasePoly out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term({ma.q + mb.q, ma.p + mb.p}, ca * cb);
  return out;
}

OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b) {
  OperatorPoly out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      ScalarSum c = ca * cb;
      // qh^a ph^b qh^c ph^d = qh^a (ph^b qh^c) ph^d
      int kmax = std::min(ma.p, mb.q);
      for (int k = 0; k <= kmax; ++k) {
        out.add_term({ma.q + mb.q - k, ma.p + mb.p - k}, c * swap_coefficient(ma.p, mb.q, k));
      }
    }
  }
  return out;
}

PhasePoly pow(const PhasePoly& base, int exponent) { return pow_impl(base, exponent); }
OperatorPoly pow(const OperatorPoly& base, int exponent) { return pow_impl(base, exponent); }

OperatorPoly standard_order(const OperatorWord& word) {
  OperatorPoly result = OperatorPoly::constant(ScalarSum(word.coefficient));
  for (const Run& run : word.runs) {
    if (run.power < 0) throw DomainError("negative exponent in operator word");
    if (run.power == 0) continue;
    result = result * (run.letter == Letter::q ? OperatorPoly::monomial(run.power, 0)
                                               : OperatorPoly::monomial(0, run.power));
  }
  return result;
}

OperatorPoly reorder_pq(int m, int n) {
  OperatorPoly out;
  for (int k = 0; k <= std::min(m, n); ++k) out.add_term({n - k, m - k}, swap_coefficient(m, n, k));
  return out;
}

OperatorPoly adjoint(const OperatorPoly& a) {
  OperatorPoly out;
  for (const auto& [mono, c] : a.terms()) out += reorder_pq(mono.p, mono.q) * c.conj();
  return out;
}

}  // namespace cohen
