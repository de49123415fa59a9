#include "cohen/transforms.hpp"

#include <vector>

#include "cohen/errors.hpp"

namespace cohen {

namespace {

// Origin derivatives d^k/dtheta^k of (d^l/dtau^l f^{-1})|_{tau=0}, computed once
// per series through the determinant route.
class InverseDerivatives {
 public:
  InverseDerivatives(const KernelSeries& s, int max_l) {
    for (int l = 0; l <= max_l; ++l) slices_.push_back(inverse_tau_derivative(s, l));
  }

  ScalarSum at(int l, int k) const { return slices_.at(static_cast<std::size_t>(l)).derivative_at_zero(k); }

 private:
  std::vector<ThetaSeries> slices_;
};

void require_order(const KernelSeries& s, int n, int m) {
  if (n < 0 || m < 0) throw DomainError("monomial exponents must be nonnegative");
  if (s.order() < n + m) {
    throw OrderError("monomial of degree " + std::to_string(n + m) + " needs series order >= " +
                     std::to_string(n + m) + ", have " + std::to_string(s.order()));
  }
}

Rational pow2(int e) {
  Rational out = 1;
  for (int i = 0; i < std::abs(e); ++i) out *= 2;
  return e >= 0 ? out : Rational(1 / out);
}

PhasePoly op_to_phase(int n, int m, const InverseDerivatives& inv, OperatorOrder order) {
  PhasePoly out;
  const int half_sign = order == OperatorOrder::qp ? 1 : -1;
  for (int l = 0; l <= m; ++l) {
    for (int j = 0; j <= l; ++j) {
      const int qpow = n - l + j;
      if (qpow < 0) continue;
      // With E = (m-l)! (-1)^(m-l) D_{m-l} the prefactor (-1)^(m-j) (m-l)! becomes (-1)^(l-j).
      Rational base = binomial(m, l) * binomial(l, j) * factorial(n) / factorial(qpow) / pow2(l - j);
      if ((l - j) % 2) base = -base;
      if (half_sign < 0 && (l - j) % 2) base = -base;
      for (int k = 0; k <= qpow; ++k) {
        ScalarSum d = inv.at(m - l, k);
        if (d.is_zero()) continue;
        GaussianRational c = i_pow(j - k - m) * GaussianRational(base * binomial(qpow, k));
        out.add_term({qpow - k, j}, d * ScalarSum(c, Grade{l - j, 0}));
      }
    }
  }
  return out;
}

OperatorPoly phase_to_op(int n, int m, const InverseDerivatives& inv) {
  OperatorPoly out;
  for (int l = 0; l <= m; ++l) {
    for (int k = 0; k <= n; ++k) {
      // l! (-1)^l d^k D_l = d^k E_l.
      ScalarSum d = inv.at(l, k);
      if (d.is_zero()) continue;
      Rational base = binomial(m, l) * binomial(n, k) * pow2(k - n);
      ScalarSum c = d * ScalarSum(i_pow(l + k) * GaussianRational(base));
      for (int j = 0; j <= n - k; ++j) {
        OperatorWord word{{GaussianRational(binomial(n - k, j)), {}},
                          {{Letter::q, j}, {Letter::p, m - l}, {Letter::q, n - k - j}}};
        out += standard_order(word) * c;
      }
    }
  }
  return out;
}

int resolve_order(int degree, std::optional<int> order) {
  int resolved = order.value_or(default_series_order(degree));
  if (resolved < std::max(degree, 0)) {
    throw OrderError("series order " + std::to_string(resolved) + " is below polynomial degree " +
                     std::to_string(degree));
  }
  return resolved;
}

ScalarSum h_factor(MapDirection direction) {
  if (!direction.include_h_factor) return ScalarSum(1);
  return ScalarSum::planck(direction.variant == MapDirection::Variant::phase_to_op ? 1 : -1);
}

void check_direction(MapDirection direction, MapDirection::Variant expected) {
  if (!direction.valid()) throw DomainError("the h factor only applies to the state maps");
  if (direction.variant != expected) throw DomainError("map direction does not match the input polynomial kind");
}

}  // namespace

KernelSeries reflect_series(const KernelSeries& s) {
  KernelSeries out(s.order(), s.marginal());
  for (int d = 0; d <= s.order(); ++d) {
    for (int k = 0; k <= d; ++k) {
      const ScalarSum& c = s.coefficient(d - k, k);
      out.set(d - k, k, d % 2 ? -c : c);
    }
  }
  return out;
}

PhasePoly op_monomial_to_phase(int n, int m, const KernelSeries& s, OperatorOrder order) {
  require_order(s, n, m);
  return op_to_phase(n, m, InverseDerivatives(s, m), order);
}

OperatorPoly phase_monomial_to_op(int n, int m, const KernelSeries& s) {
  require_order(s, n, m);
  return phase_to_op(n, m, InverseDerivatives(s, m));
}

KernelSeries effective_series(const KernelSpec& kernel, MapDirection direction, int order) {
  KernelSeries f = taylor(kernel, order);
  const bool uses_f = (direction.variant == MapDirection::Variant::op_to_phase) ==
                      (direction.role == MapDirection::Role::observable_map);
  return uses_f ? f : invert_series(reflect_series(f));
}

int default_series_order(int degree) { return std::max(degree, 0) + 2; }

PhasePoly map(const OperatorPoly& poly, const KernelSpec& kernel, MapDirection direction, std::optional<int> order) {
  check_direction(direction, MapDirection::Variant::op_to_phase);
  const int n_order = resolve_order(poly.degree(), order);
  KernelSeries s = effective_series(kernel, direction, n_order);
  int max_m = 0;
  for (const auto& [mono, c] : poly.terms()) max_m = std::max(max_m, mono.p);
  InverseDerivatives inv(s, max_m);
  PhasePoly out;
  for (const auto& [mono, c] : poly.terms()) out += op_to_phase(mono.q, mono.p, inv, OperatorOrder::qp) * c;
  return out * h_factor(direction);
}

OperatorPoly map(const PhasePoly& poly, const KernelSpec& kernel, MapDirection direction, std::optional<int> order) {
  check_direction(direction, MapDirection::Variant::phase_to_op);
  const int n_order = resolve_order(poly.degree(), order);
  KernelSeries s = effective_series(kernel, direction, n_order);
  int max_m = 0;
  for (const auto& [mono, c] : poly.terms()) max_m = std::max(max_m, mono.p);
  InverseDerivatives inv(s, max_m);
  OperatorPoly out;
  for (const auto& [mono, c] : poly.terms()) out += phase_to_op(mono.q, mono.p, inv) * c;
  return out * h_factor(direction);
}

}  // namespace cohen
