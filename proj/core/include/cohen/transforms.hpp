#pragma once

#include <optional>

#include "cohen/kernels.hpp"
#include "cohen/polynomial.hpp"
#include "cohen/series.hpp"

namespace cohen {

enum class OperatorOrder { qp, pq };

/// Which of the four operator <-> phase-space mappings to apply.
///
///   observable_forward  G -> g      (image of an observable)
///   observable_inverse  g -> G      (quantization rule)
///   state_forward       rho -> F    (quasi-probability distribution), carries 1/h
///   state_inverse       F -> rho    carries h
struct MapDirection {
  enum class Variant { op_to_phase, phase_to_op };
  enum class Role { state_map, observable_map };

  Variant variant;
  Role role;
  bool include_h_factor;

  static constexpr MapDirection observable_forward() { return {Variant::op_to_phase, Role::observable_map, false}; }
  static constexpr MapDirection observable_inverse() { return {Variant::phase_to_op, Role::observable_map, false}; }
  static constexpr MapDirection state_forward() { return {Variant::op_to_phase, Role::state_map, true}; }
  static constexpr MapDirection state_inverse() { return {Variant::phase_to_op, Role::state_map, true}; }

  /// The h factor only belongs to the state pair.
  constexpr bool valid() const { return !(include_h_factor && role == Role::observable_map); }
  constexpr MapDirection inverse() const {
    return {variant == Variant::op_to_phase ? Variant::phase_to_op : Variant::op_to_phase, role, include_h_factor};
  }
  friend constexpr bool operator==(const MapDirection&, const MapDirection&) = default;
};

/// c_jk -> (-1)^(j+k) c_jk, i.e. f(theta, tau) -> f(-theta, -tau).
KernelSeries reflect_series(const KernelSeries& s);

/// Phase-space image of qh^n ph^m (or ph^m qh^n for OperatorOrder::pq) under the
/// observable map with kernel series `s`:
///
///   sum_{l<=m} sum_{j<=l} sum_{k<=n-l+j} (-1)^(m-j) (m-l)! i^(j-k-m) (hbar/2)^(l-j)
///     C(m,l) C(l,j) C(n-l+j,k) n!/(n+j-l)! p^j q^(n-l+j-k) d^k D_{m-l}/dtheta^k |_0
///
/// with the pq order obtained by hbar/2 -> -hbar/2. Requires s.order() >= n + m.
PhasePoly op_monomial_to_phase(int n, int m, const KernelSeries& s, OperatorOrder order = OperatorOrder::qp);

/// Operator image of q^n p^m with the D_l of series `s`, without the h prefactor:
///
///   sum_{l<=m} sum_{k<=n} sum_{j<=n-k} C(m,l) C(n,k) C(n-k,j) l! i^(l+k) (-1)^l 2^(k-n)
///     d^k D_l/dtheta^k |_0  qh^j ph^(m-l) qh^(n-k-j)
///
/// Requires s.order() >= n + m.
OperatorPoly phase_monomial_to_op(int n, int m, const KernelSeries& s);

/// The series whose inverse derivatives drive the monomial engine for `direction`.
KernelSeries effective_series(const KernelSpec& kernel, MapDirection direction, int order);

/// Series order used when none is requested: polynomial degree + 2.
int default_series_order(int degree);

PhasePoly map(const OperatorPoly& poly, const KernelSpec& kernel, MapDirection direction,
              std::optional<int> order = std::nullopt);
OperatorPoly map(const PhasePoly& poly, const KernelSpec& kernel, MapDirection direction,
                 std::optional<int> order = std::nullopt);

}  // namespace cohen
