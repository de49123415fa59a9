#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cohen/kernels.hpp"
#include "cohen/polynomial.hpp"

namespace cohen {

using cplx = std::complex<double>;

/// Uniform sample positions min + i * step, i < size.
struct GridAxis {
  double min = 0.0;
  double step = 1.0;
  std::size_t size = 0;

  double at(std::size_t i) const { return min + step * static_cast<double>(i); }
  /// n points covering [-half_width, half_width).
  static GridAxis centered(std::size_t n, double half_width);
  /// Angular-frequency grid (a - n/2) * 2 pi / (n step) paired with this axis by the DFT.
  GridAxis conjugate() const;
};

/// Pure state sampled on a uniform position grid, normalized so that
/// sum |psi|^2 dq = 1. The grid size is a power of two.
class GridState {
 public:
  /// Takes arbitrary samples and normalizes them.
  static GridState from_samples(std::vector<cplx> psi, GridAxis axis, double hbar);
  /// (pi sigma^2)^(-1/4) exp(-(q - q0)^2 / (2 sigma^2) + i p0 q / hbar)
  static GridState gaussian(GridAxis axis, double hbar, double sigma, double q0 = 0.0, double p0 = 0.0);
  /// Harmonic-oscillator eigenstate n with m omega = 1.
  static GridState oscillator(GridAxis axis, double hbar, int n);

  const GridAxis& axis() const noexcept { return axis_; }
  double hbar() const noexcept { return hbar_; }
  std::span<const cplx> psi() const noexcept { return psi_; }

 private:
  GridState(std::vector<cplx> psi, GridAxis axis, double hbar)
      : psi_(std::move(psi)), axis_(axis), hbar_(hbar) {}

  std::vector<cplx> psi_;
  GridAxis axis_;
  double hbar_;
};

/// A(theta, tau) = int psi(u + tau hbar/2) psi*(u - tau hbar/2) exp(i theta u) du,
/// stored theta-major: values[a * tau.size + b].
struct AmbiguityGrid {
  GridAxis theta;
  GridAxis tau;
  std::vector<cplx> values;

  cplx at(std::size_t a, std::size_t b) const { return values[a * tau.size + b]; }
};

/// F(q, p) sampled row-major, q then p: values[j * p.size + k].
struct PhaseGrid {
  GridAxis q;
  GridAxis p;
  double hbar;
  KernelSpec kernel;
  std::vector<cplx> values;

  cplx at(std::size_t j, std::size_t k) const { return values[j * p.size + k]; }
};

struct Marginals {
  std::vector<double> q;  // int F dp at each q sample
  std::vector<double> p;  // int F dq at each p sample
};

/// Momentum axis used when none is given: same size and extent as the q axis, centered at 0.
GridAxis default_momentum_axis(const GridState& state);

/// The (theta, tau) grid is conjugate to (q, p_axis). Half-step shifts of psi are
/// evaluated by Fourier (band-limited) interpolation on a zero-padded grid.
AmbiguityGrid ambiguity(const GridState& state, const GridAxis& p_axis);
AmbiguityGrid ambiguity(const GridState& state);

/// F = (1/4 pi^2) int int f(theta, tau) A(theta, tau) exp(-i (theta q + tau p)) dtheta dtau.
///
/// Kernels that grow without bound (P-function) define distributions rather than
/// functions. For those, f is multiplied by exp(-x) (1 + x + x^2/2 + x^3/6) with
/// x = 3g/2 and g = log|f|. The factor equals 1 + O(g^4), so moments of F up to degree 7 are
/// unchanged, and the damped kernel decays like the Q-function kernel, which keeps
/// F smooth with Gaussian tails.
PhaseGrid cohen_distribution(const GridState& state, const KernelSpec& kernel, const GridAxis& p_axis);
PhaseGrid cohen_distribution(const GridState& state, const KernelSpec& kernel);

/// Trapezoid-rule marginals (real parts).
Marginals marginals(const PhaseGrid& grid);

/// Trapezoid quadrature of F g over the grid. The caller keeps deg g low enough
/// that F g is negligible at the grid edges.
cplx pair(const PhaseGrid& grid, const PhasePoly& g);

/// <psi| G |psi> with ph applied spectrally (multiplication by hbar k) and qh
/// pointwise. Throws NumericError when the under-resolved high band could
/// contribute more than 1e-8.
cplx trace_expectation(const GridState& state, const OperatorPoly& op);

/// phi(p) = (2 pi hbar)^(-1/2) int psi(q) exp(-i p q / hbar) dq on the given axis.
std::vector<cplx> momentum_wavefunction(const GridState& state, const GridAxis& p_axis);

/// Substitutes q, p and hbar into a phase polynomial.
cplx evaluate(const PhasePoly& g, double q, double p, double hbar);

/// Writes the PhaseGrid CSV: a two-line '#' header followed by one row per q sample
/// with re,im pairs for every p sample.
void write_csv(std::ostream& out, const PhaseGrid& grid);
PhaseGrid read_csv(std::istream& in);

/// Reads `q,re,im` rows on a uniform grid.
GridState read_state_csv(std::istream& in, double hbar);
/// `gaussian:sigma=<v>[,q0=<v>,p0=<v>]` or `oscillator:n=<int>` on the given axis.
GridState make_state(std::string_view spec, const GridAxis& axis, double hbar);

}  // namespace cohen
