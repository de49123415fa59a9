#include "cohen/numeric.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <cstdio>
#include <numbers>

#include "cohen/errors.hpp"
#include "fourier.hpp"

namespace cohen {

namespace {

constexpr double kPi = std::numbers::pi;
// Spectral contributions above this bound make trace_expectation unreliable.
constexpr double kSpectralNoiseLimit = 1e-8;
// Unbounded kernels are multiplied by exp(-c g) sum_{j<K} (c g)^j / j!, g = log|f|.
// The factor is 1 + O(g^K), so moments of F through degree 2K - 1 are unchanged.
constexpr double kDampingRate = 1.5;
constexpr int kDampingTerms = 4;
// Largest zero-padded length, relative to the state grid, used for half-step shifts.
constexpr std::size_t kMaxPadding = 64;

void check_axis(const GridAxis& axis, const char* what) {
  if (axis.size < 2 || !std::has_single_bit(axis.size)) {
    throw NumericError(std::string(what) + " grid size must be a power of two >= 2");
  }
  if (!(axis.step > 0) || !std::isfinite(axis.step) || !std::isfinite(axis.min)) {
    throw NumericError(std::string(what) + " grid step must be positive and finite");
  }
}

void check_hbar(double hbar) {
  if (!(hbar > 0) || !std::isfinite(hbar)) throw NumericError("hbar must be positive and finite");
}

std::vector<double> trapezoid_weights(std::size_t n) {
  std::vector<double> w(n, 1.0);
  w.front() = 0.5;
  w.back() = 0.5;
  return w;
}

// f(theta, tau), damped where it grows past 1. The only unbounded tabulated
// kernel is real and positive, so |f| = exp(g) there.
cplx damped_kernel(const KernelSpec& kernel, double theta, double tau, double hbar) {
  const double g = log_growth(kernel, theta, tau, hbar);
  if (g <= 0.0) return evaluate(kernel, theta, tau, hbar);
  const double x = kDampingRate * g;
  double partial = 0.0;
  double term = 1.0;
  for (int j = 0; j < kDampingTerms; ++j) {
    partial += term;
    term *= x / (j + 1);
  }
  return std::exp(g - x) * partial;
}

}  // namespace

GridAxis GridAxis::centered(std::size_t n, double half_width) {
  if (n == 0 || !(half_width > 0)) throw NumericError("grid needs points and a positive half-width");
  return {-half_width, 2.0 * half_width / static_cast<double>(n), n};
}

GridAxis GridAxis::conjugate() const {
  const double dw = 2.0 * kPi / (static_cast<double>(size) * step);
  return {-static_cast<double>(size / 2) * dw, dw, size};
}

GridState GridState::from_samples(std::vector<cplx> psi, GridAxis axis, double hbar) {
  check_axis(axis, "state");
  check_hbar(hbar);
  if (psi.size() != axis.size) throw NumericError("sample count does not match the grid");
  double norm = 0.0;
  for (const cplx& v : psi) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw NumericError("non-finite wavefunction sample");
    norm += std::norm(v);
  }
  norm *= axis.step;
  if (!(norm > 0)) throw NumericError("wavefunction vanishes on the grid");
  const double scale = 1.0 / std::sqrt(norm);
  for (cplx& v : psi) v *= scale;
  return GridState(std::move(psi), axis, hbar);
}

GridState GridState::gaussian(GridAxis axis, double hbar, double sigma, double q0, double p0) {
  if (!(sigma > 0)) throw NumericError("gaussian width must be positive");
  check_hbar(hbar);
  std::vector<cplx> psi(axis.size);
  const double amp = std::pow(kPi * sigma * sigma, -0.25);
  for (std::size_t j = 0; j < axis.size; ++j) {
    const double q = axis.at(j);
    const double d = (q - q0) / sigma;
    psi[j] = amp * std::exp(-0.5 * d * d) * std::polar(1.0, p0 * q / hbar);
  }
  return from_samples(std::move(psi), axis, hbar);
}

GridState GridState::oscillator(GridAxis axis, double hbar, int n) {
  if (n < 0) throw NumericError("oscillator level must be nonnegative");
  check_hbar(hbar);
  std::vector<cplx> psi(axis.size);
  const double scale = std::pow(hbar, -0.25);
  for (std::size_t j = 0; j < axis.size; ++j) {
    const double xi = axis.at(j) / std::sqrt(hbar);
    // Normalized Hermite functions by the stable three-term recurrence.
    double prev = 0.0;
    double cur = std::pow(kPi, -0.25) * std::exp(-0.5 * xi * xi);
    for (int k = 0; k < n; ++k) {
      const double next = std::sqrt(2.0 / (k + 1)) * xi * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
      prev = cur;
      cur = next;
    }
    psi[j] = scale * cur;
  }
  return from_samples(std::move(psi), axis, hbar);
}

GridAxis default_momentum_axis(const GridState& state) {
  const GridAxis& q = state.axis();
  return GridAxis::centered(q.size, 0.5 * q.step * static_cast<double>(q.size));
}

AmbiguityGrid ambiguity(const GridState& state) { return ambiguity(state, default_momentum_axis(state)); }

AmbiguityGrid ambiguity(const GridState& state, const GridAxis& p_axis) {
  check_axis(p_axis, "momentum");
  const GridAxis& q = state.axis();
  const std::size_t n = q.size;
  AmbiguityGrid out{q.conjugate(), p_axis.conjugate(), {}};
  const std::size_t n_tau = out.tau.size;

  // u + s must never wrap onto the support of psi: padded length >= support + max shift.
  const double s_max = std::abs(out.tau.min) * state.hbar() / 2.0;
  const auto shift_samples = static_cast<std::size_t>(std::ceil(s_max / q.step));
  const std::size_t padded = std::bit_ceil(std::max(2 * n, n + shift_samples + n / 4));
  if (padded > kMaxPadding * n) {
    throw NumericError("grid too small for the requested tau range: shift of " + std::to_string(s_max) +
                       " exceeds the padded support");
  }

  std::vector<cplx> psi_pad(padded, 0.0);
  std::copy(state.psi().begin(), state.psi().end(), psi_pad.begin());
  const std::vector<cplx> spectrum = fourier::fft(psi_pad, -1);
  std::vector<double> kappa(padded);
  for (std::size_t k = 0; k < padded; ++k) kappa[k] = fourier::wavenumber(k, padded, q.step);

  auto shifted = [&](double s) {
    std::vector<cplx> tmp(padded);
    for (std::size_t k = 0; k < padded; ++k) tmp[k] = spectrum[k] * std::polar(1.0, kappa[k] * s);
    std::vector<cplx> back = fourier::fft(tmp, +1);
    back.resize(n);
    for (cplx& v : back) v /= static_cast<double>(padded);
    return back;
  };

  out.values.assign(n * n_tau, 0.0);
  std::vector<cplx> product(n);
  for (std::size_t b = 0; b < n_tau; ++b) {
    const double s = out.tau.at(b) * state.hbar() / 2.0;
    const std::vector<cplx> plus = shifted(s);
    const std::vector<cplx> minus = shifted(-s);
    for (std::size_t j = 0; j < n; ++j) product[j] = plus[j] * std::conj(minus[j]);
    const std::vector<cplx> column = fourier::to_conjugate(product, q.min, q.step, +1);
    for (std::size_t a = 0; a < n; ++a) out.values[a * n_tau + b] = column[a] * q.step;
  }
  return out;
}

PhaseGrid cohen_distribution(const GridState& state, const KernelSpec& kernel) {
  return cohen_distribution(state, kernel, default_momentum_axis(state));
}

PhaseGrid cohen_distribution(const GridState& state, const KernelSpec& kernel, const GridAxis& p_axis) {
  if (kernel.kind() == KernelKind::custom) {
    throw KernelError("custom kernels are series-only and cannot build a numeric distribution");
  }
  const AmbiguityGrid amb = ambiguity(state, p_axis);
  const std::size_t n_q = amb.theta.size;
  const std::size_t n_p = amb.tau.size;
  const double hbar = state.hbar();

  // tau -> p along each theta row.
  std::vector<cplx> stage(n_q * n_p);
  std::vector<cplx> row(n_p);
  for (std::size_t a = 0; a < n_q; ++a) {
    const double theta = amb.theta.at(a);
    for (std::size_t b = 0; b < n_p; ++b) row[b] = damped_kernel(kernel, theta, amb.tau.at(b), hbar) * amb.at(a, b);
    const std::vector<cplx> mapped = fourier::from_conjugate(row, p_axis.min, p_axis.step, -1);
    std::copy(mapped.begin(), mapped.end(), stage.begin() + static_cast<std::ptrdiff_t>(a * n_p));
  }

  // theta -> q along each p column.
  const GridAxis& q = state.axis();
  PhaseGrid grid{q, p_axis, hbar, kernel, std::vector<cplx>(n_q * n_p)};
  const double measure = amb.theta.step * amb.tau.step / (4.0 * kPi * kPi);
  std::vector<cplx> column(n_q);
  for (std::size_t k = 0; k < n_p; ++k) {
    for (std::size_t a = 0; a < n_q; ++a) column[a] = stage[a * n_p + k];
    const std::vector<cplx> mapped = fourier::from_conjugate(column, q.min, q.step, -1);
    for (std::size_t j = 0; j < n_q; ++j) grid.values[j * n_p + k] = mapped[j] * measure;
  }
  return grid;
}

Marginals marginals(const PhaseGrid& grid) {
  const std::vector<double> wq = trapezoid_weights(grid.q.size);
  const std::vector<double> wp = trapezoid_weights(grid.p.size);
  Marginals m{std::vector<double>(grid.q.size, 0.0), std::vector<double>(grid.p.size, 0.0)};
  for (std::size_t j = 0; j < grid.q.size; ++j) {
    for (std::size_t k = 0; k < grid.p.size; ++k) {
      const double f = grid.at(j, k).real();
      m.q[j] += wp[k] * f * grid.p.step;
      m.p[k] += wq[j] * f * grid.q.step;
    }
  }
  return m;
}

cplx evaluate(const PhasePoly& g, double q, double p, double hbar) {
  cplx sum = 0.0;
  for (const auto& [mono, c] : g.terms()) sum += c.evaluate(hbar) * std::pow(q, mono.q) * std::pow(p, mono.p);
  return sum;
}

cplx pair(const PhaseGrid& grid, const PhasePoly& g) {
  if (g.is_zero()) return 0.0;
  const int deg = g.degree();
  auto powers = [deg](const GridAxis& axis) {
    std::vector<std::vector<double>> table(axis.size, std::vector<double>(static_cast<std::size_t>(deg) + 1, 1.0));
    for (std::size_t i = 0; i < axis.size; ++i)
      for (int e = 1; e <= deg; ++e) table[i][e] = table[i][e - 1] * axis.at(i);
    return table;
  };
  const auto qpow = powers(grid.q);
  const auto ppow = powers(grid.p);
  std::vector<std::pair<Monomial, cplx>> terms;
  for (const auto& [mono, c] : g.terms()) terms.emplace_back(mono, c.evaluate(grid.hbar));

  const std::vector<double> wq = trapezoid_weights(grid.q.size);
  const std::vector<double> wp = trapezoid_weights(grid.p.size);
  cplx total = 0.0;
  for (std::size_t j = 0; j < grid.q.size; ++j) {
    cplx row = 0.0;
    for (std::size_t k = 0; k < grid.p.size; ++k) {
      cplx gv = 0.0;
      for (const auto& [mono, c] : terms) gv += c * (qpow[j][mono.q] * ppow[k][mono.p]);
      row += wp[k] * grid.at(j, k) * gv;
    }
    total += wq[j] * row;
  }
  return total * grid.q.step * grid.p.step;
}

cplx trace_expectation(const GridState& state, const OperatorPoly& op) {
  const GridAxis& axis = state.axis();
  const std::size_t n = axis.size;
  const double hbar = state.hbar();
  const std::vector<cplx> psi(state.psi().begin(), state.psi().end());
  const std::vector<cplx> spectrum = fourier::fft(psi, -1);
  std::vector<double> momentum(n);
  double kappa_max = 0.0;
  double peak = 0.0;
  for (const cplx& v : spectrum) peak = std::max(peak, std::abs(v));
  // Coefficients at rounding level carry no resolvable content and are left out of the bound.
  const double roundoff = 64.0 * std::numeric_limits<double>::epsilon() * peak;
  for (std::size_t k = 0; k < n; ++k) {
    const double kappa = fourier::wavenumber(k, n, axis.step);
    momentum[k] = hbar * kappa;
    kappa_max = std::max(kappa_max, std::abs(kappa));
  }

  cplx total = 0.0;
  double noise_bound = 0.0;
  std::vector<cplx> tmp(n);
  for (const auto& [mono, c] : op.terms()) {
    const cplx coeff = c.evaluate(hbar);
    // ph^m psi
    double high_band = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double factor = std::pow(momentum[k], mono.p);
      tmp[k] = spectrum[k] * factor;
      if (std::abs(momentum[k]) > 0.5 * hbar * kappa_max && std::abs(spectrum[k]) > roundoff) {
        high_band += std::norm(tmp[k]);
      }
    }
    std::vector<cplx> applied = fourier::fft(tmp, +1);
    cplx term = 0.0;
    double q_norm = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double qn = std::pow(axis.at(j), mono.q);
      term += std::conj(psi[j]) * qn * applied[j] / static_cast<double>(n);
      q_norm += std::norm(qn * psi[j]);
    }
    total += coeff * term * axis.step;
    // Cauchy-Schwarz bound on <q^n psi | P_high p^m psi>.
    noise_bound += std::abs(coeff) * std::sqrt(high_band * axis.step / static_cast<double>(n) * q_norm * axis.step);
  }
  if (noise_bound > kSpectralNoiseLimit) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "spectral differentiation noise bound %.3g exceeds %.0e; refine the grid or lower the operator degree",
                  noise_bound, kSpectralNoiseLimit);
    throw NumericError(buf);
  }
  return total;
}

std::vector<cplx> momentum_wavefunction(const GridState& state, const GridAxis& p_axis) {
  const GridAxis& q = state.axis();
  const double hbar = state.hbar();
  const double norm = q.step / std::sqrt(2.0 * kPi * hbar);
  std::vector<cplx> phi(p_axis.size, 0.0);
  for (std::size_t k = 0; k < p_axis.size; ++k) {
    const double p = p_axis.at(k);
    cplx sum = 0.0;
    for (std::size_t j = 0; j < q.size; ++j) sum += state.psi()[j] * std::polar(1.0, -p * q.at(j) / hbar);
    phi[k] = sum * norm;
  }
  return phi;
}

}  // namespace cohen
