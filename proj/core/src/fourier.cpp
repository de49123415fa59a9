#include "fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace cohen::fourier {

namespace {

// The FFTW planner is not thread-safe; execution of a private plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class Plan {
 public:
  Plan(std::size_t n, int sign) : n_(n) {
    in_ = fftw_alloc_complex(n);
    out_ = fftw_alloc_complex(n);
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft_1d(static_cast<int>(n), in_, out_, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                             FFTW_ESTIMATE);
  }
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
    fftw_free(in_);
    fftw_free(out_);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;

  std::vector<cplx> run(std::span<const cplx> in) {
    for (std::size_t j = 0; j < n_; ++j) {
      in_[j][0] = in[j].real();
      in_[j][1] = in[j].imag();
    }
    fftw_execute(plan_);
    std::vector<cplx> out(n_);
    for (std::size_t j = 0; j < n_; ++j) out[j] = {out_[j][0], out_[j][1]};
    return out;
  }

 private:
  std::size_t n_;
  fftw_complex* in_;
  fftw_complex* out_;
  fftw_plan plan_;
};

}  // namespace

std::vector<cplx> fft(std::span<const cplx> in, int sign) {
  if (in.empty()) return {};
  // Plans are cheap under FFTW_ESTIMATE; keep one per thread and size/sign.
  thread_local std::size_t cached_n = 0;
  thread_local int cached_sign = 0;
  thread_local std::unique_ptr<Plan> plan;
  if (!plan || cached_n != in.size() || cached_sign != sign) {
    plan.reset();
    plan = std::make_unique<Plan>(in.size(), sign);
    cached_n = in.size();
    cached_sign = sign;
  }
  return plan->run(in);
}

std::vector<cplx> to_conjugate(std::span<const cplx> samples, double x_min, double dx, int sign) {
  const std::size_t n = samples.size();
  if (n % 2) throw std::invalid_argument("conjugate transform needs an even grid size");
  const double dw = 2.0 * std::numbers::pi / (static_cast<double>(n) * dx);
  // exp(s i w_a x_j) = exp(s i w_a x_min) (-1)^j exp(s 2 pi i a j / n)
  std::vector<cplx> tmp(samples.begin(), samples.end());
  for (std::size_t j = 1; j < n; j += 2) tmp[j] = -tmp[j];
  std::vector<cplx> out = fft(tmp, sign);
  for (std::size_t a = 0; a < n; ++a) {
    const double w = (static_cast<double>(a) - static_cast<double>(n / 2)) * dw;
    out[a] *= std::polar(1.0, sign * w * x_min);
  }
  return out;
}

std::vector<cplx> from_conjugate(std::span<const cplx> spectrum, double x_min, double dx, int sign) {
  const std::size_t n = spectrum.size();
  if (n % 2) throw std::invalid_argument("conjugate transform needs an even grid size");
  const double dw = 2.0 * std::numbers::pi / (static_cast<double>(n) * dx);
  // exp(s i w_a x_j) = exp(s i w_a x_min) (-1)^j exp(s 2 pi i a j / n)
  std::vector<cplx> tmp(n);
  for (std::size_t a = 0; a < n; ++a) {
    const double w = (static_cast<double>(a) - static_cast<double>(n / 2)) * dw;
    tmp[a] = spectrum[a] * std::polar(1.0, sign * w * x_min);
  }
  std::vector<cplx> out = fft(tmp, sign);
  for (std::size_t j = 1; j < n; j += 2) out[j] = -out[j];
  return out;
}

double wavenumber(std::size_t k, std::size_t n, double dx) {
  const double dk = 2.0 * std::numbers::pi / (static_cast<double>(n) * dx);
  if (2 * k == n) return 0.0;
  return 2 * k < n ? static_cast<double>(k) * dk : (static_cast<double>(k) - static_cast<double>(n)) * dk;
}

}  // namespace cohen::fourier
