#pragma once

#include <complex>
#include <span>
#include <vector>

namespace cohen::fourier {

using cplx = std::complex<double>;

/// Unnormalized FFT: out_k = sum_j in_j exp(sign * 2 pi i j k / n), sign = -1 or +1.
std::vector<cplx> fft(std::span<const cplx> in, int sign);

/// Transform between a uniform real-space grid x_j = x_min + j dx and its centered
/// conjugate grid w_a = (a - n/2) * 2 pi / (n dx):
///   to_conjugate:   Y_a = sum_j y_j exp(sign i w_a x_j)
///   from_conjugate: y_j = sum_a Y_a exp(sign i w_a x_j)
/// n must be even. No measure factors are applied.
std::vector<cplx> to_conjugate(std::span<const cplx> samples, double x_min, double dx, int sign);
std::vector<cplx> from_conjugate(std::span<const cplx> spectrum, double x_min, double dx, int sign);

/// Signed angular wavenumber of FFT bin k on a periodic grid of n points spacing dx;
/// the Nyquist bin maps to zero.
double wavenumber(std::size_t k, std::size_t n, double dx);

}  // namespace cohen::fourier
