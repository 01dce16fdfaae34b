#pragma once

#include <complex>
#include <vector>

namespace skdv {

using cplx = std::complex<double>;

namespace fft {

// In-place complex DFT, FFTW sign convention (sign = -1 forward, +1 backward,
// both unnormalized).  Plans are cached per (size, sign) and shared; creation
// is serialized, execution is concurrency-safe on distinct buffers.
void raw_dft(std::vector<cplx>& data, int sign);

// Riemann-sum Fourier transform on a centered uniform lattice.
//
// Samples f_j live at y_j = -n*h/2 + j*h.  centered_forward returns the
// signed-order spectrum u[i] = h * sum_j f_j exp(-i k_i y_j) with
// k_i = 2*pi*(i - n/2)/(n*h); centered_inverse is its exact inverse,
// f_j = (1/(n*h)) * sum_i u[i] exp(i k_i y_j).
std::vector<cplx> centered_forward(const std::vector<cplx>& samples, double h);
std::vector<cplx> centered_inverse(const std::vector<cplx>& spectrum, double h);

} // namespace fft
} // namespace skdv
