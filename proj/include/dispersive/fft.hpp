#pragma once

#include <complex>
#include <span>

namespace dispersive::fft {

// Unnormalized complex DFTs backed by FFTW:
//   forward:  out_k = sum_j in_j exp(-2 pi i j k / n)
//   backward: out_j = sum_k in_k exp(+2 pi i j k / n)
// Plans are created once per length and shared; execution is thread-safe.
// In-place calls (in.data() == out.data()) are allowed.
void forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out);
void backward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out);

} // namespace dispersive::fft
