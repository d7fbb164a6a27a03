#pragma once

// Floating-point hot loops, each with a serial reference and an OpenMP
// version that must produce identical results.

#include <complex>
#include <cstddef>
#include <vector>

namespace wst::kernels {

using Complex = std::complex<double>;

struct CircleMax {
  double max_abs = 0.0;
  std::size_t arg = 0;  // sample index of the maximum (smallest on ties)
};

/// max over j < samples of |sum_k coeffs[k] z^(lo+k)|, z = radius*exp(2 pi i j / samples).
CircleMax circle_max_serial(const std::vector<Complex>& coeffs, int lo, double radius, std::size_t samples);
CircleMax circle_max_parallel(const std::vector<Complex>& coeffs, int lo, double radius, std::size_t samples);

std::vector<Complex> convolve_serial(const std::vector<Complex>& a, const std::vector<Complex>& b);
std::vector<Complex> convolve_parallel(const std::vector<Complex>& a, const std::vector<Complex>& b);

}  // namespace wst::kernels
