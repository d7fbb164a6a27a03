#include "wst/kernels.hpp"

#include <cmath>
#include <numbers>

namespace wst::kernels {

namespace {

double sample_abs(const std::vector<Complex>& coeffs, int lo, double radius, std::size_t j, std::size_t samples) {
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
  const Complex z = std::polar(radius, theta);
  Complex acc(0.0, 0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  if (lo != 0) acc *= std::pow(z, lo);
  return std::abs(acc);
}

Complex conv_entry(const std::vector<Complex>& a, const std::vector<Complex>& b, std::size_t k) {
  Complex acc(0.0, 0.0);
  const std::size_t i0 = k >= b.size() ? k - b.size() + 1 : 0;
  const std::size_t i1 = std::min(k, a.size() - 1);
  for (std::size_t i = i0; i <= i1; ++i) acc += a[i] * b[k - i];
  return acc;
}

}  // namespace

CircleMax circle_max_serial(const std::vector<Complex>& coeffs, int lo, double radius, std::size_t samples) {
  CircleMax best;
  for (std::size_t j = 0; j < samples; ++j) {
    const double v = sample_abs(coeffs, lo, radius, j, samples);
    if (v > best.max_abs) best = {v, j};
  }
  return best;
}

CircleMax circle_max_parallel(const std::vector<Complex>& coeffs, int lo, double radius, std::size_t samples) {
  CircleMax best;
  const auto n = static_cast<long>(samples);
#pragma omp parallel
  {
    CircleMax local;
#pragma omp for schedule(static) nowait
    for (long j = 0; j < n; ++j) {
      const double v = sample_abs(coeffs, lo, radius, static_cast<std::size_t>(j), samples);
      if (v > local.max_abs) local = {v, static_cast<std::size_t>(j)};
    }
#pragma omp critical(wst_circle_max)
    {
      if (local.max_abs > best.max_abs || (local.max_abs == best.max_abs && local.arg < best.arg)) best = local;
    }
  }
  return best;
}

std::vector<Complex> convolve_serial(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Complex> out(a.size() + b.size() - 1);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = conv_entry(a, b, k);
  return out;
}

std::vector<Complex> convolve_parallel(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Complex> out(a.size() + b.size() - 1);
  const auto n = static_cast<long>(out.size());
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = conv_entry(a, b, static_cast<std::size_t>(k));
  return out;
}

}  // namespace wst::kernels
