#pragma once

#include <cstdint>
#include <span>
#include <string>

// Arithmetic inner loops shared by the distribution and quantizer modules.
// Each kernel has a scalar reference implementation and, on x86-64 builds
// with AVX2 support, a vectorized variant selected once at runtime. The two
// are equivalence-tested; callers only see the dispatched entry points.

namespace shinv::kernels {

enum class Backend {
  scalar,
  avx2,
};

// Backend chosen by the dispatcher (CPU detection, overridable via the
// SHINV_BACKEND environment variable or set_backend()).
Backend active_backend();

// Force a backend. Returns false (and leaves the selection unchanged) if the
// requested backend is not available on this machine/build.
bool set_backend(Backend b);

// Revert to automatic selection.
void reset_backend();

bool avx2_available();

std::string backend_name(Backend b);

// -sum(p * log2(p)) over all entries, in bits. Preconditions: every entry is
// a positive normal double <= 1. Accumulation is compensated, so the result
// is accurate to a few ulps independent of length.
double entropy_bits(std::span<const double> probs);

// Stochastic rounding of values onto the uniform grid
// {sigma_min + k*step : k = 0..n_levels-1}. Values are clamped to the grid
// range first; draws[i] in [0,1] decides between the two nearest levels
// (up when draws[i] < frac, down otherwise). Scalar and AVX2 variants are
// bit-identical.
void quantize_levels(std::span<const double> values,
                     std::span<const double> draws, double sigma_min,
                     double step, std::int32_t n_levels,
                     std::span<std::int32_t> out);

// Reference implementations, exposed for equivalence tests.
double entropy_bits_scalar(std::span<const double> probs);
void quantize_levels_scalar(std::span<const double> values,
                            std::span<const double> draws, double sigma_min,
                            double step, std::int32_t n_levels,
                            std::span<std::int32_t> out);

#if defined(SHINV_HAVE_AVX2)
double entropy_bits_avx2(std::span<const double> probs);
void quantize_levels_avx2(std::span<const double> values,
                          std::span<const double> draws, double sigma_min,
                          double step, std::int32_t n_levels,
                          std::span<std::int32_t> out);
#endif

// Compensated (Neumaier) sum; used for pmf validation where the straight
// sum's error would grow with support size.
double compensated_sum(std::span<const double> values);

}  // namespace shinv::kernels
