#include "shinv/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>

namespace shinv::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(SHINV_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend detect_backend() {
  if (const char* env = std::getenv("SHINV_BACKEND")) {
    std::string v(env);
    if (v == "scalar") return Backend::scalar;
    if (v == "avx2" && cpu_has_avx2()) return Backend::avx2;
  }
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend> g_backend{detect_backend()};

}  // namespace

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

bool set_backend(Backend b) {
  if (b == Backend::avx2 && !cpu_has_avx2()) return false;
  g_backend.store(b, std::memory_order_relaxed);
  return true;
}

void reset_backend() { g_backend.store(detect_backend(), std::memory_order_relaxed); }

bool avx2_available() { return cpu_has_avx2(); }

std::string backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

double entropy_bits_scalar(std::span<const double> probs) {
  // Neumaier-compensated accumulation of -p*log2(p).
  double sum = 0.0;
  double comp = 0.0;
  for (double p : probs) {
    const double term = -p * std::log2(p);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

void quantize_levels_scalar(std::span<const double> values,
                            std::span<const double> draws, double sigma_min,
                            double step, std::int32_t n_levels,
                            std::span<std::int32_t> out) {
  const double top = static_cast<double>(n_levels - 1);
  const double sigma_max = sigma_min + step * top;
  for (std::size_t i = 0; i < values.size(); ++i) {
    double v = std::min(std::max(values[i], sigma_min), sigma_max);
    double t = std::min((v - sigma_min) / step, top);
    const double lo = std::floor(t);
    const double frac = t - lo;
    const double lvl = (draws[i] < frac) ? std::ceil(t) : lo;
    out[i] = static_cast<std::int32_t>(lvl);
  }
}

double compensated_sum(std::span<const double> values) {
  double sum = 0.0;
  double comp = 0.0;
  for (double x : values) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

double entropy_bits(std::span<const double> probs) {
#if defined(SHINV_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return entropy_bits_avx2(probs);
#endif
  return entropy_bits_scalar(probs);
}

void quantize_levels(std::span<const double> values,
                     std::span<const double> draws, double sigma_min,
                     double step, std::int32_t n_levels,
                     std::span<std::int32_t> out) {
#if defined(SHINV_HAVE_AVX2)
  if (active_backend() == Backend::avx2) {
    quantize_levels_avx2(values, draws, sigma_min, step, n_levels, out);
    return;
  }
#endif
  quantize_levels_scalar(values, draws, sigma_min, step, n_levels, out);
}

}  // namespace shinv::kernels
