#include "shinv/kernels.hpp"

#if defined(SHINV_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>

namespace shinv::kernels {

namespace {

constexpr double kTwoOverLn2 = 2.8853900817779268;  // 2/ln(2)

// log2 of 4 positive normal doubles. Splits x = 2^e * m with
// m in [sqrt(2)/2, sqrt(2)), then evaluates the odd series
// log2(m) = (2/ln2) * (s + s^3/3 + ...) with s = (m-1)/(m+1).
// |s| <= 0.1716, so truncating after s^21 keeps the error near 1 ulp.
inline __m256d log2_pd(__m256d x) {
  const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFll);
  const __m256i one_exp = _mm256_set1_epi64x(0x3FF0000000000000ll);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d sqrt2 = _mm256_set1_pd(1.4142135623730951);

  const __m256i bits = _mm256_castpd_si256(x);

  // Biased exponent field; lanes hold small non-negative ints, so the low
  // 32 bits of each 64-bit lane carry the whole value.
  const __m256i biased = _mm256_srli_epi64(bits, 52);
  const __m256i pack_idx = _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0);
  const __m128i biased32 =
      _mm256_castsi256_si128(_mm256_permutevar8x32_epi32(biased, pack_idx));
  __m256d e = _mm256_sub_pd(_mm256_cvtepi32_pd(biased32),
                            _mm256_set1_pd(1023.0));

  __m256d m = _mm256_castsi256_pd(
      _mm256_or_si256(_mm256_and_si256(bits, mant_mask), one_exp));

  const __m256d ge = _mm256_cmp_pd(m, sqrt2, _CMP_GE_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, half), ge);
  e = _mm256_add_pd(e, _mm256_and_pd(ge, one));

  const __m256d s = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
  const __m256d s2 = _mm256_mul_pd(s, s);

  __m256d r = _mm256_set1_pd(kTwoOverLn2 / 21.0);
  r = _mm256_fmadd_pd(r, s2, _mm256_set1_pd(kTwoOverLn2 / 19.0));
  r = _mm256_fmadd_pd(r, s2, _mm256_set1_pd(kTwoOverLn2 / 17.0));
  r = _mm256_fmadd_pd(r, s2, _mm256_set1_pd(kTwoOverLn2 / 15.0));
  r = _mm256_fmadd_pd(r, s2, _mm256_set1_pd(kTwoOverLn2 / 13.0));
  r = _mm256_fmadd_pd(r, s2, _mm256_set1_pd(kTwoOverLn2 / 11.0));
  r = _mm256_fmadd_pd(r, s2, _mm256_set1_pd(kTwoOverLn2 / 9.0));
  r = _mm256_fmadd_pd(r, s2, _mm256_set1_pd(kTwoOverLn2 / 7.0));
  r = _mm256_fmadd_pd(r, s2, _mm256_set1_pd(kTwoOverLn2 / 5.0));
  r = _mm256_fmadd_pd(r, s2, _mm256_set1_pd(kTwoOverLn2 / 3.0));
  r = _mm256_fmadd_pd(r, s2, _mm256_set1_pd(kTwoOverLn2));

  return _mm256_fmadd_pd(s, r, e);
}

inline __m256d abs_pd(__m256d x) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x);
}

}  // namespace

double entropy_bits_avx2(std::span<const double> probs) {
  const std::size_t n = probs.size();
  const double* p = probs.data();

  __m256d acc = _mm256_setzero_pd();
  __m256d comp = _mm256_setzero_pd();

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d pv = _mm256_loadu_pd(p + i);
    const __m256d term =
        _mm256_fnmadd_pd(pv, log2_pd(pv), _mm256_setzero_pd());

    // Per-lane Neumaier update.
    const __m256d t = _mm256_add_pd(acc, term);
    const __m256d acc_big = _mm256_cmp_pd(abs_pd(acc), abs_pd(term), _CMP_GE_OQ);
    const __m256d corr_big = _mm256_add_pd(_mm256_sub_pd(acc, t), term);
    const __m256d corr_small = _mm256_add_pd(_mm256_sub_pd(term, t), acc);
    comp = _mm256_add_pd(comp, _mm256_blendv_pd(corr_small, corr_big, acc_big));
    acc = t;
  }

  alignas(32) double lanes[4];
  alignas(32) double comps[4];
  _mm256_store_pd(lanes, acc);
  _mm256_store_pd(comps, comp);

  double sum = 0.0;
  double c = comps[0] + comps[1] + comps[2] + comps[3];
  auto add = [&sum, &c](double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      c += (sum - t) + x;
    } else {
      c += (x - t) + sum;
    }
    sum = t;
  };
  for (double lane : lanes) add(lane);
  for (; i < n; ++i) add(-p[i] * std::log2(p[i]));
  return sum + c;
}

void quantize_levels_avx2(std::span<const double> values,
                          std::span<const double> draws, double sigma_min,
                          double step, std::int32_t n_levels,
                          std::span<std::int32_t> out) {
  const double top_s = static_cast<double>(n_levels - 1);
  const double sigma_max_s = sigma_min + step * top_s;

  const __m256d lo_bound = _mm256_set1_pd(sigma_min);
  const __m256d hi_bound = _mm256_set1_pd(sigma_max_s);
  const __m256d step_v = _mm256_set1_pd(step);
  const __m256d top = _mm256_set1_pd(top_s);

  const std::size_t n = values.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(values.data() + i);
    v = _mm256_min_pd(_mm256_max_pd(v, lo_bound), hi_bound);
    __m256d t = _mm256_div_pd(_mm256_sub_pd(v, lo_bound), step_v);
    t = _mm256_min_pd(t, top);
    const __m256d flo = _mm256_floor_pd(t);
    const __m256d frac = _mm256_sub_pd(t, flo);
    const __m256d u = _mm256_loadu_pd(draws.data() + i);
    const __m256d up_mask = _mm256_cmp_pd(u, frac, _CMP_LT_OQ);
    const __m256d lvl = _mm256_blendv_pd(flo, _mm256_ceil_pd(t), up_mask);
    const __m128i lvl32 = _mm256_cvttpd_epi32(lvl);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out.data() + i), lvl32);
  }
  if (i < n) {
    quantize_levels_scalar(values.subspan(i), draws.subspan(i), sigma_min,
                           step, n_levels, out.subspan(i));
  }
}

}  // namespace shinv::kernels

#endif  // SHINV_HAVE_AVX2
