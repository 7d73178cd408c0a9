// AVX2 variants of the modular elimination kernels.  This translation unit is
// the only one compiled with -mavx2; callers reach it through dispatch()
// after a CPUID check.

#include "ostar/kernels.hpp"

#include <immintrin.h>

namespace ostar::kernels {

namespace {

// Full reduction of four lanes holding values below 2^62.
inline __m256i reduce4(__m256i x, __m256i p) {
  x = _mm256_add_epi64(_mm256_and_si256(x, p), _mm256_srli_epi64(x, 31));
  x = _mm256_add_epi64(_mm256_and_si256(x, p), _mm256_srli_epi64(x, 31));
  // x <= p + 1 here; subtract p where x > p - 1
  const __m256i pm1 = _mm256_sub_epi64(p, _mm256_set1_epi64x(1));
  const __m256i ge = _mm256_cmpgt_epi64(x, pm1);
  return _mm256_sub_epi64(x, _mm256_and_si256(ge, p));
}

}  // namespace

void axpy_mod_avx2(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                   std::uint64_t factor) {
  const std::size_t n = dst.size() < src.size() ? dst.size() : src.size();
  const __m256i p = _mm256_set1_epi64x(static_cast<long long>(kPrime));
  const __m256i f = _mm256_set1_epi64x(static_cast<long long>(factor));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    const __m256i prod = reduce4(_mm256_mul_epu32(s, f), p);
    const __m256i sum = reduce4(_mm256_add_epi64(prod, d), p);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), sum);
  }
  if (i < n) axpy_mod_scalar(dst.subspan(i, n - i), src.subspan(i, n - i), factor);
}

void scale_mod_avx2(std::span<std::uint64_t> dst, std::uint64_t factor) {
  const __m256i p = _mm256_set1_epi64x(static_cast<long long>(kPrime));
  const __m256i f = _mm256_set1_epi64x(static_cast<long long>(factor));
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i),
                        reduce4(_mm256_mul_epu32(d, f), p));
  }
  if (i < n) scale_mod_scalar(dst.subspan(i), factor);
}

std::size_t first_nonzero_avx2(std::span<const std::uint64_t> v) {
  const __m256i zero = _mm256_setzero_si256();
  const std::size_t n = v.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v.data() + i));
    const int zero_mask = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(x, zero)));
    if (zero_mask != 0xF) return i + static_cast<std::size_t>(__builtin_ctz(~zero_mask & 0xF));
  }
  for (; i < n; ++i)
    if (v[i] != 0) return i;
  return n;
}

}  // namespace ostar::kernels
