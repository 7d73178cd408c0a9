#include "ostar/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string_view>

namespace ostar::kernels {

std::string to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

std::uint64_t reduce(std::uint64_t x) {
  x = (x & kPrime) + (x >> 31);
  x = (x & kPrime) + (x >> 31);
  return x >= kPrime ? x - kPrime : x;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) { return reduce(a * b); }

std::uint64_t inv_mod(std::uint64_t a) {
  if (a % kPrime == 0) throw std::domain_error("inv_mod: zero has no inverse");
  std::uint64_t result = 1, base = a % kPrime, e = kPrime - 2;
  while (e) {
    if (e & 1) result = mul_mod(result, base);
    base = mul_mod(base, base);
    e >>= 1;
  }
  return result;
}

void axpy_mod_scalar(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                     std::uint64_t factor) {
  const std::size_t n = dst.size() < src.size() ? dst.size() : src.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t s = dst[i] + reduce(factor * src[i]);
    dst[i] = s >= kPrime ? s - kPrime : s;
  }
}

void scale_mod_scalar(std::span<std::uint64_t> dst, std::uint64_t factor) {
  for (auto& x : dst) x = reduce(x * factor);
}

std::size_t first_nonzero_scalar(std::span<const std::uint64_t> v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

bool supported(Isa isa) {
  if (isa == Isa::scalar) return true;
#if defined(OSTAR_KERNELS_X86) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() {
  if (const char* env = std::getenv("OSTAR_SIMD")) {
    const std::string_view v(env);
    if (v == "scalar") return Isa::scalar;
    if (v == "avx2" && supported(Isa::avx2)) return Isa::avx2;
  }
  return supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

const Dispatch& dispatch(Isa isa) {
  static const Dispatch scalar{Isa::scalar, &axpy_mod_scalar, &scale_mod_scalar,
                               &first_nonzero_scalar};
  if (isa == Isa::scalar) return scalar;
#if defined(OSTAR_KERNELS_X86)
  static const Dispatch avx2{Isa::avx2, &axpy_mod_avx2, &scale_mod_avx2, &first_nonzero_avx2};
  if (supported(Isa::avx2)) return avx2;
#endif
  throw std::invalid_argument("kernels: ISA " + to_string(isa) + " is not available here");
}

const Dispatch& dispatch() {
  static const Dispatch& chosen = dispatch(active_isa());
  return chosen;
}

std::size_t rank_mod_prime(std::vector<std::vector<std::uint64_t>> rows, const Dispatch& k) {
  struct Pivot {
    std::size_t row;
    std::size_t col;
  };
  std::vector<Pivot> pivots;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto& row = rows[r];
    for (const auto& pv : pivots) {
      const std::uint64_t c = row[pv.col];
      if (c != 0) k.axpy_mod(row, rows[pv.row], kPrime - c);
    }
    const std::size_t lead = k.first_nonzero(row);
    if (lead == row.size()) continue;
    k.scale_mod(row, inv_mod(row[lead]));
    pivots.push_back({r, lead});
  }
  return pivots.size();
}

}  // namespace ostar::kernels
