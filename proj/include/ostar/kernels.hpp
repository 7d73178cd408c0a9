#pragma once

// Data-parallel inner loops of modular row elimination.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant compiled in its own translation unit.  The variant is picked at
// runtime from CPUID; OSTAR_SIMD=scalar|avx2 overrides the choice.  Values
// are residues modulo the Mersenne prime 2^31-1 held in 64-bit lanes.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ostar::kernels {

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 31) - 1;

enum class Isa { scalar, avx2 };

std::string to_string(Isa isa);

/// Whether the running CPU and the build both support `isa`.
bool supported(Isa isa);

/// Best supported ISA, unless OSTAR_SIMD pins one.
Isa active_isa();

std::uint64_t reduce(std::uint64_t x);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b);
std::uint64_t inv_mod(std::uint64_t a);

/// dst[i] = dst[i] + factor * src[i]  (mod 2^31-1).  Inputs must be reduced.
void axpy_mod_scalar(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                     std::uint64_t factor);
/// dst[i] = factor * dst[i]  (mod 2^31-1).
void scale_mod_scalar(std::span<std::uint64_t> dst, std::uint64_t factor);
/// Index of the first nonzero entry, or size() when all are zero.
std::size_t first_nonzero_scalar(std::span<const std::uint64_t> v);

#if defined(__x86_64__) || defined(_M_X64)
#define OSTAR_KERNELS_X86 1
void axpy_mod_avx2(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                   std::uint64_t factor);
void scale_mod_avx2(std::span<std::uint64_t> dst, std::uint64_t factor);
std::size_t first_nonzero_avx2(std::span<const std::uint64_t> v);
#endif

struct Dispatch {
  Isa isa;
  void (*axpy_mod)(std::span<std::uint64_t>, std::span<const std::uint64_t>, std::uint64_t);
  void (*scale_mod)(std::span<std::uint64_t>, std::uint64_t);
  std::size_t (*first_nonzero)(std::span<const std::uint64_t>);
};

/// Kernel table for `isa`; throws std::invalid_argument if unsupported.
const Dispatch& dispatch(Isa isa);
const Dispatch& dispatch();

/// Rank modulo 2^31-1 of the given rows (each already reduced, equal
/// length).  The rows are consumed as scratch space.
std::size_t rank_mod_prime(std::vector<std::vector<std::uint64_t>> rows, const Dispatch& k);

}  // namespace ostar::kernels
