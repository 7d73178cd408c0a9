#include <cstdlib>
#include <random>
#include <string>

#include "doctest.h"
#include "ostar/kernels.hpp"
#include "ostar/tensor_maps.hpp"

using namespace ostar;
using namespace ostar::kernels;

namespace {

std::vector<std::uint64_t> random_residues(std::mt19937_64& rng, std::size_t len, double zero_rate) {
  std::uniform_int_distribution<std::uint64_t> val(0, kPrime - 1);
  std::bernoulli_distribution zero(zero_rate);
  std::vector<std::uint64_t> v(len);
  for (auto& x : v) x = zero(rng) ? 0 : val(rng);
  return v;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("modular arithmetic") {
  CHECK(reduce(kPrime) == 0);
  CHECK(reduce(kPrime + 5) == 5);
  CHECK(reduce((kPrime - 1) * (kPrime - 1)) == 1);
  CHECK(mul_mod(kPrime - 1, kPrime - 1) == 1);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t a = 1 + rng() % (kPrime - 1);
    CHECK(mul_mod(a, inv_mod(a)) == 1);
    const std::uint64_t b = rng() % kPrime;
    CHECK(mul_mod(a, b) == static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime));
  }
}

TEST_CASE("scalar and SIMD kernels agree") {
  if (!supported(Isa::avx2)) {
    MESSAGE("AVX2 not available; only the scalar kernels are exercised");
    return;
  }
#ifdef OSTAR_KERNELS_X86
  std::mt19937_64 rng(2);
  for (std::size_t len = 0; len <= 37; ++len)
    for (int rep = 0; rep < 20; ++rep) {
      const auto src = random_residues(rng, len, 0.2);
      auto a = random_residues(rng, len, 0.2);
      auto b = a;
      const std::uint64_t f = rep == 0 ? 0 : rep == 1 ? kPrime - 1 : rng() % kPrime;
      axpy_mod_scalar(a, src, f);
      axpy_mod_avx2(b, src, f);
      CHECK(a == b);
      scale_mod_scalar(a, f);
      scale_mod_avx2(b, f);
      CHECK(a == b);

      std::vector<std::uint64_t> sparse(len, 0);
      if (len > 0 && rep % 3 != 0) sparse[rng() % len] = 1 + rng() % (kPrime - 1);
      CHECK(first_nonzero_scalar(sparse) == first_nonzero_avx2(sparse));
    }
#endif
}

TEST_CASE("axpy against direct arithmetic") {
  const auto& k = dispatch();
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    const auto src = random_residues(rng, 19, 0.0);
    auto dst = random_residues(rng, 19, 0.0);
    const auto before = dst;
    const std::uint64_t f = rng() % kPrime;
    k.axpy_mod(dst, src, f);
    for (std::size_t i = 0; i < dst.size(); ++i)
      CHECK(dst[i] == (before[i] + static_cast<std::uint64_t>(
                                       (static_cast<unsigned __int128>(f) * src[i]) % kPrime)) %
                          kPrime);
  }
}

TEST_CASE("modular rank matches exact rank on small integer matrices") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 9;
    std::vector<std::vector<BigInt>> exact(rows, std::vector<BigInt>(cols));
    std::vector<std::vector<std::uint64_t>> residues(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        // low rank on purpose: later rows repeat earlier ones half of the time
        const int v = (r > 1 && rep % 2) ? 0 : entry(rng);
        exact[r][c] = v;
        residues[r][c] = v < 0 ? kPrime - static_cast<std::uint64_t>(-v) : static_cast<std::uint64_t>(v);
      }
    const auto expected = tensor_maps::bareiss_rank(exact);
    for (auto isa : {Isa::scalar, Isa::avx2}) {
      if (!supported(isa)) continue;
      CHECK(rank_mod_prime(residues, dispatch(isa)) == expected);
    }
  }
}

TEST_CASE("dispatch reports a supported ISA") {
  CHECK(supported(Isa::scalar));
  CHECK(supported(dispatch().isa));
  CHECK(dispatch(Isa::scalar).isa == Isa::scalar);
  CHECK(to_string(Isa::avx2) == "avx2");
  if (const char* env = std::getenv("OSTAR_SIMD"); env && std::string(env) == "scalar")
    CHECK(dispatch().isa == Isa::scalar);
  MESSAGE("active kernel: " << to_string(dispatch().isa));
}

}  // TEST_SUITE
