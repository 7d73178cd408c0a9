#include <random>

#include "doctest.h"
#include "ostar/fusion.hpp"
#include "ostar/tensor_maps.hpp"

using namespace ostar;
using namespace ostar::tensor_maps;
using diagrams::Family;
using diagrams::Pairing;

namespace {

// flat index of (d_1, ..., d_m) with d_1 most significant, digits 0-based
std::size_t flat(std::initializer_list<int> digits, int n) {
  std::size_t v = 0;
  for (int d : digits) v = v * static_cast<std::size_t>(n) + static_cast<std::size_t>(d);
  return v;
}

}  // namespace

TEST_SUITE("tensor_maps") {

TEST_CASE("identity diagram gives the identity map") {
  for (int n : {1, 2, 3}) CHECK(build_Tp(Pairing::identity(2), n) == IntMatrix::identity(n * n));
}

TEST_CASE("cap over cup gives delta_ab sum_c e_c e_c") {
  // lower row capped {1,2}, upper row cupped {3,4}
  const Pairing p = Pairing::from_pairs(2, 2, {{1, 2}, {3, 4}});
  const int n = 3;
  const auto T = build_Tp(p, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          CHECK(T(flat({c, d}, n), flat({a, b}, n)) == ((a == b && c == d) ? 1 : 0));
}

TEST_CASE("the half-liberation diagram reverses three factors") {
  const int n = 2;
  const auto T = build_Tp(Pairing::half_liberation(), n);
  REQUIRE(T.rows() == 8);
  REQUIRE(T.cols() == 8);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (std::size_t r = 0; r < 8; ++r)
          CHECK(T(r, flat({i, j, k}, n)) == (r == flat({k, j, i}, n) ? 1 : 0));
}

TEST_CASE("support matches the dense matrix") {
  for (const auto& p : diagrams::enumerate(2, 2, Family::P)) {
    const auto T = build_Tp(p, 3);
    const auto s = tp_support(p, 3);
    CHECK(s.size() == T.nonzeros());
    for (auto f : s) CHECK(T(f / 9, f % 9) == 1);
  }
}

TEST_CASE("hom dimensions") {
  for (auto f : {Family::P, Family::E, Family::N}) CHECK(hom_dim(3, 1, 1, f).rank == 1);
  CHECK(hom_dim(3, 2, 2, Family::E).rank == 2);
  CHECK(hom_dim(2, 3, 3, Family::E).rank == hom_dim(2, 3, 3, Family::N).rank);
  const auto e = hom_dim(3, 3, 3, Family::E);
  const auto nn = hom_dim(3, 3, 3, Family::N);
  CHECK(e.rank > nn.rank);
  CHECK(e.rank == 6);
  CHECK(nn.rank == 5);
  CHECK(hom_dim(2, 3, 3, Family::E).rank == 5);
  CHECK(hom_dim(3, 1, 2, Family::P).rank == 0);
  CHECK(hom_dim(3, 1, 2, Family::P).set_size == 0);
}

TEST_CASE("basis indices pick independent diagrams") {
  // At n=1 every T_p is the 1x1 matrix [1].
  const auto h = hom_dim(1, 2, 2, Family::P);
  CHECK(h.rank == 1);
  CHECK(h.basis_indices == std::vector<std::size_t>{0});
  CHECK(h.set_size == 3);
}

TEST_CASE("rank monotone across families") {
  for (int n : {1, 2, 3})
    for (int t = 0; t <= 6; t += 2)
      for (int k = 0; k <= t; ++k) {
        const auto N = hom_dim(n, k, t - k, Family::N).rank;
        const auto E = hom_dim(n, k, t - k, Family::E).rank;
        const auto P = hom_dim(n, k, t - k, Family::P).rank;
        CHECK(N <= E);
        CHECK(E <= P);
      }
}

TEST_CASE("independence once n is large") {
  for (int t = 2; t <= 6; t += 2) {
    const auto h = hom_dim(t, t / 2, t / 2, Family::P);
    CHECK(h.rank == h.set_size);
  }
}

TEST_CASE("E ranks equal U_n Hom dimensions") {
  for (int n : {2, 3})
    for (int t = 0; t <= 6; t += 2)
      for (int k = 0; k <= t; ++k) {
        const auto vk = fusion::decompose_power_Un_alternating(n, k);
        const auto vl = fusion::decompose_power_Un_alternating(n, t - k);
        CHECK(static_cast<std::int64_t>(hom_dim(n, k, t - k, Family::E).rank) ==
              fusion::hom_dimension(vk, vl));
      }
}

TEST_CASE("resource cap") {
  Limits tight;
  tight.max_cells = 100;
  CHECK_THROWS_AS(hom_dim(3, 3, 3, Family::E, tight), ResourceLimit);
  CHECK_THROWS_AS(build_Tp(Pairing::half_liberation(), 3, tight), ResourceLimit);
  CHECK_THROWS_AS(checked_power(10, 10, 1000), ResourceLimit);
  CHECK(checked_power(3, 4, 1000) == 81);
}

TEST_CASE("bareiss rank") {
  std::vector<std::vector<BigInt>> v{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}, {1, 3, 4}};
  std::vector<std::size_t> basis;
  CHECK(bareiss_rank(v, &basis) == 2);
  CHECK(basis == std::vector<std::size_t>{0, 2});
  CHECK(bareiss_rank({}) == 0);
  CHECK(bareiss_rank({{0, 0}, {0, 0}}) == 0);
}

TEST_CASE("modular rank agrees under every kernel") {
  for (auto isa : {kernels::Isa::scalar, kernels::Isa::avx2}) {
    if (!kernels::supported(isa)) continue;
    const auto& k = kernels::dispatch(isa);
    for (int n : {2, 3})
      for (int t = 2; t <= 6; t += 2) {
        const auto h = hom_dim(n, t / 2, t / 2, Family::P, Limits{}, k);
        CHECK(h.modular_rank == h.rank);
      }
  }
}

TEST_CASE("functor laws") {
  const auto one = build_Tp(Pairing::cup(), 3) * build_Tp(Pairing::cap(), 3);
  REQUIRE(one.rows() == 1);
  CHECK(one(0, 0) == 3);
  CHECK(functor_check(Pairing::cup(), Pairing::cap(), 3));
  const auto T = build_Tp(Pairing::half_liberation(), 2);
  CHECK(T * T == IntMatrix::identity(8));
  CHECK(functor_check(Pairing::half_liberation(), Pairing::half_liberation(), 2));
  CHECK_THROWS_AS(functor_check(Pairing::identity(2), Pairing::identity(1), 2),
                  std::invalid_argument);

  std::mt19937_64 rng(7);
  auto pick = [&](int k, int l) {
    const auto set = diagrams::enumerate(k, l, Family::P);
    std::vector<Pairing> items(set.begin(), set.end());
    return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)];
  };
  int trials = 0;
  for (int n : {2, 3})
    for (int k = 0; k <= 4; ++k)
      for (int m = 0; m <= 4; ++m)
        for (int l = 0; l <= 4; ++l) {
          if ((k + m) % 2 || (m + l) % 2 || k + m > 6 || m + l > 6) continue;
          for (int rep = 0; rep < 3; ++rep) {
            const Pairing p = pick(k, m), q = pick(m, l);
            const auto r = functor_report(q, p, n);
            CHECK(r.composition);
            CHECK(r.tensor);
            CHECK(r.involution);
            ++trials;
          }
        }
  CHECK(trials > 50);
}

TEST_CASE("sparse json export") {
  const auto j = to_sparse_json(build_Tp(Pairing::identity(1), 2));
  CHECK(j.dump() == R"({"cols":2,"entries":[[0,0,1],[1,1,1]],"rows":2})");
}

}  // TEST_SUITE
