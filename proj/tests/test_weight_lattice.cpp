#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "ostar/fusion.hpp"
#include "ostar/weight_lattice.hpp"

using namespace ostar;
using namespace ostar::weights;

namespace {

GroupElement g(int n, int i) { return generator(n, i); }

GroupElement random_element(std::mt19937_64& rng, int n) {
  // products of generators cover L_n
  std::uniform_int_distribution<int> len(0, 7), idx(1, n);
  std::vector<int> word(static_cast<std::size_t>(len(rng)));
  for (auto& i : word) i = idx(rng);
  return eval_word(n, word);
}

std::vector<Weight> dominant_L_weights(int n, int bound) {
  std::vector<Weight> out;
  Weight w(static_cast<std::size_t>(n));
  std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t i, std::int64_t hi) {
    if (i == w.size()) {
      if ((w.sum() == 0 || w.sum() == 1) && w.abs_sum() <= bound) out.push_back(w);
      return;
    }
    for (std::int64_t v = -bound; v <= hi; ++v) {
      w[i] = v;
      fill(i + 1, v);
    }
  };
  fill(0, bound);
  return out;
}

}  // namespace

TEST_SUITE("weight_lattice") {

TEST_CASE("weights") {
  const Weight w = parse_weight("(1, 1,-2)");
  CHECK(w == Weight{1, 1, -2});
  CHECK(w.to_string() == "(1,1,-2)");
  CHECK(w.sum() == 0);
  CHECK(w.abs_sum() == 4);
  CHECK_THROWS(parse_weight("1,x"));
  CHECK_THROWS(parse_weight(""));
  CHECK_THROWS(Weight{1, 2} + Weight{1, 2, 3});
  CHECK(Weight::unit(3, 2) == Weight{0, 1, 0});
}

TEST_CASE("generator relations") {
  for (int n = 1; n <= 4; ++n)
    for (int i = 1; i <= n; ++i) CHECK(multiply(g(n, i), g(n, i)) == identity(n));
  CHECK(eval_word(3, {1, 2, 3}) == GroupElement{{1, -1, 1}, Sector::tau});
  CHECK(multiply(g(2, 1), g(2, 2)) == GroupElement{{1, -1}, Sector::circ});
  CHECK(multiply(g(2, 2), g(2, 1)) == GroupElement{{-1, 1}, Sector::circ});
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) CHECK(eval_word(3, {a, b, c}) == eval_word(3, {c, b, a}));
}

TEST_CASE("words") {
  CHECK(eval_word(3, {}) == identity(3));
  CHECK(eval_word(4, {1, 2, 3}) == GroupElement{{1, -1, 1, 0}, Sector::tau});
  CHECK(eval_word(3, {1, 2, 2, 1}) == identity(3));
  CHECK_THROWS(eval_word_closed_form(3, {4}));
}

TEST_CASE("closed form and trivial words") {
  const int n = 3;
  std::vector<int> word;
  std::function<void()> walk = [&] {
    const auto e = eval_word(n, word);
    CHECK(e == eval_word_closed_form(n, word));
    if (e == identity(n)) {
      std::vector<int> bal(n + 1, 0);
      for (std::size_t p = 0; p < word.size(); ++p) bal[word[p]] += p % 2 ? -1 : 1;
      for (int x : bal) CHECK(x == 0);
    }
    if (word.size() == 6) return;
    for (int i = 1; i <= n; ++i) {
      word.push_back(i);
      walk();
      word.pop_back();
    }
  };
  walk();
}

TEST_CASE("g1 g2 has infinite order at n=2") {
  std::set<GroupElement> seen;
  GroupElement acc = identity(2);
  const GroupElement h = multiply(g(2, 1), g(2, 2));
  for (int e = 0; e <= 50; ++e) {
    CHECK(seen.insert(acc).second);
    acc = multiply(acc, h);
  }
}

TEST_CASE("group axioms") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
    CHECK(in_L(a));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, identity(n)) == a);
    CHECK(multiply(identity(n), a) == a);
    CHECK(multiply(a, inverse(a)) == identity(n));
    CHECK(multiply(inverse(a), a) == identity(n));
    CHECK(in_L(multiply(a, b)));
  }
}

TEST_CASE("membership") {
  CHECK_THROWS_AS(validate({{1, 0, 0}, Sector::circ}), std::domain_error);
  CHECK_THROWS_AS(multiply({{2, 0}, Sector::circ}, identity(2)), std::domain_error);
  const GroupElement outside{{2, 0}, Sector::circ};
  const auto prod = multiply(outside, g(2, 1), Membership::permissive);
  CHECK(prod == GroupElement{{3, 0}, Sector::tau});
  CHECK(multiply(prod, inverse(prod, Membership::permissive), Membership::permissive) ==
        identity(2));
  CHECK(infer_sector(Weight{1, 1, -1}) == Sector::tau);
  CHECK_THROWS_AS(infer_sector(Weight{2, 0, 0}), std::domain_error);
}

TEST_CASE("psi") {
  CHECK(psi(g(3, 1)) == Weight{1, 0, 0});
  CHECK(psi({{1, 1, -2}, Sector::circ}) == Weight{1, 1, -2});
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 200; ++rep) {
    auto a = random_element(rng, 3);
    const auto b = random_element(rng, 3);
    if (a.sector != Sector::circ) a = multiply(a, g(3, 1));
    CHECK(psi(multiply(a, b)) == psi(a) + psi(b));
  }
}

TEST_CASE("dominance") {
  CHECK(is_dominant(Weight{1, 0, -1}));
  CHECK_FALSE(is_dominant(Weight{0, 1, -1}));
  CHECK(is_positive_diff(Weight{1, 0, -1}, Weight{0, 0, 0}));
  CHECK_FALSE(is_positive_diff(Weight{0, 0, 0}, Weight{1, 0, -1}));
  CHECK_FALSE(is_positive_diff(Weight{1, 0, 0}, Weight{0, 0, 0}));
  CHECK_THROWS(is_positive_diff(Weight{1, 0}, Weight{0, 0, 0}));
}

TEST_CASE("order on L") {
  const GroupElement a{{1, 0, -1}, Sector::circ};
  CHECK(order_L(a, a));
  CHECK(order_L(a, identity(3)));
  CHECK_FALSE(order_L(g(3, 1), identity(3)));
  CHECK_THROWS(order_L({{1, 0, 0}, Sector::circ}, identity(3)));
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 500; ++rep) {
    const auto x = random_element(rng, 3), y = random_element(rng, 3);
    const bool shortcut = x.sector == y.sector && is_positive_diff(psi(x), psi(y));
    CHECK(order_L(x, y) == shortcut);
    if (order_L(x, y)) CHECK(is_positive_diff(psi(x), psi(y)));
  }
}

TEST_CASE("U_n weight multisets") {
  const auto fund = weight_multiset_Un(Weight{1, 0, 0});
  CHECK(fund.size() == 3);
  for (const auto& [w, c] : fund) CHECK(c == 1);
  const auto adj = weight_multiset_Un(Weight{1, 0, -1});
  CHECK(adj.size() == 7);
  CHECK(total_multiplicity(adj) == 8);
  CHECK(adj.at(Weight{0, 0, 0}) == 2);
  CHECK(adj.at(Weight{0, 1, -1}) == 1);
  const auto triv = weight_multiset_Un(Weight{0, 0, 0});
  CHECK(triv.size() == 1);
  CHECK_THROWS(weight_multiset_Un(Weight{0, 1}));
  Limits tight;
  tight.max_patterns = 5;
  CHECK_THROWS_AS(weight_multiset_Un(Weight{2, 0, -2}, tight), ResourceLimit);
}

TEST_CASE("O_n* weight multisets") {
  const auto m = weight_multiset_Ostar(g(3, 1));
  CHECK(m.size() == 3);
  CHECK(m.count({{0, 0, 1}, Sector::tau}) == 1);
  CHECK(weight_multiset_Ostar(identity(3)).size() == 1);
  CHECK(total_multiplicity(weight_multiset_Ostar({{1, 1, -2}, Sector::circ})) == 10);
}

TEST_CASE("unique highest weight") {
  for (int n : {2, 3}) {
    const auto ws = dominant_L_weights(n, 8);
    CHECK(ws.size() >= 9);
    for (const auto& w : ws) {
      const auto lw = lift(w);
      const auto m = weight_multiset_Ostar(lw);
      const auto top = maximal_elements(m);
      REQUIRE(top.size() == 1);
      CHECK(top.front() == lw);
      CHECK(BigInt(total_multiplicity(m)) == fusion::weyl_dim(w));
    }
  }
}

TEST_CASE("json") {
  const GroupElement a{{1, 1, -2}, Sector::circ};
  const nlohmann::json j = a;
  CHECK(j.dump() == R"({"lambda":[1,1,-2],"sector":"circ"})");
  CHECK(j.get<GroupElement>() == a);
  CHECK_THROWS(nlohmann::json::parse(R"({"lambda":[1,0],"sector":"circ"})").get<GroupElement>());
}

}  // TEST_SUITE
