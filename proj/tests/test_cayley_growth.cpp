#include <cmath>
#include <functional>

#include "doctest.h"
#include "ostar/cayley_growth.hpp"
#include "ostar/oracles.hpp"

using namespace ostar;
using namespace ostar::cayley;

namespace {

// b_k for O_n* straight from the length formula, without any graph.
GrowthSeries ostar_volumes_direct(int n, int kmax) {
  GrowthSeries b(static_cast<std::size_t>(kmax) + 1, 0);
  Weight w(static_cast<std::size_t>(n));
  std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t i, std::int64_t hi) {
    if (i == w.size()) {
      const auto len = oracles::ostar_length(w);
      if ((w.sum() == 0 || w.sum() == 1) && len <= kmax) {
        const BigInt d = fusion::weyl_dim(w);
        b[static_cast<std::size_t>(len)] += d * d;
      }
      return;
    }
    for (std::int64_t v = -kmax; v <= hi; ++v) {
      w[i] = v;
      fill(i + 1, v);
    }
  };
  fill(0, kmax);
  for (std::size_t k = 1; k < b.size(); ++k) b[k] += b[k - 1];
  return b;
}

}  // namespace

TEST_SUITE("cayley_growth") {

TEST_CASE("small O_3* balls") {
  const auto g = build_graph(Group::Ostar, 3, 1);
  REQUIRE(g.vertices.size() == 2);
  CHECK(g.vertices[0].weight == Weight{0, 0, 0});
  CHECK(g.vertices[0].length == 0);
  CHECK(g.vertices[0].dim == 1);
  CHECK(g.vertices[1].weight == Weight{1, 0, 0});
  CHECK(g.vertices[1].length == 1);
  CHECK(g.vertices[1].dim == 3);
  const auto g4 = build_graph(Group::Ostar, 3, 4);
  const auto i = g4.find(Weight{1, 1, -2});
  REQUIRE(i != CayleyGraph::npos);
  CHECK(g4.vertices[i].length == 4);
  CHECK(g4.find(Weight{2, 0, 0}) == CayleyGraph::npos);
}

TEST_CASE("O_n* edges are unit steps of multiplicity one") {
  for (int n : {2, 3, 4}) {
    const auto g = build_graph(Group::Ostar, n, 6);
    for (const auto& e : g.edges) {
      CHECK(e.mult == 1);
      CHECK(e.from != e.to);
      const Weight d = g.vertices[e.from].weight - g.vertices[e.to].weight;
      CHECK(d.abs_sum() == 1);
      CHECK(g.multiplicity(g.vertices[e.to].weight, g.vertices[e.from].weight) == 1);
      CHECK(std::abs(g.vertices[e.from].length - g.vertices[e.to].length) <= 1);
    }
  }
}

TEST_CASE("lengths") {
  const auto g = build_graph(Group::Ostar, 3, 8);
  for (const auto& v : g.vertices) {
    CHECK(v.length == oracles::ostar_length(v.weight));
    CHECK(((v.length - v.weight.sum()) % 2 + 2) % 2 == 0);
  }
  for (auto group : {Group::Un, Group::PUn, Group::SUn}) {
    const auto h = build_graph(group, 3, 4);
    CHECK(h.vertices.front().length == 0);
    CHECK(h.vertices.front().weight == Weight{0, 0, 0});
  }
}

TEST_CASE("canonical forms") {
  CHECK(canonical(Group::SUn, Weight{1, 1, 1}) == Weight{0, 0, 0});
  CHECK(canonical(Group::SUn, Weight{0, 0, -1}) == Weight{1, 1, 0});
  CHECK(canonical(Group::SUn, Weight{2, 1, 1}) == Weight{1, 0, 0});
  CHECK_THROWS(canonical(Group::PUn, Weight{1, 0, 0}));
  CHECK_THROWS(canonical(Group::Ostar, Weight{2, 0, 0}));
}

TEST_CASE("subgraph check") {
  for (int n : {2, 3}) {
    const auto a = build_graph(Group::Ostar, n, 6);
    const auto u = build_graph(Group::Un, n, 6);
    CHECK(subgraph_check(a, u));
    // negative control: drop one edge
    std::vector<Vertex> vs = a.vertices;
    std::map<std::pair<Weight, Weight>, std::int64_t> es;
    for (const auto& e : a.edges) es[{a.vertices[e.from].weight, a.vertices[e.to].weight}] = e.mult;
    es.erase(es.begin());
    const auto broken = make_graph(Group::Ostar, n, 6, vs, es);
    CHECK_FALSE(subgraph_check(broken, u));
  }
  CHECK_THROWS(subgraph_check(build_graph(Group::Ostar, 3, 4), build_graph(Group::Un, 3, 2)));
  CHECK_THROWS(subgraph_check(build_graph(Group::Un, 3, 2), build_graph(Group::Un, 3, 2)));
}

TEST_CASE("projective collapse") {
  for (int r = 0; r <= 4; ++r) {
    const auto a = build_graph(Group::Ostar, 3, 2 * r);
    const auto c = projective_collapse(a);
    CHECK(c == build_graph(Group::PUn, 3, r));
    for (const auto& v : c.vertices) CHECK(2 * v.length == a.vertices[a.find(v.weight)].length);
  }
  const auto zero = projective_collapse(build_graph(Group::Ostar, 3, 0));
  CHECK(zero.vertices.size() == 1);
  CHECK(zero.edges.empty());
  const auto c = projective_collapse(build_graph(Group::Ostar, 3, 6));
  CHECK(c.multiplicity(Weight{0, 0, 0}, Weight{1, 0, -1}) == 1);
  CHECK(c.multiplicity(Weight{1, 0, -1}, Weight{1, 0, -1}) == 2);
  CHECK(projective_collapse(build_graph(Group::Ostar, 2, 6)) == build_graph(Group::PUn, 2, 3));
  CHECK_THROWS(projective_collapse(build_graph(Group::Ostar, 3, 3)));
}

TEST_CASE("PU_3 loops sit one below the 2-path loops") {
  for (int r = 1; r <= 3; ++r) {
    const auto ext = build_graph(Group::Ostar, 3, 2 * r + 1);
    const auto pu = build_graph(Group::PUn, 3, r);
    for (const auto& v : pu.vertices) {
      std::int64_t raw = 0;
      for (const auto& e : ext.edges)
        if (ext.vertices[e.from].weight == v.weight)
          raw += e.mult * ext.multiplicity(ext.vertices[e.to].weight, v.weight);
      CHECK(raw == pu.multiplicity(v.weight, v.weight) + 1);
    }
  }
}

TEST_CASE("ball volumes") {
  const auto g = build_graph(Group::Ostar, 3, 10);
  const auto b = ball_volumes(g, 10);
  CHECK(b[0] == 1);
  CHECK(b[1] == 10);
  CHECK(b[2] == 74);
  CHECK(b[3] == 335);
  CHECK(b[4] == 1264);
  CHECK(b == ostar_volumes_direct(3, 10));
  for (std::size_t k = 1; k < b.size(); ++k) CHECK(b[k] >= b[k - 1]);
  CHECK(ball_volumes(build_graph(Group::Ostar, 2, 12), 12) == ostar_volumes_direct(2, 12));
  CHECK_THROWS(ball_volumes(g, 11));
}

TEST_CASE("SU_n volumes match the U_n lift computation") {
  for (int n : {2, 3}) {
    const int k = 8;
    CHECK(ball_volumes(build_graph(Group::SUn, n, k), k) == oracles::su_volumes_from_un(n, k));
  }
}

TEST_CASE("exponent fits") {
  GrowthSeries flat(20, 5);
  CHECK(fit_exponent(flat, 2, 19).slope == doctest::Approx(0.0));
  GrowthSeries power(65);
  for (int k = 0; k <= 64; ++k) power[static_cast<std::size_t>(k)] = pow(BigInt(k), 8);
  const auto fit = fit_exponent(power, 16, 64);
  CHECK(fit.slope == doctest::Approx(8.0).epsilon(1e-9));
  CHECK(dyadic_ratio(power, 32) == doctest::Approx(8.0).epsilon(1e-9));
  CHECK(fit.dyadic.size() == 17);
  CHECK_THROWS(fit_exponent(flat, 5, 5));
  CHECK_THROWS(fit_exponent(flat, 2, 20));
  CHECK_THROWS(dyadic_ratio(flat, 10));
}

TEST_CASE("inclusion chain") {
  for (int n : {2, 3}) {
    CHECK(inclusion_chain(n, 0));
    for (int k = 1; k <= 5; ++k) {
      const auto r = inclusion_report(n, k);
      CHECK(r.holds());
      CHECK(r.b_pu <= r.b_ostar);
      CHECK(r.b_ostar <= r.b_su);
    }
  }
  const auto pu = build_graph(Group::PUn, 3, 2);
  CHECK_THROWS(inclusion_report(pu, build_graph(Group::Ostar, 3, 2), build_graph(Group::SUn, 3, 4), 2));
}

TEST_CASE("builds are deterministic and capped") {
  CHECK(build_graph(Group::Un, 3, 5) == build_graph(Group::Un, 3, 5));
  Limits tight;
  tight.max_vertices = 10;
  CHECK_THROWS_AS(build_graph(Group::Ostar, 3, 10, tight), ResourceLimit);
  CHECK_THROWS(build_graph(Group::PUn, 1, 2));
  CHECK_THROWS(build_graph(Group::Ostar, 3, -1));
}

TEST_CASE("exports") {
  const auto g = build_graph(Group::Ostar, 3, 1);
  const std::string dot = to_dot(g);
  CHECK(dot.find("v0 [label=\"(0,0,0) | 1 | 0\"]") != std::string::npos);
  CHECK(dot.find("v1 [label=\"(1,0,0) | 3 | 1\"]") != std::string::npos);
  CHECK(dot.find("v0 -> v1;") != std::string::npos);
  const auto j = to_json(g);
  CHECK(j["vertices"].size() == 2);
  CHECK(j["edges"].dump() == "[[0,1,1],[1,0,1]]");
  CHECK(j["vertices"][1]["sector"] == "tau");
  CHECK(to_csv({1, 10, 74}) == "k,b_k\n0,1\n1,10\n2,74\n");
}

}  // TEST_SUITE
