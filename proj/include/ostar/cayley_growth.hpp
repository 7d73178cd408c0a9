#pragma once

// Cayley graphs of the representation semirings of O_n*, U_n, PU_n and SU_n,
// ball volumes and growth estimates.
//
// Vertices are highest weights.  O_n* vertices are stored through ψ (their
// sector is the coordinate sum), PU_n vertices as U_n weights of sum 0 and
// SU_n vertices as the lift with coordinate sum in {0, …, n-1}.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ostar/common.hpp"
#include "ostar/fusion.hpp"
#include "ostar/weight_lattice.hpp"

namespace ostar::cayley {

using weights::Weight;

enum class Group { Ostar, Un, PUn, SUn };

Group parse_group(const std::string& s);
std::string to_string(Group g);

struct Vertex {
  Weight weight;
  BigInt dim;
  int length = 0;
};

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::int64_t mult = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class CayleyGraph {
 public:
  Group group = Group::Ostar;
  int n = 0;
  int radius = 0;
  /// Sorted by (length, weight).
  std::vector<Vertex> vertices;
  /// Sorted by (from, to); loops are kept.
  std::vector<Edge> edges;

  /// Index of a vertex, or npos.
  std::size_t find(const Weight& w) const;
  std::int64_t multiplicity(const Weight& from, const Weight& to) const;
  std::size_t loop_count() const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend bool operator==(const CayleyGraph& a, const CayleyGraph& b);

 private:
  friend CayleyGraph make_graph(Group, int, int, std::vector<Vertex>,
                                std::map<std::pair<Weight, Weight>, std::int64_t>);
  std::map<Weight, std::size_t> index_;
};

/// Assembles a graph in canonical order; used by the builders and by tests
/// that need hand-made graphs.
CayleyGraph make_graph(Group group, int n, int radius, std::vector<Vertex> vertices,
                       std::map<std::pair<Weight, Weight>, std::int64_t> edges);

/// The canonical representative of a weight in the vertex set of `group`.
Weight canonical(Group group, const Weight& w);

/// Summands of w ⊗ u_1 with multiplicities, in canonical form.
fusion::UnDecomposition neighbours(Group group, const Weight& w,
                                   const Limits& limits = Limits::from_env());

/// Breadth-first ball of the given radius around the trivial weight.
CayleyGraph build_graph(Group group, int n, int radius, const Limits& limits = Limits::from_env());

/// The ψ-image of the O_n* graph equals the subgraph of the U_n graph induced
/// on vertices of coordinate sum 0 or 1 within the O_n* radius.
bool subgraph_check(const CayleyGraph& ostar, const CayleyGraph& un);

/// Circ vertices of an O_n* ball of even radius 2r joined by its paths of
/// length 2, with one loop removed at each vertex.  The ball is extended by
/// one shell internally so paths leaving through the boundary are counted.
CayleyGraph projective_collapse(const CayleyGraph& ostar,
                                const Limits& limits = Limits::from_env());

using GrowthSeries = std::vector<BigInt>;

/// b_k = Σ_{length(w) ≤ k} dim(w)^2 for k = 0..kmax.
GrowthSeries ball_volumes(const CayleyGraph& g, int kmax);

struct GrowthFit {
  /// Least-squares slope of log b_k against log k on [kmin, kmax].
  double slope = 0.0;
  /// (k, log2(b_{2k}/b_k)) for every k with kmin ≤ k and 2k ≤ kmax.
  std::vector<std::pair<int, double>> dyadic;
};

GrowthFit fit_exponent(const GrowthSeries& s, int kmin, int kmax);

/// log2(b_{2k}/b_k).
double dyadic_ratio(const GrowthSeries& s, int k);

struct InclusionReport {
  bool pu_in_ostar = false;
  bool ostar_in_su = false;
  bool volumes_ordered = false;
  BigInt b_pu;
  BigInt b_ostar;
  BigInt b_su;
  bool holds() const { return pu_in_ostar && ostar_in_su && volumes_ordered; }
};

/// B_k(PU_n) ⊂ B_2k(O_n*) ⊂ B_2k(SU_n) and the matching volume inequalities.
InclusionReport inclusion_report(int n, int k, const Limits& limits = Limits::from_env());
bool inclusion_chain(int n, int k, const Limits& limits = Limits::from_env());

/// Same check on prebuilt graphs; throws if a radius is too small.
InclusionReport inclusion_report(const CayleyGraph& pu, const CayleyGraph& ostar,
                                 const CayleyGraph& su, int k);

std::string to_dot(const CayleyGraph& g);
nlohmann::json to_json(const CayleyGraph& g);
std::string to_csv(const GrowthSeries& s);

}  // namespace ostar::cayley
