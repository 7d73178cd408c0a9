#include "ostar/cayley_growth.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ostar::cayley {

Group parse_group(const std::string& s) {
  if (s == "ostar") return Group::Ostar;
  if (s == "un") return Group::Un;
  if (s == "pun") return Group::PUn;
  if (s == "sun") return Group::SUn;
  throw std::invalid_argument("unknown group '" + s + "' (expected ostar, un, pun or sun)");
}

std::string to_string(Group g) {
  switch (g) {
    case Group::Ostar: return "ostar";
    case Group::Un: return "un";
    case Group::PUn: return "pun";
    case Group::SUn: return "sun";
  }
  return "?";
}

// --- CayleyGraph ------------------------------------------------------------

std::size_t CayleyGraph::find(const Weight& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? npos : it->second;
}

std::int64_t CayleyGraph::multiplicity(const Weight& from, const Weight& to) const {
  const std::size_t a = find(from), b = find(to);
  if (a == npos || b == npos) return 0;
  auto it = std::lower_bound(edges.begin(), edges.end(), Edge{a, b, 0},
                             [](const Edge& x, const Edge& y) {
                               return std::pair(x.from, x.to) < std::pair(y.from, y.to);
                             });
  return (it != edges.end() && it->from == a && it->to == b) ? it->mult : 0;
}

std::size_t CayleyGraph::loop_count() const {
  std::size_t c = 0;
  for (const auto& e : edges)
    if (e.from == e.to) c += static_cast<std::size_t>(e.mult);
  return c;
}

bool operator==(const CayleyGraph& a, const CayleyGraph& b) {
  if (a.group != b.group || a.n != b.n || a.radius != b.radius) return false;
  if (a.vertices.size() != b.vertices.size() || a.edges != b.edges) return false;
  for (std::size_t i = 0; i < a.vertices.size(); ++i) {
    const auto& x = a.vertices[i];
    const auto& y = b.vertices[i];
    if (x.weight != y.weight || x.dim != y.dim || x.length != y.length) return false;
  }
  return true;
}

CayleyGraph make_graph(Group group, int n, int radius, std::vector<Vertex> vertices,
                       std::map<std::pair<Weight, Weight>, std::int64_t> edges) {
  std::sort(vertices.begin(), vertices.end(), [](const Vertex& a, const Vertex& b) {
    return std::tie(a.length, a.weight) < std::tie(b.length, b.weight);
  });
  CayleyGraph g;
  g.group = group;
  g.n = n;
  g.radius = radius;
  g.vertices = std::move(vertices);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (!g.index_.emplace(g.vertices[i].weight, i).second)
      throw std::invalid_argument("graph: duplicate vertex " + g.vertices[i].weight.to_string());
  }
  for (const auto& [key, mult] : edges) {
    if (mult == 0) continue;
    const std::size_t a = g.find(key.first), b = g.find(key.second);
    if (a == CayleyGraph::npos || b == CayleyGraph::npos)
      throw std::invalid_argument("graph: edge endpoint is not a vertex");
    g.edges.push_back({a, b, mult});
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

// --- fusion with the generator ----------------------------------------------

Weight canonical(Group group, const Weight& w) {
  switch (group) {
    case Group::Ostar:
      weights::infer_sector(w);
      return w;
    case Group::Un:
      return w;
    case Group::PUn:
      if (w.sum() != 0)
        throw std::domain_error(w.to_string() + " is not a PU_n weight (coordinate sum must be 0)");
      return w;
    case Group::SUn: {
      const std::int64_t n = w.n();
      const std::int64_t s = w.sum();
      std::int64_t c = s / n;
      if (s - c * n < 0) --c;  // floor
      Weight r = w;
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c;
      return r;
    }
  }
  return w;
}

fusion::UnDecomposition neighbours(Group group, const Weight& w, const Limits& limits) {
  const int n = w.n();
  fusion::UnDecomposition out;
  switch (group) {
    case Group::Ostar: {
      const auto d =
          fusion::tensor_Ostar(weights::lift(w), fusion::fundamental_Ostar(n), limits);
      return fusion::psi(d);
    }
    case Group::Un:
    case Group::SUn: {
      for (const auto& gen : {fusion::fundamental_Un(n), fusion::antifundamental_Un(n)})
        for (const auto& [nu, c] : fusion::tensor_Un(w, gen, limits))
          out.add(canonical(group, nu), c);
      return out;
    }
    case Group::PUn: {
      if (n < 2) throw std::invalid_argument("PU_n needs n >= 2");
      const Weight adjoint = fusion::fundamental_Un(n) + fusion::antifundamental_Un(n);
      return fusion::tensor_Un(w, adjoint, limits);
    }
  }
  return out;
}

CayleyGraph build_graph(Group group, int n, int radius, const Limits& limits) {
  if (n < 1) throw std::invalid_argument("build_graph: n must be at least 1");
  if (radius < 0) throw std::invalid_argument("build_graph: negative radius");
  if (group == Group::PUn && n < 2) throw std::invalid_argument("PU_n needs n >= 2");

  std::map<Weight, int> length;
  std::map<Weight, fusion::UnDecomposition> adjacency;
  std::deque<Weight> queue;
  const Weight origin = Weight::zero(n);
  length[origin] = 0;
  queue.push_back(origin);
  while (!queue.empty()) {
    const Weight w = queue.front();
    queue.pop_front();
    auto nb = neighbours(group, w, limits);
    const int d = length[w];
    if (d < radius) {
      for (const auto& [t, c] : nb) {
        if (length.count(t)) continue;
        length[t] = d + 1;
        if (length.size() > limits.max_vertices)
          throw ResourceLimit("Cayley graph exceeds the vertex cap");
        queue.push_back(t);
      }
    }
    adjacency.emplace(w, std::move(nb));
  }

  std::vector<Vertex> vertices;
  std::map<std::pair<Weight, Weight>, std::int64_t> edges;
  for (const auto& [w, d] : length) {
    vertices.push_back({w, fusion::weyl_dim(w), d});
    for (const auto& [t, c] : adjacency.at(w))
      if (length.count(t)) edges[{w, t}] += c;
  }
  return make_graph(group, n, radius, std::move(vertices), std::move(edges));
}

// --- structural comparisons -------------------------------------------------

bool subgraph_check(const CayleyGraph& ostar, const CayleyGraph& un) {
  if (ostar.group != Group::Ostar || un.group != Group::Un)
    throw std::invalid_argument("subgraph_check expects an O_n* graph and a U_n graph");
  if (ostar.n != un.n) throw std::invalid_argument("subgraph_check: different n");
  if (ostar.radius > un.radius)
    throw std::invalid_argument("subgraph_check: the U_n graph must have at least the O_n* radius");

  std::set<Weight> selected;
  for (const auto& v : un.vertices) {
    const auto s = v.weight.sum();
    if ((s == 0 || s == 1) && v.length <= ostar.radius) selected.insert(v.weight);
  }
  std::set<Weight> image;
  for (const auto& v : ostar.vertices) image.insert(v.weight);
  if (image != selected) return false;

  std::map<std::pair<Weight, Weight>, std::int64_t> induced, own;
  for (const auto& e : un.edges) {
    const auto& a = un.vertices[e.from].weight;
    const auto& b = un.vertices[e.to].weight;
    if (selected.count(a) && selected.count(b)) induced[{a, b}] += e.mult;
  }
  for (const auto& e : ostar.edges)
    own[{ostar.vertices[e.from].weight, ostar.vertices[e.to].weight}] += e.mult;
  return induced == own;
}

CayleyGraph projective_collapse(const CayleyGraph& ostar, const Limits& limits) {
  if (ostar.group != Group::Ostar)
    throw std::invalid_argument("projective_collapse expects an O_n* graph");
  if (ostar.radius % 2 != 0)
    throw std::invalid_argument("projective_collapse needs an even radius, got " +
                                std::to_string(ostar.radius));
  const int r = ostar.radius / 2;
  const CayleyGraph ext = build_graph(Group::Ostar, ostar.n, ostar.radius + 1, limits);

  auto is_kept = [&](const Vertex& v) { return v.weight.sum() == 0 && v.length <= ostar.radius; };

  std::vector<std::vector<Edge>> out_edges(ext.vertices.size());
  for (const auto& e : ext.edges) out_edges[e.from].push_back(e);

  std::map<std::pair<Weight, Weight>, std::int64_t> paths;
  for (std::size_t w = 0; w < ext.vertices.size(); ++w) {
    if (!is_kept(ext.vertices[w])) continue;
    for (const auto& first : out_edges[w])
      for (const auto& second : out_edges[first.to]) {
        if (!is_kept(ext.vertices[second.to])) continue;
        paths[{ext.vertices[w].weight, ext.vertices[second.to].weight}] += first.mult * second.mult;
      }
  }
  for (const auto& v : ext.vertices) {
    if (!is_kept(v)) continue;
    auto it = paths.find({v.weight, v.weight});
    if (it == paths.end())
      throw std::logic_error("projective_collapse: vertex " + v.weight.to_string() +
                             " has no closed 2-path");
    if (--it->second == 0) paths.erase(it);
  }

  // Lengths are distances in the collapsed graph itself.
  std::map<Weight, std::vector<Weight>> adj;
  for (const auto& [key, mult] : paths) adj[key.first].push_back(key.second);
  std::map<Weight, int> dist;
  std::deque<Weight> queue;
  const Weight origin = Weight::zero(ostar.n);
  dist[origin] = 0;
  queue.push_back(origin);
  while (!queue.empty()) {
    const Weight w = queue.front();
    queue.pop_front();
    for (const auto& t : adj[w])
      if (!dist.count(t)) {
        dist[t] = dist[w] + 1;
        queue.push_back(t);
      }
  }

  std::vector<Vertex> vertices;
  for (const auto& v : ext.vertices) {
    if (!is_kept(v)) continue;
    auto it = dist.find(v.weight);
    if (it == dist.end())
      throw std::logic_error("projective_collapse: " + v.weight.to_string() + " is unreachable");
    vertices.push_back({v.weight, v.dim, it->second});
  }
  return make_graph(Group::PUn, ostar.n, r, std::move(vertices), std::move(paths));
}

// --- growth -----------------------------------------------------------------

GrowthSeries ball_volumes(const CayleyGraph& g, int kmax) {
  if (kmax < 0) throw std::invalid_argument("ball_volumes: negative kmax");
  if (kmax > g.radius)
    throw std::invalid_argument("ball_volumes: graph radius " + std::to_string(g.radius) +
                                " is smaller than kmax " + std::to_string(kmax));
  GrowthSeries b(static_cast<std::size_t>(kmax) + 1, 0);
  for (const auto& v : g.vertices)
    if (v.length <= kmax) b[static_cast<std::size_t>(v.length)] += v.dim * v.dim;
  for (std::size_t k = 1; k < b.size(); ++k) b[k] += b[k - 1];
  return b;
}

double dyadic_ratio(const GrowthSeries& s, int k) {
  if (k < 1 || static_cast<std::size_t>(2 * k) >= s.size())
    throw std::invalid_argument("dyadic_ratio: index outside the series");
  const auto hi = s[static_cast<std::size_t>(2 * k)].convert_to<long double>();
  const auto lo = s[static_cast<std::size_t>(k)].convert_to<long double>();
  return static_cast<double>(std::log2(hi / lo));
}

GrowthFit fit_exponent(const GrowthSeries& s, int kmin, int kmax) {
  if (kmin < 1 || kmax <= kmin || static_cast<std::size_t>(kmax) >= s.size())
    throw std::invalid_argument("fit_exponent: degenerate range [" + std::to_string(kmin) + ", " +
                                std::to_string(kmax) + "]");
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const long double m = kmax - kmin + 1;
  for (int k = kmin; k <= kmax; ++k) {
    const long double bk = s[static_cast<std::size_t>(k)].convert_to<long double>();
    if (bk <= 0) throw std::invalid_argument("fit_exponent: nonpositive volume");
    const long double x = std::log(static_cast<long double>(k));
    const long double y = std::log(bk);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  GrowthFit fit;
  fit.slope = static_cast<double>((m * sxy - sx * sy) / (m * sxx - sx * sx));
  for (int k = kmin; 2 * k <= kmax; ++k) fit.dyadic.emplace_back(k, dyadic_ratio(s, k));
  return fit;
}

// --- inclusion chain --------------------------------------------------------

InclusionReport inclusion_report(const CayleyGraph& pu, const CayleyGraph& ostar,
                                 const CayleyGraph& su, int k) {
  if (pu.group != Group::PUn || ostar.group != Group::Ostar || su.group != Group::SUn)
    throw std::invalid_argument("inclusion_report expects PU_n, O_n* and SU_n graphs");
  if (pu.radius < k || ostar.radius < 2 * k || su.radius < 2 * k)
    throw std::invalid_argument("inclusion_report: a graph radius is too small for k = " +
                                std::to_string(k));
  auto ball = [](const CayleyGraph& g, int radius) {
    std::set<Weight> s;
    for (const auto& v : g.vertices)
      if (v.length <= radius) s.insert(v.weight);
    return s;
  };
  const auto b_pu = ball(pu, k);
  const auto b_a = ball(ostar, 2 * k);
  const auto b_su = ball(su, 2 * k);
  InclusionReport r;
  r.pu_in_ostar = std::includes(b_a.begin(), b_a.end(), b_pu.begin(), b_pu.end());
  r.ostar_in_su = std::includes(b_su.begin(), b_su.end(), b_a.begin(), b_a.end());
  r.b_pu = ball_volumes(pu, k).back();
  r.b_ostar = ball_volumes(ostar, 2 * k).back();
  r.b_su = ball_volumes(su, 2 * k).back();
  r.volumes_ordered = r.b_pu <= r.b_ostar && r.b_ostar <= r.b_su;
  return r;
}

InclusionReport inclusion_report(int n, int k, const Limits& limits) {
  if (k < 0) throw std::invalid_argument("inclusion_chain: negative k");
  return inclusion_report(build_graph(Group::PUn, n, k, limits),
                          build_graph(Group::Ostar, n, 2 * k, limits),
                          build_graph(Group::SUn, n, 2 * k, limits), k);
}

bool inclusion_chain(int n, int k, const Limits& limits) {
  return inclusion_report(n, k, limits).holds();
}

// --- export -----------------------------------------------------------------

std::string to_dot(const CayleyGraph& g) {
  std::ostringstream os;
  os << "digraph cayley {\n";
  os << "  graph [label=\"" << to_string(g.group) << " n=" << g.n << " radius=" << g.radius
     << "\"];\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    os << "  v" << i << " [label=\"" << v.weight.to_string() << " | " << v.dim << " | "
       << v.length << "\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  v" << e.from << " -> v" << e.to;
    if (e.mult != 1) os << " [label=\"" << e.mult << "\", mult=" << e.mult << "]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const CayleyGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& v : g.vertices) {
    nlohmann::json jv{{"weight", v.weight.coords()},
                      {"dim", fusion::big_to_json(v.dim)},
                      {"length", v.length}};
    if (g.group == Group::Ostar) jv["sector"] = weights::to_string(weights::infer_sector(v.weight));
    vertices.push_back(std::move(jv));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges) edges.push_back({e.from, e.to, e.mult});
  return {{"group", to_string(g.group)},
          {"n", g.n},
          {"radius", g.radius},
          {"vertices", vertices},
          {"edges", edges}};
}

std::string to_csv(const GrowthSeries& s) {
  std::ostringstream os;
  os << "k,b_k\n";
  for (std::size_t k = 0; k < s.size(); ++k) os << k << "," << s[k] << "\n";
  return os.str();
}

}  // namespace ostar::cayley
