#include "ostar/diagrams.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ostar::diagrams {

Family parse_family(const std::string& s) {
  if (s == "P" || s == "p") return Family::P;
  if (s == "E" || s == "e") return Family::E;
  if (s == "N" || s == "n") return Family::N;
  throw std::invalid_argument("unknown diagram class '" + s + "' (expected P, E or N)");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::P: return "P";
    case Family::E: return "E";
    case Family::N: return "N";
  }
  return "?";
}

std::string to_string(DiagramClass c) {
  switch (c) {
    case DiagramClass::P_only: return "P_only";
    case DiagramClass::E_not_N: return "E_not_N";
    case DiagramClass::N: return "N";
  }
  return "?";
}

bool belongs_to(DiagramClass c, Family f) {
  switch (f) {
    case Family::P: return true;
    case Family::E: return c != DiagramClass::P_only;
    case Family::N: return c == DiagramClass::N;
  }
  return false;
}

// --- Pairing ----------------------------------------------------------------

Pairing::Pairing(int k, int l, std::vector<int> partner)
    : k_(k), l_(l), partner_(std::move(partner)) {
  if (k < 0 || l < 0) throw std::invalid_argument("pairing: negative row size");
  const int t = k + l;
  if (static_cast<int>(partner_.size()) != t)
    throw std::invalid_argument("pairing: partner array has wrong length");
  if (t % 2 != 0) throw std::invalid_argument("pairing: odd number of points");
  for (int a = 1; a <= t; ++a) {
    const int b = partner_[a - 1];
    if (b < 1 || b > t || b == a || partner_[b - 1] != a)
      throw std::invalid_argument("pairing: partner array is not a fixed-point-free involution");
  }
}

Pairing Pairing::from_pairs(int k, int l, const std::vector<std::pair<int, int>>& pairs) {
  const int t = k + l;
  std::vector<int> partner(static_cast<std::size_t>(std::max(t, 0)), 0);
  for (auto [a, b] : pairs) {
    if (a < 1 || a > t || b < 1 || b > t || a == b || partner[a - 1] || partner[b - 1])
      throw std::invalid_argument("pairing: invalid or repeated point in pair list");
    partner[a - 1] = b;
    partner[b - 1] = a;
  }
  return Pairing(k, l, std::move(partner));
}

Pairing Pairing::identity(int k) {
  std::vector<int> partner(2 * static_cast<std::size_t>(k));
  // lower position j is point j; upper position j is point k + (k - j + 1)
  for (int j = 1; j <= k; ++j) {
    const int up = 2 * k - j + 1;
    partner[j - 1] = up;
    partner[up - 1] = j;
  }
  return Pairing(k, k, std::move(partner));
}

Pairing Pairing::cup() { return Pairing(2, 0, {2, 1}); }
Pairing Pairing::cap() { return Pairing(0, 2, {2, 1}); }
Pairing Pairing::crossing() { return from_pairs(2, 2, {{1, 3}, {2, 4}}); }
Pairing Pairing::half_liberation() { return from_pairs(3, 3, {{1, 4}, {2, 5}, {3, 6}}); }

int Pairing::partner(int point) const {
  if (point < 1 || point > size())
    throw std::out_of_range("pairing: point " + std::to_string(point) + " outside 1.." +
                            std::to_string(size()));
  return partner_[point - 1];
}

std::vector<std::pair<int, int>> Pairing::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(partner_.size() / 2);
  for (int a = 1; a <= size(); ++a)
    if (a < partner_[a - 1]) out.emplace_back(a, partner_[a - 1]);
  return out;  // already sorted by first leg
}

int Pairing::lower_point(int position) const {
  if (position < 1 || position > l_) throw std::out_of_range("pairing: lower position");
  return position;
}

int Pairing::upper_point(int position) const {
  if (position < 1 || position > k_) throw std::out_of_range("pairing: upper position");
  return l_ + (k_ - position + 1);
}

int Pairing::position(int point) const {
  if (point < 1 || point > size()) throw std::out_of_range("pairing: point");
  return point <= l_ ? point : k_ - (point - l_) + 1;
}

std::string Pairing::to_string() const {
  std::ostringstream os;
  os << "(" << k_ << "," << l_ << "){";
  bool first = true;
  for (auto [a, b] : pairs()) {
    os << (first ? "" : ",") << "{" << a << "," << b << "}";
    first = false;
  }
  os << "}";
  return os.str();
}

// --- DiagramSet -------------------------------------------------------------

bool DiagramSet::insert(const Pairing& p) {
  if (p.upper() != k_ || p.lower() != l_)
    throw std::invalid_argument("diagram set: signature mismatch");
  return items_.insert(p).second;
}

// --- predicates -------------------------------------------------------------

namespace {

// Strictly between a and b going up from a, for a < b.
bool strictly_between(int a, int b, int x) { return a < x && x < b; }

int interleavings(const Pairing& p, int a) {
  int b = p.partner(a);
  if (a > b) std::swap(a, b);
  int count = 0;
  for (auto [c, d] : p.pairs()) {
    if (c == a) continue;
    if (strictly_between(a, b, c) != strictly_between(a, b, d)) ++count;
  }
  return count;
}

}  // namespace

int crossing_count(const Pairing& p, int point) { return interleavings(p, point); }

bool every_string_evenly_crossed(const Pairing& p) {
  for (auto [a, b] : p.pairs())
    if (interleavings(p, a) % 2 != 0) return false;
  return true;
}

bool every_gap_even(const Pairing& p) {
  for (auto [a, b] : p.pairs())
    if ((b - a - 1) % 2 != 0) return false;
  return true;
}

bool alternating_labels_matched(const Pairing& p) {
  // odd points carry label a, even points label b
  for (auto [a, b] : p.pairs())
    if ((a % 2) == (b % 2)) return false;
  return true;
}

bool is_noncrossing(const Pairing& p) {
  for (auto [a, b] : p.pairs())
    if (interleavings(p, a) != 0) return false;
  return true;
}

DiagramClass classify(const Pairing& p) {
  if (is_noncrossing(p)) return DiagramClass::N;
  if (alternating_labels_matched(p)) return DiagramClass::E_not_N;
  return DiagramClass::P_only;
}

// --- enumeration ------------------------------------------------------------

DiagramSet enumerate(int k, int l, Family family) {
  if (k < 0 || l < 0) throw std::invalid_argument("enumerate: negative row size");
  DiagramSet out(k, l);
  const int t = k + l;
  if (t % 2 != 0) return out;

  std::vector<int> partner(static_cast<std::size_t>(t), 0);
  std::function<void()> rec = [&]() {
    int a = 0;
    while (a < t && partner[a] != 0) ++a;
    if (a == t) {
      Pairing p(k, l, partner);
      if (belongs_to(classify(p), family)) out.insert(p);
      return;
    }
    for (int b = a + 1; b < t; ++b) {
      if (partner[b] != 0) continue;
      // N and E admit only chords with an even gap
      if (family != Family::P && (b - a) % 2 == 0) continue;
      partner[a] = b + 1;
      partner[b] = a + 1;
      rec();
      partner[a] = partner[b] = 0;
    }
  };
  rec();
  return out;
}

// --- transformations --------------------------------------------------------

Pairing cap(const Pairing& p, int i) {
  const int t = p.size();
  if (t == 0) throw std::invalid_argument("cap: the empty pairing has no points");
  if (i < 1 || i > t) throw std::out_of_range("cap: point index outside 1..k+l");
  const int j = i % t + 1;

  std::vector<int> joined = p.partners();
  const int pi = joined[i - 1];
  const int pj = joined[j - 1];
  if (pi != j) {
    joined[pi - 1] = pj;
    joined[pj - 1] = pi;
  }

  std::vector<int> renumber(static_cast<std::size_t>(t) + 1, 0);
  int next = 0;
  int removed_lower = 0;
  for (int a = 1; a <= t; ++a) {
    if (a == i || a == j) {
      if (a <= p.lower()) ++removed_lower;
      continue;
    }
    renumber[a] = ++next;
  }
  std::vector<int> partner(static_cast<std::size_t>(next), 0);
  for (int a = 1; a <= t; ++a)
    if (renumber[a]) partner[renumber[a] - 1] = renumber[joined[a - 1]];

  const int l = p.lower() - removed_lower;
  const int k = p.upper() - (2 - removed_lower);
  return Pairing(k, l, std::move(partner));
}

Pairing rotate(const Pairing& p) {
  const int t = p.size();
  if (t == 0) return p;
  auto shift = [t](int a) { return a % t + 1; };
  std::vector<int> partner(static_cast<std::size_t>(t));
  for (int a = 1; a <= t; ++a) partner[shift(a) - 1] = shift(p.partner(a));
  if (p.upper() > 0) return Pairing(p.upper() - 1, p.lower() + 1, std::move(partner));
  return Pairing(0, p.lower(), std::move(partner));
}

Pairing rotate_to_lower_row(const Pairing& p) {
  Pairing r = p;
  while (r.upper() > 0) r = rotate(r);
  return r;
}

Composite compose(const Pairing& q, const Pairing& p) {
  const int m = p.lower();
  if (q.upper() != m)
    throw std::invalid_argument("compose: upper row of q (" + std::to_string(q.upper()) +
                                ") does not match lower row of p (" + std::to_string(m) + ")");
  const int k = p.upper();
  const int l = q.lower();
  const int tp = p.size();
  const int tq = q.size();

  // Node ids: p point a -> a-1, q point b -> tp+b-1.
  const int nodes = tp + tq;
  std::vector<int> string_of(static_cast<std::size_t>(nodes));
  std::vector<int> glue_of(static_cast<std::size_t>(nodes), -1);
  for (int a = 1; a <= tp; ++a) string_of[a - 1] = p.partner(a) - 1;
  for (int b = 1; b <= tq; ++b) string_of[tp + b - 1] = tp + q.partner(b) - 1;
  for (int j = 1; j <= m; ++j) {
    const int pn = p.lower_point(j) - 1;
    const int qn = tp + q.upper_point(j) - 1;
    glue_of[pn] = qn;
    glue_of[qn] = pn;
  }

  // Result numbering: q's lower points keep 1..l, p's upper point a maps to
  // l + (a - m).
  auto outer_label = [&](int node) {
    if (node < tp) return l + (node + 1 - m);
    return node - tp + 1;
  };

  std::vector<char> visited(static_cast<std::size_t>(nodes), 0);
  std::vector<int> partner(static_cast<std::size_t>(k + l), 0);
  for (int node = 0; node < nodes; ++node) {
    if (glue_of[node] != -1 || visited[node]) continue;
    int cur = node;
    visited[cur] = 1;
    while (true) {
      const int s = string_of[cur];
      visited[s] = 1;
      if (glue_of[s] == -1) {
        partner[outer_label(node) - 1] = outer_label(s);
        partner[outer_label(s) - 1] = outer_label(node);
        break;
      }
      cur = glue_of[s];
      visited[cur] = 1;
    }
  }

  int loops = 0;
  for (int node = 0; node < nodes; ++node) {
    if (visited[node]) continue;
    ++loops;
    int cur = node;
    do {
      visited[cur] = 1;
      const int s = string_of[cur];
      visited[s] = 1;
      cur = glue_of[s];
    } while (cur != node);
  }
  return {Pairing(k, l, std::move(partner)), loops};
}

Pairing tensor(const Pairing& p, const Pairing& q) {
  const int k1 = p.upper(), l1 = p.lower(), k2 = q.upper(), l2 = q.lower();
  const int K = k1 + k2, L = l1 + l2;
  auto upper_point = [&](int pos) { return L + (K - pos + 1); };
  auto map_p = [&](int a) { return p.is_upper(a) ? upper_point(p.position(a)) : a; };
  auto map_q = [&](int b) {
    return q.is_upper(b) ? upper_point(k1 + q.position(b)) : l1 + b;
  };
  std::vector<int> partner(static_cast<std::size_t>(K + L), 0);
  for (int a = 1; a <= p.size(); ++a) partner[map_p(a) - 1] = map_p(p.partner(a));
  for (int b = 1; b <= q.size(); ++b) partner[map_q(b) - 1] = map_q(q.partner(b));
  return Pairing(K, L, std::move(partner));
}

Pairing involute(const Pairing& p) {
  const int k = p.lower(), l = p.upper();  // new signature
  auto map = [&](int a) {
    const int pos = p.position(a);
    return p.is_upper(a) ? pos : l + (k - pos + 1);
  };
  std::vector<int> partner(static_cast<std::size_t>(p.size()), 0);
  for (int a = 1; a <= p.size(); ++a) partner[map(a) - 1] = map(p.partner(a));
  return Pairing(k, l, std::move(partner));
}

// --- closure ----------------------------------------------------------------

std::map<Signature, DiagramSet> generate(const Pairing& seed, int max_points) {
  if (max_points < 0) throw std::invalid_argument("generate: negative bound");
  std::map<Signature, DiagramSet> sets;
  std::vector<Pairing> all;
  std::deque<Pairing> fresh;

  auto add = [&](const Pairing& p) {
    if (p.size() > max_points) return;
    const Signature sig{p.upper(), p.lower()};
    auto it = sets.try_emplace(sig, p.upper(), p.lower()).first;
    if (it->second.insert(p)) fresh.push_back(p);
  };

  add(seed);
  for (int t = 0; t <= max_points; t += 2)
    for (int k = 0; k <= t; ++k)
      for (const auto& p : enumerate(k, t - k, Family::N)) add(p);

  while (!fresh.empty()) {
    const Pairing p = fresh.front();
    fresh.pop_front();
    all.push_back(p);

    add(involute(p));
    add(rotate(p));
    for (int i = 1; i <= p.size(); ++i) add(cap(p, i));

    // `all` grows while we scan it; each pair is visited once with the
    // newer element on one side.
    const std::size_t known = all.size();
    for (std::size_t idx = 0; idx < known; ++idx) {
      const Pairing q = all[idx];
      if (p.size() + q.size() <= max_points) {
        add(tensor(p, q));
        add(tensor(q, p));
      }
      if (q.upper() == p.lower() && p.upper() + q.lower() <= max_points)
        add(compose(q, p).pairing);
      if (p.upper() == q.lower() && q.upper() + p.lower() <= max_points)
        add(compose(p, q).pairing);
    }
  }
  return sets;
}

// --- JSON -------------------------------------------------------------------

void to_json(nlohmann::json& j, const Pairing& p) {
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [a, b] : p.pairs()) pairs.push_back({a, b});
  j = nlohmann::json{{"k", p.upper()}, {"l", p.lower()}, {"pairs", pairs}};
}

void from_json(const nlohmann::json& j, Pairing& p) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : j.at("pairs")) pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  p = Pairing::from_pairs(j.at("k").get<int>(), j.at("l").get<int>(), pairs);
}

}  // namespace ostar::diagrams
