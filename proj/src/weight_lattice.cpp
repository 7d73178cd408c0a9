#include "ostar/weight_lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ostar {

Limits Limits::from_env() {
  Limits l;
  auto read = [](const char* name, std::uint64_t& slot) {
    if (const char* v = std::getenv(name)) {
      char* end = nullptr;
      const unsigned long long x = std::strtoull(v, &end, 10);
      if (end && *end == '\0' && x > 0) slot = x;
    }
  };
  read("OSTAR_MAX_CELLS", l.max_cells);
  read("OSTAR_MAX_VERTICES", l.max_vertices);
  read("OSTAR_MAX_SUMMANDS", l.max_summands);
  read("OSTAR_MAX_PATTERNS", l.max_patterns);
  return l;
}

}  // namespace ostar

namespace ostar::weights {

// --- Weight -----------------------------------------------------------------

Weight Weight::unit(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("unit weight index outside 1..n");
  Weight w(static_cast<std::size_t>(n));
  w[static_cast<std::size_t>(i - 1)] = 1;
  return w;
}

std::int64_t Weight::sum() const {
  return std::accumulate(coords_.begin(), coords_.end(), std::int64_t{0});
}

std::int64_t Weight::abs_sum() const {
  std::int64_t s = 0;
  for (auto x : coords_) s += x < 0 ? -x : x;
  return s;
}

namespace {
void require_same_length(const Weight& a, const Weight& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("weights of different lengths: " + a.to_string() + " and " +
                                b.to_string());
}
}  // namespace

Weight Weight::operator+(const Weight& o) const {
  require_same_length(*this, o);
  Weight r = *this;
  for (std::size_t i = 0; i < size(); ++i) r[i] += o[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  require_same_length(*this, o);
  Weight r = *this;
  for (std::size_t i = 0; i < size(); ++i) r[i] -= o[i];
  return r;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& x : r.coords_) x = -x;
  return r;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ")";
  return os.str();
}

Weight parse_weight(const std::string& text) {
  std::string cleaned;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ' && c != '[' && c != ']') cleaned += c;
  std::vector<std::int64_t> coords;
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse weight '" + text + "'");
    }
    if (used != item.size()) throw std::invalid_argument("cannot parse weight '" + text + "'");
    coords.push_back(v);
  }
  if (coords.empty()) throw std::invalid_argument("empty weight '" + text + "'");
  return Weight(std::move(coords));
}

// --- sectors and group law --------------------------------------------------

std::string to_string(Sector s) { return s == Sector::circ ? "circ" : "tau"; }

Sector parse_sector(const std::string& s) {
  if (s == "circ") return Sector::circ;
  if (s == "tau") return Sector::tau;
  throw std::invalid_argument("unknown sector '" + s + "'");
}

Sector operator*(Sector a, Sector b) { return a == b ? Sector::circ : Sector::tau; }

std::string GroupElement::to_string() const {
  return lambda.to_string() + "." + weights::to_string(sector);
}

bool in_L(const GroupElement& a) {
  return a.lambda.sum() == (a.sector == Sector::circ ? 0 : 1);
}

void validate(const GroupElement& a) {
  if (!in_L(a))
    throw std::domain_error(a.to_string() + " is not in L_n: the " +
                            to_string(a.sector) + " sector needs coordinate sum " +
                            (a.sector == Sector::circ ? "0" : "1"));
}

Sector infer_sector(const Weight& w) {
  const auto s = w.sum();
  if (s == 0) return Sector::circ;
  if (s == 1) return Sector::tau;
  throw std::domain_error(w.to_string() + " has coordinate sum " + std::to_string(s) +
                          "; elements of L_n have sum 0 (circ) or 1 (tau)");
}

GroupElement lift(const Weight& w) { return {w, infer_sector(w)}; }

GroupElement identity(int n) { return {Weight::zero(n), Sector::circ}; }

GroupElement generator(int n, int i) { return {Weight::unit(n, i), Sector::tau}; }

GroupElement multiply(const GroupElement& a, const GroupElement& b, Membership mode) {
  if (mode == Membership::strict) {
    validate(a);
    validate(b);
  }
  const Weight acted = a.sector == Sector::tau ? -b.lambda : b.lambda;
  return {a.lambda + acted, a.sector * b.sector};
}

GroupElement inverse(const GroupElement& a, Membership mode) {
  if (mode == Membership::strict) validate(a);
  // (λ·x)^{-1} = (-(x·λ))·x
  return {a.sector == Sector::tau ? a.lambda : -a.lambda, a.sector};
}

GroupElement eval_word(int n, const std::vector<int>& word) {
  GroupElement g = identity(n);
  for (int i : word) g = multiply(g, generator(n, i));
  return g;
}

GroupElement eval_word_closed_form(int n, const std::vector<int>& word) {
  Weight lambda = Weight::zero(n);
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    const int i = word[pos];
    if (i < 1 || i > n) throw std::out_of_range("generator index outside 1..n");
    lambda[static_cast<std::size_t>(i - 1)] += (pos % 2 == 0) ? 1 : -1;
  }
  return {lambda, word.size() % 2 == 0 ? Sector::circ : Sector::tau};
}

Weight psi(const GroupElement& a) { return a.lambda; }

// --- orders -----------------------------------------------------------------

bool is_dominant(const Weight& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] < w[i]) return false;
  return true;
}

bool is_positive_diff(const Weight& a, const Weight& b) {
  const Weight d = a - b;
  std::int64_t partial = 0;
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    partial += d[i];
    if (partial < 0) return false;
  }
  return d.sum() == 0;
}

bool order_L(const GroupElement& a, const GroupElement& b) {
  const GroupElement q = multiply(a, inverse(b));
  // L_+ sits inside the circ sector
  return q.sector == Sector::circ && is_positive_diff(q.lambda, Weight::zero(q.lambda.n()));
}

// --- weight multisets -------------------------------------------------------

std::int64_t total_multiplicity(const WeightMultiset& m) {
  std::int64_t t = 0;
  for (const auto& [w, c] : m) t += c;
  return t;
}

std::int64_t total_multiplicity(const GroupMultiset& m) {
  std::int64_t t = 0;
  for (const auto& [w, c] : m) t += c;
  return t;
}

WeightMultiset weight_multiset_Un(const Weight& lambda, const Limits& limits) {
  if (!is_dominant(lambda))
    throw std::invalid_argument(lambda.to_string() + " is not dominant");
  const int n = lambda.n();
  WeightMultiset out;
  if (n == 0) {
    out[lambda] = 1;
    return out;
  }

  // Walk Gelfand-Tsetlin patterns from the top row (length n) down to length
  // 1.  Coordinate j of the weight is |row j| - |row j-1|.
  std::uint64_t patterns = 0;
  Weight weight = Weight::zero(n);
  std::vector<std::int64_t> row_sums(static_cast<std::size_t>(n) + 1, 0);

  std::function<void(const std::vector<std::int64_t>&)> descend;
  std::function<void(const std::vector<std::int64_t>&, std::vector<std::int64_t>&, std::size_t)>
      fill;

  descend = [&](const std::vector<std::int64_t>& row) {
    const std::size_t m = row.size();
    row_sums[m] = std::accumulate(row.begin(), row.end(), std::int64_t{0});
    if (m == 1) {
      if (++patterns > limits.max_patterns)
        throw ResourceLimit("Gelfand-Tsetlin enumeration exceeds the pattern cap");
      for (int j = 1; j <= n; ++j)
        weight[static_cast<std::size_t>(j - 1)] = row_sums[j] - row_sums[j - 1];
      ++out[weight];
      return;
    }
    std::vector<std::int64_t> next(m - 1);
    fill(row, next, 0);
  };

  fill = [&](const std::vector<std::int64_t>& row, std::vector<std::int64_t>& next,
             std::size_t i) {
    if (i == next.size()) {
      descend(next);
      return;
    }
    for (std::int64_t v = row[i + 1]; v <= row[i]; ++v) {
      next[i] = v;
      fill(row, next, i + 1);
    }
  };

  descend(lambda.coords());
  return out;
}

GroupMultiset weight_multiset_Ostar(const GroupElement& lw, const Limits& limits) {
  validate(lw);
  GroupMultiset out;
  for (const auto& [w, c] : weight_multiset_Un(lw.lambda, limits)) out[{w, lw.sector}] += c;
  return out;
}

std::vector<GroupElement> maximal_elements(const GroupMultiset& m) {
  std::vector<GroupElement> out;
  for (const auto& [a, ca] : m) {
    bool dominated = false;
    for (const auto& [b, cb] : m)
      if (!(a == b) && order_L(b, a)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(a);
  }
  return out;
}

// --- JSON -------------------------------------------------------------------

void to_json(nlohmann::json& j, const Weight& w) { j = w.coords(); }

void to_json(nlohmann::json& j, const GroupElement& g) {
  j = nlohmann::json{{"lambda", g.lambda.coords()}, {"sector", to_string(g.sector)}};
}

void from_json(const nlohmann::json& j, GroupElement& g) {
  g.lambda = Weight(j.at("lambda").get<std::vector<std::int64_t>>());
  g.sector = parse_sector(j.at("sector").get<std::string>());
  validate(g);
}

}  // namespace ostar::weights
