#include "ostar/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "ostar/cayley_growth.hpp"
#include "ostar/diagrams.hpp"
#include "ostar/fusion.hpp"
#include "ostar/oracles.hpp"
#include "ostar/tensor_maps.hpp"
#include "ostar/weight_lattice.hpp"

namespace ostar::verify {

using diagrams::Family;
using diagrams::Pairing;
using weights::GroupElement;
using weights::Sector;
using weights::Weight;

std::string to_string(Tier t) {
  switch (t) {
    case Tier::quick: return "quick";
    case Tier::standard: return "standard";
    case Tier::full: return "full";
  }
  return "?";
}

std::vector<int> criteria_for(Tier t) {
  const int last = t == Tier::quick ? 8 : t == Tier::standard ? 10 : kCriteria;
  std::vector<int> ids;
  for (int i = 1; i <= last; ++i) ids.push_back(i);
  return ids;
}

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (passed) detail.str("");
    if (!passed) detail << "; ";
    passed = false;
    detail << why;
  }
};

std::set<std::vector<int>> partner_arrays(const diagrams::DiagramSet& s) {
  std::set<std::vector<int>> out;
  for (const auto& p : s) out.insert(p.partners());
  return out;
}

// --- 1 ----------------------------------------------------------------------

void diagram_counts(Outcome& o) {
  int signatures = 0;
  for (int t = 0; t <= 10; t += 2) {
    const int s = t / 2;
    std::set<std::vector<int>> all, alt, nc;
    for (auto& m : oracles::matchings_by_permutation(t)) {
      if (oracles::alternating_by_parity(m)) alt.insert(m);
      if (oracles::noncrossing_by_stack(m)) nc.insert(m);
      all.insert(std::move(m));
    }
    if (all.size() != oracles::double_factorial_odd(s) || alt.size() != oracles::factorial(s) ||
        nc.size() != oracles::catalan(s))
      o.fail("oracle counts disagree with closed forms at s=" + std::to_string(s));
    for (int k = 0; k <= t; ++k) {
      ++signatures;
      const auto P = diagrams::enumerate(k, t - k, Family::P);
      const auto E = diagrams::enumerate(k, t - k, Family::E);
      const auto N = diagrams::enumerate(k, t - k, Family::N);
      const std::string sig = "(" + std::to_string(k) + "," + std::to_string(t - k) + ")";
      if (partner_arrays(P) != all) o.fail("P" + sig + " differs from brute force");
      if (partner_arrays(E) != alt) o.fail("E" + sig + " differs from brute force");
      if (partner_arrays(N) != nc) o.fail("N" + sig + " differs from brute force");
      for (const auto& p : N)
        if (!E.contains(p)) o.fail("N" + sig + " not inside E");
    }
  }
  // odd totals are empty
  for (int t = 1; t <= 9; t += 2)
    for (int k = 0; k <= t; ++k)
      if (!diagrams::enumerate(k, t - k, Family::P).empty()) o.fail("odd total is not empty");
  if (o.passed)
    o.detail << signatures << " signatures, |P|,|E|,|N| at s=5: " << oracles::double_factorial_odd(5)
             << "," << oracles::factorial(5) << "," << oracles::catalan(5);
}

// --- 2 ----------------------------------------------------------------------

void e_characterisations(Outcome& o) {
  std::size_t checked = 0, in_e = 0;
  for (int t = 0; t <= 10; t += 2)
    for (int k = 0; k <= t; ++k)
      for (const auto& p : diagrams::enumerate(k, t - k, Family::P)) {
        ++checked;
        const bool a = diagrams::every_string_evenly_crossed(p);
        const bool b = diagrams::every_gap_even(p);
        const bool c = diagrams::alternating_labels_matched(p);
        if (a != b || b != c) o.fail("disagreement at " + p.to_string());
        if (a) ++in_e;
      }
  if (o.passed) o.detail << checked << " pairings, " << in_e << " in E, predicates agree";
}

// --- 3 ----------------------------------------------------------------------

void cappings(Outcome& o) {
  std::size_t pe = 0, en = 0, s3_en = 0, s3_en_missing = 0;
  for (int s = 1; s <= 5; ++s) {
    const int t = 2 * s;
    for (int k = 0; k <= t; ++k)
      for (const auto& p : diagrams::enumerate(k, t - k, Family::P)) {
        const auto cls = diagrams::classify(p);
        bool has_pe = false, has_en = false;
        for (int i = 1; i <= t; ++i) {
          const auto c = diagrams::classify(diagrams::cap(p, i));
          has_pe = has_pe || c == diagrams::DiagramClass::P_only;
          has_en = has_en || c == diagrams::DiagramClass::E_not_N;
        }
        if (cls == diagrams::DiagramClass::P_only && s >= 3) {
          ++pe;
          if (!has_pe) o.fail("no P-E capping for " + p.to_string());
        }
        if (cls == diagrams::DiagramClass::E_not_N && s >= 4) {
          ++en;
          if (!has_en) o.fail("no E-N capping for " + p.to_string());
        }
        if (cls == diagrams::DiagramClass::E_not_N && s == 3) {
          ++s3_en;
          if (!has_en) ++s3_en_missing;
        }
      }
  }
  if (o.passed)
    o.detail << pe << " in P-E, " << en << " in E-N checked; at s=3 " << s3_en_missing << " of "
             << s3_en << " E-N pairings have no E-N capping";
}

// --- 4 ----------------------------------------------------------------------

void generation(Outcome& o) {
  const int bound = 6;
  struct Case {
    const char* name;
    Pairing seed;
    Family family;
  };
  const Case cases[] = {{"crossing", Pairing::crossing(), Family::P},
                        {"p3", Pairing::half_liberation(), Family::E},
                        {"identity", Pairing::identity(1), Family::N}};
  std::ostringstream sizes;
  for (const auto& c : cases) {
    const auto closure = diagrams::generate(c.seed, bound);
    std::size_t total = 0;
    for (int t = 0; t <= bound; t += 2)
      for (int k = 0; k <= t; ++k) {
        const auto expected = diagrams::enumerate(k, t - k, c.family);
        auto it = closure.find({k, t - k});
        const diagrams::DiagramSet got = it == closure.end() ? diagrams::DiagramSet(k, t - k) : it->second;
        if (!(got == expected))
          o.fail(std::string("<") + c.name + "> differs from " + diagrams::to_string(c.family) + "(" +
                 std::to_string(k) + "," + std::to_string(t - k) + ")");
        total += got.size();
      }
    for (const auto& [sig, set] : closure)
      if (sig.first + sig.second > bound || (sig.first + sig.second) % 2 != 0)
        o.fail(std::string("<") + c.name + "> escaped the bound");
    sizes << (sizes.tellp() > 0 ? ", " : "") << "<" << c.name << ">=" << total;
  }
  if (o.passed) o.detail << "diagrams up to 6 points: " << sizes.str();
}

// --- 5 ----------------------------------------------------------------------

void bridge(Outcome& o, const Limits& limits) {
  int cases = 0;
  for (int n : {2, 3})
    for (int t = 0; t <= 6; t += 2)
      for (int k = 0; k <= t; ++k) {
        const int l = t - k;
        const auto h = tensor_maps::hom_dim(n, k, l, Family::E, limits);
        const auto vk = fusion::decompose_power_Un_alternating(n, k, limits);
        const auto vl = fusion::decompose_power_Un_alternating(n, l, limits);
        const auto d = fusion::hom_dimension(vk, vl);
        ++cases;
        if (static_cast<std::int64_t>(h.rank) != d)
          o.fail("n=" + std::to_string(n) + " (" + std::to_string(k) + "," + std::to_string(l) +
                 "): rank " + std::to_string(h.rank) + " vs " + std::to_string(d));
        if (h.modular_rank != h.rank) o.fail("modular rank differs from exact rank");
      }
  if (o.passed) o.detail << cases << " (n,k,l) cases agree";
}

// --- 6 ----------------------------------------------------------------------

void half_liberation_rank(Outcome& o, const Limits& limits) {
  int equal_cases = 0;
  for (int t = 0; t <= 8; t += 2)
    for (int k = 0; k <= t; ++k) {
      const auto e = tensor_maps::hom_dim(2, k, t - k, Family::E, limits);
      const auto nn = tensor_maps::hom_dim(2, k, t - k, Family::N, limits);
      ++equal_cases;
      if (e.rank != nn.rank)
        o.fail("n=2 (" + std::to_string(k) + "," + std::to_string(t - k) + "): E " +
               std::to_string(e.rank) + " vs N " + std::to_string(nn.rank));
    }
  std::string witness;
  for (int t = 0; t <= 6 && witness.empty(); t += 2)
    for (int k = 0; k <= t && witness.empty(); ++k) {
      const auto e = tensor_maps::hom_dim(3, k, t - k, Family::E, limits);
      const auto nn = tensor_maps::hom_dim(3, k, t - k, Family::N, limits);
      if (e.rank > nn.rank)
        witness = "(" + std::to_string(k) + "," + std::to_string(t - k) + ") E " +
                  std::to_string(e.rank) + " > N " + std::to_string(nn.rank);
    }
  if (witness.empty()) o.fail("no strict inequality at n=3");
  if (o.passed)
    o.detail << "n=2 equal on " << equal_cases << " signatures; n=3 first strict at " << witness;
}

// --- 7 ----------------------------------------------------------------------

void group_model(Outcome& o) {
  for (int n = 1; n <= 5; ++n)
    for (int i = 1; i <= n; ++i)
      if (!(weights::eval_word(n, {i, i}) == weights::identity(n))) o.fail("g_i^2 != 1");
  const int n = 3;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        if (!(weights::eval_word(n, {a, b, c}) == weights::eval_word(n, {c, b, a})))
          o.fail("abc != cba");

  std::size_t words = 0, trivial = 0;
  std::vector<int> word;
  std::function<void()> walk = [&] {
    ++words;
    const auto g = weights::eval_word(n, word);
    if (!(g == weights::eval_word_closed_form(n, word))) o.fail("closed form mismatch");
    if (g == weights::identity(n)) {
      ++trivial;
      std::vector<int> balance(n + 1, 0);
      for (std::size_t pos = 0; pos < word.size(); ++pos) balance[word[pos]] += pos % 2 == 0 ? 1 : -1;
      if (std::any_of(balance.begin(), balance.end(), [](int x) { return x != 0; }))
        o.fail("trivial word with unbalanced positions");
    }
    if (word.size() == 8) return;
    for (int i = 1; i <= n; ++i) {
      word.push_back(i);
      walk();
      word.pop_back();
    }
  };
  walk();

  std::set<GroupElement> powers;
  const GroupElement h = weights::eval_word(2, {1, 2});
  GroupElement acc = weights::identity(2);
  for (int e = 0; e <= 50; ++e) {
    powers.insert(acc);
    acc = weights::multiply(acc, h);
  }
  if (powers.size() != 51) o.fail("powers of g1g2 repeat");
  if (o.passed)
    o.detail << words << " words, " << trivial << " trivial and balanced; 51 distinct powers";
}

// --- 8 ----------------------------------------------------------------------

fusion::OstarDecomposition in_sector(const fusion::UnDecomposition& d, Sector s) {
  fusion::OstarDecomposition out;
  for (const auto& [w, c] : d) out.add({w, s}, c);
  return out;
}

std::string show(const fusion::OstarDecomposition& d) {
  std::string s = "{";
  for (const auto& [g, c] : d) s += (s.size() > 1 ? " " : "") + g.to_string();
  return s + "}";
}

void twisted_fusion(Outcome& o, std::uint64_t seed, const Limits& limits) {
  const int n = 3;
  const GroupElement u = fusion::fundamental_Ostar(n);
  const GroupElement w{Weight{1, 1, -2}, Sector::circ};

  const auto uw_oracle = in_sector(oracles::pieri_fundamental(fusion::conjugate_Un(w.lambda)), Sector::tau);
  const auto wu_oracle = in_sector(oracles::pieri_fundamental(w.lambda), Sector::tau);
  fusion::OstarDecomposition uw_expected, wu_expected;
  uw_expected.add({Weight{3, -1, -1}, Sector::tau}, 1);
  uw_expected.add({Weight{2, 0, -1}, Sector::tau}, 1);
  wu_expected.add({Weight{2, 1, -2}, Sector::tau}, 1);
  wu_expected.add({Weight{1, 1, -1}, Sector::tau}, 1);
  if (!(uw_oracle == uw_expected) || !(wu_oracle == wu_expected))
    o.fail("Pieri oracle disagrees with the tabulated products");

  const auto uw = fusion::tensor_Ostar(u, w, limits);
  const auto wu = fusion::tensor_Ostar(w, u, limits);
  if (!(uw == uw_expected)) o.fail("u*w = " + show(uw));
  if (!(wu == wu_expected)) o.fail("w*u = " + show(wu));
  if (uw == wu) o.fail("u*w equals w*u");

  std::vector<GroupElement> pool;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= a; ++b)
      for (int c = -2; c <= b; ++c) {
        const Weight x{a, b, c};
        if (x.sum() == 0 || x.sum() == 1) pool.push_back(weights::lift(x));
      }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    fusion::OstarDecomposition a, b, c;
    a.add(pool[pick(rng)], 1);
    b.add(pool[pick(rng)], 1);
    c.add(pool[pick(rng)], 1);
    const auto ab = fusion::tensor(a, b, limits);
    if (!(fusion::tensor(ab, c, limits) == fusion::tensor(a, fusion::tensor(b, c, limits), limits)))
      o.fail("associativity fails for " + show(a) + show(b) + show(c));
    if (!(fusion::conjugate(ab) ==
          fusion::tensor(fusion::conjugate(b), fusion::conjugate(a), limits)))
      o.fail("conjugation is not an anti-homomorphism on " + show(a) + show(b));
  }
  if (o.passed)
    o.detail << "u*w=" << show(uw) << " w*u=" << show(wu) << "; 100 random triples ok";
}

// --- 9 ----------------------------------------------------------------------

void highest_weights(Outcome& o, const Limits& limits) {
  int count = 0;
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= a; ++b)
      for (int c = -4; c <= b; ++c) {
        const Weight x{a, b, c};
        if (x.abs_sum() > 4 || (x.sum() != 0 && x.sum() != 1)) continue;
        ++count;
        const auto lw = weights::lift(x);
        const auto m = weights::weight_multiset_Ostar(lw, limits);
        const auto top = weights::maximal_elements(m);
        if (top.size() != 1 || !(top.front() == lw)) o.fail("maximal elements of " + lw.to_string());
        if (BigInt(weights::total_multiplicity(m)) != fusion::weyl_dim(x))
          o.fail("dimension of " + lw.to_string());
      }
  if (o.passed) o.detail << count << " dominant L-weights checked";
}

// --- 10 ---------------------------------------------------------------------

void graph_relations(Outcome& o, const Limits& limits) {
  using namespace cayley;
  for (int n : {2, 3}) {
    const auto a = build_graph(Group::Ostar, n, 6, limits);
    const auto u = build_graph(Group::Un, n, 6, limits);
    if (!subgraph_check(a, u)) o.fail("subgraph check fails at n=" + std::to_string(n));
  }
  const int r = 6;
  const auto a = build_graph(Group::Ostar, 3, 2 * r, limits);
  const auto collapsed = projective_collapse(a, limits);
  const auto pu = build_graph(Group::PUn, 3, r, limits);
  if (!(collapsed == pu)) o.fail("collapse differs from the PU_3 graph");

  // Raw 2-path loops exceed the PU_3 loops by exactly one per vertex.
  const auto ext = build_graph(Group::Ostar, 3, 2 * r + 1, limits);
  for (const auto& v : pu.vertices) {
    const std::size_t i = ext.find(v.weight);
    std::int64_t raw = 0;
    for (const auto& e1 : ext.edges)
      if (e1.from == i) raw += e1.mult * ext.multiplicity(ext.vertices[e1.to].weight, v.weight);
    if (raw != pu.multiplicity(v.weight, v.weight) + 1)
      o.fail("loop count at " + v.weight.to_string());
  }
  if (o.passed)
    o.detail << "subgraphs at n=2,3 radius 6; collapse = PU_3 radius " << r << " ("
             << pu.vertices.size() << " vertices, " << pu.loop_count() << " loops)";
}

// --- 11 ---------------------------------------------------------------------

void growth(Outcome& o, const Limits& limits) {
  using namespace cayley;
  const auto a = build_graph(Group::Ostar, 3, 64, limits);
  const auto b = ball_volumes(a, 64);
  const auto fit = fit_exponent(b, 16, 64);
  const double dyadic = dyadic_ratio(b, 32);
  if (!(fit.slope >= 7.0 && fit.slope <= 9.0)) o.fail("slope out of range");
  if (!(dyadic >= 7.0 && dyadic <= 9.0)) o.fail("dyadic ratio out of range");
  for (int n : {2, 3}) {
    const int kmax = 16;
    const auto pu = build_graph(Group::PUn, n, kmax, limits);
    const auto ostar = build_graph(Group::Ostar, n, 2 * kmax, limits);
    const auto su = build_graph(Group::SUn, n, 2 * kmax, limits);
    for (int k = 0; k <= kmax; ++k)
      if (!inclusion_report(pu, ostar, su, k).holds())
        o.fail("inclusion chain fails at n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  std::ostringstream num;
  num << std::fixed << std::setprecision(3) << "slope " << fit.slope << ", log2(b64/b32) "
      << dyadic;
  if (o.passed) o.detail << num.str() << "; inclusions hold for k<=16 at n=2,3";
  else o.detail << " (" << num.str() << ")";
}

// --- 12 ---------------------------------------------------------------------

void determinism(Outcome& o, const Options& options) {
  Options quick = options;
  quick.tier = Tier::quick;
  const auto first = render_report(run(quick), quick);
  const auto second = render_report(run(quick), quick);
  if (first != second) o.fail("two quick runs differ");
  if (o.passed) o.detail << "two quick reports identical (" << first.size() << " bytes)";
}

struct Entry {
  const char* name;
  double limit;
};

const Entry kEntries[kCriteria] = {
    {"diagram counts", 5},        {"E characterisations", 10}, {"capping reductions", 30},
    {"generation closures", 60},  {"Hom bridge to U_n", 60},   {"E vs N ranks", 120},
    {"diagonal group model", 10}, {"twisted fusion", 10},      {"highest weights", 30},
    {"graph relations", 60},      {"growth and inclusions", 600}, {"determinism", 600},
};

}  // namespace

CriterionResult run_criterion(int id, const Options& options) {
  if (id < 1 || id > kCriteria) throw std::out_of_range("criterion id outside 1..12");
  CriterionResult r;
  r.id = id;
  r.name = kEntries[id - 1].name;
  r.limit_seconds = kEntries[id - 1].limit;
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: diagram_counts(o); break;
      case 2: e_characterisations(o); break;
      case 3: cappings(o); break;
      case 4: generation(o); break;
      case 5: bridge(o, options.limits); break;
      case 6: half_liberation_rank(o, options.limits); break;
      case 7: group_model(o); break;
      case 8: twisted_fusion(o, options.seed, options.limits); break;
      case 9: highest_weights(o, options.limits); break;
      case 10: graph_relations(o, options.limits); break;
      case 11: growth(o, options.limits); break;
      case 12: determinism(o, options); break;
    }
  } catch (const std::exception& e) {
    o.fail(std::string("error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = o.passed;
  r.detail = o.detail.str();
  return r;
}

std::vector<CriterionResult> run(const Options& options) {
  std::vector<CriterionResult> out;
  for (int id : criteria_for(options.tier)) out.push_back(run_criterion(id, options));
  return out;
}

std::string render_report(const std::vector<CriterionResult>& results, const Options& options,
                          bool timings) {
  std::ostringstream os;
  os << "ostar " << kVersion << " verify\n";
  os << "config: tier=" << to_string(options.tier) << " seed=" << options.seed
     << " max_cells=" << options.limits.max_cells << " max_vertices=" << options.limits.max_vertices
     << " max_summands=" << options.limits.max_summands
     << " max_patterns=" << options.limits.max_patterns << "\n";
  int passed = 0;
  for (const auto& r : results) {
    os << std::setw(3) << r.id << "  " << (r.passed ? "PASS" : "FAIL") << "  " << std::left
       << std::setw(24) << r.name << std::right;
    if (timings)
      os << std::fixed << std::setprecision(2) << std::setw(8) << r.seconds << "s/"
         << std::setprecision(0) << r.limit_seconds << "s";
    os << "  " << r.detail << "\n";
    if (r.passed) ++passed;
  }
  os << "summary: " << passed << "/" << results.size() << " passed\n";
  return os.str();
}

}  // namespace ostar::verify
