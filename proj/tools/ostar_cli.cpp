#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ostar/cayley_growth.hpp"
#include "ostar/diagrams.hpp"
#include "ostar/fusion.hpp"
#include "ostar/kernels.hpp"
#include "ostar/tensor_maps.hpp"
#include "ostar/verify.hpp"
#include "ostar/weight_lattice.hpp"

using nlohmann::json;
using namespace ostar;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  bool pretty = false;
  std::uint64_t seed = 20240601;
  Limits limits = Limits::from_env();
};

json limits_json(const Limits& l) {
  return {{"max_cells", l.max_cells},
          {"max_vertices", l.max_vertices},
          {"max_summands", l.max_summands},
          {"max_patterns", l.max_patterns}};
}

json envelope(const std::string& command, json params, const Common& c, json result) {
  params["limits"] = limits_json(c.limits);
  params["seed"] = c.seed;
  return {{"tool", "ostar"},
          {"version", kVersion},
          {"command", command},
          {"config", std::move(params)},
          {"result", std::move(result)}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

weights::Weight read_weight(const std::string& text, int n) {
  weights::Weight w;
  try {
    w = weights::parse_weight(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (w.n() != n)
    throw UsageError("weight " + w.to_string() + " has " + std::to_string(w.n()) +
                     " coordinates but --n is " + std::to_string(n));
  return w;
}

void require_dominant(const weights::Weight& w) {
  if (!weights::is_dominant(w))
    throw UsageError(w.to_string() + " is not dominant (coordinates must be non-increasing)");
}

std::string family_text(const std::string& s) {
  diagrams::parse_family(s);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of the half-liberated orthogonal quantum group O_n*"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_flag("--pretty", common.pretty, "Human-readable output instead of JSON");
  app.add_option("--seed", common.seed, "Random seed for property checks");
  app.add_option("--max-cells", common.limits.max_cells, "Cap on tensor matrix cells")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-vertices", common.limits.max_vertices, "Cap on Cayley graph vertices")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-summands", common.limits.max_summands, "Cap on decomposition summands")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-patterns", common.limits.max_patterns, "Cap on Gelfand-Tsetlin patterns")
      ->check(CLI::PositiveNumber);

  const auto family_check = CLI::IsMember({"P", "E", "N"});

  // diagrams
  auto* dg = app.add_subcommand("diagrams", "Enumerate pairings");
  dg->require_subcommand(1);
  int dk = 0, dl = 0;
  std::string dclass = "P";
  bool djson = false;
  auto* dcount = dg->add_subcommand("count", "Number of pairings in a class");
  auto* dlist = dg->add_subcommand("list", "List the pairings in a class");
  for (auto* sub : {dcount, dlist}) {
    sub->add_option("--k", dk, "Upper points")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--l", dl, "Lower points")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--class", dclass, "P, E or N")->required()->check(family_check);
  }
  dlist->add_flag("--json", djson, "JSON output (the default unless --pretty)");

  // hom-dim
  auto* hd = app.add_subcommand("hom-dim", "Dimension of span{T_p} as an exact rank");
  int hn = 0, hk = 0, hl = 0;
  std::string hclass = "E";
  bool hjson = false;
  hd->add_option("--n", hn)->required()->check(CLI::PositiveNumber);
  hd->add_option("--k", hk)->required()->check(CLI::NonNegativeNumber);
  hd->add_option("--l", hl)->required()->check(CLI::NonNegativeNumber);
  hd->add_option("--class", hclass)->check(family_check);
  hd->add_flag("--json", hjson, "JSON output (the default unless --pretty)");

  // fuse
  auto* fu = app.add_subcommand("fuse", "Decompose a tensor product of irreducibles");
  int fn = 0;
  std::string lhs, rhs, side = "ostar";
  fu->add_option("--n", fn)->required()->check(CLI::PositiveNumber);
  fu->add_option("--lhs", lhs, "Highest weight, e.g. \"1,1,-2\"")->required();
  fu->add_option("--rhs", rhs)->required();
  fu->add_option("--side", side)->check(CLI::IsMember({"ostar", "un"}));

  // weights
  auto* wt = app.add_subcommand("weights", "Sector, dimension and weight multiset");
  int wn = 0;
  std::string wof;
  bool wmulti = false;
  wt->add_option("--n", wn)->required()->check(CLI::PositiveNumber);
  wt->add_option("--of", wof, "Highest weight")->required();
  wt->add_flag("--multiset", wmulti, "Include the full weight multiset");

  // cayley
  auto* cg = app.add_subcommand("cayley", "Export a ball of a Cayley graph");
  std::string cgroup = "ostar", cformat = "json", cout_path;
  int cn = 0, cradius = 0;
  cg->add_option("--group", cgroup)->check(CLI::IsMember({"ostar", "un", "pun", "sun"}));
  cg->add_option("--n", cn)->required()->check(CLI::PositiveNumber);
  cg->add_option("--radius", cradius)->required()->check(CLI::NonNegativeNumber);
  cg->add_option("--out", cout_path, "Output file (default: standard output)");
  cg->add_option("--format", cformat)->check(CLI::IsMember({"dot", "json"}));

  // growth
  auto* gr = app.add_subcommand("growth", "Ball volumes b_k and growth fits");
  std::string ggroup = "ostar", gcsv;
  int gn = 0, gkmax = 0;
  std::vector<int> gfit;
  gr->add_option("--group", ggroup)->check(CLI::IsMember({"ostar", "un", "pun", "sun"}));
  gr->add_option("--n", gn)->required()->check(CLI::PositiveNumber);
  gr->add_option("--kmax", gkmax)->required()->check(CLI::NonNegativeNumber);
  gr->add_option("--csv", gcsv, "Also write k,b_k rows to this file");
  gr->add_option("--fit", gfit, "KMIN KMAX for the log-log fit")->expected(2);

  // verify
  auto* vf = app.add_subcommand("verify", "Run the acceptance suite");
  bool vquick = false, vfull = false, vtimings = false, vjson = false;
  auto* q = vf->add_flag("--quick", vquick, "Criteria 1-8");
  auto* f = vf->add_flag("--full", vfull, "Criteria 1-12, including the growth fit");
  q->excludes(f);
  vf->add_flag("--timings", vtimings, "Show wall-clock time per criterion");
  vf->add_flag("--json", vjson, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (dg->parsed()) {
      const auto family = diagrams::parse_family(dclass);
      const auto set = diagrams::enumerate(dk, dl, family);
      json params{{"k", dk}, {"l", dl}, {"class", dclass}};
      if (dcount->parsed()) {
        if (common.pretty)
          std::cout << dclass << "(" << dk << "," << dl << "): " << set.size() << "\n";
        else
          emit(envelope("diagrams count", params, common, {{"count", set.size()}}));
      } else {
        if (common.pretty && !djson) {
          for (const auto& p : set)
            std::cout << p.to_string() << "  " << diagrams::to_string(diagrams::classify(p)) << "\n";
        } else {
          json items = json::array();
          for (const auto& p : set) items.push_back(p);
          emit(envelope("diagrams list", params, common,
                        {{"count", set.size()}, {"pairings", items}}));
        }
      }
      return kOk;
    }

    if (hd->parsed()) {
      const auto family = diagrams::parse_family(family_text(hclass));
      const auto& kernel = kernels::dispatch();
      const auto h = tensor_maps::hom_dim(hn, hk, hl, family, common.limits, kernel);
      if (common.pretty && !hjson) {
        std::cout << "dim span{T_p : p in " << hclass << "(" << hk << "," << hl << ")} at n=" << hn
                  << ": " << h.rank << " (set size " << h.set_size << ")\n";
      } else {
        json params{{"n", hn}, {"k", hk}, {"l", hl}, {"class", hclass}};
        emit(envelope("hom-dim", params, common,
                      {{"rank", h.rank},
                       {"set_size", h.set_size},
                       {"basis_indices", h.basis_indices},
                       {"modular_rank", h.modular_rank},
                       {"kernel", kernels::to_string(kernel.isa)}}));
      }
      return kOk;
    }

    if (fu->parsed()) {
      const auto a = read_weight(lhs, fn);
      const auto b = read_weight(rhs, fn);
      require_dominant(a);
      require_dominant(b);
      json params{{"n", fn}, {"lhs", a.coords()}, {"rhs", b.coords()}, {"side", side}};
      json result;
      std::ostringstream text;
      if (side == "ostar") {
        const auto ga = weights::lift(a);
        const auto gb = weights::lift(b);
        const auto d = fusion::tensor_Ostar(ga, gb, common.limits);
        result = fusion::to_json(d);
        for (const auto& [g, c] : d)
          text << c << " x " << g.to_string() << "  dim " << fusion::dim(g) << "\n";
        text << "total dim " << fusion::total_dim(d) << "\n";
      } else {
        const auto d = fusion::tensor_Un(a, b, common.limits);
        result = fusion::to_json(d);
        for (const auto& [w, c] : d)
          text << c << " x " << w.to_string() << "  dim " << fusion::weyl_dim(w) << "\n";
        text << "total dim " << fusion::total_dim(d) << "\n";
      }
      if (common.pretty)
        std::cout << text.str();
      else
        emit(envelope("fuse", params, common, result));
      return kOk;
    }

    if (wt->parsed()) {
      const auto w = read_weight(wof, wn);
      require_dominant(w);
      const auto g = weights::lift(w);
      json params{{"n", wn}, {"of", w.coords()}, {"multiset", wmulti}};
      json result{{"lambda", w.coords()},
                  {"sector", weights::to_string(g.sector)},
                  {"dim", fusion::big_to_json(fusion::weyl_dim(w))},
                  {"conjugate", fusion::conjugate_Ostar(g)}};
      weights::GroupMultiset m;
      if (wmulti) {
        m = weights::weight_multiset_Ostar(g, common.limits);
        json items = json::array();
        for (const auto& [e, c] : m) items.push_back({{"weight", e.lambda.coords()}, {"mult", c}});
        result["multiset"] = items;
      }
      if (common.pretty) {
        std::cout << g.to_string() << "  dim " << fusion::weyl_dim(w) << "  conjugate "
                  << fusion::conjugate_Ostar(g).to_string() << "\n";
        for (const auto& [e, c] : m) std::cout << "  " << e.lambda.to_string() << " x" << c << "\n";
      } else {
        emit(envelope("weights", params, common, result));
      }
      return kOk;
    }

    if (cg->parsed()) {
      const auto group = cayley::parse_group(cgroup);
      const auto g = cayley::build_graph(group, cn, cradius, common.limits);
      json params{{"group", cgroup}, {"n", cn}, {"radius", cradius}, {"format", cformat}};
      std::string body;
      if (cformat == "dot") {
        json cfg = params;
        cfg["limits"] = limits_json(common.limits);
        body = "// ostar " + std::string(kVersion) + " " + cfg.dump() + "\n" + cayley::to_dot(g);
      } else {
        body = envelope("cayley", params, common, cayley::to_json(g)).dump(2) + "\n";
      }
      if (cout_path.empty()) {
        std::cout << body;
      } else {
        std::ofstream out(cout_path);
        if (!out) throw std::runtime_error("cannot open " + cout_path);
        out << body;
      }
      return kOk;
    }

    if (gr->parsed()) {
      const auto group = cayley::parse_group(ggroup);
      const auto g = cayley::build_graph(group, gn, gkmax, common.limits);
      const auto series = cayley::ball_volumes(g, gkmax);
      json params{{"group", ggroup}, {"n", gn}, {"kmax", gkmax}};
      json values = json::array();
      for (const auto& b : series) values.push_back(fusion::big_to_json(b));
      json result{{"b", values}};
      std::optional<cayley::GrowthFit> fit;
      if (!gfit.empty()) {
        params["fit"] = gfit;
        try {
          fit = cayley::fit_exponent(series, gfit[0], gfit[1]);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        json dy = json::array();
        for (const auto& [k, r] : fit->dyadic) dy.push_back({{"k", k}, {"log2_ratio", r}});
        result["fit"] = {{"slope", fit->slope}, {"dyadic", dy}};
      }
      if (!gcsv.empty()) {
        std::ofstream out(gcsv);
        if (!out) throw std::runtime_error("cannot open " + gcsv);
        out << cayley::to_csv(series);
        params["csv"] = gcsv;
      }
      if (common.pretty) {
        std::cout << cayley::to_csv(series);
        if (fit) std::cout << "slope " << fit->slope << "\n";
      } else {
        emit(envelope("growth", params, common, result));
      }
      return kOk;
    }

    if (vf->parsed()) {
      verify::Options opts;
      opts.tier = vquick ? verify::Tier::quick : vfull ? verify::Tier::full : verify::Tier::standard;
      opts.seed = common.seed;
      opts.limits = common.limits;
      const auto results = verify::run(opts);
      bool all = true;
      for (const auto& r : results) all = all && r.passed;
      if (vjson) {
        json items = json::array();
        for (const auto& r : results) {
          json j{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
          if (vtimings) j["seconds"] = r.seconds;
          items.push_back(j);
        }
        emit(envelope("verify", {{"tier", verify::to_string(opts.tier)}}, common,
                      {{"criteria", items}, {"passed", all}}));
      } else {
        std::cout << verify::render_report(results, opts, vtimings);
      }
      return all ? kOk : kCheckFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
