#pragma once

// The acceptance suite: twelve self-contained checks, each reporting a
// verdict and a one-line summary of what it compared.

#include <cstdint>
#include <string>
#include <vector>

#include "ostar/common.hpp"

namespace ostar::verify {

enum class Tier { quick, standard, full };

std::string to_string(Tier t);

struct Options {
  Tier tier = Tier::standard;
  std::uint64_t seed = 20240601;
  Limits limits = Limits::from_env();
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

inline constexpr int kCriteria = 12;

/// Criteria run by a tier: quick 1-8, standard 1-10, full 1-12.
std::vector<int> criteria_for(Tier t);

CriterionResult run_criterion(int id, const Options& options);
std::vector<CriterionResult> run(const Options& options);

/// Plain-text table.  Timings are printed only when asked for, so the default
/// report is byte-for-byte reproducible.
std::string render_report(const std::vector<CriterionResult>& results, const Options& options,
                          bool timings = false);

}  // namespace ostar::verify
