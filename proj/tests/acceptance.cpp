#include <cstdio>
#include <string>

#include "ostar/verify.hpp"

int main(int argc, char** argv) {
  ostar::verify::Options options;
  options.tier = ostar::verify::Tier::full;
  if (argc > 1 && std::string(argv[1]) == "--quick") options.tier = ostar::verify::Tier::quick;

  int failures = 0;
  for (int id : ostar::verify::criteria_for(options.tier)) {
    const auto r = ostar::verify::run_criterion(id, options);
    const bool in_time = r.seconds < r.limit_seconds;
    const bool ok = r.passed && in_time;
    if (!ok) ++failures;
    std::printf("criterion %2d %s  %-24s %8.2fs (limit %.0fs)%s  %s\n", r.id, ok ? "PASS" : "FAIL",
                r.name.c_str(), r.seconds, r.limit_seconds, in_time ? "" : " over time",
                r.detail.c_str());
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
