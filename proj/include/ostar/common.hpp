#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ostar {

inline constexpr const char* kVersion = "0.3.1";

using BigInt = boost::multiprecision::cpp_int;

/// Raised when a computation would exceed one of the configured size caps.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Size caps shared by every module.  Defaults can be overridden through
/// OSTAR_MAX_CELLS, OSTAR_MAX_VERTICES, OSTAR_MAX_SUMMANDS and
/// OSTAR_MAX_PATTERNS.
struct Limits {
  std::uint64_t max_cells = 10'000'000;
  std::uint64_t max_vertices = 1'000'000;
  std::uint64_t max_summands = 1'000'000;
  std::uint64_t max_patterns = 10'000'000;

  static Limits from_env();
};

}  // namespace ostar
