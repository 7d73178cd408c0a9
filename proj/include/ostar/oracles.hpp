#pragma once

// Slow reference implementations used only to cross-check the main modules.
// Nothing here calls the code it is meant to check.

#include <cstdint>
#include <map>
#include <vector>

#include "ostar/cayley_growth.hpp"
#include "ostar/common.hpp"
#include "ostar/fusion.hpp"
#include "ostar/weight_lattice.hpp"

namespace ostar::oracles {

using weights::Weight;

/// All fixed-point-free involutions of 1..t, found by walking every
/// permutation.  Each entry is a 1-based partner array.
std::vector<std::vector<int>> matchings_by_permutation(int t);

/// Stack discipline along 1..t: noncrossing iff every closing point matches
/// the most recent open one.
bool noncrossing_by_stack(const std::vector<int>& partner);

/// Every string joins an odd point to an even point.
bool alternating_by_parity(const std::vector<int>& partner);

std::uint64_t double_factorial_odd(int s);  // (2s-1)!!
std::uint64_t factorial(int s);
std::uint64_t catalan(int s);

/// λ ⊗ μ by multiplying weight multisets and peeling off highest weights.
fusion::UnDecomposition tensor_by_characters(const Weight& lambda, const Weight& mu,
                                             const Limits& limits = Limits::from_env());

/// λ ⊗ v (add e_i) or λ ⊗ v̄ (subtract e_i), keeping dominant results.
fusion::UnDecomposition pieri_fundamental(const Weight& lambda);
fusion::UnDecomposition pieri_antifundamental(const Weight& lambda);

/// O_n* length of a vertex: Σ|λ_i|.
std::int64_t ostar_length(const Weight& lambda);

/// b_0..b_kmax for SU_n from a U_n ball: each class takes the smallest
/// U_n length among its lifts.
cayley::GrowthSeries su_volumes_from_un(int n, int kmax, const Limits& limits = Limits::from_env());

}  // namespace ostar::oracles
