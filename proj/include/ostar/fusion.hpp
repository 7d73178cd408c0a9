#pragma once

// Tensor product decompositions.  U_n products use the Littlewood-Richardson
// rule on weights shifted to partitions; O_n* products are U_n products with
// the right factor conjugated whenever the left factor lies in the tau
// sector.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "ostar/common.hpp"
#include "ostar/weight_lattice.hpp"

namespace ostar::fusion {

using weights::GroupElement;
using weights::Weight;

/// A finite formal sum of irreducibles, keyed by highest weight.
template <class Key>
class Decomposition {
 public:
  using Map = std::map<Key, std::int64_t>;

  void add(const Key& key, std::int64_t mult) {
    if (mult == 0) return;
    auto& slot = terms_[key];
    slot += mult;
    if (slot == 0) terms_.erase(key);
  }

  std::int64_t multiplicity(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
  }

  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  Map terms_;
};

using UnDecomposition = Decomposition<Weight>;
using OstarDecomposition = Decomposition<GroupElement>;

/// Π_{i<j} (λ_i - λ_j + j - i)/(j - i).  Throws on non-dominant input.
BigInt weyl_dim(const Weight& lambda);
BigInt dim(const GroupElement& a);

/// (λ_1..λ_n) -> (-λ_n..-λ_1).
Weight conjugate_Un(const Weight& lambda);

/// Littlewood-Richardson coefficients c^ν_{λμ} for partitions (nonnegative,
/// weakly decreasing), restricted to ν with at most `max_rows` parts.
std::map<std::vector<std::int64_t>, std::int64_t> lr_coefficients(
    const std::vector<std::int64_t>& lambda, const std::vector<std::int64_t>& mu, int max_rows,
    std::uint64_t max_terms);

UnDecomposition tensor_Un(const Weight& lambda, const Weight& mu,
                          const Limits& limits = Limits::from_env());

OstarDecomposition tensor_Ostar(const GroupElement& a, const GroupElement& b,
                                const Limits& limits = Limits::from_env());

GroupElement conjugate_Ostar(const GroupElement& a);

/// Bilinear extensions to formal sums.
UnDecomposition tensor(const UnDecomposition& x, const UnDecomposition& y,
                       const Limits& limits = Limits::from_env());
OstarDecomposition tensor(const OstarDecomposition& x, const OstarDecomposition& y,
                          const Limits& limits = Limits::from_env());
UnDecomposition conjugate(const UnDecomposition& x);
OstarDecomposition conjugate(const OstarDecomposition& x);

BigInt total_dim(const UnDecomposition& x);
BigInt total_dim(const OstarDecomposition& x);

/// ψ applied summand by summand.
UnDecomposition psi(const OstarDecomposition& x);

/// The fundamental corepresentation e_1·tau of O_n*.
GroupElement fundamental_Ostar(int n);
/// v = (1,0,…,0) and v̄ = (0,…,0,-1) of U_n.
Weight fundamental_Un(int n);
Weight antifundamental_Un(int n);

/// u^{⊗k} for O_n*.
OstarDecomposition decompose_power_Ostar(int n, int k, const Limits& limits = Limits::from_env());
/// v ⊗ v̄ ⊗ v ⊗ … (k factors) for U_n.
UnDecomposition decompose_power_Un_alternating(int n, int k,
                                               const Limits& limits = Limits::from_env());

/// dim Hom(x, y) = Σ mult_x(λ) mult_y(λ).
std::int64_t hom_dimension(const UnDecomposition& x, const UnDecomposition& y);

/// {"summands":[{"weight":[…],"sector":"tau","mult":1,"dim":15}],"total_dim":…}
nlohmann::json to_json(const OstarDecomposition& x);
nlohmann::json to_json(const UnDecomposition& x);

/// A BigInt as a JSON number when it fits in 64 bits, else a decimal string.
nlohmann::json big_to_json(const BigInt& v);

}  // namespace ostar::fusion
