#pragma once

// The diagonal group L_n realised inside Z^n ⋊ Z_2, together with U_n
// weights and weight multisets.
//
// An element is written (λ)·x with x ∈ {circ, tau} and tau acting on Z^n by
// negation, so (λ·x)(μ·y) = (λ + x·μ)·(xy).  L_n is the subgroup generated
// by g_i = e_i·tau; it consists of the circ elements with Σλ = 0 and the tau
// elements with Σλ = 1.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "ostar/common.hpp"

namespace ostar::weights {

/// An integer vector of fixed length n.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t n) : coords_(n, 0) {}
  explicit Weight(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static Weight zero(int n) { return Weight(static_cast<std::size_t>(n)); }
  /// e_i, 1-based.
  static Weight unit(int n, int i);

  std::size_t size() const { return coords_.size(); }
  int n() const { return static_cast<int>(coords_.size()); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  std::int64_t sum() const;
  std::int64_t abs_sum() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;

  /// "(1,1,-2)"
  std::string to_string() const;

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

/// Parses "1,1,-2" (surrounding parentheses and spaces allowed).
Weight parse_weight(const std::string& text);

enum class Sector { circ, tau };

std::string to_string(Sector s);
Sector parse_sector(const std::string& s);
Sector operator*(Sector a, Sector b);

struct GroupElement {
  Weight lambda;
  Sector sector = Sector::circ;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  std::string to_string() const;
};

enum class Membership { strict, permissive };

bool in_L(const GroupElement& a);
/// Throws std::domain_error when `a` is outside L_n.
void validate(const GroupElement& a);

/// The sector forced on an element of L_n with this ψ-image: circ for
/// coordinate sum 0, tau for sum 1; anything else throws std::domain_error.
Sector infer_sector(const Weight& w);
GroupElement lift(const Weight& w);

GroupElement identity(int n);
/// g_i = e_i·tau, 1-based.
GroupElement generator(int n, int i);

GroupElement multiply(const GroupElement& a, const GroupElement& b,
                      Membership mode = Membership::strict);
GroupElement inverse(const GroupElement& a, Membership mode = Membership::strict);

/// Product g_{w_1} … g_{w_m} computed by repeated multiplication.
GroupElement eval_word(int n, const std::vector<int>& word);
/// Same element from occurrence counts: odd positions minus even positions,
/// sector = parity of the length.
GroupElement eval_word_closed_form(int n, const std::vector<int>& word);

/// Forgets the sector.
Weight psi(const GroupElement& a);

bool is_dominant(const Weight& w);
/// a ≥ b in the dominance order: Σ(a-b) = 0 and every proper partial sum of
/// a-b is nonnegative.  Throws std::invalid_argument on length mismatch.
bool is_positive_diff(const Weight& a, const Weight& b);
/// a ≥ b in L, i.e. a·b^{-1} ∈ L_+.
bool order_L(const GroupElement& a, const GroupElement& b);

using WeightMultiset = std::map<Weight, std::int64_t>;
using GroupMultiset = std::map<GroupElement, std::int64_t>;

std::int64_t total_multiplicity(const WeightMultiset& m);
std::int64_t total_multiplicity(const GroupMultiset& m);

/// Weights of the U_n irreducible with highest weight `lambda`, one per
/// Gelfand-Tsetlin pattern.  Throws std::invalid_argument when `lambda` is
/// not dominant and ResourceLimit past `limits.max_patterns` patterns.
WeightMultiset weight_multiset_Un(const Weight& lambda, const Limits& limits = Limits::from_env());

/// Pullback through ψ of the U_n multiset, every weight in the sector of `lw`.
GroupMultiset weight_multiset_Ostar(const GroupElement& lw,
                                    const Limits& limits = Limits::from_env());

/// Elements of `m` not strictly below any other element (order_L).
std::vector<GroupElement> maximal_elements(const GroupMultiset& m);

void to_json(nlohmann::json& j, const Weight& w);
void to_json(nlohmann::json& j, const GroupElement& g);
void from_json(const nlohmann::json& j, GroupElement& g);

}  // namespace ostar::weights
