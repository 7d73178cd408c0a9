#pragma once

// Brauer pairings on k upper and l lower points.
//
// Points are numbered 1..k+l counterclockwise starting from the bottom left:
// the lower row left to right gets 1..l, the upper row right to left gets
// l+1..l+k.  Every operation in this header speaks that numbering.

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace ostar::diagrams {

/// The three diagram families, ordered by inclusion N ⊂ E ⊂ P.
enum class Family { P, E, N };

/// Finest family containing a given pairing.
enum class DiagramClass { P_only, E_not_N, N };

Family parse_family(const std::string& s);
std::string to_string(Family f);
std::string to_string(DiagramClass c);
bool belongs_to(DiagramClass c, Family f);

class Pairing {
 public:
  /// The empty pairing on (0,0).
  Pairing() = default;

  /// `partner[a-1]` is the 1-based point joined to point a.  Throws
  /// std::invalid_argument unless `partner` is a fixed-point-free involution
  /// on 1..k+l.
  Pairing(int k, int l, std::vector<int> partner);

  static Pairing from_pairs(int k, int l,
                            const std::vector<std::pair<int, int>>& pairs);

  /// Vertical strings joining upper position j to lower position j.
  static Pairing identity(int k);
  /// The single string on (2,0).
  static Pairing cup();
  /// The single string on (0,2).
  static Pairing cap();
  /// The transposition on (2,2): {{1,3},{2,4}}.
  static Pairing crossing();
  /// The reversal e_i⊗e_j⊗e_k -> e_k⊗e_j⊗e_i on (3,3): {{1,4},{2,5},{3,6}}.
  static Pairing half_liberation();

  int upper() const { return k_; }
  int lower() const { return l_; }
  int size() const { return k_ + l_; }
  int strings() const { return (k_ + l_) / 2; }

  int partner(int point) const;
  const std::vector<int>& partners() const { return partner_; }

  /// Strings as (a,b) with a<b, sorted lexicographically.
  std::vector<std::pair<int, int>> pairs() const;

  /// Circle point of the j-th lower point (1-based, left to right).
  int lower_point(int position) const;
  /// Circle point of the j-th upper point (1-based, left to right).
  int upper_point(int position) const;
  bool is_upper(int point) const { return point > l_; }
  /// Left-to-right position of a circle point within its row.
  int position(int point) const;

  std::string to_string() const;

  friend auto operator<=>(const Pairing&, const Pairing&) = default;
  friend bool operator==(const Pairing&, const Pairing&) = default;

 private:
  int k_ = 0;
  int l_ = 0;
  std::vector<int> partner_;
};

/// Deduplicated set of pairings of one signature.
class DiagramSet {
 public:
  DiagramSet() = default;
  DiagramSet(int k, int l) : k_(k), l_(l) {}

  int upper() const { return k_; }
  int lower() const { return l_; }

  /// Returns false when the pairing was already present.  Throws on a
  /// signature mismatch.
  bool insert(const Pairing& p);
  bool contains(const Pairing& p) const { return items_.count(p) != 0; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  friend bool operator==(const DiagramSet&, const DiagramSet&) = default;

 private:
  int k_ = 0;
  int l_ = 0;
  std::set<Pairing> items_;
};

using Signature = std::pair<int, int>;

DiagramSet enumerate(int k, int l, Family family);

/// Number of strings interleaving the string through `point`.
int crossing_count(const Pairing& p, int point);

// The three equivalent characterisations of the E family.
bool every_string_evenly_crossed(const Pairing& p);
bool every_gap_even(const Pairing& p);
bool alternating_labels_matched(const Pairing& p);
bool is_noncrossing(const Pairing& p);

DiagramClass classify(const Pairing& p);

/// Joins points i and i+1 (mod k+l) with a semicircle and removes them.
Pairing cap(const Pairing& p, int i);

/// Moves the top-left point to the bottom-left corner; with no upper points
/// it relabels the circle cyclically.  Point a becomes a+1, point k+l
/// becomes 1.
Pairing rotate(const Pairing& p);

/// Rotates until no upper point remains.
Pairing rotate_to_lower_row(const Pairing& p);

struct Composite {
  Pairing pairing;
  int loops = 0;
};

/// Stacks p (on (k,m)) above q (on (m,l)), gluing the lower row of p to
/// the upper row of q position by position.  Closed loops are counted.
Composite compose(const Pairing& q, const Pairing& p);

/// Places q to the right of p.
Pairing tensor(const Pairing& p, const Pairing& q);

/// Upside-down turning: (k,l) -> (l,k).
Pairing involute(const Pairing& p);

/// Bounded closure of {seed} ∪ N under compose, tensor, involute, rotate
/// and cap.  Only diagrams with at most `max_points` points are retained.
std::map<Signature, DiagramSet> generate(const Pairing& seed, int max_points);

void to_json(nlohmann::json& j, const Pairing& p);
void from_json(const nlohmann::json& j, Pairing& p);

}  // namespace ostar::diagrams
