#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ends/subset.hpp"

namespace ends {

/// An eventually periodic end of a free group: the left-infinite reduced
/// word …ppp·t, the limit of pⁿt. Stored with the shortest tail and the
/// shortest period, which makes the representation unique.
class FreeGroupEnd {
 public:
  /// The end of …ppp·t for any words t and p with p nontrivial.
  FreeGroupEnd(GroupPtr g, const Word& tail, const Word& period);

  const GroupPtr& group() const { return group_; }
  const Word& tail() const { return tail_; }
  const Word& period() const { return period_; }
  /// i-th letter counted from the right (0 is the letter nearest the group).
  Letter letter(std::size_t i) const;
  /// The rightmost n letters, in reading order.
  Word suffix(std::size_t n) const;
  /// The vertex at distance n along the ray from the identity.
  Element approximant(int n) const;
  bool in_cone(const Word& w) const { return suffix(w.size()) == w; }
  /// "tail|period" in compact letters, e.g. "Ab|a" for …aaa·Ab.
  std::string literal() const;

  bool operator==(const FreeGroupEnd& o) const;

 private:
  GroupPtr group_;
  Word tail_;
  Word period_;
};

FreeGroupEnd parse_end(const GroupPtr& g, std::string_view literal);
/// Seeded end with tail of length ≤ max_tail and period of length 1..max_period.
FreeGroupEnd random_end(const GroupPtr& g, std::mt19937_64& rng, int max_tail = 6, int max_period = 3);

/// Length of the longest common suffix; nullopt stands for ∞ (equal ends).
std::optional<int> common_suffix_depth(const FreeGroupEnd& a, const FreeGroupEnd& b);
/// exp(−D) with D the common suffix depth; 0 for equal ends.
double end_distance(const FreeGroupEnd& a, const FreeGroupEnd& b);
FreeGroupEnd right_translate_end(const FreeGroupEnd& w, const Element& g);

/// Clopen subset of the end space: a finite union of cones, stored as its
/// maximal cones (an antichain under the suffix order, siblings merged).
class ConeSet {
 public:
  static ConeSet none(GroupPtr g);
  static ConeSet all(GroupPtr g);
  static ConeSet cone(GroupPtr g, Word w);
  static ConeSet of(GroupPtr g, std::vector<Word> cones);

  const GroupPtr& group() const { return group_; }
  const std::vector<Word>& cones() const { return cones_; }
  bool contains(const FreeGroupEnd& w) const;
  /// Whether cone(v) ⊆ this.
  bool covers(const Word& v) const;

  ConeSet operator|(const ConeSet& o) const;
  ConeSet operator&(const ConeSet& o) const;
  ConeSet operator^(const ConeSet& o) const;
  ConeSet complement() const;
  ConeSet right_translate(const Element& g) const;
  bool operator==(const ConeSet& o) const { return cones_ == o.cones_; }

  /// The matching subset of the group (a union of suffix cones).
  SubsetPtr to_subset() const;
  std::string describe() const;

 private:
  ConeSet(GroupPtr g, std::vector<Word> cones);
  void complement_below(const Word& w, std::vector<Word>& out) const;

  GroupPtr group_;
  std::vector<Word> cones_;
};

/// Two disjoint subcones of cone(w) one level deeper; rank ≥ 2.
std::pair<Word, Word> split_cone(const GroupPtr& g, const Word& w);

struct HolderEstimate {
  std::size_t pairs = 0;
  /// Pairs with positive depth in both markings, which carry a ratio.
  std::size_t used = 0;
  double ratio_min = 0;
  double ratio_max = 0;
  /// d₂ ≤ d₁^α and d₁ ≤ d₂^β over the sample.
  double alpha = 0;
  double beta = 0;
};

/// Re-expresses an end in another basis, given as words in the standard
/// generators.
FreeGroupEnd change_basis(const FreeGroupEnd& w, const std::vector<Word>& basis);

/// Compares the end metrics of two bases (words in the standard generators)
/// on a sample of end pairs. Equal pairs are dropped; fewer than 10
/// remaining is a precondition error.
HolderEstimate holder_compare(const GroupPtr& g, const std::vector<Word>& basis1, const std::vector<Word>& basis2,
                              const std::vector<std::pair<FreeGroupEnd, FreeGroupEnd>>& sample);

}  // namespace ends
