#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ends/group.hpp"

namespace ends {

/// A subgroup H of G with decidable membership and computable right
/// cosets Hg: G itself, the trivial subgroup, or one factor of a free
/// product.
class Subgroup {
 public:
  enum class Kind { Whole, Trivial, Factor };

  static Subgroup whole(GroupPtr g);
  static Subgroup trivial(GroupPtr g);
  /// Factor `index` (0-based) of a free product.
  static Subgroup factor(GroupPtr g, int index);

  Kind kind() const { return kind_; }
  int factor_index() const { return factor_; }
  const GroupPtr& group() const { return group_; }

  bool contains(const Element& g) const;
  /// Canonical representative of the right coset Hg.
  Element coset_key(const Element& g) const;
  bool is_finite() const;

  /// H as a marked group in its own right (G for Whole, the factor for
  /// Factor); nullptr for Trivial.
  GroupPtr marked() const;
  /// Image in G of an element of marked().
  Element embed(const Element& h) const;
  /// Ball generators of marked(), embedded in G.
  std::vector<Element> generators() const;
  /// Elements of H of length exactly r in marked()'s metric, embedded in G.
  std::vector<Element> sphere(int r) const;

  /// "whole", "trivial" or "factor(i)" with i 1-based.
  std::string describe() const;

 private:
  Subgroup(GroupPtr g, Kind kind, int factor) : group_(std::move(g)), kind_(kind), factor_(factor) {}

  GroupPtr group_;
  Kind kind_;
  int factor_;
};

}  // namespace ends
