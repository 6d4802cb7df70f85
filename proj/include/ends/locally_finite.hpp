#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "ends/commensurated.hpp"

namespace ends {

/// ℓ(g) = min{n : g ∈ G_n} on an ascending union.
int level(const Group& g, const Element& x);

class LevelFunction {
 public:
  explicit LevelFunction(GroupPtr g);
  int operator()(const Element& x) const { return union_->level(x); }
  const GroupPtr& group() const { return group_; }
  int depth() const { return union_->depth(); }
  /// |ℓ⁻¹(n)| = |G_n| − |G_{n−1}|.
  std::uint64_t fibre_size(int n) const;

 private:
  GroupPtr group_;
  const AscendingUnionGroup* union_;
};

struct BiInvarianceVerdict {
  bool holds = true;
  /// Pairs (g, h) with ℓ(h) > ℓ(g) that were checked.
  std::uint64_t checked = 0;
  /// First (g, h) with ℓ(gh) or ℓ(hg) different from ℓ(h).
  std::optional<std::pair<Element, Element>> witness;
  /// Truncation depth N the check quantified over.
  int depth = 0;
};

/// ∀h with ℓ(h) > ℓ(g): ℓ(gh) = ℓ(hg) = ℓ(h), over ball(R), or over the
/// whole truncation G_N when radius < 0.
BiInvarianceVerdict verify_bi_invariance(const GroupPtr& g, const Element& x, int radius = -1,
                                         std::size_t max_elements = kDefaultMaxElements);

/// The same check for every g in G_N against every h in G_N.
BiInvarianceVerdict verify_bi_invariance_exhaustive(const GroupPtr& g);

/// ℓ⁻¹(A).
SubsetPtr levelset(const GroupPtr& g, const NatSet& a);

}  // namespace ends
