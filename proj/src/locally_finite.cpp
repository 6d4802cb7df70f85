#include "ends/locally_finite.hpp"

namespace ends {

namespace {

void check_pairs(const AscendingUnionGroup& au, const Element& g, std::span<const Element> hs,
                 BiInvarianceVerdict& out) {
  const int lg = au.level(g);
  for (const auto& h : hs) {
    const int lh = au.level(h);
    if (lh <= lg) continue;
    ++out.checked;
    if (au.level(au.multiply(g, h)) != lh || au.level(au.multiply(h, g)) != lh) {
      if (out.holds) out.witness = std::make_pair(g, h);
      out.holds = false;
    }
  }
}

}  // namespace

int level(const Group& g, const Element& x) { return as<AscendingUnionGroup>(g).level(x); }

LevelFunction::LevelFunction(GroupPtr g) : group_(std::move(g)), union_(&as<AscendingUnionGroup>(*group_)) {}

std::uint64_t LevelFunction::fibre_size(int n) const {
  return union_->level_size(n) - (n > 1 ? union_->level_size(n - 1) : 0);
}

BiInvarianceVerdict verify_bi_invariance(const GroupPtr& g, const Element& x, int radius, std::size_t max_elements) {
  const auto& au = as<AscendingUnionGroup>(*g);
  g->require(x);
  BiInvarianceVerdict out;
  out.depth = au.depth();
  if (radius < 0) {
    const auto all = au.elements();
    check_pairs(au, x, all, out);
  } else {
    const Ball ball(g, radius, max_elements);
    check_pairs(au, x, ball.elements(), out);
  }
  return out;
}

BiInvarianceVerdict verify_bi_invariance_exhaustive(const GroupPtr& g) {
  const auto& au = as<AscendingUnionGroup>(*g);
  BiInvarianceVerdict out;
  out.depth = au.depth();
  const auto all = au.elements();
  for (const auto& x : all) check_pairs(au, x, all, out);
  return out;
}

SubsetPtr levelset(const GroupPtr& g, const NatSet& a) { return level_set(g, a); }

}  // namespace ends
