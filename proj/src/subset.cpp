#include "ends/subset.hpp"

#include <algorithm>
#include <numeric>

#include "ends/ball.hpp"

namespace ends {

namespace {

std::string element_list(const Group& g, const std::vector<Element>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ", ";
    out += g.format(xs[i]);
  }
  return out + "}";
}

int max_length(const Group& g, const std::vector<Element>& xs) {
  int r = -1;
  for (const auto& x : xs) r = std::max(r, g.word_length(x));
  return r;
}

SupportBound radius_plus(int r, const Group& g, const Element& s) {
  if (r < 0) return SupportBound::none();
  return SupportBound::radius(r + g.word_length(s));
}

int level_of(const Group& g, const Element& x) { return as<AscendingUnionGroup>(g).level(x); }

// Region containing g·B, for B the region described by `bound`.
SupportBound shifted(const SupportBound& bound, const Group& grp, const Element& g) {
  SupportBound out = bound;
  if (out.word_radius >= 0) out.word_radius += grp.word_length(g);
  if (out.level > 0) out.level = std::max(out.level, level_of(grp, g));
  return out;
}

void require_same_group(const Group& g, const SubsetSpec& a) {
  if (a.group()->id() != g.id()) {
    throw DomainError("set over " + a.group()->spec() + " used where " + g.spec() + " is expected");
  }
}

// Max word length in G over the elements of a finite subgroup.
int finite_subgroup_radius(const Subgroup& h) {
  if (h.kind() == Subgroup::Kind::Trivial) return 0;
  const GroupPtr m = h.marked();
  const auto order = m->order();
  if (!order) throw DomainError("subgroup is infinite");
  const Ball b(m, static_cast<int>(std::min<std::uint64_t>(*order, 1U << 20)));
  int r = 0;
  for (const auto& x : b.elements()) r = std::max(r, h.group()->word_length(h.embed(x)));
  return r;
}

}  // namespace

std::vector<Element> canonical_order(const Group& g, std::vector<Element> elements) {
  for (const auto& x : elements) g.require(x);
  std::vector<std::pair<std::pair<int, std::string>, Element>> keyed;
  for (auto& x : elements) keyed.push_back({{g.word_length(x), g.format(x)}, std::move(x)});
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Element> out;
  for (auto& [k, x] : keyed) {
    if (out.empty() || !(out.back() == x)) out.push_back(std::move(x));
  }
  return out;
}

// ---------------------------------------------------------------- SupportBound

bool SupportBound::contains(const Group& g, const Element& x) const {
  if (word_radius >= 0 && g.word_length(x) <= word_radius) return true;
  return level > 0 && level_of(g, x) <= level;
}

SupportBound SupportBound::merged(const SupportBound& o) const {
  return {std::max(word_radius, o.word_radius), std::max(level, o.level)};
}

std::string SupportBound::describe() const {
  if (is_empty()) return "empty";
  std::string out;
  if (word_radius >= 0) out = "ball(" + std::to_string(word_radius) + ")";
  if (level > 0) out += std::string(out.empty() ? "" : " + ") + "level<=" + std::to_string(level);
  return out;
}

std::optional<SupportBound> SubsetSpec::translation_support(const Element&, Side) const { return std::nullopt; }

// ---------------------------------------------------------------- Finite / Cofinite

FiniteSet::FiniteSet(GroupPtr g, std::vector<Element> elements)
    : SubsetSpec(g), elements_(canonical_order(*g, std::move(elements))) {
  members_.insert(elements_.begin(), elements_.end());
  radius_ = max_length(*g, elements_);
}

bool FiniteSet::contains(const Element& g) const {
  group()->require(g);
  return members_.contains(g);
}

std::string FiniteSet::describe() const {
  return elements_.empty() ? "empty" : "finite" + element_list(*group(), elements_);
}

std::optional<SupportBound> FiniteSet::translation_support(const Element& s, Side) const {
  return radius_plus(radius_, *group(), s);
}

CofiniteSet::CofiniteSet(GroupPtr g, std::vector<Element> excluded)
    : SubsetSpec(g), excluded_(canonical_order(*g, std::move(excluded))) {
  members_.insert(excluded_.begin(), excluded_.end());
  radius_ = max_length(*g, excluded_);
}

bool CofiniteSet::contains(const Element& g) const {
  group()->require(g);
  return !members_.contains(g);
}

std::string CofiniteSet::describe() const {
  return excluded_.empty() ? "all" : "cofinite" + element_list(*group(), excluded_);
}

std::optional<SupportBound> CofiniteSet::translation_support(const Element& s, Side) const {
  return radius_plus(radius_, *group(), s);
}

std::optional<int> CofiniteSet::finite_radius() const {
  if (const auto order = group()->order()) {
    // A cofinite subset of a finite group is finite; bound it by the diameter.
    const Ball b(group(), static_cast<int>(std::min<std::uint64_t>(*order, 1U << 20)));
    return b.length(b.size() - 1);
  }
  return std::nullopt;
}

std::string CofiniteSet::describe_modulo_finite() const {
  return group()->order() ? "empty" : "all";
}

// ---------------------------------------------------------------- SuffixCone

SuffixCone::SuffixCone(GroupPtr g, Element w) : SubsetSpec(g), w_(std::move(w)) {
  g->require(w_);
  if (g->kind() != GroupKind::Free && g->kind() != GroupKind::FreeProduct) {
    throw DomainError("suffix cones need a free group or a free product, got " + g->spec());
  }
}

bool SuffixCone::contains(const Element& g) const {
  group()->require(g);
  if (group()->kind() == GroupKind::Free) {
    const auto& f = as<FreeGroup>(*group());
    const auto x = f.letters(g);
    const auto w = f.letters(w_);
    return x.size() >= w.size() && std::equal(w.begin(), w.end(), x.end() - static_cast<long>(w.size()));
  }
  const auto& fp = as<FreeProductGroup>(*group());
  const auto x = fp.syllables(g);
  const auto w = fp.syllables(w_);
  return x.size() >= w.size() && std::equal(w.begin(), w.end(), x.end() - static_cast<long>(w.size()));
}

std::string SuffixCone::describe() const { return "cone(" + group()->format(w_) + ")"; }

std::optional<SupportBound> SuffixCone::translation_support(const Element& s, Side side) const {
  const Group& g = *group();
  if (g.is_identity(w_) || g.is_identity(s)) return SupportBound::none();
  if (side == Side::Right) {
    // Only in Z do right and left translates agree.
    if (g.kind() == GroupKind::Free && as<FreeGroup>(g).rank() == 1) {
      return SupportBound::radius(g.word_length(w_) + g.word_length(s));
    }
    return std::nullopt;
  }
  // Left multiplication by s rewrites at most |s| letters (one syllable)
  // at the front, so long elements keep their tail.
  if (g.kind() == GroupKind::FreeProduct && as<FreeProductGroup>(g).syllable_count(s) > 1) return std::nullopt;
  return SupportBound::radius(g.word_length(w_) + g.word_length(s));
}

// ---------------------------------------------------------------- CosetUnion

CosetUnion::CosetUnion(Subgroup h, std::vector<Element> representatives) : SubsetSpec(h.group()), h_(std::move(h)) {
  for (auto& r : representatives) r = h_.coset_key(r);
  keys_ = canonical_order(*group(), std::move(representatives));
  key_set_.insert(keys_.begin(), keys_.end());
}

bool CosetUnion::contains(const Element& g) const { return key_set_.contains(h_.coset_key(g)); }

std::string CosetUnion::describe() const {
  return "coset(" + h_.describe() + "; " + element_list(*group(), keys_) + ")";
}

std::optional<SupportBound> CosetUnion::translation_support(const Element& s, Side side) const {
  if (h_.kind() == Subgroup::Kind::Whole || keys_.empty()) return SupportBound::none();
  if (side == Side::Left && h_.contains(s)) return SupportBound::none();
  if (const auto r = finite_radius()) return radius_plus(*r, *group(), s);
  return std::nullopt;
}

std::optional<int> CosetUnion::finite_radius() const {
  if (keys_.empty()) return -1;
  if (!h_.is_finite()) return std::nullopt;
  return max_length(*group(), keys_) + finite_subgroup_radius(h_);
}

// ---------------------------------------------------------------- FreeProductSuffixSet

FreeProductSuffixSet::FreeProductSuffixSet(GroupPtr g, int factor, std::shared_ptr<const SubsetSpec> target)
    : SubsetSpec(g), factor_(factor), target_(std::move(target)) {
  const auto& fp = as<FreeProductGroup>(*g);
  if (factor < 0 || factor >= static_cast<int>(fp.factors().size())) {
    throw DomainError("factor index " + std::to_string(factor + 1) + " out of range for " + g->spec());
  }
  require_same_group(fp.factor(factor), *target_);
}

bool FreeProductSuffixSet::contains(const Element& g) const {
  group()->require(g);
  const auto& fp = as<FreeProductGroup>(*group());
  const auto syl = fp.syllables(g);
  if (!syl.empty() && syl.back().factor == factor_) return target_->contains(syl.back().element);
  return target_->contains(fp.factor(factor_).identity());
}

std::string FreeProductSuffixSet::describe() const {
  return "suffix(factor(" + std::to_string(factor_ + 1) + "); " + target_->describe() + ")";
}

std::optional<SupportBound> FreeProductSuffixSet::translation_support(const Element& s, Side side) const {
  if (side == Side::Right) return std::nullopt;
  const auto& fp = as<FreeProductGroup>(*group());
  const auto syl = fp.syllables(s);
  if (syl.empty()) return SupportBound::none();
  if (syl.size() > 1) return std::nullopt;
  // Another factor never reaches the last syllable of g, unless g is
  // itself a single syllable of that factor, whose suffix stays trivial.
  if (syl[0].factor != factor_) return SupportBound::none();
  // s ∈ H only moves elements of H, and there the set is M.
  const Group& h = fp.factor(factor_);
  if (h.order()) return SupportBound::radius(1);
  const auto inner = target_->translation_support(syl[0].element, Side::Left);
  if (!inner || inner->level > 0) return std::nullopt;
  return SupportBound::radius(inner->word_radius);
}

std::string FreeProductSuffixSet::describe_modulo_finite() const {
  const auto& fp = as<FreeProductGroup>(*group());
  const Group& h = fp.factor(factor_);
  // The fibre of suf_H over 1 is infinite, and for a finite factor so is
  // every fibre, so only H-finite differences away from 1 disappear.
  std::string inner;
  if (const auto order = h.order()) {
    const auto hp = fp.factors()[static_cast<std::size_t>(factor_)];
    const Ball b(hp, static_cast<int>(std::min<std::uint64_t>(*order, 1U << 20)));
    std::vector<Element> members;
    for (const auto& x : b.elements()) {
      if (target_->contains(x)) members.push_back(x);
    }
    inner = FiniteSet(hp, members).describe();
  } else {
    inner = target_->describe_modulo_finite() + (target_->contains(h.identity()) ? "; +1" : "; -1");
  }
  return "suffix(factor(" + std::to_string(factor_ + 1) + "); " + inner + ")";
}

// ---------------------------------------------------------------- LevelSet / LengthSet

LevelSet::LevelSet(GroupPtr g, NatSet levels) : SubsetSpec(g), levels_(std::move(levels)) {
  (void)as<AscendingUnionGroup>(*g);
}

bool LevelSet::contains(const Element& g) const {
  group()->require(g);
  return levels_.contains(level_of(*group(), g));
}

std::string LevelSet::describe() const { return "levels(" + levels_.describe() + ")"; }

std::optional<SupportBound> LevelSet::translation_support(const Element& s, Side) const {
  // ℓ(sx) = ℓ(xs) = ℓ(x) as soon as ℓ(x) > ℓ(s).
  if (group()->is_identity(s)) return SupportBound::none();
  return SupportBound{-1, level_of(*group(), s)};
}

std::optional<int> LevelSet::finite_radius() const {
  if (levels_ == NatSet::none()) return -1;
  return std::nullopt;
}

namespace {

std::string levels_modulo_finite(const NatSet& a) {
  const NatSet p = a.periodic_part();
  if (p == NatSet::none()) return "empty";
  if (p == NatSet::all()) return "all";
  return "levels(" + p.describe() + ")";
}

// A Boolean tree over level sets is itself a level set; fold it so that
// equal classes get equal keys.
std::optional<NatSet> fold_levels(const SubsetSpec& a) {
  if (const auto* l = dynamic_cast<const LevelSet*>(&a)) return l->levels();
  const auto* b = dynamic_cast<const BooleanSet*>(&a);
  if (!b) return std::nullopt;
  std::vector<NatSet> parts;
  for (const auto& c : b->children()) {
    auto f = fold_levels(*c);
    if (!f) return std::nullopt;
    parts.push_back(std::move(*f));
  }
  NatSet out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    switch (b->op()) {
      case BooleanSet::Op::Union: out = out | parts[i]; break;
      case BooleanSet::Op::Intersection: out = out & parts[i]; break;
      default: out = out ^ parts[i]; break;
    }
  }
  if (b->op() == BooleanSet::Op::Complement) out = out.complement();
  return out;
}

}  // namespace

std::string LevelSet::describe_modulo_finite() const { return levels_modulo_finite(levels_); }

LengthSet::LengthSet(GroupPtr g, NatSet lengths) : SubsetSpec(std::move(g)), lengths_(std::move(lengths)) {}

bool LengthSet::contains(const Element& g) const { return lengths_.contains(group()->word_length(g)); }

std::string LengthSet::describe() const { return "lengths(" + lengths_.describe() + ")"; }

std::optional<SupportBound> LengthSet::translation_support(const Element& s, Side) const {
  if (lengths_.is_finite() || lengths_.is_cofinite()) {
    return radius_plus(static_cast<int>(lengths_.exception_bound()), *group(), s);
  }
  return std::nullopt;
}

std::optional<int> LengthSet::finite_radius() const {
  if (lengths_.is_finite()) return static_cast<int>(lengths_.exception_bound());
  return std::nullopt;
}

std::string LengthSet::describe_modulo_finite() const {
  return "lengths(" + lengths_.periodic_part().describe() + ")";
}

// ---------------------------------------------------------------- HalfSpace

HalfSpace::HalfSpace(GroupPtr g, std::vector<long> coefficients, long threshold)
    : SubsetSpec(g), coefficients_(std::move(coefficients)), threshold_(threshold) {
  int rank = 0;
  if (g->kind() == GroupKind::FreeAbelian) {
    rank = as<FreeAbelianGroup>(*g).rank();
  } else if (g->kind() == GroupKind::Free && as<FreeGroup>(*g).rank() == 1) {
    rank = 1;
  } else {
    throw DomainError("half spaces need a free abelian group, got " + g->spec());
  }
  if (static_cast<int>(coefficients_.size()) != rank) {
    throw DomainError("half space needs " + std::to_string(rank) + " coefficients");
  }
}

std::vector<long> HalfSpace::exponents(const Element& g) const {
  group()->require(g);
  if (group()->kind() == GroupKind::FreeAbelian) {
    const auto e = as<FreeAbelianGroup>(*group()).exponents(g);
    return {e.begin(), e.end()};
  }
  long sum = 0;
  for (Letter x : as<FreeGroup>(*group()).letters(g)) sum += x > 0 ? 1 : -1;
  return {sum};
}

bool HalfSpace::contains(const Element& g) const {
  const auto v = exponents(g);
  return std::inner_product(v.begin(), v.end(), coefficients_.begin(), 0L) >= threshold_;
}

std::string HalfSpace::describe() const {
  std::string out = "halfspace([";
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    out += (i ? ", " : "") + std::to_string(coefficients_[i]);
  }
  return out + "]; " + std::to_string(threshold_) + ")";
}

std::optional<SupportBound> HalfSpace::translation_support(const Element& s, Side) const {
  const auto nonzero = std::count_if(coefficients_.begin(), coefficients_.end(), [](long c) { return c != 0; });
  if (nonzero == 0 || group()->is_identity(s)) return SupportBound::none();
  if (coefficients_.size() > 1) return std::nullopt;
  // The difference lies where |c·x − b| ≤ |c|·|s|.
  const long c = std::abs(coefficients_[0]);
  const long reach = (std::abs(threshold_) + c - 1) / c;
  return radius_plus(static_cast<int>(reach), *group(), s);
}

// ---------------------------------------------------------------- TranslatedSet

TranslatedSet::TranslatedSet(std::shared_ptr<const SubsetSpec> base, Element g, Side side)
    : SubsetSpec(base->group()), base_(std::move(base)), g_(std::move(g)), side_(side) {
  group()->require(g_);
  g_inverse_ = group()->invert(g_);
}

bool TranslatedSet::contains(const Element& x) const {
  const Group& grp = *group();
  return base_->contains(side_ == Side::Left ? grp.multiply(g_inverse_, x) : grp.multiply(x, g_inverse_));
}

std::string TranslatedSet::describe() const {
  return std::string(side_ == Side::Left ? "lshift(" : "rshift(") + group()->format(g_) + "; " + base_->describe() +
         ")";
}

std::optional<SupportBound> TranslatedSet::translation_support(const Element& s, Side side) const {
  const Group& grp = *group();
  // s(gA) △ gA = g(g⁻¹sg·A △ A) and (Ag)s △ Ag = (A·gsg⁻¹ △ A)g; the
  // mixed cases need no conjugation.
  Element t = s;
  if (side == side_) t = side == Side::Left ? grp.multiply(g_inverse_, grp.multiply(s, g_)) : grp.multiply(g_, grp.multiply(s, g_inverse_));
  const auto b = base_->translation_support(t, side);
  if (!b) return std::nullopt;
  return shifted(*b, grp, g_);
}

std::optional<int> TranslatedSet::finite_radius() const {
  const auto r = base_->finite_radius();
  if (!r) return std::nullopt;
  if (*r < 0) return -1;
  return *r + group()->word_length(g_);
}

std::string TranslatedSet::describe_modulo_finite() const {
  return std::string(side_ == Side::Left ? "lshift(" : "rshift(") + group()->format(g_) + "; " +
         base_->describe_modulo_finite() + ")";
}

// ---------------------------------------------------------------- BooleanSet

BooleanSet::BooleanSet(Op op, std::vector<std::shared_ptr<const SubsetSpec>> children)
    : SubsetSpec(children.empty() ? nullptr : children.front()->group()), op_(op), children_(std::move(children)) {
  if (children_.empty()) throw DomainError("Boolean set needs at least one operand");
  if (op_ == Op::Complement && children_.size() != 1) throw DomainError("complement takes one operand");
  if (op_ == Op::SymmetricDifference && children_.size() != 2) throw DomainError("xor takes two operands");
  for (const auto& c : children_) require_same_group(*group(), *c);
}

bool BooleanSet::contains(const Element& g) const {
  switch (op_) {
    case Op::Union:
      return std::any_of(children_.begin(), children_.end(), [&](const auto& c) { return c->contains(g); });
    case Op::Intersection:
      return std::all_of(children_.begin(), children_.end(), [&](const auto& c) { return c->contains(g); });
    case Op::Complement:
      return !children_[0]->contains(g);
    case Op::SymmetricDifference:
      return children_[0]->contains(g) != children_[1]->contains(g);
  }
  return false;
}

std::string BooleanSet::render(bool modulo_finite) const {
  static const char* const names[] = {"union", "inter", "not", "xor"};
  std::vector<std::string> parts;
  for (const auto& c : children_) parts.push_back(modulo_finite ? c->describe_modulo_finite() : c->describe());
  if (modulo_finite) {
    if (const auto folded = fold_levels(*this)) return levels_modulo_finite(*folded);
    // Light normalization so that equal classes tend to print equally.
    const std::string unit = op_ == Op::Intersection ? "all" : "empty";
    const std::string zero = op_ == Op::Intersection ? "empty" : "all";
    switch (op_) {
      case Op::Complement:
        if (parts[0] == "all") return "empty";
        if (parts[0] == "empty") return "all";
        break;
      case Op::Union:
      case Op::Intersection:
        if (std::find(parts.begin(), parts.end(), zero) != parts.end()) return zero;
        [[fallthrough]];
      case Op::SymmetricDifference:
        std::erase(parts, unit);
        std::sort(parts.begin(), parts.end());
        if (op_ != Op::SymmetricDifference) parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
        if (parts.empty()) return unit;
        if (parts.size() == 1) return parts[0];
        break;
    }
  }
  std::string out = names[static_cast<int>(op_)];
  out += '(';
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out + ")";
}

std::string BooleanSet::describe() const { return render(false); }

std::string BooleanSet::describe_modulo_finite() const { return render(true); }

std::optional<SupportBound> BooleanSet::translation_support(const Element& s, Side side) const {
  // Every operation is computed pointwise, so a point outside all the
  // children's differences keeps its membership.
  SupportBound out;
  for (const auto& c : children_) {
    const auto b = c->translation_support(s, side);
    if (!b) return std::nullopt;
    out = out.merged(*b);
  }
  return out;
}

std::optional<int> BooleanSet::finite_radius() const {
  std::vector<std::optional<int>> radii;
  for (const auto& c : children_) radii.push_back(c->finite_radius());
  switch (op_) {
    case Op::Union:
    case Op::SymmetricDifference: {
      int r = -1;
      for (const auto& x : radii) {
        if (!x) return std::nullopt;
        r = std::max(r, *x);
      }
      return r;
    }
    case Op::Intersection: {
      std::optional<int> r;
      for (const auto& x : radii) {
        if (x) r = r ? std::min(*r, *x) : *x;
      }
      return r;
    }
    case Op::Complement:
      return std::nullopt;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- EditedSet

EditedSet::EditedSet(std::shared_ptr<const SubsetSpec> base, std::vector<Element> added,
                     std::vector<Element> removed)
    : SubsetSpec(base->group()),
      base_(std::move(base)),
      added_(canonical_order(*group(), std::move(added))),
      removed_(canonical_order(*group(), std::move(removed))) {
  added_set_.insert(added_.begin(), added_.end());
  for (const auto& x : removed_) {
    if (added_set_.contains(x)) {
      throw DomainError("edit adds and removes the same element " + group()->format(x));
    }
    removed_set_.insert(x);
  }
  radius_ = std::max(max_length(*group(), added_), max_length(*group(), removed_));
}

bool EditedSet::contains(const Element& g) const {
  if (added_set_.contains(g)) return true;
  if (removed_set_.contains(g)) return false;
  return base_->contains(g);
}

std::string EditedSet::describe() const {
  std::string out = "edit(" + base_->describe();
  if (!added_.empty()) out += "; +" + element_list(*group(), added_);
  if (!removed_.empty()) out += "; -" + element_list(*group(), removed_);
  return out + ")";
}

std::optional<SupportBound> EditedSet::translation_support(const Element& s, Side side) const {
  const auto b = base_->translation_support(s, side);
  if (!b) return std::nullopt;
  return b->merged(radius_plus(radius_, *group(), s));
}

std::optional<int> EditedSet::finite_radius() const {
  const auto r = base_->finite_radius();
  if (!r) return std::nullopt;
  return std::max(*r, max_length(*group(), added_));
}

// ---------------------------------------------------------------- factories

SubsetPtr finite_set(GroupPtr g, std::vector<Element> elements) {
  return std::make_shared<FiniteSet>(std::move(g), std::move(elements));
}
SubsetPtr cofinite_set(GroupPtr g, std::vector<Element> excluded) {
  return std::make_shared<CofiniteSet>(std::move(g), std::move(excluded));
}
SubsetPtr empty_set(GroupPtr g) { return finite_set(std::move(g), {}); }
SubsetPtr whole_set(GroupPtr g) { return cofinite_set(std::move(g), {}); }
SubsetPtr suffix_cone(GroupPtr g, Element w) { return std::make_shared<SuffixCone>(std::move(g), std::move(w)); }
SubsetPtr coset_union(Subgroup h, std::vector<Element> representatives) {
  return std::make_shared<CosetUnion>(std::move(h), std::move(representatives));
}
SubsetPtr suffix_set(GroupPtr g, int factor, SubsetPtr target) {
  return std::make_shared<FreeProductSuffixSet>(std::move(g), factor, std::move(target));
}
SubsetPtr level_set(GroupPtr g, NatSet levels) { return std::make_shared<LevelSet>(std::move(g), std::move(levels)); }
SubsetPtr length_set(GroupPtr g, NatSet lengths) {
  return std::make_shared<LengthSet>(std::move(g), std::move(lengths));
}
SubsetPtr half_space(GroupPtr g, std::vector<long> coefficients, long threshold) {
  return std::make_shared<HalfSpace>(std::move(g), std::move(coefficients), threshold);
}
SubsetPtr left_translate(SubsetPtr a, Element g) {
  return std::make_shared<TranslatedSet>(std::move(a), std::move(g), Side::Left);
}
SubsetPtr right_translate(SubsetPtr a, Element g) {
  return std::make_shared<TranslatedSet>(std::move(a), std::move(g), Side::Right);
}
SubsetPtr set_union(std::vector<SubsetPtr> children) {
  return std::make_shared<BooleanSet>(BooleanSet::Op::Union, std::move(children));
}
SubsetPtr set_intersection(std::vector<SubsetPtr> children) {
  return std::make_shared<BooleanSet>(BooleanSet::Op::Intersection, std::move(children));
}
SubsetPtr set_complement(SubsetPtr a) {
  return std::make_shared<BooleanSet>(BooleanSet::Op::Complement, std::vector<SubsetPtr>{std::move(a)});
}
SubsetPtr set_xor(SubsetPtr a, SubsetPtr b) {
  return std::make_shared<BooleanSet>(BooleanSet::Op::SymmetricDifference,
                                      std::vector<SubsetPtr>{std::move(a), std::move(b)});
}
SubsetPtr edited(SubsetPtr base, std::vector<Element> added, std::vector<Element> removed) {
  return std::make_shared<EditedSet>(std::move(base), std::move(added), std::move(removed));
}

}  // namespace ends
