#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ends/group.hpp"
#include "ends/natset.hpp"
#include "ends/subgroup.hpp"

namespace ends {

enum class Side { Left, Right };

/// A closed-form region known to contain a translation difference:
/// elements of word length ≤ word_radius, or (for ascending unions) of
/// level ≤ level. Negative radius and zero level mean the empty region.
struct SupportBound {
  int word_radius = -1;
  int level = 0;

  static SupportBound none() { return {}; }
  static SupportBound radius(int r) { return {r, 0}; }
  bool is_empty() const { return word_radius < 0 && level <= 0; }
  bool contains(const Group& g, const Element& x) const;
  SupportBound merged(const SupportBound& other) const;
  std::string describe() const;
};

/// An immutable subset of a group with exact, decidable membership.
///
/// Besides membership each variant may offer two closed-form facts: a
/// bound on the difference sA △ A (left) or As △ A (right), and a radius
/// containing the whole set when it is finite. Verdicts that rely on them
/// are exact; everything else is checked on balls.
class SubsetSpec {
 public:
  explicit SubsetSpec(GroupPtr group) : group_(std::move(group)) {}
  virtual ~SubsetSpec() = default;

  const GroupPtr& group() const { return group_; }
  virtual bool contains(const Element& g) const = 0;
  /// Canonical set expression, accepted by parse_set_expression.
  virtual std::string describe() const = 0;
  /// Region containing sA △ A (Left) or As △ A (Right).
  virtual std::optional<SupportBound> translation_support(const Element& s, Side side) const;
  /// A radius r with A ⊆ ball(r), when A is known to be finite.
  virtual std::optional<int> finite_radius() const { return std::nullopt; }
  /// Canonical expression of the class of A modulo finite sets; equal
  /// strings mean A △ B is finite.
  virtual std::string describe_modulo_finite() const { return describe(); }

 private:
  GroupPtr group_;
};

using SubsetPtr = std::shared_ptr<const SubsetSpec>;

class FiniteSet final : public SubsetSpec {
 public:
  FiniteSet(GroupPtr g, std::vector<Element> elements);
  bool contains(const Element& g) const override;
  std::string describe() const override;
  std::optional<SupportBound> translation_support(const Element& s, Side side) const override;
  std::optional<int> finite_radius() const override { return radius_; }
  std::string describe_modulo_finite() const override { return "empty"; }
  const std::vector<Element>& elements() const { return elements_; }

 private:
  std::vector<Element> elements_;
  ElementSet members_;
  int radius_ = -1;
};

class CofiniteSet final : public SubsetSpec {
 public:
  CofiniteSet(GroupPtr g, std::vector<Element> excluded);
  bool contains(const Element& g) const override;
  std::string describe() const override;
  std::optional<SupportBound> translation_support(const Element& s, Side side) const override;
  std::optional<int> finite_radius() const override;
  std::string describe_modulo_finite() const override;
  const std::vector<Element>& excluded() const { return excluded_; }

 private:
  std::vector<Element> excluded_;
  ElementSet members_;
  int radius_ = -1;
};

/// Elements whose normal form ends in the normal form of w: a suffix of
/// reduced letters in a free group, of syllables in a free product.
class SuffixCone final : public SubsetSpec {
 public:
  SuffixCone(GroupPtr g, Element w);
  bool contains(const Element& g) const override;
  std::string describe() const override;
  std::optional<SupportBound> translation_support(const Element& s, Side side) const override;
  const Element& suffix() const { return w_; }

 private:
  Element w_;
};

/// The union of the right cosets Hg over the given representatives.
class CosetUnion final : public SubsetSpec {
 public:
  CosetUnion(Subgroup h, std::vector<Element> representatives);
  bool contains(const Element& g) const override;
  std::string describe() const override;
  std::optional<SupportBound> translation_support(const Element& s, Side side) const override;
  std::optional<int> finite_radius() const override;
  const Subgroup& subgroup() const { return h_; }
  const std::vector<Element>& keys() const { return keys_; }

 private:
  Subgroup h_;
  std::vector<Element> keys_;
  ElementSet key_set_;
};

/// M' = {g : suf_H(g) ∈ M} in a free product, H one of the factors.
class FreeProductSuffixSet final : public SubsetSpec {
 public:
  FreeProductSuffixSet(GroupPtr g, int factor, std::shared_ptr<const SubsetSpec> target);
  bool contains(const Element& g) const override;
  std::string describe() const override;
  std::optional<SupportBound> translation_support(const Element& s, Side side) const override;
  std::string describe_modulo_finite() const override;
  int factor() const { return factor_; }
  const SubsetSpec& target() const { return *target_; }

 private:
  int factor_;
  std::shared_ptr<const SubsetSpec> target_;
};

/// ℓ⁻¹(A) for the level function of an ascending union.
class LevelSet final : public SubsetSpec {
 public:
  LevelSet(GroupPtr g, NatSet levels);
  bool contains(const Element& g) const override;
  std::string describe() const override;
  std::optional<SupportBound> translation_support(const Element& s, Side side) const override;
  std::optional<int> finite_radius() const override;
  std::string describe_modulo_finite() const override;
  const NatSet& levels() const { return levels_; }

 private:
  NatSet levels_;
};

/// Elements whose word length lies in A.
class LengthSet final : public SubsetSpec {
 public:
  LengthSet(GroupPtr g, NatSet lengths);
  bool contains(const Element& g) const override;
  std::string describe() const override;
  std::optional<SupportBound> translation_support(const Element& s, Side side) const override;
  std::optional<int> finite_radius() const override;
  std::string describe_modulo_finite() const override;

 private:
  NatSet lengths_;
};

/// {v : c·v ≥ b} in a free abelian group (or the exponent sum in free(1)).
class HalfSpace final : public SubsetSpec {
 public:
  HalfSpace(GroupPtr g, std::vector<long> coefficients, long threshold);
  bool contains(const Element& g) const override;
  std::string describe() const override;
  std::optional<SupportBound> translation_support(const Element& s, Side side) const override;

 private:
  std::vector<long> exponents(const Element& g) const;

  std::vector<long> coefficients_;
  long threshold_;
};

/// gA (Left) or Ag (Right).
class TranslatedSet final : public SubsetSpec {
 public:
  TranslatedSet(std::shared_ptr<const SubsetSpec> base, Element g, Side side);
  bool contains(const Element& g) const override;
  std::string describe() const override;
  std::optional<SupportBound> translation_support(const Element& s, Side side) const override;
  std::optional<int> finite_radius() const override;
  std::string describe_modulo_finite() const override;

 private:
  std::shared_ptr<const SubsetSpec> base_;
  Element g_;
  Element g_inverse_;
  Side side_;
};

class BooleanSet final : public SubsetSpec {
 public:
  enum class Op { Union, Intersection, Complement, SymmetricDifference };
  BooleanSet(Op op, std::vector<std::shared_ptr<const SubsetSpec>> children);
  bool contains(const Element& g) const override;
  std::string describe() const override;
  std::optional<SupportBound> translation_support(const Element& s, Side side) const override;
  std::optional<int> finite_radius() const override;
  std::string describe_modulo_finite() const override;
  Op op() const { return op_; }
  const std::vector<std::shared_ptr<const SubsetSpec>>& children() const { return children_; }

 private:
  std::string render(bool modulo_finite) const;

  Op op_;
  std::vector<std::shared_ptr<const SubsetSpec>> children_;
};

/// (base ∪ added) ∖ removed, with added and removed finite and disjoint.
class EditedSet final : public SubsetSpec {
 public:
  EditedSet(std::shared_ptr<const SubsetSpec> base, std::vector<Element> added, std::vector<Element> removed);
  bool contains(const Element& g) const override;
  std::string describe() const override;
  std::optional<SupportBound> translation_support(const Element& s, Side side) const override;
  std::optional<int> finite_radius() const override;
  std::string describe_modulo_finite() const override { return base_->describe_modulo_finite(); }
  const SubsetSpec& base() const { return *base_; }

 private:
  std::shared_ptr<const SubsetSpec> base_;
  std::vector<Element> added_;
  std::vector<Element> removed_;
  ElementSet added_set_;
  ElementSet removed_set_;
  int radius_ = -1;
};

SubsetPtr finite_set(GroupPtr g, std::vector<Element> elements);
SubsetPtr cofinite_set(GroupPtr g, std::vector<Element> excluded);
SubsetPtr empty_set(GroupPtr g);
SubsetPtr whole_set(GroupPtr g);
SubsetPtr suffix_cone(GroupPtr g, Element w);
SubsetPtr coset_union(Subgroup h, std::vector<Element> representatives);
SubsetPtr suffix_set(GroupPtr g, int factor, SubsetPtr target);
SubsetPtr level_set(GroupPtr g, NatSet levels);
SubsetPtr length_set(GroupPtr g, NatSet lengths);
SubsetPtr half_space(GroupPtr g, std::vector<long> coefficients, long threshold);
SubsetPtr left_translate(SubsetPtr a, Element g);
SubsetPtr right_translate(SubsetPtr a, Element g);
SubsetPtr set_union(std::vector<SubsetPtr> children);
SubsetPtr set_intersection(std::vector<SubsetPtr> children);
SubsetPtr set_complement(SubsetPtr a);
SubsetPtr set_xor(SubsetPtr a, SubsetPtr b);
SubsetPtr edited(SubsetPtr base, std::vector<Element> added, std::vector<Element> removed);

/// Parses a set expression over `g`; the grammar mirrors describe():
///   empty | all | finite{x, ...} | cofinite{x, ...} | cone(w)
///   coset(H; {g, ...}) with H one of whole, trivial, factor(i)
///   suffix(factor(i); expr over that factor)
///   levels(natset) | lengths(natset) | halfspace([c, ...]; b)
///   lshift(g; expr) | rshift(g; expr)
///   union(e, ...) | inter(e, ...) | not(e) | xor(e, e)
///   edit(e; +{x, ...}; -{y, ...})
SubsetPtr parse_set_expression(const GroupPtr& g, const std::string& text);

/// Element literals sorted by (word length, printed form), the order used
/// inside canonical expressions.
std::vector<Element> canonical_order(const Group& g, std::vector<Element> elements);

}  // namespace ends
