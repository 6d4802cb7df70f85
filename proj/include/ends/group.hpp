#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ends/element.hpp"
#include "ends/errors.hpp"

namespace ends {

enum class GroupKind { Free, Finite, FreeProduct, AscendingUnion, FreeAbelian };

/// Images of 0..n-1. Products compose right to left: (p*q)(x) = p(q(x)).
using Permutation = std::vector<std::uint16_t>;

/// A group with an ordered finite list of named generators and a canonical
/// normal form. Groups are immutable once built and shared through GroupPtr.
///
/// Two generating lists are kept: the named generators (used for words,
/// literals and printing) and the symmetric ball generators, which define
/// the word metric and the Cayley graph edges x -> s*x.
class Group {
 public:
  virtual ~Group() = default;
  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;

  GroupKind kind() const { return kind_; }
  std::uint32_t id() const { return id_; }
  /// Canonical group-spec text, e.g. "free_product([cyclic(2), cyclic(3)])".
  const std::string& spec() const { return spec_; }

  virtual Element identity() const = 0;
  virtual Element multiply(const Element& a, const Element& b) const = 0;
  virtual Element invert(const Element& a) const = 0;
  /// Word length with respect to the ball generators.
  virtual int word_length(const Element& a) const = 0;
  /// A word over the named generators evaluating to `a`; geodesic whenever
  /// the ball generators are the named generators and their inverses.
  virtual Word to_word(const Element& a) const = 0;
  /// Group order, or nullopt when infinite.
  virtual std::optional<std::uint64_t> order() const = 0;

  /// Evaluates a word over the named generators to its normal form.
  virtual Element reduce(std::span<const Letter> word) const;
  Element generator_power(Letter letter, long exponent) const;
  Element power(const Element& g, long n) const;
  bool is_identity(const Element& g) const { return g == identity(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<Element>& ball_generators() const { return ball_generators_; }

  /// Renders an element as "a*b^-1*c^2" ("1" for the identity).
  std::string format(const Element& g) const;
  /// Parses an element literal: generator labels with optional integer
  /// exponents, separated by '*' or spaces; an uppercase single letter is
  /// the inverse of its lowercase label; "1" is the identity; permutation
  /// groups also accept cycle notation on 1-based points, e.g. "(4 5)".
  Element parse(std::string_view literal) const;

  /// Throws DomainError unless `g` belongs to this group.
  void require(const Element& g) const;

 protected:
  Group(GroupKind kind, std::string spec);
  void set_generators(std::vector<std::string> labels, std::vector<Element> named,
                      std::vector<Element> ball);
  Element make(std::vector<std::int32_t> code) const { return Element{id_, std::move(code)}; }
  virtual std::optional<Element> from_permutation(const Permutation&) const { return std::nullopt; }

 private:
  GroupKind kind_;
  std::uint32_t id_;
  std::string spec_;
  std::vector<std::string> labels_;
  std::vector<Element> generators_;
  std::vector<Element> ball_generators_;
};

using GroupPtr = std::shared_ptr<const Group>;

class FreeGroup final : public Group {
 public:
  explicit FreeGroup(int rank);
  int rank() const { return rank_; }

  Element identity() const override { return make({}); }
  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  int word_length(const Element& a) const override;
  Word to_word(const Element& a) const override;
  std::optional<std::uint64_t> order() const override { return std::nullopt; }
  Element reduce(std::span<const Letter> word) const override;

  /// The reduced word of `a` (its normal form).
  std::span<const Letter> letters(const Element& a) const;
  /// Single-letter labels: lowercase for generators, uppercase for inverses.
  std::string compact(const Word& w) const;
  Word parse_compact(std::string_view text) const;

 private:
  int rank_;
};

namespace detail {
class PermTable;
}

/// Finite permutation group, enumerated in full at construction.
class FiniteGroup final : public Group {
 public:
  FiniteGroup(std::string spec, int degree, std::vector<Permutation> generators,
              std::vector<std::string> labels);
  ~FiniteGroup() override;

  Element identity() const override { return make({0}); }
  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  int word_length(const Element& a) const override;
  Word to_word(const Element& a) const override;
  std::optional<std::uint64_t> order() const override;

  int degree() const;
  std::uint32_t index(const Element& a) const;
  Element element(std::uint32_t index) const;
  const Permutation& permutation(const Element& a) const;

 protected:
  std::optional<Element> from_permutation(const Permutation& p) const override;

 private:
  std::unique_ptr<detail::PermTable> table_;
};

class FreeAbelianGroup final : public Group {
 public:
  explicit FreeAbelianGroup(int rank);
  int rank() const { return rank_; }

  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  int word_length(const Element& a) const override;
  Word to_word(const Element& a) const override;
  std::optional<std::uint64_t> order() const override { return std::nullopt; }

  Element from_exponents(std::vector<std::int32_t> exponents) const;
  std::span<const std::int32_t> exponents(const Element& a) const;

 private:
  int rank_;
};

/// One letter of a free-product normal form: a non-identity element of a
/// factor. Factor indices are 0-based here; last_letter_type reports them
/// 1-based so that 0 stays reserved for the identity.
struct Syllable {
  int factor = 0;
  Element element;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

class FreeProductGroup final : public Group {
 public:
  explicit FreeProductGroup(std::vector<GroupPtr> factors);

  Element identity() const override { return make({}); }
  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  int word_length(const Element& a) const override;
  Word to_word(const Element& a) const override;
  std::optional<std::uint64_t> order() const override { return std::nullopt; }

  const std::vector<GroupPtr>& factors() const { return factors_; }
  const Group& factor(int i) const { return *factors_.at(static_cast<std::size_t>(i)); }
  std::vector<Syllable> syllables(const Element& a) const;
  std::size_t syllable_count(const Element& a) const;
  /// Normalizes an arbitrary syllable list (merging and dropping identities).
  Element from_syllables(std::vector<Syllable> syllables) const;
  Element embed(int factor, const Element& h) const;
  /// Offset of factor i's named generators inside this group's named list.
  int generator_offset(int factor) const { return offsets_.at(static_cast<std::size_t>(factor)); }

 private:
  int syllable_cost(const Syllable& s) const;
  Element encode(const std::vector<Syllable>& syllables) const;

  std::vector<GroupPtr> factors_;
  std::vector<int> offsets_;
};

/// Ascending union G_1 ⊆ G_2 ⊆ ... ⊆ G_N of finite permutation groups on a
/// common point set, each level adding generators; the embeddings are the
/// inclusions. Element code is (level, index in G_N).
class AscendingUnionGroup final : public Group {
 public:
  AscendingUnionGroup(std::string spec, int degree,
                      std::vector<std::vector<Permutation>> level_generators,
                      std::vector<std::vector<std::string>> level_labels);
  ~AscendingUnionGroup() override;

  Element identity() const override { return make({1, 0}); }
  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  int word_length(const Element& a) const override;
  Word to_word(const Element& a) const override;
  std::optional<std::uint64_t> order() const override;

  /// Truncation depth N.
  int depth() const { return static_cast<int>(level_sizes_.size()); }
  /// min{n : g ∈ G_n}.
  int level(const Element& a) const;
  /// |G_n| for 1 ≤ n ≤ N.
  std::uint64_t level_size(int n) const;
  std::vector<Element> elements() const;
  const Permutation& permutation(const Element& a) const;

 protected:
  std::optional<Element> from_permutation(const Permutation& p) const override;

 private:
  Element element(std::uint32_t index) const;

  std::unique_ptr<detail::PermTable> table_;
  std::vector<int> levels_;
  std::vector<std::uint64_t> level_sizes_;
};

GroupPtr free_group(int rank);
GroupPtr cyclic_group(int n);
GroupPtr symmetric_group(int n);
GroupPtr free_abelian_group(int rank);
GroupPtr free_product(std::vector<GroupPtr> factors);
/// ⊕_{n≤N} Z/2, level n adding the swap e_n of points (2n-1, 2n).
GroupPtr sum_z2_chain(int depth);
/// S_1 ⊂ S_2 ⊂ ... ⊂ S_N, level n adding the transposition (n-1 n).
GroupPtr symmetric_chain(int depth);

/// Downcast to a concrete group kind; DomainError when the kind differs.
template <class T>
const T& as(const Group& g) {
  if (const auto* p = dynamic_cast<const T*>(&g)) return *p;
  throw DomainError("operation not supported for group " + g.spec());
}

}  // namespace ends
