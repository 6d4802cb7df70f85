#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ends/ball.hpp"
#include "ends/subset.hpp"

namespace ends {

enum class VerdictStatus { VerifiedExact, VerifiedToRadius, Refuted };

std::string to_string(VerdictStatus s);
std::string to_string(Side s);

/// |D ∩ B_r| for r = 0..R, D one translation difference (or A △ B).
struct DifferenceEvidence {
  std::optional<Element> generator;
  Side side = Side::Left;
  std::vector<std::size_t> sizes;
  std::optional<SupportBound> certificate;
};

struct VerificationVerdict {
  VerdictStatus status = VerdictStatus::VerifiedToRadius;
  int radius = 0;
  /// Present exactly when refuted: the translating generator (if any),
  /// its side, and an element of the difference at the outer radius.
  std::optional<Element> witness_generator;
  std::optional<Side> witness_side;
  std::optional<Element> witness_element;
  std::vector<DifferenceEvidence> evidence;

  bool holds() const { return status != VerdictStatus::Refuted; }
};

/// (gA △ A) ∩ ball(R) for Side::Left, (Ag △ A) ∩ ball(R) for Side::Right,
/// in ball order.
std::vector<Element> translate_difference(const SubsetSpec& a, const Element& g, int radius,
                                          Side side = Side::Left, std::size_t max_elements = kDefaultMaxElements);

/// Commensuration by the given generators on the given sides. Exact when
/// every pair carries a closed-form bound (cross-checked on the ball),
/// otherwise the differences must be constant over the top three radii.
VerificationVerdict check_commensurated(const SubsetSpec& a, const std::vector<Element>& generators,
                                        const std::vector<Side>& sides, int radius,
                                        std::size_t max_elements = kDefaultMaxElements);

VerificationVerdict is_left_commensurated_up_to(const SubsetSpec& a, int radius,
                                                std::size_t max_elements = kDefaultMaxElements);
VerificationVerdict is_bicommensurated_up_to(const SubsetSpec& a, int radius,
                                             std::size_t max_elements = kDefaultMaxElements);
/// Left commensuration by the generators of H only.
VerificationVerdict is_left_h_commensurated_up_to(const SubsetSpec& a, const Subgroup& h, int radius,
                                                  std::size_t max_elements = kDefaultMaxElements);

/// Whether A △ B is finite. Exact when the classes modulo finite sets
/// print equally; otherwise A △ B must vanish on the two outer spheres.
VerificationVerdict quotient_eq(const SubsetSpec& a, const SubsetSpec& b, int radius,
                                std::size_t max_elements = kDefaultMaxElements);

/// Ordered pairs (g, sg) with s a ball generator and exactly one endpoint
/// in U, both orientations stored, sorted by ball order.
struct BoundaryEncoding {
  GroupPtr group;
  int radius = 0;
  std::vector<std::pair<Element, Element>> pairs;
  /// When U has closed-form support bounds: the radius from which the
  /// pair list is all of ∂U.
  std::optional<int> complete_from;

  bool contains(const Element& g, const Element& h) const;
};

/// Throws PreconditionError unless 1 ∈ U.
BoundaryEncoding boundary_encode(const SubsetSpec& u, int radius, std::size_t max_elements = kDefaultMaxElements);
/// The same pairs without the 1 ∈ U normalization (∂U = ∂(G ∖ U)).
BoundaryEncoding boundary_pairs(const SubsetSpec& u, int radius, std::size_t max_elements = kDefaultMaxElements);

/// V_K ∩ ball(R): elements reached from 1 by an even number of crossings.
/// Throws InvalidEncodingError when the parity is not well defined.
SubsetPtr boundary_decode(const BoundaryEncoding& k, int radius, std::size_t max_elements = kDefaultMaxElements);

enum class CosetClass { Finite, Cofinite };

std::string to_string(CosetClass c);

struct CosetReport {
  Element representative;
  CosetClass kind = CosetClass::Finite;
  std::size_t sampled = 0;
  std::size_t members = 0;
};

struct Projection {
  SubsetPtr projection;
  std::vector<CosetReport> cosets;
};

/// Union of the cosets Hg (g in ball(R)) meeting U cofinitely, judged on
/// the sphere of radius R of H translated to each coset. Throws
/// InconclusiveError for a coset sampled neither empty nor full.
Projection project_h_invariant(const SubsetSpec& u, const Subgroup& h, int radius,
                               std::size_t max_elements = kDefaultMaxElements);

struct ExceptionCosets {
  VerificationVerdict precondition;
  /// Coset representatives (keys) whose intersection with X is proper.
  std::vector<Element> exceptions;
  std::size_t sampled_cosets = 0;
};

/// Cosets Hg of representatives in ball(R) on which X is neither empty nor
/// full, after verifying that X is left-H-commensurated.
ExceptionCosets exception_cosets(const SubsetSpec& x, const Subgroup& h, int radius,
                                 std::size_t max_elements = kDefaultMaxElements);

/// An integer-valued function on a group, evaluated on demand.
class AlmostInvariantFunction {
 public:
  using Rule = std::function<long(const Element&)>;

  AlmostInvariantFunction(GroupPtr group, std::string description, Rule rule);

  long operator()(const Element& g) const;
  const GroupPtr& group() const { return group_; }
  const std::string& description() const { return description_; }
  /// {h ∈ ball(R) : f(sh) ≠ f(h)}.
  std::vector<Element> difference(const Element& s, int radius,
                                  std::size_t max_elements = kDefaultMaxElements) const;

  /// Distinct values seen while validating, ascending.
  std::vector<long> sampled_image;
  /// The sampled image reached the largest term of the defining chain.
  bool unbounded_witnessed = false;

 private:
  GroupPtr group_;
  std::string description_;
  Rule rule_;
};

/// One term f_n of an increasing chain: normalized so that f_n(o) = 0 and
/// f_n takes only the values 0 and n.
struct ChainTerm {
  std::string subgroup;
  long weight = 0;
  AlmostInvariantFunction::Rule rule;
};

/// f = Σ f_n, validated on ball(sample_radius): f_n(o) = 0 and image
/// ⊆ {0, n} for every term, else PreconditionError. Invariance of f_n
/// under its subgroup is the caller's responsibility.
AlmostInvariantFunction assemble_untame_witness(GroupPtr group, const std::vector<ChainTerm>& chain,
                                                const Element& basepoint, int sample_radius,
                                                std::size_t max_elements = kDefaultMaxElements);

}  // namespace ends
