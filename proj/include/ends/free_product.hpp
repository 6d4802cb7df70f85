#pragma once

#include "ends/commensurated.hpp"

namespace ends {

/// 0 for the identity, otherwise the 1-based factor index of the last
/// syllable of the normal form.
int last_letter_type(const Group& g, const Element& x);

/// last_letter_type as an almost-invariant function.
AlmostInvariantFunction last_letter_function(GroupPtr g);

/// {h ∈ ball(R) : f(gh) ≠ f(h)} for f = last_letter_type.
std::vector<Element> coupme_difference_set(const GroupPtr& g, const Element& x, int radius,
                                           std::size_t max_elements = kDefaultMaxElements);

/// suf_H(x) for H the factor with 0-based index `factor`: the last
/// syllable when it lies in H, else the identity of H.
Element h_suffix(const Group& g, const Element& x, int factor);

struct Lift {
  VerificationVerdict verdict;
  /// M' = {g : suf_H(g) ∈ M}; null when M is refuted as commensurated.
  SubsetPtr lifted;
};

/// Verifies that M is left-H-commensurated at `radius`, then lifts it.
Lift lift_commensurated(const GroupPtr& g, int factor, const SubsetPtr& m, int radius,
                        std::size_t max_elements = kDefaultMaxElements);

}  // namespace ends
