#include "ends/free_product.hpp"

namespace ends {

int last_letter_type(const Group& g, const Element& x) {
  const auto syl = as<FreeProductGroup>(g).syllables(x);
  return syl.empty() ? 0 : syl.back().factor + 1;
}

AlmostInvariantFunction last_letter_function(GroupPtr g) {
  (void)as<FreeProductGroup>(*g);
  const Group* raw = g.get();
  return AlmostInvariantFunction(std::move(g), "last_letter_type",
                                 [raw](const Element& x) -> long { return last_letter_type(*raw, x); });
}

std::vector<Element> coupme_difference_set(const GroupPtr& g, const Element& x, int radius,
                                           std::size_t max_elements) {
  return last_letter_function(g).difference(x, radius, max_elements);
}

Element h_suffix(const Group& g, const Element& x, int factor) {
  const auto& fp = as<FreeProductGroup>(g);
  const auto syl = fp.syllables(x);
  if (!syl.empty() && syl.back().factor == factor) return syl.back().element;
  return fp.factor(factor).identity();
}

Lift lift_commensurated(const GroupPtr& g, int factor, const SubsetPtr& m, int radius, std::size_t max_elements) {
  const auto& fp = as<FreeProductGroup>(*g);
  if (factor < 0 || factor >= static_cast<int>(fp.factors().size())) {
    throw DomainError("factor index " + std::to_string(factor + 1) + " out of range for " + g->spec());
  }
  Lift out{is_left_commensurated_up_to(*m, radius, max_elements), nullptr};
  if (out.verdict.holds()) out.lifted = suffix_set(g, factor, m);
  return out;
}

}  // namespace ends
