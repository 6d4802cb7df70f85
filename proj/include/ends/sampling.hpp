#pragma once

#include <random>
#include <vector>

#include "ends/subset.hpp"

namespace ends {

/// Random walk of uniform length 0..max_len over the ball generators.
Element random_element(const GroupPtr& g, std::mt19937_64& rng, int max_len);
std::vector<Element> random_elements(const GroupPtr& g, std::mt19937_64& rng, int count, int max_len);

/// A random left-commensurated set with closed-form certificates: a cone
/// (free groups and free products) or a half-line (rank-1 free abelian),
/// with a few elements added and removed. With `with_identity` the result
/// contains 1.
SubsetPtr random_commensurated(const GroupPtr& g, std::mt19937_64& rng, bool with_identity);

}  // namespace ends
