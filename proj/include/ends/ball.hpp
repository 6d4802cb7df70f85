#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ends/group.hpp"

namespace ends {

inline constexpr std::size_t kDefaultMaxElements = 10'000'000;

/// The set {g : |g| ≤ radius}, enumerated breadth-first along x -> s*x from
/// the identity, so elements appear sorted by word length and each sphere
/// is a contiguous slice.
class Ball {
 public:
  /// Throws ResourceError rather than truncating when more than
  /// `max_elements` elements would be produced.
  Ball(GroupPtr group, int radius, std::size_t max_elements = kDefaultMaxElements);

  const GroupPtr& group() const { return group_; }
  int radius() const { return radius_; }
  std::size_t size() const { return elements_.size(); }
  std::span<const Element> elements() const { return elements_; }
  const Element& operator[](std::size_t i) const { return elements_[i]; }

  /// Elements of word length exactly r (empty when r > radius).
  std::span<const Element> sphere(int r) const;
  /// Elements of word length ≤ r.
  std::span<const Element> within(int r) const;
  int length(std::size_t index) const { return lengths_[index]; }

  bool contains(const Element& g) const { return index_.contains(g); }
  std::optional<std::size_t> index_of(const Element& g) const;

 private:
  GroupPtr group_;
  int radius_;
  std::vector<Element> elements_;
  std::vector<int> lengths_;
  std::vector<std::size_t> sphere_start_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
};

}  // namespace ends
