#include "ends/ball.hpp"

#include <string>

#include "ends/errors.hpp"

namespace ends {

Ball::Ball(GroupPtr group, int radius, std::size_t max_elements) : group_(std::move(group)), radius_(radius) {
  if (!group_) throw DomainError("ball of a null group");
  if (radius < 0) throw DomainError("ball radius must be non-negative");
  const auto& gens = group_->ball_generators();
  elements_.push_back(group_->identity());
  lengths_.push_back(0);
  index_.emplace(elements_.back(), 0);
  sphere_start_.push_back(0);
  std::size_t layer_begin = 0;
  for (int r = 1; r <= radius; ++r) {
    const std::size_t layer_end = elements_.size();
    sphere_start_.push_back(layer_end);
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& s : gens) {
        Element y = group_->multiply(s, elements_[i]);
        if (index_.contains(y)) continue;
        if (elements_.size() >= max_elements) {
          throw ResourceError("ball of radius " + std::to_string(radius) + " in " + group_->spec() +
                              " exceeds the cap of " + std::to_string(max_elements) + " elements");
        }
        index_.emplace(y, elements_.size());
        elements_.push_back(std::move(y));
        lengths_.push_back(r);
      }
    }
    layer_begin = layer_end;
  }
  sphere_start_.push_back(elements_.size());
}

std::span<const Element> Ball::sphere(int r) const {
  if (r < 0 || r > radius_) return {};
  const auto b = sphere_start_[static_cast<std::size_t>(r)];
  const auto e = sphere_start_[static_cast<std::size_t>(r) + 1];
  return std::span<const Element>(elements_).subspan(b, e - b);
}

std::span<const Element> Ball::within(int r) const {
  if (r < 0) return {};
  if (r > radius_) r = radius_;
  return std::span<const Element>(elements_).first(sphere_start_[static_cast<std::size_t>(r) + 1]);
}

std::optional<std::size_t> Ball::index_of(const Element& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace ends
