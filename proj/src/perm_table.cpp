#include "perm_table.hpp"

#include <deque>
#include <string>

#include "ends/errors.hpp"

namespace ends::detail {

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t x = 0; x < q.size(); ++x) r[x] = p[q[x]];
  return r;
}

Permutation identity_permutation(int degree) {
  Permutation p(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(i);
  return p;
}

Permutation inverse_permutation(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<std::uint16_t>(x);
  return r;
}

PermTable::PermTable(int degree, std::vector<Permutation> generators) : degree_(degree) {
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree) throw DomainError("permutation degree mismatch");
  }
  perms_.push_back(identity_permutation(degree));
  index_.emplace(perms_.back(), 0);
  length_.push_back(0);
  parent_.push_back(0);
  parent_generator_.push_back(-1);
  for (std::size_t head = 0; head < perms_.size(); ++head) {
    for (std::size_t j = 0; j < generators.size(); ++j) {
      Permutation y = compose(generators[j], perms_[head]);
      if (index_.contains(y)) continue;
      if (perms_.size() >= kMaxOrder) {
        throw ResourceError("finite group exceeds " + std::to_string(kMaxOrder) + " elements");
      }
      auto id = static_cast<std::uint32_t>(perms_.size());
      index_.emplace(y, id);
      perms_.push_back(std::move(y));
      length_.push_back(length_[head] + 1);
      parent_.push_back(static_cast<std::uint32_t>(head));
      parent_generator_.push_back(static_cast<int>(j));
    }
  }
  for (const auto& g : generators) generator_index_.push_back(index_.at(g));
  inverse_.resize(perms_.size());
  for (std::size_t i = 0; i < perms_.size(); ++i) inverse_[i] = index_.at(inverse_permutation(perms_[i]));
  if (perms_.size() <= kMaxTableOrder) {
    const std::size_t n = perms_.size();
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = index_.at(compose(perms_[a], perms_[b]));
    }
  }
}

std::optional<std::uint32_t> PermTable::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t PermTable::mul(std::uint32_t a, std::uint32_t b) const {
  if (!table_.empty()) return table_[a * perms_.size() + b];
  return index_.at(compose(perms_[a], perms_[b]));
}

std::vector<int> PermTable::word(std::uint32_t a) const {
  std::vector<int> w;
  while (a != 0) {
    w.push_back(parent_generator_[a]);
    a = parent_[a];
  }
  return w;
}

}  // namespace ends::detail
