#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ends/group.hpp"

namespace ends::detail {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : p) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Full enumeration of a finite permutation group by breadth-first search
/// from the identity along x -> s*x, s ranging over a symmetric generator
/// list. Index 0 is the identity; indices follow BFS order, so `length`
/// is the word length with respect to that list.
class PermTable {
 public:
  static constexpr std::size_t kMaxOrder = 2'000'000;
  static constexpr std::size_t kMaxTableOrder = 1024;

  PermTable(int degree, std::vector<Permutation> generators);

  std::size_t size() const { return perms_.size(); }
  int degree() const { return degree_; }
  const Permutation& perm(std::uint32_t i) const { return perms_[i]; }
  std::optional<std::uint32_t> find(const Permutation& p) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  int length(std::uint32_t a) const { return length_[a]; }
  /// Generator positions, leftmost factor first, of a geodesic word for a.
  std::vector<int> word(std::uint32_t a) const;
  std::uint32_t generator_index(std::size_t position) const { return generator_index_[position]; }
  std::size_t generator_count() const { return generator_index_.size(); }

 private:
  int degree_;
  std::vector<Permutation> perms_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
  std::vector<std::uint32_t> inverse_;
  std::vector<int> length_;
  std::vector<std::uint32_t> parent_;
  std::vector<int> parent_generator_;
  std::vector<std::uint32_t> generator_index_;
  std::vector<std::uint32_t> table_;
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation identity_permutation(int degree);
Permutation inverse_permutation(const Permutation& p);

}  // namespace ends::detail
