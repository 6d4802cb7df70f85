#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <vector>

namespace ends {

/// Signed generator index: +(i+1) is generator i, -(i+1) its inverse.
using Letter = std::int32_t;
using Word = std::vector<Letter>;

/// A group element in the canonical normal form of its group. The layout
/// of `code` is private to the owning group kind; `group` is the owning
/// group's id and is checked on every binary operation.
struct Element {
  std::uint32_t group = 0;
  std::vector<std::int32_t> code;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ e.group;
    for (auto c : e.code) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(c)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

using ElementSet = std::unordered_set<Element, ElementHash>;

inline Letter inverse_letter(Letter x) { return -x; }
inline int letter_generator(Letter x) { return (x > 0 ? x : -x) - 1; }

}  // namespace ends
