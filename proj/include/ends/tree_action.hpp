#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ends/ball.hpp"
#include "ends/group.hpp"

namespace ends {

/// A vertex gH (side 0) or gL (side 1), named by its canonical coset
/// representative.
struct TreeVertex {
  int side = 0;
  Element key;

  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
};

struct DisjointVerdict {
  bool disjoint = true;
  /// (h1, h2, x) with x ∈ M·h1 ∩ M·h2 when refuted.
  std::optional<std::vector<Element>> witness;
  /// |M·h ∩ ball(R)| per element of T.
  std::vector<std::size_t> translate_sizes;
};

/// The Bass-Serre tree of G = H∗L (trivial edge group) truncated to the
/// edges g with at most `depth` syllables. Edge g joins gH to gL; the base
/// edge e = 1 runs from the vertex H to the vertex L, and G acts on edges
/// by left multiplication. Both factors must be finite so that vertex
/// stars are finite.
class BassSerreTree {
 public:
  BassSerreTree(GroupPtr h, GroupPtr l, int depth, std::size_t max_elements = kDefaultMaxElements);

  const GroupPtr& group() const { return group_; }
  int depth() const { return depth_; }
  const std::vector<Element>& edges() const { return edges_; }
  const std::vector<TreeVertex>& vertices() const { return vertices_; }
  /// (origin gH, terminus gL) as vertex indices.
  std::pair<std::size_t, std::size_t> endpoints(std::size_t edge) const { return ends_[edge]; }
  std::optional<std::size_t> edge_index(const Element& g) const;
  std::size_t degree(std::size_t vertex) const { return star_[vertex].size(); }

  /// f ∈ e♯: the geodesic from f to e arrives at the head of e. Throws
  /// RangeError outside the truncation.
  bool in_forward(const Element& f) const;
  /// g ∈ M, i.e. g⁻¹e ∈ e♯. Throws RangeError outside the truncation.
  bool in_M(const Element& g) const;
  /// Whether se is e or adjacent to e.
  bool edge_adjacent(const Element& s) const;

  /// M_s = {g ∈ ball(R) ∩ M : sg ∉ M}.
  std::vector<Element> commensuration_witness(const Element& s, int radius) const;
  /// Checks M·h1 ∩ M·h2 ∩ ball(R) = ∅ for all pairs in T ⊆ H.
  DisjointVerdict disjoint_translates(const std::vector<Element>& t, int radius) const;

  /// Union-find check: connected and acyclic.
  bool is_tree() const;
  /// One "origin terminus label" line per edge, after a comment header.
  std::string edge_list() const;
  std::string vertex_name(std::size_t v) const;

 private:
  std::size_t vertex_of(int side, const Element& g);

  GroupPtr group_;
  int depth_;
  std::vector<Element> edges_;
  std::unordered_map<Element, std::size_t, ElementHash> edge_index_;
  std::vector<TreeVertex> vertices_;
  std::unordered_map<Element, std::size_t, ElementHash> vertex_index_[2];
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
  std::vector<std::vector<std::size_t>> star_;
  // Rooted at e: for each vertex, the edge leading toward e (npos at the
  // endpoints of e).
  std::vector<std::size_t> parent_edge_;
};

}  // namespace ends
