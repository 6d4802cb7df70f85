#include "ends/tree_action.hpp"

#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

namespace ends {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

std::vector<Element> nontrivial_elements(const Group& f) {
  std::vector<Element> out;
  const auto& fin = as<FiniteGroup>(f);
  for (std::uint32_t i = 1; i < *f.order(); ++i) out.push_back(fin.element(i));
  return out;
}

}  // namespace

BassSerreTree::BassSerreTree(GroupPtr h, GroupPtr l, int depth, std::size_t max_elements) : depth_(depth) {
  if (depth < 1) throw DomainError("tree depth must be at least 1");
  if (!h->order() || !l->order() || h->kind() != GroupKind::Finite || l->kind() != GroupKind::Finite) {
    throw DomainError("Bass-Serre truncation needs finite permutation-group factors");
  }
  group_ = free_product({h, l});
  const auto& fp = as<FreeProductGroup>(*group_);
  const std::vector<Element> letters[2] = {nontrivial_elements(*h), nontrivial_elements(*l)};

  edges_.push_back(group_->identity());
  std::size_t begin = 0;
  for (int k = 0; k < depth; ++k) {
    const std::size_t end = edges_.size();
    for (std::size_t i = begin; i < end; ++i) {
      const auto syl = fp.syllables(edges_[i]);
      for (int side = 0; side < 2; ++side) {
        if (!syl.empty() && syl.back().factor == side) continue;
        for (const auto& x : letters[side]) {
          edges_.push_back(group_->multiply(edges_[i], fp.embed(side, x)));
          if (edges_.size() > max_elements) {
            throw ResourceError("Bass-Serre truncation exceeds " + std::to_string(max_elements) + " edges");
          }
        }
      }
    }
    begin = end;
  }

  for (std::size_t i = 0; i < edges_.size(); ++i) {
    edge_index_.emplace(edges_[i], i);
    const std::size_t o = vertex_of(0, edges_[i]);
    const std::size_t t = vertex_of(1, edges_[i]);
    ends_.emplace_back(o, t);
    star_[o].push_back(i);
    star_[t].push_back(i);
  }

  // Root the tree at e so that forward membership is one walk upward.
  parent_edge_.assign(vertices_.size(), npos);
  std::vector<char> seen(vertices_.size(), 0);
  std::queue<std::size_t> q;
  for (std::size_t v : {ends_[0].first, ends_[0].second}) {
    seen[v] = 1;
    q.push(v);
  }
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    for (std::size_t edge : star_[v]) {
      if (edge == 0) continue;
      const std::size_t u = ends_[edge].first == v ? ends_[edge].second : ends_[edge].first;
      if (seen[u]) continue;
      seen[u] = 1;
      parent_edge_[u] = edge;
      q.push(u);
    }
  }
}

std::size_t BassSerreTree::vertex_of(int side, const Element& g) {
  const auto& fp = as<FreeProductGroup>(*group_);
  auto syl = fp.syllables(g);
  if (!syl.empty() && syl.back().factor == side) syl.pop_back();
  Element key = fp.from_syllables(std::move(syl));
  auto [it, fresh] = vertex_index_[side].try_emplace(key, vertices_.size());
  if (fresh) {
    vertices_.push_back({side, std::move(key)});
    star_.emplace_back();
  }
  return it->second;
}

std::optional<std::size_t> BassSerreTree::edge_index(const Element& g) const {
  group_->require(g);
  const auto it = edge_index_.find(g);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

bool BassSerreTree::in_forward(const Element& f) const {
  const auto idx = edge_index(f);
  if (!idx) {
    throw RangeError("edge " + group_->format(f) + " lies outside the depth-" + std::to_string(depth_) +
                     " truncation");
  }
  if (*idx == 0) return false;
  // Start at the endpoint nearer to e and climb.
  std::size_t u = parent_edge_[ends_[*idx].first] == *idx ? ends_[*idx].second : ends_[*idx].first;
  while (parent_edge_[u] != npos) {
    const auto [a, b] = ends_[parent_edge_[u]];
    u = a == u ? b : a;
  }
  return u == ends_[0].second;
}

bool BassSerreTree::in_M(const Element& g) const { return in_forward(group_->invert(g)); }

bool BassSerreTree::edge_adjacent(const Element& s) const {
  return as<FreeProductGroup>(*group_).syllable_count(s) <= 1;
}

std::vector<Element> BassSerreTree::commensuration_witness(const Element& s, int radius) const {
  if (!edge_adjacent(s)) throw PreconditionError(group_->format(s) + " does not move e to an adjacent edge");
  const Ball ball(group_, radius);
  std::vector<Element> out;
  for (const auto& g : ball.elements()) {
    if (in_M(g) && !in_M(group_->multiply(s, g))) out.push_back(g);
  }
  return out;
}

DisjointVerdict BassSerreTree::disjoint_translates(const std::vector<Element>& t, int radius) const {
  const auto& fp = as<FreeProductGroup>(*group_);
  std::vector<Element> inverses;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto syl = fp.syllables(t[i]);
    if (!syl.empty() && (syl.size() > 1 || syl[0].factor != 0)) {
      throw PreconditionError(group_->format(t[i]) + " is not in the vertex stabilizer H");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (t[j] == t[i]) throw PreconditionError("two elements of T lie in the same F-coset");
    }
    inverses.push_back(group_->invert(t[i]));
  }
  DisjointVerdict out;
  out.translate_sizes.assign(t.size(), 0);
  const Ball ball(group_, radius);
  for (const auto& x : ball.elements()) {
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (in_M(group_->multiply(x, inverses[i]))) {
        ++out.translate_sizes[i];
        hits.push_back(i);
      }
    }
    if (hits.size() >= 2 && out.disjoint) {
      out.disjoint = false;
      out.witness = std::vector<Element>{t[hits[0]], t[hits[1]], x};
    }
  }
  return out;
}

bool BassSerreTree::is_tree() const {
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [a, b] : ends_) {
    const auto ra = find(a);
    const auto rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return vertices_.size() == edges_.size() + 1;
}

std::string BassSerreTree::vertex_name(std::size_t v) const {
  return std::string(vertices_[v].side == 0 ? "H" : "L") + "[" + group_->format(vertices_[v].key) + "]";
}

std::string BassSerreTree::edge_list() const {
  std::ostringstream out;
  out << "# Bass-Serre tree of " << group_->spec() << ", depth " << depth_ << ": " << vertices_.size()
      << " vertices, " << edges_.size() << " edges\n";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out << vertex_name(ends_[i].first) << ' ' << vertex_name(ends_[i].second) << ' ' << group_->format(edges_[i])
        << '\n';
  }
  return out.str();
}

}  // namespace ends
