#include "ends/cayley_ends.hpp"

#include <numeric>

#include "ends/errors.hpp"

namespace ends {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }

  std::vector<std::size_t> parent;
};

}  // namespace

std::size_t ComplementComponents::touching_outer() const {
  std::size_t n = 0;
  for (const auto& c : components) n += c.touches_outer ? 1 : 0;
  return n;
}

std::vector<int> label_components(const Ball& ball, const std::function<bool(std::size_t)>& removed) {
  const Group& g = *ball.group();
  DisjointSets sets(ball.size());
  std::vector<char> gone(ball.size());
  for (std::size_t i = 0; i < ball.size(); ++i) gone[i] = removed(i) ? 1 : 0;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (gone[i]) continue;
    for (const auto& s : g.ball_generators()) {
      auto j = ball.index_of(g.multiply(s, ball[i]));
      if (j && !gone[*j]) sets.unite(i, *j);
    }
  }
  std::vector<int> label(ball.size(), -1);
  std::vector<int> root_label(ball.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (gone[i]) continue;
    const auto root = sets.find(i);
    if (root_label[root] < 0) root_label[root] = next++;
    label[i] = root_label[root];
  }
  return label;
}

ComplementComponents complement_components(const Ball& ball, int r) {
  const int R = ball.radius();
  if (r < 0 || r >= R) throw DomainError("complement components need 0 ≤ r < R");
  const auto label = label_components(ball, [&](std::size_t i) { return ball.length(i) <= r; });
  ComplementComponents out{r, R, {}};
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (label[i] < 0) continue;
    const auto c = static_cast<std::size_t>(label[i]);
    if (c >= out.components.size()) out.components.resize(c + 1);
    out.components[c].elements.push_back(ball[i]);
    if (ball.length(i) == R) out.components[c].touches_outer = true;
  }
  return out;
}

ComplementComponents complement_components(const GroupPtr& group, int r, int R, std::size_t max_elements) {
  if (r < 0 || r >= R) throw DomainError("complement components need 0 ≤ r < R");
  return complement_components(Ball(group, R, max_elements), r);
}

std::string to_string(EndVerdict v) {
  switch (v) {
    case EndVerdict::Zero: return "zero";
    case EndVerdict::One: return "one";
    case EndVerdict::Two: return "two";
    case EndVerdict::Many: return "many";
    case EndVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

EndCountEstimate estimate_end_count(const GroupPtr& group, int r_max, int window, std::size_t max_elements) {
  if (r_max < 3) throw DomainError("estimate_end_count needs r_max ≥ 3");
  if (window < 1 || window >= r_max) throw DomainError("window must satisfy 1 ≤ window < r_max");
  EndCountEstimate est;
  for (int r = 1; r + window <= r_max; ++r) {
    const Ball ball(group, r + window, max_elements);
    const auto comps = complement_components(ball, r);
    est.rows.push_back({r, r + window, comps.touching_outer(), comps.components.size()});
  }
  const std::size_t n = est.rows.size();
  const std::size_t tail = std::min<std::size_t>(3, n);
  bool constant = true;
  bool growing = n >= 3;
  for (std::size_t i = n - tail + 1; i < n; ++i) {
    if (est.rows[i].unbounded != est.rows[i - 1].unbounded) constant = false;
    if (est.rows[i].unbounded <= est.rows[i - 1].unbounded) growing = false;
  }
  const std::size_t last = est.rows.back().unbounded;
  if (constant && last <= 2) {
    est.verdict = last == 0 ? EndVerdict::Zero : last == 1 ? EndVerdict::One : EndVerdict::Two;
  } else if (growing) {
    est.verdict = EndVerdict::Many;
  }
  return est;
}

bool separates(const Ball& ball, const ElementSet& F, const Element& x, const Element& y) {
  if (F.contains(x) || F.contains(y)) throw DomainError("separates: x and y must lie outside F");
  const auto ix = ball.index_of(x);
  const auto iy = ball.index_of(y);
  if (!ix || !iy) throw DomainError("separates: x and y must lie in the ball");
  const auto label = label_components(ball, [&](std::size_t i) { return F.contains(ball[i]); });
  return label[*ix] != label[*iy];
}

bool separates(const GroupPtr& group, const ElementSet& F, const Element& x, const Element& y, int R) {
  return separates(Ball(group, R), F, x, y);
}

}  // namespace ends
