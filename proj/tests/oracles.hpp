#pragma once

// Test-only brute-force oracles. Nothing here calls into the library's
// algorithms beyond plain data types.

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "ends/element.hpp"

namespace oracle {

inline ends::Word free_reduce(const ends::Word& w) {
  ends::Word out;
  for (auto x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

/// Number of distinct reduced words among all words of length ≤ r over k
/// generators and their inverses.
inline std::size_t free_ball_size(int k, int r) {
  std::set<ends::Word> seen;
  std::vector<ends::Word> layer(1);
  seen.insert(ends::Word{});
  for (int len = 1; len <= r; ++len) {
    std::vector<ends::Word> next;
    for (const auto& w : layer) {
      for (int g = 1; g <= k; ++g) {
        for (int s : {g, -g}) {
          ends::Word v = w;
          v.push_back(s);
          next.push_back(v);
          seen.insert(free_reduce(v));
        }
      }
    }
    layer = std::move(next);
  }
  return seen.size();
}

/// All reduced words of length ≤ r over k generators, shortest first.
inline std::vector<ends::Word> free_reduced_words(int k, int r) {
  std::vector<ends::Word> out{ends::Word{}};
  std::size_t begin = 0;
  for (int len = 1; len <= r; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (int g = 1; g <= k; ++g) {
        for (int s : {g, -g}) {
          if (!out[i].empty() && out[i].back() == -s) continue;
          ends::Word v = out[i];
          v.push_back(s);
          out.push_back(v);
        }
      }
    }
    begin = end;
  }
  return out;
}

inline bool ends_with(const ends::Word& x, const ends::Word& w) {
  return x.size() >= w.size() && std::equal(w.begin(), w.end(), x.end() - static_cast<long>(w.size()));
}

/// |{v ∈ Z^d : |v|_1 ≤ r}| by scanning the cube [-r, r]^d.
inline std::size_t lattice_ball_size(int d, int r) {
  std::size_t count = 0;
  std::vector<int> v(static_cast<std::size_t>(d), -r);
  while (true) {
    int norm = 0;
    for (int x : v) norm += std::abs(x);
    if (norm <= r) ++count;
    std::size_t i = 0;
    while (i < v.size() && v[i] == r) v[i++] = -r;
    if (i == v.size()) break;
    ++v[i];
  }
  return count;
}

}  // namespace oracle

#include <map>
#include <queue>

namespace oracle {

/// Components of {v ∈ Z^d : r < |v|_1 ≤ R} under unit steps, counting those
/// that reach |v|_1 = R. Plain BFS over coordinate vectors.
inline std::pair<std::size_t, std::size_t> lattice_annulus_components(int d, int r, int R) {
  std::set<std::vector<int>> pts;
  std::vector<int> v(static_cast<std::size_t>(d), -R);
  while (true) {
    int norm = 0;
    for (int x : v) norm += std::abs(x);
    if (norm > r && norm <= R) pts.insert(v);
    std::size_t i = 0;
    while (i < v.size() && v[i] == R) v[i++] = -R;
    if (i == v.size()) break;
    ++v[i];
  }
  std::set<std::vector<int>> seen;
  std::size_t total = 0, outer = 0;
  for (const auto& start : pts) {
    if (seen.contains(start)) continue;
    ++total;
    bool touches = false;
    std::queue<std::vector<int>> q;
    q.push(start);
    seen.insert(start);
    while (!q.empty()) {
      auto p = q.front();
      q.pop();
      int norm = 0;
      for (int x : p) norm += std::abs(x);
      if (norm == R) touches = true;
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (int s : {-1, 1}) {
          auto n = p;
          n[i] += s;
          if (pts.contains(n) && !seen.contains(n)) {
            seen.insert(n);
            q.push(n);
          }
        }
      }
    }
    if (touches) ++outer;
  }
  return {total, outer};
}

/// Same for the free group of rank k on reduced words, edges w -> s·w.
inline std::pair<std::size_t, std::size_t> free_annulus_components(int k, int r, int R) {
  std::set<ends::Word> pts;
  std::vector<ends::Word> layer(1);
  for (int len = 1; len <= R; ++len) {
    std::vector<ends::Word> next;
    for (const auto& w : layer) {
      for (int g = 1; g <= k; ++g) {
        for (int s : {g, -g}) {
          if (!w.empty() && w.front() == -s) continue;
          ends::Word v{s};
          v.insert(v.end(), w.begin(), w.end());
          next.push_back(v);
          if (len > r) pts.insert(v);
        }
      }
    }
    layer = std::move(next);
  }
  std::set<ends::Word> seen;
  std::size_t total = 0, outer = 0;
  for (const auto& start : pts) {
    if (seen.contains(start)) continue;
    ++total;
    bool touches = false;
    std::queue<ends::Word> q;
    q.push(start);
    seen.insert(start);
    while (!q.empty()) {
      auto w = q.front();
      q.pop();
      if (static_cast<int>(w.size()) == R) touches = true;
      for (int g = 1; g <= k; ++g) {
        for (int s : {g, -g}) {
          ends::Word v{s};
          v.insert(v.end(), w.begin(), w.end());
          v = free_reduce(v);
          if (pts.contains(v) && !seen.contains(v)) {
            seen.insert(v);
            q.push(v);
          }
        }
      }
    }
    if (touches) ++outer;
  }
  return {total, outer};
}

}  // namespace oracle

namespace oracle {

/// Compact letters: a, b, ... for generators and A, B, ... for inverses.
inline ends::Word compact_word(const std::string& s) {
  ends::Word w;
  for (char c : s) w.push_back(c >= 'a' ? c - 'a' + 1 : -(c - 'A' + 1));
  return w;
}

/// The rightmost n letters of the left-infinite word …ppp·t, by plain
/// expansion and free reduction.
inline ends::Word end_prefix(const ends::Word& tail, const ends::Word& period, std::size_t n) {
  ends::Word w;
  const std::size_t reps = 4 * (n + tail.size() + 1) / std::max<std::size_t>(period.size(), 1) + 4;
  for (std::size_t i = 0; i < reps; ++i) w.insert(w.end(), period.begin(), period.end());
  w.insert(w.end(), tail.begin(), tail.end());
  w = free_reduce(w);
  return ends::Word(w.end() - static_cast<long>(n), w.end());
}

/// Whether x and y lie in different components of B(outer) ∖ F in the free
/// Cayley graph of rank k, edges v ~ s·v.
inline bool free_separates(int k, const std::set<ends::Word>& f, const ends::Word& x, const ends::Word& y,
                           int outer) {
  if (f.contains(x) || f.contains(y)) return false;
  std::set<ends::Word> seen{x};
  std::vector<ends::Word> stack{x};
  while (!stack.empty()) {
    const ends::Word v = stack.back();
    stack.pop_back();
    if (v == y) return false;
    for (int g = 1; g <= k; ++g) {
      for (int s : {g, -g}) {
        ends::Word u{s};
        u.insert(u.end(), v.begin(), v.end());
        u = free_reduce(u);
        if (static_cast<int>(u.size()) > outer || f.contains(u) || !seen.insert(u).second) continue;
        stack.push_back(u);
      }
    }
  }
  return true;
}

/// Smallest radius of a finite F ⊆ B(rmax) separating x from y inside
/// B(outer), or -1. Small balls are searched subset by subset; larger radii
/// use the whole ball, which separates whenever any of its subsets does.
inline int free_separating_radius(int k, const ends::Word& x, const ends::Word& y, int rmax, int outer) {
  for (int r = 0; r <= rmax; ++r) {
    const auto ball = free_reduced_words(k, r);
    bool found = false;
    if (ball.size() <= 12) {
      for (std::size_t mask = 1; mask < (std::size_t{1} << ball.size()) && !found; ++mask) {
        std::set<ends::Word> f;
        for (std::size_t i = 0; i < ball.size(); ++i) {
          if (mask >> i & 1) f.insert(ball[i]);
        }
        found = free_separates(k, f, x, y, outer);
      }
    } else {
      found = free_separates(k, std::set<ends::Word>(ball.begin(), ball.end()), x, y, outer);
    }
    if (found) return r;
  }
  return -1;
}

}  // namespace oracle
