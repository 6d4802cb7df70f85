#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ends/ball.hpp"

namespace ends {

struct Component {
  std::vector<Element> elements;  // BFS order of the ambient ball
  bool touches_outer = false;
};

/// Connected components of ball(R) ∖ ball(r) under the edges {x, s*x}.
struct ComplementComponents {
  int inner_radius = 0;
  int outer_radius = 0;
  std::vector<Component> components;

  std::size_t touching_outer() const;
};

/// Component labels of a ball with some vertices removed: label[i] is the
/// component of ball[i], or -1 when removed. Labels are numbered in order
/// of first appearance in the ball.
std::vector<int> label_components(const Ball& ball, const std::function<bool(std::size_t)>& removed);

ComplementComponents complement_components(const Ball& ball, int r);
ComplementComponents complement_components(const GroupPtr& group, int r, int R,
                                           std::size_t max_elements = kDefaultMaxElements);

enum class EndVerdict { Zero, One, Two, Many, Inconclusive };
std::string to_string(EndVerdict v);

struct EndCountRow {
  int inner_radius = 0;
  int outer_radius = 0;
  std::size_t unbounded = 0;  // components touching the outer sphere
  std::size_t total = 0;
};

/// Heuristic end count: never a proof. "zero", "one" and "two" need the
/// count to be constant on the last three sampled radii (all of them when
/// fewer were sampled); "many" needs strict growth on the last three.
struct EndCountEstimate {
  std::vector<EndCountRow> rows;
  EndVerdict verdict = EndVerdict::Inconclusive;
};

EndCountEstimate estimate_end_count(const GroupPtr& group, int r_max, int window = 2,
                                    std::size_t max_elements = kDefaultMaxElements);

/// True iff x and y lie in distinct components of ball ∖ F.
bool separates(const Ball& ball, const ElementSet& F, const Element& x, const Element& y);
bool separates(const GroupPtr& group, const ElementSet& F, const Element& x, const Element& y, int R);

}  // namespace ends
