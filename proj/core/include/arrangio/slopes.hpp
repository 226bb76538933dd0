#pragma once

#include <utility>
#include <vector>

#include "arrangio/arrangement.hpp"
#include "arrangio/rational.hpp"

namespace arrangio {

// A finite set of distinct affine rational points (x, y).
struct PointConfig {
  std::vector<std::pair<Rational, Rational>> points;
  size_t size() const { return points.size(); }
};

// Validates distinctness. Throws InvalidConfig on duplicates.
PointConfig make_point_config(std::vector<std::pair<Rational, Rational>> pts);

// Homogenizes with last coordinate 1 (duality-ready embedding).
ProjPoint homogenize(const FieldPtr& q, const std::pair<Rational, Rational>& p);

struct SlopeCount {
  size_t w = 0;                      // number of distinct directions
  std::vector<ProjPoint> directions; // canonical points on V(z), sorted
};

// Directions of all pairwise joins, deduplicated on the line at infinity.
// Throws TooFewPoints (n < 2) and AllCollinear.
SlopeCount slopes_count(const PointConfig& cfg);

// The n + w lines dual to the homogenized points and to their directions:
// point duals first, then direction duals (the pencil through [0,0,1]).
// Throws TooFewPoints, AllCollinear.
Arrangement build_apd(const PointConfig& cfg);

struct SlopeReport {
  size_t n = 0;
  size_t w = 0;
  std::vector<ProjPoint> directions;
  size_t lines_determined = 0;  // distinct joins among the points
  size_t apd_size = 0;          // n + w
  size_t m_apd = 0;             // m(A_PD)
  size_t m_pmod = 0;            // multiplicity of [0,0,1] in A_PD
  bool slope_bound = false;     // w >= n - 1
  bool apd_supersolvable = false;
  bool prop_lower_bound = false;  // m_apd >= (apd_size - 1)/2
  bool sides_agree = false;       // slope_bound <=> prop_lower_bound for m_pmod
  bool holds = false;             // all of the above
};

// Full pipeline: count slopes, build the dual arrangement, evaluate both
// sides of the equivalence exactly. Throws TooFewPoints (n < 3),
// AllCollinear.
SlopeReport slope_theorem_check(const PointConfig& cfg);

}  // namespace arrangio
