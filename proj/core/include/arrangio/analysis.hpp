#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arrangio/arrangement.hpp"
#include "arrangio/rational.hpp"

namespace arrangio {

// One exact inequality instance. hypothesis_met records whether the
// statement's hypotheses (real-embeddable coordinates) hold for the input;
// the counts are computed either way and never use approximate comparison.
struct TheoremEntry {
  std::string name;
  bool hypothesis_met = false;
  long lhs = 0;
  Rational rhs = 0;
  bool holds = false;     // lhs >= rhs, exactly
  bool equality = false;  // lhs == rhs
  std::string note;
};

struct TheoremReport {
  std::string arrangement_id;
  std::vector<TheoremEntry> checks;
  // False iff some check with hypothesis_met fails.
  bool all_hold() const;
};

// |Sing_2| >= n/2 for supersolvable arrangements (real statement; over
// other fields the instance is computed with hypothesis_met = false).
// Throws NotFullRank, NotSupersolvable.
TheoremEntry dirac_motzkin_check(const Arrangement& a);

// |Sing_2| + m(A) >= n. Throws NotFullRank, NotSupersolvable.
TheoremEntry corollary_check(const Arrangement& a);

// |Sing_2| >= 2|Sing| - m(n-m) - 2, with equality iff the subarrangement
// avoiding the maximal modular point is generic; in the generic case the
// closed form |Sing_2| = (n-m)(2m-n+1) is asserted. Throws NotFullRank,
// NotSupersolvable, MultiplicityTooSmall (m < 3).
TheoremEntry sing_bound_check(const Arrangement& a);

// Per-line singular-point census relative to a modular point p.
struct LineProfile {
  size_t line = 0;
  bool through_modular = false;
  size_t u = 0;                    // simple points on the line
  size_t v = 0;                    // triple points on the line
  std::map<size_t, size_t> higher;  // multiplicity >= 4 -> count
};

// Throws NotModular if p is not modular. Internally asserts the per-line
// identity (m_P - 1 summed over the line's points equals n - 1).
std::vector<LineProfile> line_profiles(const Arrangement& a,
                                       const ProjPoint& p);

// Every line avoiding the maximal-multiplicity modular point must carry a
// simple point — a real-coordinate statement; over fields without a real
// embedding the report carries hypothesis_met = false instead of claiming
// a violation. Throws NotFullRank, NotSupersolvable.
struct NonmodularLineReport {
  bool hypothesis_met = false;
  std::optional<ProjPoint> witness;  // the modular point used
  std::vector<size_t> violations;    // avoiding lines with no simple point
  bool holds = false;                // violations empty
};
NonmodularLineReport nonmodular_line_check(const Arrangement& a);

// For every pair of modular points with distinct multiplicities: the two
// multiplicities sum to n + 1 and every line passes through one of them.
// Throws HypothesisNotMet when no such pair exists.
struct TwoModularPair {
  ProjPoint q1, q2;
  size_t m1 = 0, m2 = 0;
  bool identity_holds = false;  // m1 + m2 == n + 1
  bool covers = false;          // every line through q1 or q2
};
struct TwoModularReport {
  std::vector<TwoModularPair> pairs;
  bool holds = false;
};
TwoModularReport two_modular_check(const Arrangement& a);

// Contrapositive use of the singularity bound: given the observed n, m(A)
// and |Sing_2|, a supersolvable arrangement could have at most
// (m(n-m) + 2 + |Sing_2|)/2 singular points. excludes is true when the
// actual |Sing| exceeds that cap, certifying non-supersolvability without
// a modular-point search. Applicable only at rank 3 with m(A) >= 3.
struct ExclusionReport {
  bool applicable = false;
  Rational cap = 0;
  size_t sing_actual = 0;
  bool excludes = false;
};
ExclusionReport supersolvable_exclusion(const Arrangement& a);

// Convenience bundle used by the check command: runs the three inequality
// checks plus the coverage reports, folding hypothesis failures into
// entries instead of exceptions.
TheoremReport run_all_checks(const Arrangement& a, const std::string& id);

}  // namespace arrangio
