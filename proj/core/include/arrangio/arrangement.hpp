#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "arrangio/projective.hpp"

namespace arrangio {

// An intersection point of >= 2 arrangement lines together with the full
// set of incident line indices (input order, sorted ascending).
struct SingularPoint {
  ProjPoint point;
  std::vector<size_t> incident;
  size_t multiplicity() const { return incident.size(); }
};

// All singular points, sorted by canonical point coordinates. Construction
// guarantees the pairs identity sum_P C(m_P,2) = C(n,2).
struct SingularLocus {
  std::vector<SingularPoint> points;
  size_t size() const { return points.size(); }
  const SingularPoint* find(const ProjPoint& p) const;
};

// An ordered list of distinct lines over one field. Duplicates collapse at
// build time (first occurrence wins); all reported indices are input-order
// indices into lines().
class Arrangement {
 public:
  static Arrangement build(std::vector<ProjLine> lines);  // EmptyArrangement

  size_t size() const { return lines_.size(); }
  const std::vector<ProjLine>& lines() const { return lines_; }
  const ProjLine& line(size_t i) const { return lines_[i]; }
  const FieldPtr& field() const { return lines_[0].field(); }
  // Dimension of the span of the coordinate triples; 3 means full rank.
  int rank() const { return rank_; }
  bool contains(const ProjLine& l) const;
  std::optional<size_t> index_of(const ProjLine& l) const;
  // True iff every coordinate of every line is conjugation-fixed.
  bool is_real() const;

 private:
  Arrangement() = default;
  std::vector<ProjLine> lines_;
  int rank_ = 0;
};

// Partition of the lines at a modular point: the pencil through it and the
// subarrangement avoiding it.
struct ModularSplit {
  ProjPoint modular_point;
  std::vector<size_t> through;
  std::vector<size_t> avoiding;
};

struct ArrangementStats {
  size_t n = 0;
  int rank = 0;
  size_t m_max = 0;
  size_t sing_total = 0;
  std::map<size_t, size_t> t_k;  // multiplicity -> count of points
  std::vector<ProjPoint> modular;  // empty unless rank 3
  bool supersolvable = false;      // meaningful only at rank 3
};

struct SupersolvableResult {
  bool supersolvable = false;
  // A modular point of maximal multiplicity m(A), canonically least among
  // those; absent iff not supersolvable.
  std::optional<ProjPoint> witness;
  size_t witness_multiplicity = 0;
};

struct LineIdentityEntry {
  size_t line = 0;
  size_t sum = 0;  // sum over singular points on the line of (m_P - 1)
  bool holds = false;  // sum == n - 1
};

struct LineIdentityReport {
  std::vector<LineIdentityEntry> per_line;
  bool holds = false;
};

// All pairwise meets grouped by canonical point; incident sets re-verified
// by incidence tests. Throws TooFewLines (n < 2), CheckFailed if the pairs
// identity is violated (an implementation bug, never valid data).
SingularLocus singular_locus(const Arrangement& a);

// Aggregate counts. Throws TooFewLines. Modular data is filled only for
// rank-3 arrangements; lower ranks report no modular points.
ArrangementStats stats(const Arrangement& a);

// Singular points P such that join(P, Q) is an arrangement line for every
// other singular point Q. Throws NotFullRank unless rank is 3.
std::vector<ProjPoint> modular_points(const Arrangement& a);

// True iff a modular point exists; the witness has multiplicity m(A)
// (every maximal-multiplicity point of a supersolvable arrangement is
// modular). Throws NotFullRank.
SupersolvableResult is_supersolvable(const Arrangement& a);

// Splits lines into the pencil through p and the rest. Throws NotModular
// if p is not a modular point of a.
ModularSplit split_by_modular(const Arrangement& a, const ProjPoint& p);

// Per-line identity sum (m_P - 1) = n - 1; any violation indicates an
// implementation bug, never valid data.
LineIdentityReport line_identity_check(const Arrangement& a);

// The sub-arrangement on the given line indices (order preserved).
Arrangement subarrangement(const Arrangement& a, const std::vector<size_t>& idx);

}  // namespace arrangio
