#pragma once

#include <array>
#include <string>

#include "arrangio/field.hpp"

namespace arrangio {

namespace detail {

// Shared shape of points and lines: a nonzero coordinate triple held in
// canonical form (first nonzero coordinate scaled to 1), which makes
// equality and ordering plain componentwise comparisons.
class Triple {
 public:
  Triple(FieldElement c0, FieldElement c1, FieldElement c2);

  const FieldElement& operator[](size_t i) const { return c_[i]; }
  const FieldPtr& field() const { return c_[0].field(); }

  bool operator==(const Triple& o) const;
  bool operator!=(const Triple& o) const { return !(*this == o); }
  int cmp(const Triple& o) const;
  bool operator<(const Triple& o) const { return cmp(o) < 0; }

  // True iff every coordinate is fixed by complex conjugation.
  bool is_real() const;
  std::string to_string() const;

 private:
  std::array<FieldElement, 3> c_;
};

Triple cross(const Triple& a, const Triple& b);  // throws ZeroTriple if parallel
FieldElement dot(const Triple& a, const Triple& b);

}  // namespace detail

class ProjLine;

class ProjPoint {
 public:
  ProjPoint(FieldElement c0, FieldElement c1, FieldElement c2)
      : t_(std::move(c0), std::move(c1), std::move(c2)) {}
  explicit ProjPoint(detail::Triple t) : t_(std::move(t)) {}

  const FieldElement& operator[](size_t i) const { return t_[i]; }
  const FieldPtr& field() const { return t_.field(); }
  const detail::Triple& triple() const { return t_; }
  bool operator==(const ProjPoint& o) const { return t_ == o.t_; }
  bool operator!=(const ProjPoint& o) const { return t_ != o.t_; }
  bool operator<(const ProjPoint& o) const { return t_ < o.t_; }
  bool is_real() const { return t_.is_real(); }
  std::string to_string() const { return t_.to_string(); }

 private:
  detail::Triple t_;
};

class ProjLine {
 public:
  ProjLine(FieldElement c0, FieldElement c1, FieldElement c2)
      : t_(std::move(c0), std::move(c1), std::move(c2)) {}
  explicit ProjLine(detail::Triple t) : t_(std::move(t)) {}

  const FieldElement& operator[](size_t i) const { return t_[i]; }
  const FieldPtr& field() const { return t_.field(); }
  const detail::Triple& triple() const { return t_; }
  bool operator==(const ProjLine& o) const { return t_ == o.t_; }
  bool operator!=(const ProjLine& o) const { return t_ != o.t_; }
  bool operator<(const ProjLine& o) const { return t_ < o.t_; }
  bool is_real() const { return t_.is_real(); }
  std::string to_string() const { return t_.to_string(); }

 private:
  detail::Triple t_;
};

// The unique point on both lines (cross product). Throws IdenticalLines.
ProjPoint meet(const ProjLine& l1, const ProjLine& l2);
// The unique line through both points (same cross product, dual role).
// Throws IdenticalPoints.
ProjLine join(const ProjPoint& p, const ProjPoint& q);
// Exact incidence: c0*p0 + c1*p1 + c2*p2 = 0.
bool incident(const ProjPoint& p, const ProjLine& l);
// det of the 3x3 coordinate matrix vanishes. Throws DuplicateLines.
bool concurrent(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3);
bool collinear(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3);

// Classical duality: the same coordinates reinterpreted in the other role.
ProjPoint dual(const ProjLine& l);
ProjLine dual(const ProjPoint& p);

}  // namespace arrangio
