#include "arrangio/projective.hpp"

#include "arrangio/errors.hpp"

namespace arrangio {
namespace detail {

Triple::Triple(FieldElement c0, FieldElement c1, FieldElement c2)
    : c_{std::move(c0), std::move(c1), std::move(c2)} {
  const FieldPtr& f = c_[0].field();
  if (!f->same(*c_[1].field()) || !f->same(*c_[2].field()))
    throw SpecMismatch("triple coordinates lie in different fields");
  size_t lead = 3;
  for (size_t i = 0; i < 3; ++i) {
    if (!c_[i].is_zero()) {
      lead = i;
      break;
    }
  }
  if (lead == 3) throw ZeroTriple("projective triple must be nonzero");
  if (!c_[lead].is_one()) {
    FieldElement inv = c_[lead].inverse();
    for (size_t i = lead; i < 3; ++i) c_[i] = c_[i] * inv;
  }
}

bool Triple::operator==(const Triple& o) const {
  return c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2];
}

int Triple::cmp(const Triple& o) const {
  for (size_t i = 0; i < 3; ++i) {
    int c = c_[i].cmp(o.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

bool Triple::is_real() const {
  return c_[0].is_real() && c_[1].is_real() && c_[2].is_real();
}

std::string Triple::to_string() const {
  return "(" + c_[0].to_string() + " : " + c_[1].to_string() + " : " +
         c_[2].to_string() + ")";
}

Triple cross(const Triple& a, const Triple& b) {
  return Triple(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0]);
}

FieldElement dot(const Triple& a, const Triple& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

namespace {

FieldElement det3(const Triple& a, const Triple& b, const Triple& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) -
         a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

}  // namespace
}  // namespace detail

ProjPoint meet(const ProjLine& l1, const ProjLine& l2) {
  if (l1 == l2) throw IdenticalLines("meet of a line with itself");
  return ProjPoint(detail::cross(l1.triple(), l2.triple()));
}

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw IdenticalPoints("join of a point with itself");
  return ProjLine(detail::cross(p.triple(), q.triple()));
}

bool incident(const ProjPoint& p, const ProjLine& l) {
  return detail::dot(p.triple(), l.triple()).is_zero();
}

bool concurrent(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3) {
  if (l1 == l2 || l1 == l3 || l2 == l3)
    throw DuplicateLines("concurrency test needs three distinct lines");
  return detail::det3(l1.triple(), l2.triple(), l3.triple()).is_zero();
}

bool collinear(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
  if (p1 == p2 || p1 == p3 || p2 == p3)
    throw IdenticalPoints("collinearity test needs three distinct points");
  return detail::det3(p1.triple(), p2.triple(), p3.triple()).is_zero();
}

ProjPoint dual(const ProjLine& l) { return ProjPoint(l.triple()); }

ProjLine dual(const ProjPoint& p) { return ProjLine(p.triple()); }

}  // namespace arrangio
