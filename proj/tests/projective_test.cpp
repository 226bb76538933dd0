#include <doctest.h>

#include <random>

#include "arrangio/errors.hpp"
#include "arrangio/projective.hpp"

using namespace arrangio;

namespace {

const FieldPtr& Q() {
  static FieldPtr q = Field::rationals();
  return q;
}

ProjLine line(long a, long b, long c) {
  return ProjLine(Q()->from_int(a), Q()->from_int(b), Q()->from_int(c));
}

ProjPoint point(long a, long b, long c) {
  return ProjPoint(Q()->from_int(a), Q()->from_int(b), Q()->from_int(c));
}

ProjPoint rnd_point(std::mt19937_64& rng) {
  for (;;) {
    const long a = long(rng() % 11) - 5, b = long(rng() % 11) - 5,
               c = long(rng() % 11) - 5;
    if (a || b || c) return point(a, b, c);
  }
}

}  // namespace

TEST_CASE("meet of two lines") {
  CHECK(meet(line(1, 0, 0), line(0, 1, 0)) == point(0, 0, 1));
  CHECK(meet(line(1, -1, 0), line(0, 0, 1)) == point(1, 1, 0));
  CHECK(meet(line(1, 1, -1), line(1, 0, -1)) == point(1, 0, 1));
  CHECK_THROWS_AS(meet(line(1, -1, 0), line(2, -2, 0)), IdenticalLines);
}

TEST_CASE("join of two points") {
  CHECK(join(point(0, 0, 1), point(0, 1, 0)) == line(1, 0, 0));
  CHECK(join(point(1, 1, 1), point(1, 0, 0)) == line(0, 1, -1));
  CHECK_THROWS_AS(join(point(1, 2, 3), point(2, 4, 6)), IdenticalPoints);
}

TEST_CASE("join passes through both points, meet lies on both lines") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const ProjPoint p = rnd_point(rng), q = rnd_point(rng);
    if (p == q) continue;
    const ProjLine l = join(p, q);
    CHECK(incident(p, l));
    CHECK(incident(q, l));
    const ProjPoint r = meet(dual(p), dual(q));
    CHECK(incident(r, dual(p)));
    CHECK(incident(r, dual(q)));
  }
}

TEST_CASE("incidence is the exact dot product test") {
  CHECK_FALSE(incident(point(0, 0, 1), line(0, 0, 1)));
  CHECK(incident(point(1, 1, 0), line(1, -1, 0)));
  CHECK(incident(point(1, 0, 1), line(1, 1, -1)));
}

TEST_CASE("concurrency is the determinant test") {
  CHECK(concurrent(line(1, 0, 0), line(0, 1, 0), line(1, -1, 0)));
  CHECK_FALSE(concurrent(line(1, 0, 0), line(0, 1, 0), line(0, 0, 1)));
  CHECK(concurrent(line(1, -1, 0), line(1, -1, 1), line(0, 0, 1)));
  CHECK_THROWS_AS(
      concurrent(line(1, 0, 0), line(1, 0, 0), line(0, 1, 0)),
      DuplicateLines);
}

TEST_CASE("duality is an involution and swaps meet with join") {
  CHECK(dual(line(0, 0, 1)) == point(0, 0, 1));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const ProjPoint p = rnd_point(rng);
    CHECK(dual(dual(p)) == p);
    const ProjPoint q = rnd_point(rng);
    if (p == q) continue;
    const ProjLine l1 = dual(p), l2 = dual(q);
    CHECK(dual(meet(l1, l2)) == join(dual(l1), dual(l2)));
  }
}

TEST_CASE("canonical form is scaling-invariant and idempotent") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const ProjPoint p = rnd_point(rng);
    const long lam = long(rng() % 9) + 1;
    const FieldElement s = Q()->from_rational(make_rational(lam, 3));
    const ProjPoint scaled(p[0] * s, p[1] * s, p[2] * s);
    CHECK(scaled == p);
    CHECK(ProjPoint(p[0], p[1], p[2]) == p);  // rebuilding changes nothing
  }
  // First nonzero coordinate is 1 after construction.
  const ProjPoint p(Q()->from_int(0), Q()->from_int(-3), Q()->from_int(6));
  CHECK(p[0] == Q()->zero());
  CHECK(p[1] == Q()->one());
  CHECK(p[2] == Q()->from_int(-2));
  CHECK_THROWS_AS(point(0, 0, 0), ZeroTriple);
}

TEST_CASE("projective operations work over prime and cyclotomic fields") {
  auto f2 = Field::prime(2);
  const ProjPoint p(f2->one(), f2->one(), f2->zero());
  const ProjPoint q(f2->zero(), f2->one(), f2->one());
  const ProjLine l = join(p, q);
  CHECK(incident(p, l));
  CHECK(incident(q, l));

  auto z4 = Field::cyclotomic(4);
  const FieldElement i = z4->zeta_pow(1);
  const ProjLine a(z4->one(), i, z4->zero());
  const ProjLine b(z4->one(), -i, z4->zero());
  CHECK(meet(a, b) == ProjPoint(z4->zero(), z4->zero(), z4->one()));
}

TEST_CASE("points and lines compare by canonical coordinates") {
  CHECK(point(2, 4, 6) == point(1, 2, 3));
  CHECK(point(0, 1, 2) != point(1, 0, 2));
  CHECK(line(3, 3, 0) == line(1, 1, 0));
  CHECK(point(1, 1, 0).to_string() == "(1 : 1 : 0)");
}
