#include <doctest.h>

#include <random>
#include <set>

#include "arrangio/errors.hpp"
#include "arrangio/generators.hpp"
#include "arrangio/slopes.hpp"

using namespace arrangio;

namespace {

PointConfig square() {
  return make_point_config(
      {{Rational(0), Rational(0)},
       {Rational(1), Rational(0)},
       {Rational(0), Rational(1)},
       {Rational(1), Rational(1)}});
}

PointConfig random_config(std::mt19937_64& rng, size_t n) {
  std::set<std::pair<Rational, Rational>> pts;
  while (pts.size() < n)
    pts.insert({make_rational(long(rng() % 13) - 6, long(rng() % 3) + 1),
                make_rational(long(rng() % 13) - 6, long(rng() % 3) + 1)});
  return make_point_config({pts.begin(), pts.end()});
}

}  // namespace

TEST_CASE("point configurations reject duplicates, even unreduced ones") {
  CHECK_THROWS_AS(make_point_config({{Rational(1), Rational(2)},
                                     {Rational(1), Rational(2)}}),
                  InvalidConfig);
  // 2/4 and 1/2 are the same point; construction must normalize first.
  CHECK_THROWS_AS(make_point_config({{Rational(2, 4), Rational(0)},
                                     {Rational(1, 2), Rational(0, 7)}}),
                  InvalidConfig);
}

TEST_CASE("direction counting") {
  const auto sc = slopes_count(square());
  CHECK(sc.w == 4);  // slopes 0, infinity, 1, -1

  const auto tri = slopes_count(make_point_config(
      {{Rational(0), Rational(0)},
       {Rational(1), Rational(0)},
       {Rational(0), Rational(1)}}));
  CHECK(tri.w == 3);

  CHECK_THROWS_AS(slopes_count(make_point_config({{Rational(0), Rational(0)},
                                                  {Rational(1), Rational(0)},
                                                  {Rational(2), Rational(0)}})),
                  AllCollinear);
  CHECK_THROWS_AS(slopes_count(make_point_config({{Rational(0), Rational(0)}})),
                  TooFewPoints);
}

TEST_CASE("dual arrangement of points and directions") {
  const Arrangement apd = build_apd(square());
  CHECK(apd.size() == 8);
  const auto f = apd.field();
  const ProjPoint pmod(f->zero(), f->zero(), f->one());
  const auto sing = singular_locus(apd);
  CHECK(sing.find(pmod) != nullptr);
  CHECK(sing.find(pmod)->multiplicity() == 4);
  const auto st = stats(apd);
  CHECK(st.m_max == 4);  // m(P_mod) = m(A_PD)
  CHECK(st.supersolvable);
}

TEST_CASE("joins of input points land on their direction duals") {
  const PointConfig cfg = square();
  const Arrangement apd = build_apd(cfg);
  const auto f = apd.field();
  const auto sc = slopes_count(cfg);
  for (size_t i = 0; i < cfg.size(); ++i)
    for (size_t j = i + 1; j < cfg.size(); ++j) {
      const ProjPoint pi = homogenize(f, cfg.points[i]);
      const ProjPoint pj = homogenize(f, cfg.points[j]);
      const ProjLine l = join(pi, pj);
      // The direction of l is one of the counted ones, and the point dual
      // to l lies on that direction's dual line.
      const ProjPoint dir = meet(l, ProjLine(f->zero(), f->zero(), f->one()));
      bool counted = false;
      for (const auto& d : sc.directions) counted |= d == dir;
      CHECK(counted);
      CHECK(incident(dual(l), dual(dir)));
    }
}

TEST_CASE("slope bound and the dual lower bound agree") {
  const auto sq = slope_theorem_check(square());
  CHECK(sq.n == 4);
  CHECK(sq.w == 4);
  CHECK(sq.slope_bound);   // 4 >= 3
  CHECK(sq.apd_size == 8);
  CHECK(sq.m_apd == 4);
  CHECK(sq.m_pmod == 4);
  CHECK(sq.prop_lower_bound);  // 4 >= 7/2
  CHECK(sq.sides_agree);
  CHECK(sq.apd_supersolvable);
  CHECK(sq.holds);

  // Five points, no three collinear: all pairs give distinct slopes.
  const auto penta = slope_theorem_check(make_point_config(
      {{Rational(0), Rational(0)},
       {Rational(1), Rational(0)},
       {Rational(3), Rational(1)},
       {Rational(7), Rational(5)},
       {Rational(12), Rational(13)}}));
  CHECK(penta.w == 10);
  CHECK(penta.holds);

  const auto tri = slope_theorem_check(make_point_config(
      {{Rational(0), Rational(0)},
       {Rational(1), Rational(0)},
       {Rational(0), Rational(1)}}));
  CHECK(tri.w == 3);
  CHECK(tri.holds);
}

TEST_CASE("randomized rational configurations keep every pipeline promise") {
  std::mt19937_64 rng(424242);
  int done = 0;
  while (done < 60) {
    const size_t n = 3 + rng() % 7;  // 3..9
    const PointConfig cfg = random_config(rng, n);
    SlopeReport rep;
    try {
      rep = slope_theorem_check(cfg);
    } catch (const AllCollinear&) {
      continue;
    }
    ++done;
    CHECK(rep.holds);
    CHECK(rep.w >= n - 1);
    CHECK(rep.apd_supersolvable);
    CHECK(rep.m_apd == rep.m_pmod);
    CHECK(rep.apd_size == rep.n + rep.w);
  }
}
