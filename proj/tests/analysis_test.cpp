#include <doctest.h>

#include <random>
#include <set>

#include "arrangio/analysis.hpp"
#include "arrangio/arrangement.hpp"
#include "arrangio/errors.hpp"
#include "arrangio/generators.hpp"

using namespace arrangio;

namespace {

const FieldPtr& Q() {
  static FieldPtr q = Field::rationals();
  return q;
}

ProjLine line(long a, long b, long c) {
  return ProjLine(Q()->from_int(a), Q()->from_int(b), Q()->from_int(c));
}

// Random rational pencil through a random apex plus a few transversals:
// always supersolvable, n <= 12.
Arrangement random_supersolvable(std::mt19937_64& rng) {
  for (;;) {
    const ProjPoint apex(Q()->from_int(long(rng() % 7) - 3),
                         Q()->from_int(long(rng() % 7) - 3), Q()->one());
    std::set<ProjLine> seen;
    std::vector<ProjLine> lines;
    const size_t pencil = 3 + rng() % 4;
    for (int tries = 0; tries < 40 && seen.size() < pencil; ++tries) {
      const long a = long(rng() % 9) - 4, b = long(rng() % 9) - 4,
                 c = long(rng() % 9) - 4;
      if (!a && !b && !c) continue;
      const ProjPoint q(Q()->from_int(a), Q()->from_int(b), Q()->from_int(c));
      if (q == apex) continue;
      ProjLine l = join(apex, q);
      if (seen.insert(l).second) lines.push_back(std::move(l));
    }
    const size_t extra = 1 + rng() % 3;
    for (size_t got = 0; got < extra; ++got) {
      const long a = long(rng() % 9) - 4, b = long(rng() % 9) - 4,
                 c = long(rng() % 9) - 4;
      if (!a && !b && !c) continue;
      ProjLine l = line(a, b, c);
      if (incident(apex, l)) continue;
      if (seen.insert(l).second) lines.push_back(std::move(l));
    }
    const Arrangement a = Arrangement::build(std::move(lines));
    if (a.rank() == 3 && a.size() >= 4 && is_supersolvable(a).supersolvable)
      return a;
  }
}

}  // namespace

TEST_CASE("simple-point lower bound n/2") {
  const auto b4 = dirac_motzkin_check(boroczky(4));
  CHECK(b4.holds);
  CHECK(b4.equality);
  CHECK(b4.lhs == 4);
  CHECK(b4.rhs == Rational(4));

  const auto nine = dirac_motzkin_check(example_nine());
  CHECK(nine.holds);
  CHECK_FALSE(nine.equality);
  CHECK(nine.lhs == 6);
  CHECK(nine.rhs == Rational(9, 2));

  const auto np = dirac_motzkin_check(near_pencil(6));
  CHECK(np.lhs == 5);
  CHECK(np.rhs == Rational(3));
  CHECK(np.holds);

  CHECK_THROWS_AS(dirac_motzkin_check(hesse_dual()), NotSupersolvable);
}

TEST_CASE("simple points plus maximal multiplicity reach n") {
  const auto b5 = corollary_check(boroczky(5));
  CHECK(b5.holds);
  CHECK(b5.equality);
  CHECK(b5.lhs == 10);

  const auto np7 = corollary_check(near_pencil(7));
  CHECK(np7.lhs == 12);
  CHECK(np7.rhs == Rational(7));

  const auto nine = corollary_check(example_nine());
  CHECK(nine.lhs == 10);
  CHECK(nine.rhs == Rational(9));
  CHECK(nine.holds);
}

TEST_CASE("locus-size lower bound and the generic closed form") {
  const auto b4 = sing_bound_check(boroczky(4));
  CHECK(b4.holds);
  CHECK(b4.equality);  // generic off-pencil part
  CHECK(b4.lhs == 4);  // equals (n-m)(2m-n+1) = 4

  const auto nine = sing_bound_check(example_nine());
  CHECK(nine.holds);
  CHECK_FALSE(nine.equality);
  CHECK(nine.lhs == 6);
  CHECK(nine.rhs == Rational(4));

  const auto b6 = sing_bound_check(boroczky(6));
  CHECK(b6.equality);

  // Triangle is supersolvable with maximal multiplicity 2: out of scope.
  const Arrangement tri =
      Arrangement::build({line(1, 0, 0), line(0, 1, 0), line(0, 0, 1)});
  CHECK_THROWS_AS(sing_bound_check(tri), MultiplicityTooSmall);
}

TEST_CASE("per-line profiles at the modular point") {
  const Arrangement b3 = boroczky(3);
  const auto f3 = b3.field();
  const ProjPoint p3(f3->zero(), f3->zero(), f3->one());
  for (const auto& lp : line_profiles(b3, p3))
    if (lp.through_modular) CHECK(lp.u == 1);

  const Arrangement b4 = boroczky(4);
  const auto f4 = b4.field();
  std::multiset<size_t> u_pencil, u_plain;
  for (const auto& lp :
       line_profiles(b4, ProjPoint(f4->zero(), f4->zero(), f4->one()))) {
    (lp.through_modular ? u_pencil : u_plain).insert(lp.u);
  }
  CHECK(u_pencil == std::multiset<size_t>{0, 0, 2, 2});
  CHECK(u_plain == std::multiset<size_t>{1, 1, 1, 1});

  CHECK_THROWS_AS(
      line_profiles(b4, ProjPoint(f4->one(), f4->zero(), f4->zero())),
      NotModular);
}

TEST_CASE("every line avoiding the witness carries a simple point") {
  const auto nine = nonmodular_line_check(example_nine());
  CHECK(nine.hypothesis_met);
  CHECK(nine.holds);
  CHECK(nine.violations.empty());

  const auto b5 = nonmodular_line_check(boroczky(5));
  CHECK(b5.hypothesis_met);
  CHECK(b5.holds);

  // No real embedding for F_2: reported as hypothesis-not-met, never as a
  // violation (the Fano plane has no simple points at all).
  const auto fr = nonmodular_line_check(fano());
  CHECK_FALSE(fr.hypothesis_met);
}

TEST_CASE("two modular points of distinct multiplicities") {
  const auto np6 = two_modular_check(near_pencil(6));
  CHECK(np6.holds);
  CHECK_FALSE(np6.pairs.empty());
  for (const auto& pr : np6.pairs) {
    CHECK(pr.m1 + pr.m2 == 7);
    CHECK(pr.identity_holds);
    CHECK(pr.covers);
  }

  const auto np9 = two_modular_check(near_pencil(9));
  CHECK(np9.holds);
  for (const auto& pr : np9.pairs) CHECK(pr.m1 + pr.m2 == 10);

  CHECK_THROWS_AS(two_modular_check(boroczky(4)), HypothesisNotMet);
}

TEST_CASE("bounds hold on randomized supersolvable arrangements") {
  std::mt19937_64 rng(20260601);
  for (int t = 0; t < 100; ++t) {
    const Arrangement a = random_supersolvable(rng);
    const auto dm = dirac_motzkin_check(a);
    CHECK(dm.holds);
    const auto co = corollary_check(a);
    CHECK(co.holds);
    const auto st = stats(a);
    if (st.m_max >= 3) {
      const auto sb = sing_bound_check(a);
      CHECK(sb.holds);
      // Equality exactly when the avoiding part is generic.
      const auto ss = is_supersolvable(a);
      const auto split = split_by_modular(a, *ss.witness);
      const size_t h = split.avoiding.size();
      const size_t hs =
          h >= 2 ? singular_locus(subarrangement(a, split.avoiding)).size()
                 : 0;
      CHECK(sb.equality == (hs == h * (h - 1) / 2));
    }
  }
}

TEST_CASE("bundled checks fold hypothesis failures instead of throwing") {
  const auto nine = run_all_checks(example_nine(), "nine");
  CHECK(nine.all_hold());
  CHECK(nine.arrangement_id == "nine");

  const auto hesse = run_all_checks(hesse_dual(), "hesse");
  CHECK(hesse.all_hold());  // nothing applies; nothing may fail
  bool any_hypothesis_met = false;
  for (const auto& c : hesse.checks) any_hypothesis_met |= c.hypothesis_met;
  CHECK_FALSE(any_hypothesis_met);
}
