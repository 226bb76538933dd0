#include <doctest.h>

#include <algorithm>

#include "arrangio/arrangement.hpp"
#include "arrangio/errors.hpp"
#include "arrangio/generators.hpp"
#include "arrangio/ss_config.hpp"

using namespace arrangio;

namespace {

using KMap = std::map<std::pair<size_t, size_t>, size_t>;

SSConfig pentagram() {
  // The m=5 surjective class that embeds no smaller template: canonical
  // labels (3,4,5,2,5,1,4,2,1,3) over pairs (1,2),(1,3),...,(4,5).
  return make_config(5, KMap{{{1, 2}, 3},
                             {{1, 3}, 4},
                             {{1, 4}, 5},
                             {{1, 5}, 2},
                             {{2, 3}, 5},
                             {{2, 4}, 1},
                             {{2, 5}, 4},
                             {{3, 4}, 2},
                             {{3, 5}, 1},
                             {{4, 5}, 3}});
}

size_t t2(const ArrangementStats& st) {
  auto it = st.t_k.find(2);
  return it == st.t_k.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("template labelings") {
  const SSConfig b3 = bm_template(3);
  CHECK(b3.label(1, 2) == 3);
  CHECK(b3.label(1, 3) == 2);
  CHECK(b3.label(2, 3) == 1);

  const SSConfig b4 = bm_template(4);
  CHECK(b4.label(1, 2) == 3);
  CHECK(b4.label(1, 3) == 4);
  CHECK(b4.label(1, 4) == 2);
  CHECK(b4.label(2, 3) == 1);
  CHECK(b4.label(2, 4) == 1);
  CHECK(b4.label(3, 4) == 1);

  for (size_t m = 3; m <= 10; ++m) {
    const auto r = config_validate(bm_template(m));
    CHECK(r.well_defined);
    CHECK(r.closed);
    CHECK(r.surjective);
    CHECK(r.valid(true));
  }
  CHECK_THROWS_AS(bm_template(2), ParameterOutOfRange);
}

TEST_CASE("construction rejects malformed labelings") {
  CHECK_THROWS_AS(make_config(2, {}), ParameterOutOfRange);
  CHECK_THROWS_AS(make_config(3, KMap{{{1, 2}, 4}}), InvalidConfig);
  CHECK_THROWS_AS(make_config(3, KMap{{{2, 1}, 3}}), InvalidConfig);
  // Self-labels and missing pairs are validation verdicts, not
  // construction errors.
  const SSConfig missing = make_config(3, KMap{{{1, 2}, 3}});
  CHECK_FALSE(config_validate(missing).well_defined);
  CHECK_THROWS_AS(missing.label(1, 3), InvalidConfig);
  const SSConfig self_label =
      make_config(3, KMap{{{1, 2}, 1}, {{1, 3}, 2}, {{2, 3}, 1}});
  CHECK_FALSE(config_validate(self_label).well_defined);
}

TEST_CASE("closure validation: two equal labels in a triangle conflict") {
  // m=3 leaves a single legal label per pair, so a repeated label there is
  // already a well-definedness violation; the pure closure case needs m=4.
  const SSConfig bad3 =
      make_config(3, KMap{{{1, 2}, 3}, {{1, 3}, 2}, {{2, 3}, 3}});
  const auto r3 = config_validate(bad3);
  CHECK_FALSE(r3.valid(false));
  CHECK_FALSE(r3.violations.empty());

  const SSConfig bad4 = make_config(4, KMap{{{1, 2}, 4},
                                            {{1, 3}, 4},
                                            {{2, 3}, 1},
                                            {{1, 4}, 2},
                                            {{2, 4}, 3},
                                            {{3, 4}, 2}});
  const auto r4 = config_validate(bad4);
  CHECK(r4.well_defined);
  CHECK_FALSE(r4.closed);
  bool names_triangle = false;
  for (const auto& v : r4.violations)
    names_triangle |= v.reason.find("triangle") != std::string::npos;
  CHECK(names_triangle);

  const SSConfig ok =
      make_config(3, KMap{{{1, 2}, 3}, {{1, 3}, 2}, {{2, 3}, 1}});
  CHECK(config_validate(ok).valid(true));
}

TEST_CASE("exhaustive classification, m = 3 and 4") {
  const auto s3 = search_classify(3, true);
  CHECK(s3.exhausted);
  CHECK(s3.labelings == 1);
  CHECK(s3.classes.size() == 1);
  CHECK(s3.classes[0].is_bm);
  CHECK(s3.classes[0].orbit_size == 1);

  const auto s4 = search_classify(4, true);
  CHECK(s4.exhausted);
  CHECK(s4.labelings == 8);
  CHECK(s4.classes.size() == 1);
  CHECK(s4.classes[0].is_bm);
  CHECK(s4.classes[0].orbit_size == 8);
  // Orbit sizes always add up to the labelings found.
  std::uint64_t total = 0;
  for (const auto& c : s4.classes) total += c.orbit_size;
  CHECK(total == s4.labelings);
}

TEST_CASE("exhaustive classification, m = 5") {
  const auto s5 = search_classify(5, true);
  CHECK(s5.exhausted);
  CHECK(s5.labelings == 111);
  CHECK(s5.classes.size() == 4);
  std::uint64_t total = 0;
  size_t bm = 0, with_sub = 0, uncovered = 0;
  for (const auto& c : s5.classes) {
    total += c.orbit_size;
    if (c.is_bm)
      ++bm;
    else if (!c.contains.empty())
      ++with_sub;
    else
      ++uncovered;
  }
  CHECK(total == 111);
  CHECK(bm == 1);
  CHECK(with_sub == 2);
  // One genuinely new class remains: the cyclic labeling below. It is
  // closure-valid, surjective, and embeds no smaller template.
  CHECK(uncovered == 1);
  const auto pent = config_validate(pentagram());
  CHECK(pent.valid(true));
  CHECK_FALSE(contains_bk(pentagram(), 3).found);
  CHECK_FALSE(contains_bk(pentagram(), 4).found);

  CHECK_THROWS_AS(search_classify(7, true), ParameterOutOfRange);
}

TEST_CASE("classification is deterministic") {
  const auto a = search_classify(4, false);
  const auto b = search_classify(4, false);
  REQUIRE(a.classes.size() == b.classes.size());
  for (size_t i = 0; i < a.classes.size(); ++i) {
    CHECK(a.classes[i].canonical.k == b.classes[i].canonical.k);
    CHECK(a.classes[i].orbit_size == b.classes[i].orbit_size);
  }
}

TEST_CASE("budgeted probe") {
  const auto full = search_probe(5, true, 100000000);
  CHECK(full.exhausted);
  CHECK(full.labelings == 111);

  const auto cut = search_probe(5, true, 50);
  CHECK_FALSE(cut.exhausted);

  CHECK_THROWS_AS(search_probe(11, true, 10), ParameterOutOfRange);
}

TEST_CASE("subconfiguration containment") {
  const auto self5 = contains_bk(bm_template(5), 5);
  CHECK(self5.found);
  CHECK(self5.subset == std::vector<size_t>{1, 2, 3, 4, 5});

  CHECK_FALSE(contains_bk(bm_template(4), 3).found);

  // Embed the m=3 template inside an m=4 labeling on the subset {1,2,3}:
  // internal labels stay inside the subset.
  const SSConfig embedded = make_config(4, KMap{{{1, 2}, 3},
                                                {{1, 3}, 2},
                                                {{2, 3}, 1},
                                                {{1, 4}, 2},
                                                {{2, 4}, 1},
                                                {{3, 4}, 1}});
  if (config_validate(embedded).closed) {
    const auto sub = contains_bk(embedded, 3);
    CHECK(sub.found);
    CHECK(sub.subset == std::vector<size_t>{1, 2, 3});
  }
}

TEST_CASE("template refutation over the rationals, m = 3..10") {
  for (size_t m = 3; m <= 10; ++m) {
    const auto r = realize_or_refute(bm_template(m), Field::rationals());
    REQUIRE(r.outcome == SolveOutcome::refuted);
    const auto& cert = *r.refutation;
    CHECK(cert.kind == "residual");
    CHECK(cert.normalization == "a1=1 b1=0 a2=0 b2=1");
    CHECK(std::get<Rational>(cert.coefficient.payload()) ==
          Rational(long(m) - 1));
    CHECK(verify_refutation(bm_template(m), cert));
  }
}

TEST_CASE("template realizations exactly when the coefficient vanishes") {
  // m - 1 = 0 in the field <=> p divides m - 1.
  const struct { size_t m; std::uint64_t p; } realizable[] = {
      {3, 2}, {4, 3}, {5, 2}, {6, 5}, {7, 2}, {7, 3}};
  for (const auto& [m, p] : realizable) {
    const auto r = realize_or_refute(bm_template(m), Field::prime(p));
    if ((m - 1) % p != 0) continue;
    if (r.outcome == SolveOutcome::refuted) {
      // p | m-1 kills the residual route, but a distinctness constraint
      // can still collapse (the m=5, p=2 case).
      CHECK(r.refutation->kind == "distinctness");
      continue;
    }
    REQUIRE(r.outcome == SolveOutcome::realized);
    CHECK(verify_realization(bm_template(m), *r.realization));
  }

  // Nonvanishing coefficient: refuted with the residual certificate.
  const auto r53 = realize_or_refute(bm_template(5), Field::prime(3));
  REQUIRE(r53.outcome == SolveOutcome::refuted);
  CHECK(r53.refutation->kind == "residual");

  // The m=5, p=2 case in full: delta_{2,4} collapses to zero.
  const auto r52 = realize_or_refute(bm_template(5), Field::prime(2));
  REQUIRE(r52.outcome == SolveOutcome::refuted);
  CHECK(r52.refutation->kind == "distinctness");
  CHECK(r52.refutation->delta_pair == std::pair<size_t, size_t>{2, 4});
  CHECK(verify_refutation(bm_template(5), *r52.refutation));
}

TEST_CASE("realizations induce the full supersolvable picture") {
  for (const auto& [m, p] : {std::pair<size_t, std::uint64_t>{3, 2},
                             std::pair<size_t, std::uint64_t>{4, 3},
                             std::pair<size_t, std::uint64_t>{6, 5}}) {
    const auto r = realize_or_refute(bm_template(m), Field::prime(p));
    REQUIRE(r.outcome == SolveOutcome::realized);
    const Arrangement a = induced_arrangement(*r.realization);
    CHECK(a.size() == 2 * m + 1);
    const auto st = stats(a);
    CHECK(st.supersolvable);
    const auto f = a.field();
    // The z line sits at index 2m and carries exactly m points, all triple.
    const size_t zi = 2 * m;
    CHECK(a.line(zi) == ProjLine(f->zero(), f->zero(), f->one()));
    size_t on_z = 0;
    for (const auto& sp : singular_locus(a).points)
      if (std::find(sp.incident.begin(), sp.incident.end(), zi) !=
          sp.incident.end()) {
        ++on_z;
        CHECK(sp.multiplicity() == 3);
      }
    CHECK(on_z == m);
  }
}

TEST_CASE("the m=3 realization over F_2 is the seven-line plane") {
  const auto r = realize_or_refute(bm_template(3), Field::prime(2));
  REQUIRE(r.outcome == SolveOutcome::realized);
  const Arrangement a = induced_arrangement(*r.realization);
  std::vector<ProjLine> la = a.lines(), lf = fano().lines();
  std::sort(la.begin(), la.end());
  std::sort(lf.begin(), lf.end());
  CHECK(la == lf);
  CHECK(t2(stats(a)) == 0);
}

TEST_CASE("propagation stalls honestly on the uncovered class") {
  for (const auto& f :
       {Field::rationals(), Field::prime(2), Field::prime(3)}) {
    const auto r = realize_or_refute(pentagram(), f);
    REQUIRE(r.outcome == SolveOutcome::inconclusive);
    CHECK_FALSE(r.stall->undetermined.empty());
  }
}

TEST_CASE("solver rejects invalid labelings") {
  const SSConfig bad =
      make_config(3, KMap{{{1, 2}, 3}, {{1, 3}, 2}, {{2, 3}, 3}});
  CHECK_THROWS_AS(realize_or_refute(bad, Field::rationals()), InvalidConfig);
}

TEST_CASE("derived chain of the template refutation") {
  for (size_t m = 3; m <= 8; ++m) {
    const ClaimTrace t = claim_sequence_check(m);
    CHECK(t.holds);
    CHECK(t.m == m);
    CHECK(t.final_coefficient == Rational(long(m) - 1));
    REQUIRE(t.steps.size() == m - 2);
    for (size_t i = 0; i < t.steps.size(); ++i) {
      CHECK(t.steps[i].holds);
      CHECK(t.steps[i].i == i);
      // a_{m-i} b_2 - a_2 b_{m-i} = (i+1) delta with delta = 1.
      CHECK(t.steps[i].rhs == Rational(long(i) + 1));
      CHECK(t.steps[i].lhs == t.steps[i].rhs);
    }
  }
  CHECK_THROWS_AS(claim_sequence_check(2), ParameterOutOfRange);
}

TEST_CASE("product membership at the shifted meets") {
  auto q = Field::rationals();
  // Two generic forms x and y: the product does not vanish at the single
  // shifted meet.
  CHECK_FALSE(product_membership_check(
      {{q->one(), q->zero()}, {q->zero(), q->one()}}));

  // A realization's forms always pass: supersolvability puts every
  // shifted meet on a pencil line.
  const auto r32 = realize_or_refute(bm_template(3), Field::prime(2));
  REQUIRE(r32.outcome == SolveOutcome::realized);
  CHECK(product_membership_check(r32.realization->coords));
  const auto r43 = realize_or_refute(bm_template(4), Field::prime(3));
  REQUIRE(r43.outcome == SolveOutcome::realized);
  CHECK(product_membership_check(r43.realization->coords));

  auto f3 = Field::prime(3);
  CHECK_THROWS_AS(
      product_membership_check({{f3->one(), f3->one()},
                                {f3->from_residue(2), f3->from_residue(2)}}),
      DependentForms);
}
