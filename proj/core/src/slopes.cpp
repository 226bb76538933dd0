#include "arrangio/slopes.hpp"

#include <set>

#include "arrangio/errors.hpp"

namespace arrangio {

namespace {

std::vector<ProjPoint> homogenize_all(const PointConfig& cfg) {
  FieldPtr q = Field::rationals();
  std::vector<ProjPoint> pts;
  pts.reserve(cfg.size());
  for (const auto& p : cfg.points) pts.push_back(homogenize(q, p));
  return pts;
}

void require_noncollinear(const std::vector<ProjPoint>& pts) {
  if (pts.size() < 2) throw TooFewPoints("slope counting needs >= 2 points");
  if (pts.size() == 2)
    throw AllCollinear("two points always lie on a single line");
  ProjLine base = join(pts[0], pts[1]);
  for (size_t i = 2; i < pts.size(); ++i)
    if (!incident(pts[i], base)) return;
  throw AllCollinear("all points lie on a single line");
}

}  // namespace

PointConfig make_point_config(
    std::vector<std::pair<Rational, Rational>> pts) {
  for (auto& [x, y] : pts) {
    x = canonicalized(std::move(x));
    y = canonicalized(std::move(y));
  }
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j])
        throw InvalidConfig("point configurations must have distinct points");
  return PointConfig{std::move(pts)};
}

ProjPoint homogenize(const FieldPtr& q,
                     const std::pair<Rational, Rational>& p) {
  return ProjPoint(q->from_rational(p.first), q->from_rational(p.second),
                   q->one());
}

SlopeCount slopes_count(const PointConfig& cfg) {
  std::vector<ProjPoint> pts = homogenize_all(cfg);
  require_noncollinear(pts);
  FieldPtr q = Field::rationals();
  ProjLine infinity(q->zero(), q->zero(), q->one());
  std::set<ProjPoint> dirs;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      dirs.insert(meet(join(pts[i], pts[j]), infinity));
  SlopeCount out;
  out.directions.assign(dirs.begin(), dirs.end());
  out.w = out.directions.size();
  return out;
}

Arrangement build_apd(const PointConfig& cfg) {
  std::vector<ProjPoint> pts = homogenize_all(cfg);
  require_noncollinear(pts);
  SlopeCount slopes = slopes_count(cfg);
  std::vector<ProjLine> lines;
  lines.reserve(pts.size() + slopes.w);
  for (const ProjPoint& p : pts) lines.push_back(dual(p));
  for (const ProjPoint& d : slopes.directions) lines.push_back(dual(d));
  return Arrangement::build(std::move(lines));
}

SlopeReport slope_theorem_check(const PointConfig& cfg) {
  if (cfg.size() < 3)
    throw TooFewPoints("the slope statement needs at least 3 points");
  std::vector<ProjPoint> pts = homogenize_all(cfg);
  require_noncollinear(pts);

  SlopeReport report;
  report.n = cfg.size();
  SlopeCount slopes = slopes_count(cfg);
  report.w = slopes.w;
  report.directions = slopes.directions;

  std::set<ProjLine> joins;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      joins.insert(join(pts[i], pts[j]));
  report.lines_determined = joins.size();

  Arrangement apd = build_apd(cfg);
  report.apd_size = apd.size();
  if (report.apd_size != report.n + report.w)
    throw CheckFailed("dual arrangement must have n + w distinct lines");

  SingularLocus locus = singular_locus(apd);
  FieldPtr q = Field::rationals();
  ProjPoint pmod(q->zero(), q->zero(), q->one());
  const SingularPoint* at_pmod = locus.find(pmod);
  report.m_pmod = at_pmod ? at_pmod->multiplicity() : 0;
  for (const SingularPoint& sp : locus.points)
    report.m_apd = std::max(report.m_apd, sp.multiplicity());

  report.apd_supersolvable = is_supersolvable(apd).supersolvable;
  report.slope_bound = report.w >= report.n - 1;
  report.prop_lower_bound =
      Rational(static_cast<long>(report.m_apd)) >=
      Rational(static_cast<long>(report.apd_size) - 1) / 2;
  bool pmod_side = Rational(static_cast<long>(report.m_pmod)) >=
                   Rational(static_cast<long>(report.apd_size) - 1) / 2;
  report.sides_agree = (report.slope_bound == pmod_side);

  report.holds = report.slope_bound && report.apd_supersolvable &&
                 report.prop_lower_bound && report.sides_agree &&
                 report.m_apd == report.m_pmod;
  return report;
}

}  // namespace arrangio
