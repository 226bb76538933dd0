#include "arrangio/arrangement.hpp"

#include <algorithm>
#include <set>

#include "arrangio/errors.hpp"

namespace arrangio {

namespace {

size_t choose2(size_t n) { return n * (n - 1) / 2; }

// Rank of the n x 3 coordinate matrix by exact Gaussian elimination.
int triple_rank(const std::vector<ProjLine>& lines) {
  std::vector<std::array<FieldElement, 3>> rows;
  rows.reserve(lines.size());
  for (const ProjLine& l : lines) rows.push_back({l[0], l[1], l[2]});
  size_t pivot_row = 0;
  for (size_t col = 0; col < 3 && pivot_row < rows.size(); ++col) {
    size_t found = rows.size();
    for (size_t r = pivot_row; r < rows.size(); ++r) {
      if (!rows[r][col].is_zero()) {
        found = r;
        break;
      }
    }
    if (found == rows.size()) continue;
    std::swap(rows[pivot_row], rows[found]);
    FieldElement inv = rows[pivot_row][col].inverse();
    for (size_t c = col; c < 3; ++c)
      rows[pivot_row][c] = rows[pivot_row][c] * inv;
    for (size_t r = pivot_row + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      FieldElement factor = rows[r][col];
      for (size_t c = col; c < 3; ++c)
        rows[r][c] = rows[r][c] - factor * rows[pivot_row][c];
    }
    ++pivot_row;
  }
  return static_cast<int>(pivot_row);
}

}  // namespace

Arrangement Arrangement::build(std::vector<ProjLine> lines) {
  Arrangement a;
  std::set<ProjLine> seen;
  for (ProjLine& l : lines) {
    if (!a.lines_.empty() && !a.field()->same(*l.field()))
      throw SpecMismatch("arrangement lines lie in different fields");
    if (seen.insert(l).second) a.lines_.push_back(std::move(l));
  }
  if (a.lines_.empty())
    throw EmptyArrangement("an arrangement needs at least one line");
  a.rank_ = triple_rank(a.lines_);
  return a;
}

bool Arrangement::contains(const ProjLine& l) const {
  return index_of(l).has_value();
}

std::optional<size_t> Arrangement::index_of(const ProjLine& l) const {
  for (size_t i = 0; i < lines_.size(); ++i)
    if (lines_[i] == l) return i;
  return std::nullopt;
}

bool Arrangement::is_real() const {
  for (const ProjLine& l : lines_)
    if (!l.is_real()) return false;
  return true;
}

const SingularPoint* SingularLocus::find(const ProjPoint& p) const {
  auto it = std::lower_bound(
      points.begin(), points.end(), p,
      [](const SingularPoint& s, const ProjPoint& q) { return s.point < q; });
  if (it != points.end() && it->point == p) return &*it;
  return nullptr;
}

SingularLocus singular_locus(const Arrangement& a) {
  const size_t n = a.size();
  if (n < 2) throw TooFewLines("singular locus needs at least two lines");
  std::map<ProjPoint, std::set<size_t>> groups;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      ProjPoint p = meet(a.line(i), a.line(j));
      auto& g = groups[p];
      g.insert(i);
      g.insert(j);
    }
  SingularLocus locus;
  locus.points.reserve(groups.size());
  size_t pair_total = 0;
  for (auto& [point, idx] : groups) {
    SingularPoint sp{point, std::vector<size_t>(idx.begin(), idx.end())};
    for (size_t i : sp.incident)
      if (!incident(point, a.line(i)))
        throw CheckFailed("grouped line fails the incidence re-test");
    for (size_t i = 0; i < n; ++i)
      if (!idx.count(i) && incident(point, a.line(i)))
        throw CheckFailed("incident line omitted from a singular point");
    pair_total += choose2(sp.multiplicity());
    locus.points.push_back(std::move(sp));
  }
  if (pair_total != choose2(n))
    throw CheckFailed("pairs identity sum C(m_P,2) = C(n,2) violated");
  return locus;
}

ArrangementStats stats(const Arrangement& a) {
  if (a.size() < 2) throw TooFewLines("stats need at least two lines");
  SingularLocus locus = singular_locus(a);
  ArrangementStats st;
  st.n = a.size();
  st.rank = a.rank();
  st.sing_total = locus.size();
  for (const SingularPoint& sp : locus.points) {
    st.t_k[sp.multiplicity()] += 1;
    st.m_max = std::max(st.m_max, sp.multiplicity());
  }
  if (a.rank() == 3) {
    st.modular = modular_points(a);
    st.supersolvable = !st.modular.empty();
  }
  return st;
}

std::vector<ProjPoint> modular_points(const Arrangement& a) {
  if (a.rank() != 3)
    throw NotFullRank("modular points are defined for full-rank arrangements");
  SingularLocus locus = singular_locus(a);
  std::set<ProjLine> line_set(a.lines().begin(), a.lines().end());
  std::vector<ProjPoint> result;
  for (const SingularPoint& p : locus.points) {
    bool modular = true;
    for (const SingularPoint& q : locus.points) {
      if (q.point == p.point) continue;
      if (!line_set.count(join(p.point, q.point))) {
        modular = false;
        break;
      }
    }
    if (modular) result.push_back(p.point);
  }
  return result;
}

SupersolvableResult is_supersolvable(const Arrangement& a) {
  if (a.rank() != 3)
    throw NotFullRank("supersolvability is defined for full-rank arrangements");
  SingularLocus locus = singular_locus(a);
  std::vector<ProjPoint> modular = modular_points(a);
  SupersolvableResult r;
  r.supersolvable = !modular.empty();
  if (!r.supersolvable) return r;
  size_t m_max = 0;
  for (const SingularPoint& sp : locus.points)
    m_max = std::max(m_max, sp.multiplicity());
  for (const ProjPoint& p : modular) {  // canonical order; first hit is least
    const SingularPoint* sp = locus.find(p);
    if (sp && sp->multiplicity() == m_max) {
      r.witness = p;
      r.witness_multiplicity = m_max;
      return r;
    }
  }
  throw CheckFailed(
      "supersolvable arrangement has no modular point of maximal "
      "multiplicity");
}

ModularSplit split_by_modular(const Arrangement& a, const ProjPoint& p) {
  std::vector<ProjPoint> modular = modular_points(a);
  if (std::find(modular.begin(), modular.end(), p) == modular.end())
    throw NotModular("split requires a modular point of the arrangement");
  ModularSplit split{p, {}, {}};
  for (size_t i = 0; i < a.size(); ++i) {
    if (incident(p, a.line(i)))
      split.through.push_back(i);
    else
      split.avoiding.push_back(i);
  }
  return split;
}

LineIdentityReport line_identity_check(const Arrangement& a) {
  SingularLocus locus = singular_locus(a);
  const size_t n = a.size();
  LineIdentityReport report;
  report.holds = true;
  for (size_t i = 0; i < n; ++i) {
    size_t sum = 0;
    for (const SingularPoint& sp : locus.points)
      if (std::binary_search(sp.incident.begin(), sp.incident.end(), i))
        sum += sp.multiplicity() - 1;
    LineIdentityEntry entry{i, sum, sum == n - 1};
    report.holds = report.holds && entry.holds;
    report.per_line.push_back(entry);
  }
  return report;
}

Arrangement subarrangement(const Arrangement& a,
                           const std::vector<size_t>& idx) {
  std::vector<ProjLine> lines;
  lines.reserve(idx.size());
  for (size_t i : idx) {
    if (i >= a.size())
      throw ParameterOutOfRange("subarrangement index exceeds line count");
    lines.push_back(a.line(i));
  }
  return Arrangement::build(std::move(lines));
}

}  // namespace arrangio
