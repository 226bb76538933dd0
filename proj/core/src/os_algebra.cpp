#include "arrangio/os_algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "arrangio/errors.hpp"

namespace arrangio {

namespace {

void require_rank3(const Arrangement& a, const char* what) {
  if (a.rank() != 3) throw NotFullRank(what);
}

// Sorts line indices by canonical coordinates for deterministic blocks.
void sort_canonical(const Arrangement& a, std::vector<size_t>& idx) {
  std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) {
    return a.line(x) < a.line(y);
  });
}

}  // namespace

OrderedArrangement make_ordered(Arrangement a, std::vector<size_t> order) {
  const size_t n = a.size();
  if (order.size() != n)
    throw InvalidConfig("order must list every line index exactly once");
  std::vector<bool> seen(n, false);
  for (size_t i : order) {
    if (i >= n || seen[i])
      throw InvalidConfig("order must be a permutation of the line indices");
    seen[i] = true;
  }
  return OrderedArrangement{std::move(a), std::move(order)};
}

std::vector<std::array<size_t, 3>> circuits3(const Arrangement& a) {
  require_rank3(a, "circuit enumeration assumes full rank");
  SingularLocus locus = singular_locus(a);
  std::vector<std::array<size_t, 3>> circuits;
  for (const SingularPoint& sp : locus.points) {
    const auto& inc = sp.incident;  // sorted ascending
    for (size_t x = 0; x < inc.size(); ++x)
      for (size_t y = x + 1; y < inc.size(); ++y)
        for (size_t z = y + 1; z < inc.size(); ++z)
          circuits.push_back({inc[x], inc[y], inc[z]});
  }
  std::sort(circuits.begin(), circuits.end());
  return circuits;
}

NbcPairSet nbc_pairs(const OrderedArrangement& oa) {
  const Arrangement& a = oa.arrangement;
  require_rank3(a, "basis pairs assume full rank");
  std::vector<size_t> pos(a.size());
  for (size_t r = 0; r < oa.order.size(); ++r) pos[oa.order[r]] = r;
  SingularLocus locus = singular_locus(a);
  NbcPairSet out;
  for (const SingularPoint& sp : locus.points) {
    size_t least = sp.incident[0];
    for (size_t i : sp.incident)
      if (pos[i] < pos[least]) least = i;
    for (size_t i : sp.incident)
      if (i != least) out.pairs.emplace_back(least, i);
  }
  std::sort(out.pairs.begin(), out.pairs.end(),
            [&](const auto& p, const auto& q) {
              return std::pair(pos[p.first], pos[p.second]) <
                     std::pair(pos[q.first], pos[q.second]);
            });
  return out;
}

NbcPairSet quadratic_nbc(const OrderedArrangement& oa) {
  const Arrangement& a = oa.arrangement;
  NbcPairSet all = nbc_pairs(oa);
  SingularLocus locus = singular_locus(a);
  ProjPoint anchor = meet(a.line(oa.order[0]), a.line(oa.order[1]));
  NbcPairSet out;
  for (const auto& [i, j] : all.pairs) {
    ProjPoint p = meet(a.line(i), a.line(j));
    if (p == anchor || locus.find(p)->multiplicity() == 2)
      out.pairs.emplace_back(i, j);
  }
  return out;
}

OrderedArrangement modular_first_order(const Arrangement& a) {
  SupersolvableResult ss = is_supersolvable(a);  // throws NotFullRank
  if (!ss.supersolvable)
    throw NotSupersolvable("the pencil-first order needs a modular point");
  std::vector<size_t> pencil, rest;
  for (size_t i = 0; i < a.size(); ++i) {
    if (incident(*ss.witness, a.line(i)))
      pencil.push_back(i);
    else
      rest.push_back(i);
  }
  sort_canonical(a, pencil);
  sort_canonical(a, rest);
  pencil.insert(pencil.end(), rest.begin(), rest.end());
  return OrderedArrangement{a, std::move(pencil)};
}

namespace {

// One input's doubled-structure data: pencil (fiber) lines through the
// witness, the avoiding (off) lines, and the off -> fiber map delta given
// by each off line's unique simple point.
struct DoubledSide {
  size_t m = 0;
  std::vector<size_t> fiber;           // sorted canonical
  std::vector<size_t> off;             // sorted canonical
  std::vector<size_t> delta;           // off position -> fiber position
  std::vector<size_t> indegree;        // fiber position -> count
  std::string failure;                 // empty iff structure matched
};

DoubledSide analyze_side(const Arrangement& a, const char* tag) {
  if (a.rank() != 3)
    throw HypothesisNotMet(std::string(tag) + ": input must have full rank");
  SupersolvableResult ss = is_supersolvable(a);
  if (!ss.supersolvable)
    throw HypothesisNotMet(std::string(tag) + ": input must be supersolvable");
  SingularLocus locus = singular_locus(a);
  DoubledSide side;
  side.m = ss.witness_multiplicity;
  if (side.m < 3)
    throw HypothesisNotMet(std::string(tag) + ": needs m(A) >= 3");
  if (a.size() != 2 * side.m)
    throw HypothesisNotMet(std::string(tag) + ": needs n = 2m lines");
  size_t t2 = 0;
  for (const SingularPoint& sp : locus.points)
    if (sp.multiplicity() == 2) ++t2;
  if (t2 != side.m)
    throw HypothesisNotMet(std::string(tag) + ": needs exactly m simple points");

  for (size_t i = 0; i < a.size(); ++i) {
    if (incident(*ss.witness, a.line(i)))
      side.fiber.push_back(i);
    else
      side.off.push_back(i);
  }
  sort_canonical(a, side.fiber);
  sort_canonical(a, side.off);

  std::map<size_t, size_t> fiber_pos;
  for (size_t t = 0; t < side.fiber.size(); ++t) fiber_pos[side.fiber[t]] = t;
  side.indegree.assign(side.fiber.size(), 0);
  for (size_t o : side.off) {
    std::vector<size_t> partners;  // other line of each simple point on o
    for (const SingularPoint& sp : locus.points) {
      if (sp.multiplicity() != 2) continue;
      if (!std::binary_search(sp.incident.begin(), sp.incident.end(), o))
        continue;
      partners.push_back(sp.incident[0] == o ? sp.incident[1]
                                             : sp.incident[0]);
    }
    if (partners.size() != 1) {
      side.failure = std::string(tag) + ": an avoiding line carries " +
                     std::to_string(partners.size()) +
                     " simple points instead of one";
      return side;
    }
    auto it = fiber_pos.find(partners[0]);
    if (it == fiber_pos.end()) {
      side.failure = std::string(tag) +
                     ": a simple point joins two avoiding lines";
      return side;
    }
    side.delta.push_back(it->second);
    side.indegree[it->second] += 1;
  }
  return side;
}

// In-degree multiset of j -> 2j mod m on m points.
std::vector<size_t> doubling_pattern(size_t m) {
  std::vector<size_t> indeg(m, 0);
  for (size_t j = 0; j < m; ++j) indeg[(2 * j) % m] += 1;
  std::sort(indeg.begin(), indeg.end());
  return indeg;
}

std::vector<size_t> sorted_copy(std::vector<size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

Equiv2mVerdict equiv_2m_verdict(const Arrangement& a, const Arrangement& b) {
  DoubledSide sa = analyze_side(a, "first input");
  DoubledSide sb = analyze_side(b, "second input");
  if (sa.m != sb.m)
    throw HypothesisNotMet("inputs have different maximal multiplicities");

  Equiv2mVerdict verdict;
  if (!sa.failure.empty() || !sb.failure.empty()) {
    verdict.detail = sa.failure.empty() ? sb.failure : sa.failure;
    return verdict;
  }
  std::vector<size_t> pattern = doubling_pattern(sa.m);
  if (sorted_copy(sa.indegree) != pattern) {
    verdict.detail = "first input's pencil in-degrees differ from the "
                     "doubled-index pattern";
    return verdict;
  }
  if (sorted_copy(sb.indegree) != pattern) {
    verdict.detail = "second input's pencil in-degrees differ from the "
                     "doubled-index pattern";
    return verdict;
  }

  // Build the witness bijection: pair fiber lines by in-degree, then map
  // the corresponding delta-preimages positionally.
  auto fiber_order = [](const DoubledSide& s) {
    std::vector<size_t> order(s.fiber.size());
    for (size_t t = 0; t < order.size(); ++t) order[t] = t;
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
      return s.indegree[x] > s.indegree[y];
    });
    return order;  // fiber positions, heaviest in-degree first
  };
  std::vector<size_t> fa = fiber_order(sa);
  std::vector<size_t> fb = fiber_order(sb);

  verdict.witness.assign(a.size(), 0);
  std::vector<size_t> fiber_map(sa.fiber.size());  // a-pos -> b-pos
  for (size_t t = 0; t < fa.size(); ++t) {
    fiber_map[fa[t]] = fb[t];
    verdict.witness[sa.fiber[fa[t]]] = sb.fiber[fb[t]];
  }
  // Preimages of each fiber position, in canonical off-line order.
  auto preimages = [](const DoubledSide& s, size_t fiber_pos) {
    std::vector<size_t> pre;
    for (size_t o = 0; o < s.off.size(); ++o)
      if (s.delta[o] == fiber_pos) pre.push_back(s.off[o]);
    return pre;
  };
  for (size_t t = 0; t < sa.fiber.size(); ++t) {
    std::vector<size_t> pa = preimages(sa, t);
    std::vector<size_t> pb = preimages(sb, fiber_map[t]);
    if (pa.size() != pb.size())
      throw CheckFailed("matched fiber lines have unequal in-degrees");
    for (size_t r = 0; r < pa.size(); ++r) verdict.witness[pa[r]] = pb[r];
  }
  verdict.equivalent = true;
  verdict.detail = "doubled-index pattern matched on both inputs";
  return verdict;
}

}  // namespace arrangio
