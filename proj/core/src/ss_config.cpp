#include "arrangio/ss_config.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>

#include "arrangio/errors.hpp"
#include "arrangio/projective.hpp"

namespace arrangio {

namespace {

// --- dense labeling helpers (1-based indices, labels stored per lex pair) ---

std::vector<std::pair<size_t, size_t>> lex_pairs(size_t m) {
  std::vector<std::pair<size_t, size_t>> out;
  out.reserve(m * (m - 1) / 2);
  for (size_t i = 1; i <= m; ++i)
    for (size_t j = i + 1; j <= m; ++j) out.emplace_back(i, j);
  return out;
}

// idx[i][j] for 1 <= i < j <= m into the lex pair list.
std::vector<std::vector<size_t>> pair_index(size_t m) {
  std::vector<std::vector<size_t>> idx(m + 1, std::vector<size_t>(m + 1, 0));
  size_t p = 0;
  for (size_t i = 1; i <= m; ++i)
    for (size_t j = i + 1; j <= m; ++j) idx[i][j] = p++;
  return idx;
}

std::uint64_t factorial(size_t m) {
  std::uint64_t f = 1;
  for (size_t i = 2; i <= m; ++i) f *= i;
  return f;
}

std::vector<uint8_t> dense_labels(const SSConfig& cfg) {
  std::vector<uint8_t> labels(cfg.pair_count(), 0);
  const auto idx = pair_index(cfg.m);
  for (const auto& [pr, l] : cfg.k) labels[idx[pr.first][pr.second]] = uint8_t(l);
  return labels;
}

SSConfig from_dense(size_t m, const std::vector<uint8_t>& labels) {
  std::map<std::pair<size_t, size_t>, size_t> k;
  size_t p = 0;
  for (size_t i = 1; i <= m; ++i)
    for (size_t j = i + 1; j <= m; ++j) k[{i, j}] = labels[p++];
  return SSConfig{m, std::move(k)};
}

// Image of the labeling under sigma: the label of {sigma i, sigma j} is
// sigma applied to the label of {i, j}.
void apply_perm(size_t m, const std::vector<uint8_t>& labels,
                const std::vector<uint8_t>& sigma,
                const std::vector<std::vector<size_t>>& idx,
                std::vector<uint8_t>& out) {
  size_t p = 0;
  for (size_t i = 1; i <= m; ++i)
    for (size_t j = i + 1; j <= m; ++j) {
      uint8_t ni = sigma[i - 1], nj = sigma[j - 1];
      if (ni > nj) std::swap(ni, nj);
      out[idx[ni][nj]] = sigma[labels[p++] - 1];
    }
}

struct CanonicalScan {
  bool canonical = false;  // input is the lex-least member of its orbit
  size_t stabilizer = 0;   // permutations fixing the labeling
  std::vector<uint8_t> least;
};

// Full orbit scan; budget-aware (one work unit per permutation). When the
// budget runs out mid-scan, aborted is set and the result is unusable.
CanonicalScan canonical_scan(size_t m, const std::vector<uint8_t>& labels,
                             const std::vector<std::vector<size_t>>& idx,
                             std::uint64_t& work, std::uint64_t budget,
                             bool& aborted) {
  CanonicalScan r;
  r.canonical = true;
  r.least = labels;
  std::vector<uint8_t> sigma(m);
  std::iota(sigma.begin(), sigma.end(), uint8_t(1));
  std::vector<uint8_t> img(labels.size());
  do {
    if (++work > budget) {
      aborted = true;
      return r;
    }
    apply_perm(m, labels, sigma, idx, img);
    if (img < r.least) {
      r.least = img;
      r.canonical = false;
      r.stabilizer = 0;  // stabilizer only meaningful for canonical inputs
    } else if (img == labels) {
      ++r.stabilizer;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return r;
}

std::vector<uint8_t> canonical_labels(size_t m,
                                      const std::vector<uint8_t>& labels) {
  const auto idx = pair_index(m);
  std::uint64_t work = 0;
  bool aborted = false;
  auto scan = canonical_scan(m, labels, idx, work, UINT64_MAX, aborted);
  return scan.least;
}

// Exactly two equal labels among a triangle's three pairs breaks closure.
bool triangle_ok(uint8_t a, uint8_t b, uint8_t c) {
  const int eq = int(a == b) + int(a == c) + int(b == c);
  return eq != 1;
}

// --- solver helpers -------------------------------------------------------

// Scalar slots: a_i -> 2(i-1), b_i -> 2(i-1)+1 (i is 1-based).
size_t slot_a(size_t i) { return 2 * (i - 1); }
size_t slot_b(size_t i) { return 2 * (i - 1) + 1; }

std::string slot_name(size_t s) {
  return (s % 2 == 0 ? "a" : "b") + std::to_string(s / 2 + 1);
}

std::optional<size_t> slot_parse(const std::string& name, size_t m) {
  if (name.size() < 2 || (name[0] != 'a' && name[0] != 'b')) return std::nullopt;
  size_t i = 0;
  for (size_t p = 1; p < name.size(); ++p) {
    if (name[p] < '0' || name[p] > '9') return std::nullopt;
    i = i * 10 + size_t(name[p] - '0');
  }
  if (i < 1 || i > m) return std::nullopt;
  return name[0] == 'a' ? slot_a(i) : slot_b(i);
}

struct Mono {
  size_t x, y;
  int sign;  // +1 / -1
};

// Concurrency of the shifted lines i, j with the pencil line t:
// a_t b_i - a_t b_j - b_t a_i + b_t a_j = 0.
std::array<Mono, 4> dependency_monos(size_t i, size_t j, size_t t) {
  return {Mono{slot_a(t), slot_b(i), +1}, Mono{slot_a(t), slot_b(j), -1},
          Mono{slot_b(t), slot_a(i), -1}, Mono{slot_b(t), slot_a(j), +1}};
}

struct LinearView {
  FieldElement cst;
  std::vector<std::pair<size_t, FieldElement>> lin;  // slot -> coefficient
  bool resolvable = false;  // no unknown-times-unknown monomial
};

template <size_t N>
LinearView classify(const Field& F, const std::array<Mono, N>& monos,
                    const std::vector<std::optional<FieldElement>>& val) {
  LinearView v{F.zero(), {}, true};
  for (const auto& mo : monos) {
    const auto& vx = val[mo.x];
    const auto& vy = val[mo.y];
    const FieldElement s = mo.sign > 0 ? F.one() : F.zero() - F.one();
    if (vx && vy) {
      v.cst = v.cst + s * (*vx) * (*vy);
    } else if (vx && !vy) {
      if (!vx->is_zero()) v.lin.emplace_back(mo.y, s * (*vx));
    } else if (!vx && vy) {
      if (!vy->is_zero()) v.lin.emplace_back(mo.x, s * (*vy));
    } else {
      v.resolvable = false;
      return v;
    }
  }
  // Merge repeated slots; drop unknowns whose net coefficient vanishes.
  std::sort(v.lin.begin(), v.lin.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<size_t, FieldElement>> merged;
  for (auto& [s, c] : v.lin) {
    if (!merged.empty() && merged.back().first == s)
      merged.back().second = merged.back().second + c;
    else
      merged.emplace_back(s, c);
  }
  v.lin.clear();
  for (auto& [s, c] : merged)
    if (!c.is_zero()) v.lin.emplace_back(s, c);
  return v;
}

std::array<Mono, 2> delta_monos(size_t i, size_t j) {
  return {Mono{slot_a(i), slot_b(j), +1}, Mono{slot_a(j), slot_b(i), -1}};
}

FieldElement normalize_sign(const Field& F, const FieldElement& c) {
  if (F.kind() == FieldKind::rationals) {
    const Rational& q = std::get<Rational>(c.payload());
    if (q < Rational(0)) return F.zero() - c;
  }
  return c;
}

constexpr const char* kNormalization = "a1=1 b1=0 a2=0 b2=1";

std::vector<std::optional<FieldElement>> normalized_slots(const Field& F,
                                                          size_t m) {
  std::vector<std::optional<FieldElement>> val(2 * m);
  val[slot_a(1)] = F.one();
  val[slot_b(1)] = F.zero();
  val[slot_a(2)] = F.zero();
  val[slot_b(2)] = F.one();
  return val;
}

}  // namespace

size_t SSConfig::label(size_t i, size_t j) const {
  if (i > j) std::swap(i, j);
  auto it = k.find({i, j});
  if (it == k.end())
    throw InvalidConfig("no label for pair (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
  return it->second;
}

SSConfig make_config(size_t m, std::map<std::pair<size_t, size_t>, size_t> k) {
  if (m < 3) throw ParameterOutOfRange("configuration needs m >= 3");
  for (const auto& [pr, l] : k) {
    auto [i, j] = pr;
    if (i < 1 || j < 1 || i > m || j > m || i >= j)
      throw InvalidConfig("pair (" + std::to_string(i) + "," +
                          std::to_string(j) + ") is not 1 <= i < j <= m");
    if (l < 1 || l > m)
      throw InvalidConfig("label " + std::to_string(l) + " out of 1..m");
  }
  return SSConfig{m, std::move(k)};
}

SSConfig bm_template(size_t m) {
  if (m < 3) throw ParameterOutOfRange("template needs m >= 3");
  std::map<std::pair<size_t, size_t>, size_t> k;
  for (size_t j = 2; j + 1 <= m; ++j) k[{1, j}] = j + 1;
  k[{1, m}] = 2;
  for (size_t i = 2; i <= m; ++i)
    for (size_t j = i + 1; j <= m; ++j) k[{i, j}] = 1;
  return SSConfig{m, std::move(k)};
}

ValidationReport config_validate(const SSConfig& cfg) {
  ValidationReport rep;
  if (cfg.m < 3) {
    rep.violations.push_back({0, 0, 0, "m < 3"});
    return rep;
  }
  rep.well_defined = true;
  for (size_t i = 1; i <= cfg.m; ++i)
    for (size_t j = i + 1; j <= cfg.m; ++j) {
      auto it = cfg.k.find({i, j});
      if (it == cfg.k.end()) {
        rep.well_defined = false;
        rep.violations.push_back({i, j, 0, "missing label"});
        continue;
      }
      const size_t l = it->second;
      if (l < 1 || l > cfg.m) {
        rep.well_defined = false;
        rep.violations.push_back({i, j, l, "label out of 1..m"});
      } else if (l == i || l == j) {
        rep.well_defined = false;
        rep.violations.push_back({i, j, l, "label names its own pair"});
      }
    }
  if (!rep.well_defined) return rep;

  rep.closed = true;
  for (size_t a = 1; a <= cfg.m; ++a)
    for (size_t b = a + 1; b <= cfg.m; ++b)
      for (size_t c = b + 1; c <= cfg.m; ++c) {
        const size_t la = cfg.label(a, b), lb = cfg.label(a, c),
                     lc = cfg.label(b, c);
        if (!triangle_ok(uint8_t(la), uint8_t(lb), uint8_t(lc))) {
          rep.closed = false;
          rep.violations.push_back(
              {a, b, c,
               "triangle {" + std::to_string(a) + "," + std::to_string(b) +
                   "," + std::to_string(c) + "} has exactly two equal labels"});
        }
      }

  std::vector<bool> seen(cfg.m + 1, false);
  for (const auto& [pr, l] : cfg.k)
    if (l >= 1 && l <= cfg.m) seen[l] = true;
  rep.surjective =
      std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
  return rep;
}

ContainsResult contains_bk(const SSConfig& cfg, size_t k) {
  if (k < 3 || k > cfg.m || k > 10)
    throw ParameterOutOfRange("subconfiguration size must be 3..min(m,10)");
  const auto bm_canon = canonical_labels(k, dense_labels(bm_template(k)));
  const auto idx_k = pair_index(k);

  std::vector<size_t> subset(k);
  std::vector<size_t> pos(cfg.m + 1, 0);
  std::vector<uint8_t> restricted(k * (k - 1) / 2);

  std::function<ContainsResult(size_t, size_t)> walk =
      [&](size_t depth, size_t low) -> ContainsResult {
    if (depth == k) {
      for (size_t p = 0; p < k; ++p) pos[subset[p]] = p + 1;
      bool internal = true;  // every pair labeled, every label inside S
      for (size_t p = 0; p < k && internal; ++p)
        for (size_t q = p + 1; q < k && internal; ++q) {
          auto it = cfg.k.find({subset[p], subset[q]});
          if (it == cfg.k.end() || it->second < 1 || it->second > cfg.m ||
              pos[it->second] == 0) {
            internal = false;
            break;
          }
          restricted[idx_k[p + 1][q + 1]] = uint8_t(pos[it->second]);
        }
      for (size_t p = 0; p < k; ++p) pos[subset[p]] = 0;
      if (internal && canonical_labels(k, restricted) == bm_canon)
        return {true, subset};
      return {};
    }
    for (size_t v = low; v + (k - depth) <= cfg.m + 1; ++v) {
      subset[depth] = v;
      auto r = walk(depth + 1, v + 1);
      if (r.found) return r;
    }
    return {};
  };
  return walk(0, 1);
}

namespace {

SearchResult search_impl(size_t m, bool require_surjective,
                         std::uint64_t budget) {
  SearchResult res;
  res.m = m;
  res.require_surjective = require_surjective;
  const auto pairs = lex_pairs(m);
  const auto idx = pair_index(m);
  const size_t P = pairs.size();
  const std::uint64_t mfact = factorial(m);
  const auto bm_canon = canonical_labels(m, dense_labels(bm_template(m)));

  std::vector<uint8_t> labels(P, 0);
  std::map<std::vector<uint8_t>, ConfigClass> classes;
  bool aborted = false;

  std::function<void(size_t)> dfs = [&](size_t depth) {
    if (aborted) return;
    if (depth == P) {
      if (require_surjective) {
        std::vector<bool> seen(m + 1, false);
        for (uint8_t l : labels) seen[l] = true;
        for (size_t v = 1; v <= m; ++v)
          if (!seen[v]) return;
      }
      auto scan = canonical_scan(m, labels, idx, res.work, budget, aborted);
      if (aborted) return;
      ++res.labelings;
      if (!scan.canonical) return;
      ConfigClass cls;
      cls.canonical = from_dense(m, labels);
      cls.orbit_size = size_t(mfact / scan.stabilizer);
      {
        std::vector<bool> seen(m + 1, false);
        for (uint8_t l : labels) seen[l] = true;
        cls.surjective = true;
        for (size_t v = 1; v <= m; ++v)
          if (!seen[v]) cls.surjective = false;
      }
      cls.is_bm = labels == bm_canon;
      for (size_t k = 3; k + 1 <= m; ++k)
        if (contains_bk(cls.canonical, k).found) cls.contains.push_back(k);
      classes.emplace(labels, std::move(cls));
      return;
    }
    const auto [i, j] = pairs[depth];
    for (size_t l = 1; l <= m; ++l) {
      if (l == i || l == j) continue;
      if (++res.work > budget) {
        aborted = true;
        return;
      }
      bool ok = true;
      for (size_t a = 1; a < i && ok; ++a)
        ok = triangle_ok(labels[idx[a][i]], labels[idx[a][j]], uint8_t(l));
      if (!ok) continue;
      labels[depth] = uint8_t(l);
      dfs(depth + 1);
      if (aborted) return;
    }
    labels[depth] = 0;
  };
  dfs(0);

  res.exhausted = !aborted;
  for (auto& [key, cls] : classes) res.classes.push_back(std::move(cls));
  if (res.exhausted) {
    std::uint64_t total = 0;
    for (const auto& c : res.classes) total += c.orbit_size;
    if (total != res.labelings)
      throw CheckFailed("class orbits do not partition the labelings: " +
                        std::to_string(total) + " vs " +
                        std::to_string(res.labelings));
  }
  return res;
}

}  // namespace

SearchResult search_classify(size_t m, bool require_surjective) {
  if (m < 3 || m > 6)
    throw ParameterOutOfRange("exhaustive search supports 3 <= m <= 6");
  return search_impl(m, require_surjective, UINT64_MAX);
}

SearchResult search_probe(size_t m, bool require_surjective,
                          std::uint64_t budget) {
  if (m < 3 || m > 10)
    throw ParameterOutOfRange("probe supports 3 <= m <= 10");
  return search_impl(m, require_surjective, budget);
}

SolveResult realize_or_refute(const SSConfig& cfg, const FieldPtr& field) {
  if (cfg.m < 3) throw ParameterOutOfRange("solver needs m >= 3");
  const auto rep = config_validate(cfg);
  if (!rep.valid(false))
    throw InvalidConfig("labeling is not closure-valid (" +
                        std::to_string(rep.violations.size()) +
                        " violation(s))");
  const Field& F = *field;
  const size_t m = cfg.m;

  struct Eq {
    size_t i, j, t;
    std::array<Mono, 4> monos;
    bool done = false;
  };
  std::vector<Eq> eqs;
  for (const auto& [pr, t] : cfg.k)
    eqs.push_back({pr.first, pr.second, t,
                   dependency_monos(pr.first, pr.second, t), false});

  auto val = normalized_slots(F, m);
  std::vector<TraceStep> trace;

  auto make_refutation = [&](const std::string& kind, size_t si, size_t sj,
                             size_t st, std::pair<size_t, size_t> dp,
                             const FieldElement& coeff) {
    SolveResult r;
    r.outcome = SolveOutcome::refuted;
    r.refutation = RefutationCertificate{
        field, kNormalization, trace, kind, si, sj, st, dp,
        normalize_sign(F, coeff)};
    return r;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    for (auto& eq : eqs) {
      if (eq.done) continue;
      auto v = classify(F, eq.monos, val);
      if (!v.resolvable) continue;
      if (v.lin.empty()) {
        if (!v.cst.is_zero())
          return make_refutation("residual", eq.i, eq.j, eq.t, {1, 2}, v.cst);
        eq.done = true;
        continue;
      }
      if (v.lin.size() == 1) {
        const auto& [s, c] = v.lin.front();
        val[s] = (F.zero() - v.cst) * c.inverse();
        trace.push_back({eq.i, eq.j, eq.t, slot_name(s), *val[s]});
        eq.done = true;
        progress = true;
      }
    }
  }

  // Distinctness is checked wherever it is already decidable.
  for (size_t i = 1; i <= m; ++i)
    for (size_t j = i + 1; j <= m; ++j) {
      auto v = classify(F, delta_monos(i, j), val);
      if (v.resolvable && v.lin.empty() && v.cst.is_zero())
        return make_refutation("distinctness", i, j, 0, {i, j}, F.one());
    }

  std::vector<std::string> undetermined;
  for (size_t s = 0; s < 2 * m; ++s)
    if (!val[s]) undetermined.push_back(slot_name(s));
  if (!undetermined.empty()) {
    SolveResult r;
    r.outcome = SolveOutcome::inconclusive;
    r.stall = InconclusiveReport{std::move(undetermined), trace};
    return r;
  }

  Realization real;
  real.field = field;
  for (size_t i = 1; i <= m; ++i)
    real.coords.emplace_back(*val[slot_a(i)], *val[slot_b(i)]);
  if (!verify_realization(cfg, real))
    throw CheckFailed("solver produced a realization that fails re-checking");
  SolveResult r;
  r.outcome = SolveOutcome::realized;
  r.realization = std::move(real);
  return r;
}

bool verify_realization(const SSConfig& cfg, const Realization& r) {
  if (!r.field || r.coords.size() != cfg.m) return false;
  const Field& F = *r.field;
  auto at = [&](size_t i) -> const std::pair<FieldElement, FieldElement>& {
    return r.coords[i - 1];
  };
  for (size_t i = 1; i <= cfg.m; ++i)
    for (size_t j = i + 1; j <= cfg.m; ++j) {
      const auto d =
          at(i).first * at(j).second - at(j).first * at(i).second;
      if (d.is_zero()) return false;
    }
  (void)F;
  for (const auto& [pr, t] : cfg.k) {
    auto [i, j] = pr;
    const auto lhs = at(t).first * (at(i).second - at(j).second) -
                     at(t).second * (at(i).first - at(j).first);
    if (!lhs.is_zero()) return false;
  }
  return true;
}

bool verify_refutation(const SSConfig& cfg, const RefutationCertificate& c) {
  if (!c.field || cfg.m < 3) return false;
  const Field& F = *c.field;
  const size_t m = cfg.m;
  if (c.normalization != kNormalization) return false;
  auto val = normalized_slots(F, m);

  for (const auto& step : c.trace) {
    size_t i = step.i, j = step.j;
    if (i > j) std::swap(i, j);
    auto it = cfg.k.find({i, j});
    if (it == cfg.k.end() || it->second != step.t) return false;
    auto slot = slot_parse(step.slot, m);
    if (!slot || val[*slot]) return false;
    auto v = classify(F, dependency_monos(i, j, step.t), val);
    if (!v.resolvable || v.lin.size() != 1 || v.lin.front().first != *slot)
      return false;
    const auto solved =
        (F.zero() - v.cst) * v.lin.front().second.inverse();
    if (!(solved == step.value)) return false;
    val[*slot] = solved;
  }

  if (c.kind == "residual") {
    size_t i = c.source_i, j = c.source_j;
    if (i > j) std::swap(i, j);
    auto it = cfg.k.find({i, j});
    if (it == cfg.k.end() || it->second != c.source_t) return false;
    auto v = classify(F, dependency_monos(i, j, c.source_t), val);
    if (!v.resolvable || !v.lin.empty()) return false;
    if (v.cst.is_zero() || c.coefficient.is_zero()) return false;
    // c and -c force the same identity; the stored sign is canonical.
    if (!(v.cst == c.coefficient || F.zero() - v.cst == c.coefficient))
      return false;
    auto d = classify(F, delta_monos(c.delta_pair.first, c.delta_pair.second),
                      val);
    return d.resolvable && d.lin.empty() && !d.cst.is_zero();
  }
  if (c.kind == "distinctness") {
    auto [i, j] = c.delta_pair;
    if (i < 1 || j <= i || j > m) return false;
    if (c.source_i != i || c.source_j != j || c.source_t != 0) return false;
    auto d = classify(F, delta_monos(i, j), val);
    return d.resolvable && d.lin.empty() && d.cst.is_zero() &&
           c.coefficient == F.one();
  }
  return false;
}

Arrangement induced_arrangement(const Realization& r) {
  if (!r.field || r.coords.size() < 3)
    throw InvalidConfig("realization needs a field and at least 3 lines");
  const Field& F = *r.field;
  std::vector<ProjLine> lines;
  for (const auto& [a, b] : r.coords)
    lines.push_back(ProjLine(a, b, F.zero()));
  for (const auto& [a, b] : r.coords)
    lines.push_back(ProjLine(a, b, F.one()));
  lines.push_back(ProjLine(F.zero(), F.zero(), F.one()));
  return Arrangement::build(std::move(lines));
}

ClaimTrace claim_sequence_check(size_t m) {
  if (m < 3) throw ParameterOutOfRange("chain check needs m >= 3");
  ClaimTrace out;
  out.m = m;

  // Descending chain over the rationals with the standard normalization:
  // delta = a1 b2 - a2 b1 = 1, every b_j (j >= 2) collapses to b_2 via the
  // pencil-line-1 dependencies, the pair (1,m) dependency pins a_m, and
  // (1, j, j+1) steps the chain down: a_j = a_{j+1} + b_j.
  std::vector<Rational> a(m + 1, 0), b(m + 1, 0);
  a[1] = 1;
  b[2] = 1;
  for (size_t j = 3; j <= m; ++j) b[j] = 1;
  const Rational delta = a[1] * b[2] - a[2] * b[1];

  a[m] = 1;  // from dependency (1, m, 2): a2(b1-bm) - b2(a1-am) = 0
  for (size_t j = m; j-- > 3;) a[j] = a[j + 1] + b[j];

  for (size_t i = 0; i + 3 <= m; ++i) {
    const Rational lhs = a[m - i] * b[2] - a[2] * b[m - i];
    const Rational rhs = Rational(long(i) + 1) * delta;
    out.steps.push_back({i, lhs, rhs, lhs == rhs});
  }

  auto solved = realize_or_refute(bm_template(m), Field::rationals());
  if (solved.outcome != SolveOutcome::refuted || !solved.refutation)
    throw CheckFailed("template propagation did not refute over the rationals");
  out.final_coefficient =
      std::get<Rational>(solved.refutation->coefficient.payload());

  // The chain's own contradiction: dependency (1,2,3) forces a3 = -b3,
  // while the chain pinned a3 = m-2; the residual coefficient is m-1.
  const Rational chain_residual = a[3] * (b[1] - b[2]) - b[3] * (a[1] - a[2]);
  const Rational expected(long(m) - 1);
  const bool chain_ok = abs(chain_residual) == expected;
  out.holds = chain_ok && out.final_coefficient == expected &&
              std::all_of(out.steps.begin(), out.steps.end(),
                          [](const ClaimStep& s) { return s.holds; });
  return out;
}

bool product_membership_check(
    const std::vector<std::pair<FieldElement, FieldElement>>& forms) {
  const size_t n = forms.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const auto d = forms[i].first * forms[j].second -
                     forms[j].first * forms[i].second;
      if (d.is_zero())
        throw DependentForms("forms " + std::to_string(i + 1) + " and " +
                             std::to_string(j + 1) + " are proportional");
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const auto px = forms[i].second - forms[j].second;   // b_i - b_j
      const auto py = forms[j].first - forms[i].first;     // a_j - a_i
      bool vanishes = false;
      for (size_t t = 0; t < n && !vanishes; ++t)
        vanishes = (forms[t].first * px + forms[t].second * py).is_zero();
      if (!vanishes) return false;
    }
  return true;
}

}  // namespace arrangio
