#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrangio/arrangement.hpp"
#include "arrangio/field.hpp"

namespace arrangio {

// Abstract dependency labeling on m >= 3 indices. Pair {i,j} of off-pencil
// lines carries the label k(i,j): the pencil line through their meet; a
// label may not name either of its own indices. The closure law is that
// two pairs sharing an index and a label force the third pair of their
// triangle to carry the same label.
struct SSConfig {
  size_t m = 0;
  std::map<std::pair<size_t, size_t>, size_t> k;  // keys (i, j), 1-based, i < j

  // Throws InvalidConfig if the pair has no label.
  size_t label(size_t i, size_t j) const;
  size_t pair_count() const { return m * (m - 1) / 2; }
};

// Structural validation only (m >= 3, indices in range and distinct,
// labels in 1..m); totality and label/index separation are semantic facts
// reported by config_validate instead. Throws InvalidConfig,
// ParameterOutOfRange.
SSConfig make_config(size_t m, std::map<std::pair<size_t, size_t>, size_t> k);

// The m-template: k(1,j) = j+1 for 2 <= j <= m-1, k(1,m) = 2, and
// k(i,j) = 1 for 2 <= i < j. Throws ParameterOutOfRange for m < 3.
SSConfig bm_template(size_t m);

struct ConfigViolation {
  size_t i = 0, j = 0, l = 0;  // l = 0 for per-pair violations
  std::string reason;
};

struct ValidationReport {
  bool well_defined = false;  // total, labels avoid their own indices
  bool closed = false;        // triangle law holds on every 3-subset
  bool surjective = false;    // every index occurs as a label
  std::vector<ConfigViolation> violations;
  bool valid(bool require_surjective) const {
    return well_defined && closed && (!require_surjective || surjective);
  }
};

// Verdict-returning; never throws on semantically bad labelings.
ValidationReport config_validate(const SSConfig& cfg);

// True iff some k-subset S has every internal pair labeled inside S and
// the restricted labeling is relabel-equivalent to bm_template(k). The
// witness lists S ascending. Throws ParameterOutOfRange unless
// 3 <= k <= cfg.m.
struct ContainsResult {
  bool found = false;
  std::vector<size_t> subset;
};
ContainsResult contains_bk(const SSConfig& cfg, size_t k);

// One equivalence class of closure-valid labelings under the simultaneous
// index relabeling action (sigma sends the label of {i,j} to
// sigma(k(i,j)) at pair {sigma i, sigma j}).
struct ConfigClass {
  SSConfig canonical;           // lexicographically minimal representative
  size_t orbit_size = 0;
  bool surjective = false;
  bool is_bm = false;           // orbit contains bm_template(m)
  std::vector<size_t> contains; // every k in 3..m-1 with a B(k) subconfig
};

struct SearchResult {
  size_t m = 0;
  bool require_surjective = false;
  bool exhausted = false;   // false iff the probe budget ran out
  std::uint64_t labelings = 0;  // valid labelings found (after the filter)
  std::uint64_t work = 0;       // nodes visited + permutations applied
  std::vector<ConfigClass> classes;  // sorted by canonical labels
};

// Exhaustive enumeration and classification. Throws ParameterOutOfRange
// unless 3 <= m <= 6.
SearchResult search_classify(size_t m, bool require_surjective);

// Budgeted enumeration for larger m: identical semantics, but stops once
// the work counter exceeds the budget, reporting exhausted = false.
// Throws ParameterOutOfRange unless 3 <= m <= 12.
SearchResult search_probe(size_t m, bool require_surjective,
                          std::uint64_t budget);

// Exact coordinates (a_i, b_i) for the pencil forms a_i x + b_i y; the
// shifted lines are a_i x + b_i y + z.
struct Realization {
  FieldPtr field;
  std::vector<std::pair<FieldElement, FieldElement>> coords;
};

// One propagation step: dependency (pair (i,j), pencil label t) became
// linear in a single scalar and determined it.
struct TraceStep {
  size_t i = 0, j = 0, t = 0;
  std::string slot;  // "a3", "b5", ...
  FieldElement value;
};

// A replayable contradiction: starting from the recorded normalization and
// applying the trace, the source constraint forces coefficient * delta = 0
// where delta = a_i b_j - a_j b_i over delta_pair is required nonzero and
// coefficient is nonzero in the field. kind is "residual" (a dependency
// evaluates to coefficient * delta != 0) or "distinctness" (delta itself
// collapses to zero, coefficient 1). Over the rationals the coefficient is
// reported with nonnegative sign (c and -c force the same identity).
struct RefutationCertificate {
  FieldPtr field;
  std::string normalization;
  std::vector<TraceStep> trace;
  std::string kind;
  size_t source_i = 0, source_j = 0, source_t = 0;  // t = 0 for distinctness
  std::pair<size_t, size_t> delta_pair{0, 0};
  FieldElement coefficient;
};

// Propagation stalled with scalars still undetermined; the solver never
// branches or guesses, so this is an explicit "don't know".
struct InconclusiveReport {
  std::vector<std::string> undetermined;
  std::vector<TraceStep> trace;
};

enum class SolveOutcome { realized, refuted, inconclusive };

struct SolveResult {
  SolveOutcome outcome = SolveOutcome::inconclusive;
  std::optional<Realization> realization;
  std::optional<RefutationCertificate> refutation;
  std::optional<InconclusiveReport> stall;
};

// Normalizes (a1,b1) = (1,0), (a2,b2) = (0,1) (a projective change of
// coordinates fixing the modular point and the triple-only line maps two
// distinct pencil lines to the axes), then propagates: any dependency
// determinant linear in exactly one scalar determines it. Realizations are
// fully re-verified before being returned. Throws InvalidConfig unless the
// labeling is closure-valid, ParameterOutOfRange for m < 3.
SolveResult realize_or_refute(const SSConfig& cfg, const FieldPtr& field);

// Re-checks every distinctness constraint and dependency determinant.
bool verify_realization(const SSConfig& cfg, const Realization& r);

// Replays the certificate from its normalization: each trace step must be
// the unique solution of its dependency at that time, and the source
// constraint must reproduce the forced identity.
bool verify_refutation(const SSConfig& cfg, const RefutationCertificate& c);

// The 2m+1 lines induced by a realization: the m pencil lines
// a_i x + b_i y, the m shifted lines a_i x + b_i y + z, and z.
Arrangement induced_arrangement(const Realization& r);

// Replays the propagation on bm_template(m) over the rationals and checks
// the derived linear chain: a_{m-i} b_2 - a_2 b_{m-i} = (i+1) delta for
// i = 0..m-3, and the final contradiction coefficient m-1. Throws
// ParameterOutOfRange for m < 3, CheckFailed if the solver does not refute.
struct ClaimStep {
  size_t i = 0;
  Rational lhs, rhs;
  bool holds = false;
};
struct ClaimTrace {
  size_t m = 0;
  std::vector<ClaimStep> steps;
  Rational final_coefficient;
  bool holds = false;
};
ClaimTrace claim_sequence_check(size_t m);

// True iff the product of the pencil forms a_i x + b_i y vanishes at every
// pairwise meet of the shifted lines — the ideal-membership instance
// whose truth would contradict the characteristic-0 expectation. Throws
// DependentForms if two forms are proportional.
bool product_membership_check(
    const std::vector<std::pair<FieldElement, FieldElement>>& forms);

}  // namespace arrangio
