#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "arrangio/arrangement.hpp"

namespace arrangio {

// An arrangement with a linear order on its lines. order[r] is the line
// index occupying rank r; it must be a permutation of 0..n-1.
struct OrderedArrangement {
  Arrangement arrangement;
  std::vector<size_t> order;
};

// Validates the permutation. Throws InvalidConfig.
OrderedArrangement make_ordered(Arrangement a, std::vector<size_t> order);

// All 3-subsets of lines meeting in a common point (each pencil of k
// concurrent lines contributes all C(k,3) triples), as sorted index
// triples in lexicographic order. Throws NotFullRank.
std::vector<std::array<size_t, 3>> circuits3(const Arrangement& a);

// Index pairs (i, j) with i preceding j in the order; none contains a
// broken circuit.
struct NbcPairSet {
  std::vector<std::pair<size_t, size_t>> pairs;
};

// The full degree-2 no-broken-circuit set: (i, j) belongs iff no line
// earlier than both is concurrent with them, i.e. i is the order-least
// line through meet(i, j). Cardinality = sum over points of (m_P - 1).
// Throws NotFullRank.
NbcPairSet nbc_pairs(const OrderedArrangement& oa);

// The quadratic basis pairs: the subset of nbc_pairs whose meet is either
// the anchor point (the meet of the first two lines in the order) or a
// simple point. For the doubled family under its pencil-first order this
// is exactly the m-1 pencil pairs plus one pair per simple point, total
// 2m - 1. Throws NotFullRank.
NbcPairSet quadratic_nbc(const OrderedArrangement& oa);

// The pencil-first internal order used by the equivalence verdict: lines
// through the supersolvability witness first, then the rest, each block
// sorted by canonical coordinates. Throws NotFullRank, NotSupersolvable.
OrderedArrangement modular_first_order(const Arrangement& a);

// Decision for two n = 2m supersolvable arrangements with m(A) = m >= 3
// and exactly m simple points: both must carry the doubled-index matching
// structure — every line avoiding the witness has exactly one simple
// point, lying on a pencil line, and the induced pencil in-degree multiset
// equals that of j -> 2j mod m (all ones for odd m; half twos, half zeros
// for even m). When both match, the two arrangements have isomorphic
// quadratic basis patterns and a witness line bijection is returned.
struct Equiv2mVerdict {
  bool equivalent = false;
  // witness[i] = line index of b matched to line i of a (input indices).
  std::vector<size_t> witness;
  std::string detail;
};

// Throws HypothesisNotMet when either input misses a precondition.
Equiv2mVerdict equiv_2m_verdict(const Arrangement& a, const Arrangement& b);

}  // namespace arrangio
