// Root finder for polynomials over a declared cyclotomic field Q(w_M).
//
// Returns every root that lies in the declared field, with multiplicity,
// and reports exactly which factor resisted when some roots live in a
// larger field, so callers can surface a precise error instead of a guess.
//
// Strategy: squarefree (Yun) decomposition; cheap trial evaluations for
// 0, small rationals and rational multiples of root-of-unity powers; then
// a modular reconstruction: reduce at a prime p = 1 (mod M), extract roots
// of every embedded image in F_p, Hensel-lift, match root tuples across the
// phi(M) embeddings, solve for power-basis coordinates, rationally
// reconstruct, and verify each candidate exactly.  The exact verification
// makes the method sound; the tuple cap keeps it finite.

#pragma once

#include <string>
#include <vector>

#include "poly.hpp"

namespace liegrade {

struct RootSearchOptions {
  long field_order = 1;        // M: search for roots inside Q(w_M)
  unsigned long seed = 0x5eed; // drives the modular splitting only
  long tuple_cap = 50000;      // cap on cross-embedding candidate tuples
  long max_precision = 12;     // highest Hensel exponent attempted
};

struct FoundRoot {
  Cyclo value;
  long multiplicity = 1;
};

struct RootSearchResult {
  std::vector<FoundRoot> roots;  // sorted by the deterministic scalar order
  bool complete = false;         // multiplicities sum to the full degree
  Poly<Cyclo> unresolved;        // monic product of factors with missing roots
  std::string failure_reason;    // empty when complete
};

RootSearchResult find_roots(const Poly<Cyclo>& f, const RootSearchOptions& opts);

}  // namespace liegrade
