#pragma once

#include <vector>

#include "core/caps.hpp"
#include "core/intpoly.hpp"
#include "core/matching.hpp"

namespace pyrenic {

enum class SearchMethod { definition_search, minimax_oracle };

struct ForcingResult {
  int value = 0;
  // Witness set of edge ids (ascending): a minimum forcing (anti-forcing) set.
  // Empty when method == minimax_oracle, which certifies the value by cycles.
  std::vector<int> witness_edges;
  // Cycle family certifying the matching lower bound (vertex sequences).
  std::vector<std::vector<int>> witness_cycles;
  SearchMethod method = SearchMethod::definition_search;
};

// f(G, m): smallest S subset of m contained in no other perfect matching.
// Exact on any graph. The disjoint alternating-face bound prunes the scan;
// the witness is the lexicographically first minimum set by edge ids.
ForcingResult forcing_number(const Graph& g, const Matching& m);

// f via the maximum disjoint alternating-face count h(m). Equals the forcing
// number on pyrene chains and their one-ring truncations; callers gate
// eligibility by system kind.
ForcingResult forcing_number_oracle(const Graph& g, const Matching& m);

// Sum of x^f(G,m) over all perfect matchings, each f by definition search.
// Errors: no perfect matching -> no-perfect-matching; more than
// caps.brute_matchings matchings -> cap-exceeded.
IntPoly forcing_polynomial_brute(const Graph& g, const RunCaps& caps);

// Sum of x^h(m) over all perfect matchings (streaming, no global cap).
IntPoly forcing_polynomial_oracle(const Graph& g);

}  // namespace pyrenic
