#pragma once

#include <vector>

#include "core/caps.hpp"
#include "core/forcing.hpp"
#include "core/intpoly.hpp"
#include "core/matching.hpp"

namespace pyrenic {

// af(G, m): smallest S disjoint from m such that m is the unique perfect
// matching of G - S. Exact on any graph. extra_cycles widens the compatible
// lower-bound family beyond the faces (ring peripheries for chain systems);
// entries that are not m-alternating are ignored, malformed entries raise
// invalid-parameter. caps.antiforcing_width bounds the subset fallback.
ForcingResult antiforcing_number(const Graph& g, const Matching& m,
                                 const std::vector<std::vector<int>>& extra_cycles,
                                 const RunCaps& caps);

// af via the maximum compatible alternating family c'(m) over faces plus
// extra_cycles. Equals the anti-forcing number on pyrene chains and their
// one-ring truncations; callers gate eligibility by system kind.
ForcingResult antiforcing_number_oracle(const Graph& g, const Matching& m,
                                        const std::vector<std::vector<int>>& extra_cycles);

// Sum of x^af(G,m) over all perfect matchings, each af by definition search.
// Errors: no perfect matching -> no-perfect-matching; more than
// caps.antiforcing_matchings matchings -> cap-exceeded.
IntPoly antiforcing_polynomial_brute(const Graph& g,
                                     const std::vector<std::vector<int>>& extra_cycles,
                                     const RunCaps& caps);

// Sum of x^c'(m) over all perfect matchings (streaming, no global cap).
IntPoly antiforcing_polynomial_oracle(const Graph& g,
                                      const std::vector<std::vector<int>>& extra_cycles);

}  // namespace pyrenic
