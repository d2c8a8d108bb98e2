#include "core/antiforcing.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "core/errors.hpp"
#include "core/subsets.hpp"

namespace pyrenic {

namespace {

bool antiforces(const Graph& g, const EdgeSet& removed) {
  return count_perfect_matchings(g, nullptr, &removed, 2) == 1;
}

EdgeSet ids_to_mask(std::size_t width, const std::vector<int>& ids) {
  EdgeSet s(width);
  for (int e : ids) s.set(static_cast<std::size_t>(e));
  return s;
}

std::vector<int> mask_ids(const EdgeSet& s) {
  std::vector<int> ids;
  for (auto e = s.find_first(); e != EdgeSet::npos; e = s.find_next(e))
    ids.push_back(static_cast<int>(e));
  return ids;
}

// Non-matching edge pools of every known m-alternating cycle: faces plus the
// alternating members of extra_cycles. A removal set must hit each.
std::vector<EdgeSet> known_cycle_pools(const Graph& g, const Matching& m,
                                       const std::vector<std::vector<int>>& extra_cycles) {
  std::vector<EdgeSet> pools;
  for (const auto& c : alternating_face_cycles(g, m)) pools.push_back(c.edge_mask & ~m.edges);
  for (const auto& verts : extra_cycles)
    if (is_alternating_cycle(g, m, verts))
      pools.push_back(make_alt_cycle(g, m, verts).edge_mask & ~m.edges);
  return pools;
}

}  // namespace

ForcingResult antiforcing_number(const Graph& g, const Matching& m,
                                 const std::vector<std::vector<int>>& extra_cycles,
                                 const RunCaps& caps) {
  require_perfect_matching(g, m);
  ForcingResult res;
  res.method = SearchMethod::definition_search;
  AltSetReport bound = max_compatible_restricted(g, m, extra_cycles);
  res.witness_cycles = bound.witnesses;
  if (count_perfect_matchings(g, nullptr, nullptr, 2) == 1) {
    res.value = 0;  // unique matching, nothing needs removing
    return res;
  }
  const std::size_t width = g.edges.size();

  // At k = |family| every removal set meets each family cycle in exactly one
  // non-matching edge; compatible cycles share only matching edges, so the
  // pools are disjoint and their products cover all candidates.
  if (bound.size >= 1) {
    std::vector<std::vector<int>> pools;
    for (const auto& verts : bound.witnesses)
      pools.push_back(mask_ids(make_alt_cycle(g, m, verts).edge_mask & ~m.edges));
    for (const auto& ids : sorted_pool_products(pools)) {
      if (!antiforces(g, ids_to_mask(width, ids))) continue;
      res.value = bound.size;
      res.witness_edges = ids;
      return res;
    }
  }

  // Above the bound, scan subsets of the non-matching edges. Hitting every
  // known alternating cycle stays necessary and prunes cheaply.
  const std::vector<int> free_ids = mask_ids(~m.edges);
  const int width_free = static_cast<int>(free_ids.size());
  if (width_free > caps.antiforcing_width)
    fail(ErrorCode::cap_exceeded, "non-matching edge count " + std::to_string(width_free) +
                                      " exceeds the subset-scan cap of " +
                                      std::to_string(caps.antiforcing_width));
  const std::vector<EdgeSet> known = known_cycle_pools(g, m, extra_cycles);
  for (int k = bound.size + 1; k <= width_free; ++k) {
    std::vector<int> found;
    bool stopped = for_each_combination(width_free, k, [&](const std::vector<int>& idx) {
      std::vector<int> ids;
      ids.reserve(idx.size());
      for (int i : idx) ids.push_back(free_ids[static_cast<std::size_t>(i)]);
      EdgeSet s = ids_to_mask(width, ids);
      for (const auto& pool : known)
        if (!s.intersects(pool)) return false;
      if (!antiforces(g, s)) return false;
      found = std::move(ids);
      return true;
    });
    if (stopped) {
      res.value = k;
      res.witness_edges = std::move(found);
      return res;
    }
  }
  fail(ErrorCode::internal_error, "anti-forcing search exhausted all non-matching subsets");
}

ForcingResult antiforcing_number_oracle(const Graph& g, const Matching& m,
                                        const std::vector<std::vector<int>>& extra_cycles) {
  require_perfect_matching(g, m);
  AltSetReport bound = max_compatible_restricted(g, m, extra_cycles);
  ForcingResult res;
  res.value = bound.size;
  res.witness_cycles = bound.witnesses;
  res.method = SearchMethod::minimax_oracle;
  return res;
}

IntPoly antiforcing_polynomial_brute(const Graph& g,
                                     const std::vector<std::vector<int>>& extra_cycles,
                                     const RunCaps& caps) {
  std::vector<Matching> pms;
  bool over = false;
  for_each_perfect_matching(g, nullptr, nullptr, [&](const Matching& m) {
    if (static_cast<long long>(pms.size()) >= caps.antiforcing_matchings) {
      over = true;
      return false;
    }
    pms.push_back(m);
    return true;
  });
  if (over)
    fail(ErrorCode::cap_exceeded, "perfect matching count exceeds the anti-forcing brute cap of " +
                                      std::to_string(caps.antiforcing_matchings));
  if (pms.empty()) fail(ErrorCode::no_perfect_matching, "graph has no perfect matching");
  std::map<int, BigInt> hist;
  for (const auto& m : pms) hist[antiforcing_number(g, m, extra_cycles, caps).value] += 1;
  return poly_from_histogram(hist);
}

IntPoly antiforcing_polynomial_oracle(const Graph& g,
                                      const std::vector<std::vector<int>>& extra_cycles) {
  std::map<int, BigInt> hist;
  bool any = false;
  for_each_perfect_matching(g, nullptr, nullptr, [&](const Matching& m) {
    hist[max_compatible_restricted(g, m, extra_cycles).size] += 1;
    any = true;
    return true;
  });
  if (!any) fail(ErrorCode::no_perfect_matching, "graph has no perfect matching");
  return poly_from_histogram(hist);
}

}  // namespace pyrenic
