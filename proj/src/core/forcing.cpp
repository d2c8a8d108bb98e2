#include "core/forcing.hpp"

#include <algorithm>
#include <map>

#include "core/errors.hpp"
#include "core/subsets.hpp"

namespace pyrenic {

namespace {

bool forces(const Graph& g, const EdgeSet& s) {
  return count_perfect_matchings(g, &s, nullptr, 2) == 1;
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

}  // namespace

ForcingResult forcing_number(const Graph& g, const Matching& m) {
  require_perfect_matching(g, m);
  ForcingResult res;
  res.method = SearchMethod::definition_search;
  AltSetReport bound = max_disjoint_alternating_hexagons(g, m);
  res.witness_cycles = bound.witnesses;
  if (count_perfect_matchings(g, nullptr, nullptr, 2) == 1) {
    res.value = 0;  // unique matching, the empty set forces it
    return res;
  }
  const std::size_t width = g.edges.size();

  // At k = |family| every forcing set meets each of the vertex-disjoint
  // family cycles in exactly one m-edge, so the pool products cover all of
  // them; their sorted order preserves the subset scan order below.
  if (bound.size >= 1) {
    std::vector<std::vector<int>> pools;
    for (const auto& verts : bound.witnesses)
      pools.push_back(mask_ids(make_alt_cycle(g, m, verts).m_edges));
    for (const auto& ids : sorted_pool_products(pools)) {
      if (!forces(g, ids_to_mask(width, ids))) continue;
      res.value = bound.size;
      res.witness_edges = ids;
      return res;
    }
  }

  // Above the bound a set may spend edges unevenly, so scan all m-subsets.
  // Hitting every alternating face stays necessary and prunes cheaply.
  std::vector<EdgeSet> face_pools;
  for (const auto& c : alternating_face_cycles(g, m)) face_pools.push_back(c.m_edges);
  const std::vector<int> m_ids = mask_ids(m.edges);
  const int mm = static_cast<int>(m_ids.size());
  for (int k = bound.size + 1; k <= mm; ++k) {
    std::vector<int> found;
    bool stopped = for_each_combination(mm, k, [&](const std::vector<int>& idx) {
      std::vector<int> ids;
      ids.reserve(idx.size());
      for (int i : idx) ids.push_back(m_ids[static_cast<std::size_t>(i)]);
      EdgeSet s = ids_to_mask(width, ids);
      for (const auto& pool : face_pools)
        if (!s.intersects(pool)) return false;
      if (!forces(g, s)) return false;
      found = std::move(ids);
      return true;
    });
    if (stopped) {
      res.value = k;
      res.witness_edges = std::move(found);
      return res;
    }
  }
  fail(ErrorCode::internal_error, "forcing search exhausted all subsets of the matching");
}

ForcingResult forcing_number_oracle(const Graph& g, const Matching& m) {
  require_perfect_matching(g, m);
  AltSetReport bound = max_disjoint_alternating_hexagons(g, m);
  ForcingResult res;
  res.value = bound.size;
  res.witness_cycles = bound.witnesses;
  res.method = SearchMethod::minimax_oracle;
  return res;
}

IntPoly forcing_polynomial_brute(const Graph& g, const RunCaps& caps) {
  std::vector<Matching> pms;
  bool over = false;
  for_each_perfect_matching(g, nullptr, nullptr, [&](const Matching& m) {
    if (static_cast<long long>(pms.size()) >= caps.brute_matchings) {
      over = true;
      return false;
    }
    pms.push_back(m);
    return true;
  });
  if (over)
    fail(ErrorCode::cap_exceeded, "perfect matching count exceeds the brute cap of " +
                                      std::to_string(caps.brute_matchings));
  if (pms.empty()) fail(ErrorCode::no_perfect_matching, "graph has no perfect matching");
  std::map<int, BigInt> hist;
  for (const auto& m : pms) hist[forcing_number(g, m).value] += 1;
  return poly_from_histogram(hist);
}

IntPoly forcing_polynomial_oracle(const Graph& g) {
  std::map<int, BigInt> hist;
  bool any = false;
  for_each_perfect_matching(g, nullptr, nullptr, [&](const Matching& m) {
    hist[max_disjoint_alternating_hexagons(g, m).size] += 1;
    any = true;
    return true;
  });
  if (!any) fail(ErrorCode::no_perfect_matching, "graph has no perfect matching");
  return poly_from_histogram(hist);
}

}  // namespace pyrenic
