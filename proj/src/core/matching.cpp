#include "core/matching.hpp"

#include <algorithm>

namespace pyrenic {

namespace {

struct PmSearch {
  const Graph& g;
  const EdgeSet* forbidden;
  std::vector<char> covered;
  EdgeSet chosen;
  std::uint64_t cap = 0;
  std::uint64_t hits = 0;
  BigInt count = 0;
  const std::function<bool(const Matching&)>* cb = nullptr;
  bool stop = false;

  explicit PmSearch(const Graph& graph, const EdgeSet* forbid)
      : g(graph),
        forbidden(forbid),
        covered(static_cast<std::size_t>(graph.vertex_count()), 0),
        chosen(static_cast<std::size_t>(graph.edge_count())) {}

  void run(int from) {
    if (stop) return;
    int v = from;
    while (v < g.vertex_count() && covered[v]) ++v;
    if (v == g.vertex_count()) {
      ++count;
      if (cb && !(*cb)(Matching{g.id, chosen})) stop = true;
      if (cap > 0 && ++hits >= cap) stop = true;
      return;
    }
    // v is the lowest uncovered vertex; each candidate edge has v as its
    // smaller endpoint, so ids ascend with the neighbor.
    for (std::size_t k = 0; k < g.adj[v].size() && !stop; ++k) {
      int w = g.adj[v][k];
      if (covered[w]) continue;
      int e = g.inc[v][k];
      if (forbidden && forbidden->test(static_cast<std::size_t>(e))) continue;
      covered[v] = covered[w] = 1;
      chosen.set(static_cast<std::size_t>(e));
      run(v + 1);
      chosen.reset(static_cast<std::size_t>(e));
      covered[v] = covered[w] = 0;
    }
  }
};

// Marks required edges; returns false when they are no matching (shared
// vertex) or collide with forbidden ones.
bool seed_required(const Graph& g, const EdgeSet& required, const EdgeSet* forbidden,
                   PmSearch& search) {
  if (required.size() != static_cast<std::size_t>(g.edge_count()))
    fail(ErrorCode::invalid_parameter, "edge subset sized for a different graph");
  if (forbidden && (required & *forbidden).any()) return false;
  for (auto i = required.find_first(); i != EdgeSet::npos; i = required.find_next(i)) {
    const Edge& e = g.edges[i];
    if (search.covered[e.u] || search.covered[e.v]) return false;
    search.covered[e.u] = search.covered[e.v] = 1;
    search.chosen.set(i);
  }
  return true;
}

}  // namespace

void for_each_perfect_matching(const Graph& g, const EdgeSet* required, const EdgeSet* forbidden,
                               const std::function<bool(const Matching&)>& cb) {
  if (g.vertex_count() % 2 != 0) return;
  PmSearch search(g, forbidden);
  search.cb = &cb;
  if (required && !seed_required(g, *required, forbidden, search)) return;
  search.run(0);
}

std::vector<Matching> enumerate_perfect_matchings(const Graph& g) {
  std::vector<Matching> out;
  for_each_perfect_matching(g, nullptr, nullptr, [&](const Matching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

BigInt count_perfect_matchings(const Graph& g, const EdgeSet* required, const EdgeSet* forbidden,
                               std::uint64_t cap) {
  if (g.vertex_count() % 2 != 0) return 0;
  PmSearch search(g, forbidden);
  search.cap = cap;
  if (required && !seed_required(g, *required, forbidden, search)) return 0;
  search.run(0);
  return search.count;
}

BigInt count_matchings_containing(const Graph& g, const EdgeSet& s, std::uint64_t cap) {
  return count_perfect_matchings(g, &s, nullptr, cap);
}

bool is_alternating_cycle(const Graph& g, const Matching& m, const std::vector<int>& cycle) {
  require_perfect_matching(g, m);
  const std::size_t L = cycle.size();
  if (L < 4 || L % 2 != 0)
    fail(ErrorCode::invalid_parameter, "cycle must have even length >= 4");
  std::vector<int> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorCode::invalid_parameter, "cycle repeats a vertex");
  bool prev_in = false;
  for (std::size_t k = 0; k < L; ++k) {
    int e = g.edge_index(cycle[k], cycle[(k + 1) % L]);
    if (e < 0) fail(ErrorCode::invalid_parameter, "vertex sequence is not a cycle of the graph");
    bool in = m.contains(e);
    if (k > 0 && in == prev_in) return false;
    prev_in = in;
  }
  return true;
}

std::vector<int> alternating_hexagons(const Graph& g, const Matching& m) {
  require_perfect_matching(g, m);
  std::vector<int> out;
  for (int f = 0; f < g.face_count(); ++f) {
    const auto& fe = g.face_edges[f];
    bool alt = true;
    for (int k = 0; k < 6 && alt; ++k) alt = m.contains(fe[k]) != m.contains(fe[(k + 1) % 6]);
    if (alt) out.push_back(f);
  }
  return out;
}

AltCycle make_alt_cycle(const Graph& g, const Matching& m, const std::vector<int>& verts) {
  if (verts.size() < 4 || verts.size() % 2 != 0)
    fail(ErrorCode::invalid_parameter, "cycle must have even length >= 4");
  AltCycle c;
  c.verts = verts;
  c.edge_mask.resize(static_cast<std::size_t>(g.edge_count()));
  c.vert_mask.resize(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t k = 0; k < verts.size(); ++k) {
    if (verts[k] < 0 || verts[k] >= g.vertex_count())
      fail(ErrorCode::invalid_parameter, "cycle vertex out of range");
    if (c.vert_mask.test(static_cast<std::size_t>(verts[k])))
      fail(ErrorCode::invalid_parameter, "cycle repeats a vertex");
    int e = g.edge_index(verts[k], verts[(k + 1) % verts.size()]);
    if (e < 0) fail(ErrorCode::invalid_parameter, "cycle uses a non-edge");
    c.edge_mask.set(static_cast<std::size_t>(e));
    c.vert_mask.set(static_cast<std::size_t>(verts[k]));
  }
  c.m_edges = c.edge_mask & m.edges;
  return c;
}

std::vector<AltCycle> alternating_face_cycles(const Graph& g, const Matching& m) {
  std::vector<AltCycle> out;
  for (int f : alternating_hexagons(g, m)) {
    const auto& fv = g.faces[f];
    out.push_back(make_alt_cycle(g, m, std::vector<int>(fv.begin(), fv.end())));
  }
  return out;
}

bool cycles_compatible(const Graph& g, const AltCycle& a, const AltCycle& b, const Matching& m) {
  if (!a.vert_mask.intersects(b.vert_mask)) return true;
  EdgeSet shared = a.edge_mask & b.edge_mask;
  if ((shared & ~m.edges).any()) return false;  // shared edge outside m
  // Every shared vertex must lie on a shared (m-)edge.
  VertexSet on_shared(a.vert_mask.size());
  for (auto i = shared.find_first(); i != EdgeSet::npos; i = shared.find_next(i)) {
    on_shared.set(static_cast<std::size_t>(g.edges[i].u));
    on_shared.set(static_cast<std::size_t>(g.edges[i].v));
  }
  return ((a.vert_mask & b.vert_mask) & ~on_shared).none();
}

std::vector<int> max_conflict_free_set(const std::vector<std::vector<char>>& conflict) {
  const int n = static_cast<int>(conflict.size());
  std::vector<int> best, cur;
  // Include-first DFS in index order; the first strictly larger set found is
  // the lexicographically least maximum.
  std::function<void(int)> dfs = [&](int i) {
    if (static_cast<int>(cur.size()) + (n - i) <= static_cast<int>(best.size())) return;
    if (i == n) {
      if (cur.size() > best.size()) best = cur;
      return;
    }
    bool ok = true;
    for (int j : cur)
      if (conflict[j][i]) {
        ok = false;
        break;
      }
    if (ok) {
      cur.push_back(i);
      dfs(i + 1);
      cur.pop_back();
    }
    dfs(i + 1);
  };
  dfs(0);
  return best;
}

namespace {

AltSetReport report_from(const std::vector<AltCycle>& cand, const std::vector<int>& chosen) {
  AltSetReport r;
  r.size = static_cast<int>(chosen.size());
  for (int i : chosen) r.witnesses.push_back(cand[i].verts);
  return r;
}

}  // namespace

AltSetReport max_disjoint_alternating_hexagons(const Graph& g, const Matching& m) {
  auto cand = alternating_face_cycles(g, m);
  std::vector<std::vector<char>> conflict(cand.size(), std::vector<char>(cand.size(), 0));
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = i + 1; j < cand.size(); ++j)
      conflict[i][j] = conflict[j][i] = cand[i].vert_mask.intersects(cand[j].vert_mask) ? 1 : 0;
  return report_from(cand, max_conflict_free_set(conflict));
}

AltSetReport max_compatible_restricted(const Graph& g, const Matching& m,
                                       const std::vector<std::vector<int>>& extra_cycles) {
  auto cand = alternating_face_cycles(g, m);
  for (const auto& verts : extra_cycles)
    if (is_alternating_cycle(g, m, verts)) cand.push_back(make_alt_cycle(g, m, verts));
  std::vector<std::vector<char>> conflict(cand.size(), std::vector<char>(cand.size(), 0));
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = i + 1; j < cand.size(); ++j)
      conflict[i][j] = conflict[j][i] = cycles_compatible(g, cand[i], cand[j], m) ? 0 : 1;
  return report_from(cand, max_conflict_free_set(conflict));
}

}  // namespace pyrenic
