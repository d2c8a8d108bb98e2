#include "core/graph.hpp"

#include <algorithm>
#include <atomic>
#include <deque>

namespace pyrenic {

namespace {
std::atomic<std::uint64_t> g_next_graph_id{1};
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), Edge{u, v});
  if (it == edges.end() || it->u != u || it->v != v) return -1;
  return static_cast<int>(it - edges.begin());
}

int Graph::vertex_at(Vec2 p) const {
  auto it = pos_index.find(p);
  return it == pos_index.end() ? -1 : it->second;
}

std::array<int, 2> Graph::bipartition_sizes() const {
  std::array<int, 2> s{0, 0};
  for (auto c : color) ++s[c];
  return s;
}

Graph make_graph(std::vector<Vec2> pos, std::vector<Edge> edges,
                 std::vector<std::array<int, 6>> faces) {
  Graph g;
  g.id = g_next_graph_id.fetch_add(1);
  g.pos = std::move(pos);
  const int n = g.vertex_count();

  for (auto& e : edges) {
    if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      fail(ErrorCode::invalid_parameter, "make_graph: bad edge endpoint");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);

  g.adj.assign(n, {});
  g.inc.assign(n, {});
  for (int e = 0; e < g.edge_count(); ++e) {
    g.adj[g.edges[e].u].push_back(g.edges[e].v);
    g.adj[g.edges[e].v].push_back(g.edges[e].u);
    g.inc[g.edges[e].u].push_back(e);
    g.inc[g.edges[e].v].push_back(e);
  }
  // Edge list is sorted, so per-vertex neighbor/incidence lists already ascend
  // for the smaller endpoint; fix up the larger-endpoint entries.
  for (int v = 0; v < n; ++v) {
    std::vector<std::pair<int, int>> order;
    order.reserve(g.adj[v].size());
    for (std::size_t k = 0; k < g.adj[v].size(); ++k) order.emplace_back(g.adj[v][k], g.inc[v][k]);
    std::sort(order.begin(), order.end());
    for (std::size_t k = 0; k < order.size(); ++k) {
      g.adj[v][k] = order[k].first;
      g.inc[v][k] = order[k].second;
    }
  }

  // Two-color by BFS; roots anchored to the corner parity class (y mod 3 is 1
  // or 2 on hexagonal-lattice corners) so cell-derived graphs get the lattice
  // bipartition exactly.
  g.color.assign(n, 255);
  for (int s = 0; s < n; ++s) {
    if (g.color[s] != 255) continue;
    int ymod = ((g.pos[s].y % 3) + 3) % 3;
    g.color[s] = static_cast<std::uint8_t>(ymod == 1 ? 0 : 1);
    std::deque<int> q{s};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : g.adj[v]) {
        if (g.color[w] == 255) {
          g.color[w] = static_cast<std::uint8_t>(1 - g.color[v]);
          q.push_back(w);
        } else if (g.color[w] == g.color[v]) {
          fail(ErrorCode::unsupported_graph, "make_graph: graph is not bipartite");
        }
      }
    }
  }

  g.faces = std::move(faces);
  g.face_edges.reserve(g.faces.size());
  for (const auto& f : g.faces) {
    std::array<int, 6> fe{};
    for (int k = 0; k < 6; ++k) {
      int e = g.edge_index(f[k], f[(k + 1) % 6]);
      if (e < 0) fail(ErrorCode::internal_error, "make_graph: face boundary is not an edge");
      fe[k] = e;
    }
    g.face_edges.push_back(fe);
  }

  for (int v = 0; v < n; ++v) g.pos_index[g.pos[v]] = v;
  if (static_cast<int>(g.pos_index.size()) != n)
    fail(ErrorCode::invalid_parameter, "make_graph: duplicate vertex positions");
  return g;
}

std::vector<int> Matching::edge_ids() const {
  std::vector<int> ids;
  ids.reserve(edges.count());
  for (auto i = edges.find_first(); i != EdgeSet::npos; i = edges.find_next(i))
    ids.push_back(static_cast<int>(i));
  return ids;
}

bool is_perfect_matching(const Graph& g, const Matching& m) {
  if (m.host != g.id || m.edges.size() != static_cast<std::size_t>(g.edge_count())) return false;
  std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
  for (auto i = m.edges.find_first(); i != EdgeSet::npos; i = m.edges.find_next(i)) {
    const Edge& e = g.edges[i];
    if (covered[e.u] || covered[e.v]) return false;
    covered[e.u] = covered[e.v] = 1;
  }
  for (char c : covered)
    if (!c) return false;
  return true;
}

void require_perfect_matching(const Graph& g, const Matching& m) {
  if (m.host != g.id)
    fail(ErrorCode::invalid_parameter, "matching belongs to a different graph");
  if (!is_perfect_matching(g, m))
    fail(ErrorCode::invalid_parameter, "edge set is not a perfect matching of the graph");
}

}  // namespace pyrenic
