#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "core/errors.hpp"

namespace pyrenic {

using EdgeSet = boost::dynamic_bitset<>;
using VertexSet = boost::dynamic_bitset<>;

// Corner coordinates on the hexagonal lattice, scaled to integers:
// x in units of sqrt(3)/2, y in units of 1/2. All edges are unit length and
// equality of positions is exact integer equality.
struct Vec2 {
  int x = 0;
  int y = 0;
  auto operator<=>(const Vec2&) const = default;
};

struct Edge {
  int u = 0;
  int v = 0;  // u < v
  auto operator<=>(const Edge&) const = default;
};

// Immutable after construction. Vertex indices follow first appearance in
// (cell, corner) iteration order; edges are sorted lexicographically and the
// edge index space is what matchings bit over.
struct Graph {
  std::uint64_t id = 0;  // identity token; matchings carry it as host
  std::vector<Vec2> pos;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adj;        // neighbor ids, ascending
  std::vector<std::vector<int>> inc;        // incident edge ids, aligned with adj
  std::vector<std::uint8_t> color;          // bipartition class 0/1
  std::vector<std::array<int, 6>> faces;    // hexagonal faces, construction order
  std::vector<std::array<int, 6>> face_edges;

  int vertex_count() const { return static_cast<int>(pos.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int face_count() const { return static_cast<int>(faces.size()); }

  // -1 when (u, v) is not an edge.
  int edge_index(int u, int v) const;
  // -1 when no vertex sits at p.
  int vertex_at(Vec2 p) const;
  std::array<int, 2> bipartition_sizes() const;

  std::map<Vec2, int> pos_index;  // exact position -> vertex id
};

// Builds adjacency, bipartition and face edge ids from positions + edges.
// Edges are normalized (u < v), sorted, deduplicated. Errors: unsupported-graph
// on an odd cycle (non-bipartite input).
Graph make_graph(std::vector<Vec2> pos, std::vector<Edge> edges,
                 std::vector<std::array<int, 6>> faces);

// Perfect matching as a bitset over the host graph's edge index space.
struct Matching {
  std::uint64_t host = 0;
  EdgeSet edges;

  std::vector<int> edge_ids() const;
  bool contains(int edge_id) const { return edges.test(static_cast<std::size_t>(edge_id)); }
};

bool is_perfect_matching(const Graph& g, const Matching& m);
// Errors invalid-parameter unless m is a perfect matching of g (host included).
void require_perfect_matching(const Graph& g, const Matching& m);

}  // namespace pyrenic
