#pragma once

#include <functional>
#include <vector>

#include "core/bigint.hpp"
#include "core/graph.hpp"

namespace pyrenic {

// Visits perfect matchings in lexicographic order of their sorted edge-id
// sequences (the recursion always extends through the lowest uncovered vertex,
// whose candidate edges carry the smallest remaining ids). required edges are
// forced into every matching, forbidden edges are skipped; either may be null.
// Callback returns false to stop early. A graph with zero vertices yields the
// single empty matching; odd vertex count yields nothing.
void for_each_perfect_matching(const Graph& g, const EdgeSet* required, const EdgeSet* forbidden,
                               const std::function<bool(const Matching&)>& cb);

std::vector<Matching> enumerate_perfect_matchings(const Graph& g);

// cap > 0 stops counting at cap (returns cap); cap = 0 counts exactly.
BigInt count_perfect_matchings(const Graph& g, const EdgeSet* required, const EdgeSet* forbidden,
                               std::uint64_t cap = 0);

// Number of perfect matchings containing every edge of s (0 when s has two
// edges sharing a vertex). Errors: s out of range -> invalid-parameter.
BigInt count_matchings_containing(const Graph& g, const EdgeSet& s, std::uint64_t cap = 0);

// True when c is a cycle of g whose edges alternate in and out of m.
// Errors: invalid-parameter when c is not a cycle of g or m is no matching of g.
bool is_alternating_cycle(const Graph& g, const Matching& m, const std::vector<int>& cycle);

// Indices (into g.faces) of the m-alternating faces, ascending.
std::vector<int> alternating_hexagons(const Graph& g, const Matching& m);

// An m-alternating cycle with its derived masks; m_edges = cycle edges in m.
struct AltCycle {
  std::vector<int> verts;
  EdgeSet edge_mask;
  VertexSet vert_mask;
  EdgeSet m_edges;
};

AltCycle make_alt_cycle(const Graph& g, const Matching& m, const std::vector<int>& verts);
std::vector<AltCycle> alternating_face_cycles(const Graph& g, const Matching& m);

// Two m-alternating cycles are compatible when they are vertex-disjoint or
// meet only at m-edges: every shared edge lies in m and every shared vertex
// lies on a shared edge.
bool cycles_compatible(const Graph& g, const AltCycle& a, const AltCycle& b, const Matching& m);

struct AltSetReport {
  int size = 0;
  std::vector<std::vector<int>> witnesses;  // chosen cycles' vertex sequences
};

// h(M): maximum number of pairwise vertex-disjoint m-alternating faces.
// Branch-and-bound; the witness family is the lexicographically first maximum.
AltSetReport max_disjoint_alternating_hexagons(const Graph& g, const Matching& m);

// c'(M) over the restricted family: m-alternating faces plus the supplied
// extra cycles (triphenylene peripheries for chains), maximum pairwise
// compatible subset.
AltSetReport max_compatible_restricted(const Graph& g, const Matching& m,
                                       const std::vector<std::vector<int>>& extra_cycles);

// Lexicographically first maximum conflict-free index subset; conflict is a
// symmetric adjacency matrix.
std::vector<int> max_conflict_free_set(const std::vector<std::vector<char>>& conflict);

}  // namespace pyrenic
