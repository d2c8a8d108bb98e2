#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace pyrenic {

// Axial hexagon coordinates; neighbors differ by one of
// (1,0) (-1,0) (0,1) (0,-1) (1,-1) (-1,1).
struct Cell {
  int q = 0;
  int r = 0;
  auto operator<=>(const Cell&) const = default;
};

bool cells_adjacent(Cell a, Cell b);
Vec2 cell_center(Cell c);  // (2q + r, 3r) in corner lattice units

enum class SystemKind { generic, pyrene_chain, auxiliary };

// A benzenoid given by its set of hexagonal cells. Cells are sorted and
// unique; when the set is a translate of the canonical pyrene chain H_n (or of
// H_n minus its leftmost hexagon), kind/n/shift record that.
struct HexSystem {
  std::vector<Cell> cells;
  SystemKind kind = SystemKind::generic;
  int n = 0;
  Cell shift{0, 0};  // canonical cell + shift = stored cell
};

// Pyrene chain H_n: fragments i = 1..n with cells
//   h(i,1) = (2i-2, 0)   h(i,2) = (2i-1, 0)
//   s(i,1) = (2i-2, 1)   s(i,2) = (2i-1, -1)
// Errors: n <= 0 -> invalid-parameter.
HexSystem build_pyrene_chain(int n);

// Cells of H_n minus h(1,1); edge-union of the remaining cells.
HexSystem build_auxiliary_system(int n);
Graph build_auxiliary(int n);

// pyrene (= H_1), phenanthrene (angular 3-chain), diphenyl (two hexagons
// joined by a bridge edge; not a cell system, built directly).
Graph build_named(const std::string& name);

// Labeled cell lookup for chains: role 'h' or 's', fragment i in 1..n, j in
// {1,2}. Errors: non-chain system or out-of-range label -> invalid-parameter.
Cell chain_cell(const HexSystem& sys, char role, int i, int j);

// Edge-union graph of the cells. Vertex ids follow first appearance in
// (cell, corner) order over lexicographically sorted cells; one face per cell.
Graph to_graph(const HexSystem& sys);

// The 2(n-1) triphenylene peripheries of a pyrene chain: for each junction
// i = 1..n-1 the boundary 18-cycles of the hexagon quadruples
//   { s(i,1), s(i,2), h(i,2), h(i+1,1) }   (center h(i,2))
//   { h(i,2), h(i+1,1), s(i+1,1), s(i+1,2) } (center h(i+1,1))
// Errors: non-chain input -> invalid-parameter.
std::vector<std::vector<int>> triphenylene_peripheries(const HexSystem& sys, const Graph& g);

// Same cycles for oracle use; also accepts auxiliary systems (all junction
// quadruples of the parent chain survive the removal of h(1,1)).
std::vector<std::vector<int>> junction_peripheries(const HexSystem& sys, const Graph& g);

// JSON document forms:
//   {"family":"pyrene_chain","n":int} | {"family":"auxiliary","n":int}
//   {"named":"pyrene"|"phenanthrene"|"diphenyl"} | {"cells":[[q,r],...]}
// parse_system handles the cell-backed forms (diphenyl is not one); explicit
// cell lists must be duplicate-free and connected -> parse-error otherwise.
HexSystem parse_system(const std::string& json_text);
std::string serialize_system(const HexSystem& sys);  // explicit sorted cells form

// Any document form; graph always present, system absent only for diphenyl.
struct ParsedInput {
  std::optional<HexSystem> system;
  Graph graph;
  std::optional<std::string> named;
};
ParsedInput parse_input(const std::string& json_text);

}  // namespace pyrenic
