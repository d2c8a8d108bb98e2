#include "core/hexsystem.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "json.hpp"

namespace pyrenic {

namespace {

constexpr std::array<Cell, 6> kCellDirs{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}}};

// Pointy-top corner offsets from the cell center, counterclockwise from the
// upper-right corner; consecutive offsets span the six unit edges.
constexpr std::array<Vec2, 6> kCornerOffsets{
    {{1, 1}, {0, 2}, {-1, 1}, {-1, -1}, {0, -2}, {1, -1}}};

Cell translate(Cell c, Cell d) { return {c.q + d.q, c.r + d.r}; }

std::vector<Cell> chain_cells(int n) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(4 * n));
  for (int i = 1; i <= n; ++i) {
    cells.push_back({2 * i - 2, 0});   // h(i,1)
    cells.push_back({2 * i - 1, 0});   // h(i,2)
    cells.push_back({2 * i - 2, 1});   // s(i,1)
    cells.push_back({2 * i - 1, -1});  // s(i,2)
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

bool matches_translated(const std::vector<Cell>& sorted_cells, const std::vector<Cell>& canon,
                        Cell* shift_out) {
  if (sorted_cells.size() != canon.size() || canon.empty()) return false;
  Cell d{sorted_cells[0].q - canon[0].q, sorted_cells[0].r - canon[0].r};
  for (std::size_t i = 0; i < canon.size(); ++i)
    if (translate(canon[i], d) != sorted_cells[i]) return false;
  *shift_out = d;
  return true;
}

// Sorts, recognizes chain/auxiliary translates, and rejects duplicates.
HexSystem classify(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
    fail(ErrorCode::parse_error, "duplicate cell in system");
  HexSystem sys;
  sys.cells = std::move(cells);
  auto sz = sys.cells.size();
  if (sz % 4 == 0 && sz > 0) {
    int n = static_cast<int>(sz / 4);
    if (matches_translated(sys.cells, chain_cells(n), &sys.shift)) {
      sys.kind = SystemKind::pyrene_chain;
      sys.n = n;
    }
  } else if (sz % 4 == 3) {
    int n = static_cast<int>((sz + 1) / 4);
    auto canon = chain_cells(n);
    canon.erase(std::find(canon.begin(), canon.end(), Cell{0, 0}));
    if (matches_translated(sys.cells, canon, &sys.shift)) {
      sys.kind = SystemKind::auxiliary;
      sys.n = n;
    }
  }
  return sys;
}

void require_connected(const std::vector<Cell>& cells) {
  if (cells.empty()) fail(ErrorCode::parse_error, "system has no cells");
  std::set<Cell> todo(cells.begin() + 1, cells.end());
  std::deque<Cell> q{cells[0]};
  while (!q.empty()) {
    Cell c = q.front();
    q.pop_front();
    for (Cell d : kCellDirs) {
      auto it = todo.find(translate(c, d));
      if (it != todo.end()) {
        q.push_back(*it);
        todo.erase(it);
      }
    }
  }
  if (!todo.empty()) fail(ErrorCode::parse_error, "cell set is not connected");
}

Graph graph_from_cells(const std::vector<Cell>& cells) {
  std::vector<Vec2> pos;
  std::map<Vec2, int> index;
  std::vector<Edge> edges;
  std::vector<std::array<int, 6>> faces;
  auto corner_id = [&](Vec2 p) {
    auto it = index.find(p);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(pos.size());
    index.emplace(p, id);
    pos.push_back(p);
    return id;
  };
  for (Cell c : cells) {
    Vec2 ctr = cell_center(c);
    std::array<int, 6> face{};
    for (int k = 0; k < 6; ++k)
      face[k] = corner_id({ctr.x + kCornerOffsets[k].x, ctr.y + kCornerOffsets[k].y});
    for (int k = 0; k < 6; ++k) edges.push_back({face[k], face[(k + 1) % 6]});
    faces.push_back(face);
  }
  return make_graph(std::move(pos), std::move(edges), std::move(faces));
}

std::vector<std::array<Cell, 4>> junction_quadruples(const HexSystem& sys) {
  if (sys.kind == SystemKind::generic)
    fail(ErrorCode::invalid_parameter, "triphenylene peripheries need a recognized chain");
  std::vector<std::array<Cell, 4>> quads;
  for (int i = 1; i <= sys.n - 1; ++i) {
    Cell h_i2{2 * i - 1, 0}, h_j1{2 * i, 0};
    Cell s_i1{2 * i - 2, 1}, s_i2{2 * i - 1, -1};
    Cell s_j1{2 * i, 1}, s_j2{2 * i + 1, -1};
    quads.push_back({translate(s_i1, sys.shift), translate(s_i2, sys.shift),
                     translate(h_i2, sys.shift), translate(h_j1, sys.shift)});
    quads.push_back({translate(h_i2, sys.shift), translate(h_j1, sys.shift),
                     translate(s_j1, sys.shift), translate(s_j2, sys.shift)});
  }
  return quads;
}

std::vector<int> boundary_cycle(const Graph& g, const std::array<Cell, 4>& quad) {
  std::map<Edge, int> mult;
  for (Cell c : quad) {
    Vec2 ctr = cell_center(c);
    std::array<int, 6> corner{};
    for (int k = 0; k < 6; ++k) {
      corner[k] = g.vertex_at({ctr.x + kCornerOffsets[k].x, ctr.y + kCornerOffsets[k].y});
      if (corner[k] < 0) fail(ErrorCode::internal_error, "periphery cell corner missing from graph");
    }
    for (int k = 0; k < 6; ++k) {
      int u = corner[k], v = corner[(k + 1) % 6];
      if (u > v) std::swap(u, v);
      ++mult[{u, v}];
    }
  }
  std::map<int, std::vector<int>> nbr;
  int start = -1;
  for (const auto& [e, m] : mult) {
    if (m != 1) continue;  // shared with the center hexagon: interior edge
    nbr[e.u].push_back(e.v);
    nbr[e.v].push_back(e.u);
    if (start < 0 || e.u < start) start = e.u;
  }
  std::vector<int> cycle{start};
  int prev = -1, cur = start;
  do {
    auto& cand = nbr[cur];
    if (cand.size() != 2) fail(ErrorCode::internal_error, "periphery is not a single cycle");
    int next = std::min(cand[0], cand[1]);
    if (prev >= 0) next = cand[0] == prev ? cand[1] : cand[0];
    prev = cur;
    cur = next;
    if (cur != start) cycle.push_back(cur);
  } while (cur != start);
  if (cycle.size() != 18) fail(ErrorCode::internal_error, "periphery length is not 18");
  return cycle;
}

using nlohmann::json;

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(ErrorCode::parse_error, "malformed JSON document");
  return doc;
}

int json_int(const json& v, const char* what) {
  if (!v.is_number_integer()) fail(ErrorCode::parse_error, std::string(what) + " must be an integer");
  return v.get<int>();
}

}  // namespace

bool cells_adjacent(Cell a, Cell b) {
  Cell d{a.q - b.q, a.r - b.r};
  return std::find(kCellDirs.begin(), kCellDirs.end(), d) != kCellDirs.end();
}

Vec2 cell_center(Cell c) { return {2 * c.q + c.r, 3 * c.r}; }

HexSystem build_pyrene_chain(int n) {
  if (n <= 0) fail(ErrorCode::invalid_parameter, "pyrene chain length must be positive");
  HexSystem sys;
  sys.cells = chain_cells(n);
  sys.kind = SystemKind::pyrene_chain;
  sys.n = n;
  return sys;
}

HexSystem build_auxiliary_system(int n) {
  if (n <= 0) fail(ErrorCode::invalid_parameter, "auxiliary system length must be positive");
  HexSystem sys;
  sys.cells = chain_cells(n);
  sys.cells.erase(std::find(sys.cells.begin(), sys.cells.end(), Cell{0, 0}));
  sys.kind = SystemKind::auxiliary;
  sys.n = n;
  return sys;
}

Graph build_auxiliary(int n) { return to_graph(build_auxiliary_system(n)); }

Graph build_named(const std::string& name) {
  if (name == "pyrene") return to_graph(build_pyrene_chain(1));
  if (name == "phenanthrene") {
    HexSystem sys;
    sys.cells = {{0, 0}, {0, 1}, {1, -1}};
    std::sort(sys.cells.begin(), sys.cells.end());
    return to_graph(sys);
  }
  if (name == "diphenyl") {
    // Two hexagon rings bridged by the lattice edge (1,1)-(2,2); cells (0,0)
    // and (1,1) are non-adjacent so no corners merge.
    std::vector<Vec2> pos;
    std::vector<Edge> edges;
    std::vector<std::array<int, 6>> faces;
    int base = 0;
    for (Cell c : {Cell{0, 0}, Cell{1, 1}}) {
      Vec2 ctr = cell_center(c);
      std::array<int, 6> face{};
      for (int k = 0; k < 6; ++k) {
        face[k] = base + k;
        pos.push_back({ctr.x + kCornerOffsets[k].x, ctr.y + kCornerOffsets[k].y});
      }
      for (int k = 0; k < 6; ++k) edges.push_back({face[k], face[(k + 1) % 6]});
      faces.push_back(face);
      base += 6;
    }
    Graph g = make_graph(std::move(pos), std::move(edges), std::move(faces));
    std::vector<Edge> with_bridge = g.edges;
    with_bridge.push_back({g.vertex_at({1, 1}), g.vertex_at({2, 2})});
    return make_graph(g.pos, std::move(with_bridge), g.faces);
  }
  fail(ErrorCode::invalid_parameter, "unknown named graph: " + name);
}

Cell chain_cell(const HexSystem& sys, char role, int i, int j) {
  if (sys.kind != SystemKind::pyrene_chain && sys.kind != SystemKind::auxiliary)
    fail(ErrorCode::invalid_parameter, "cell labels exist only on recognized chains");
  if (i < 1 || i > sys.n || (j != 1 && j != 2) || (role != 'h' && role != 's'))
    fail(ErrorCode::invalid_parameter, "cell label out of range");
  Cell c = role == 'h' ? Cell{2 * i - 2 + (j - 1), 0} : Cell{2 * i - 2 + (j - 1), j == 1 ? 1 : -1};
  c = translate(c, sys.shift);
  if (!std::binary_search(sys.cells.begin(), sys.cells.end(), c))
    fail(ErrorCode::invalid_parameter, "labeled cell absent from system");
  return c;
}

Graph to_graph(const HexSystem& sys) {
  if (sys.cells.empty()) fail(ErrorCode::invalid_parameter, "empty system has no graph");
  return graph_from_cells(sys.cells);
}

std::vector<std::vector<int>> triphenylene_peripheries(const HexSystem& sys, const Graph& g) {
  if (sys.kind != SystemKind::pyrene_chain)
    fail(ErrorCode::invalid_parameter, "triphenylene peripheries are defined on pyrene chains");
  return junction_peripheries(sys, g);
}

std::vector<std::vector<int>> junction_peripheries(const HexSystem& sys, const Graph& g) {
  std::vector<std::vector<int>> out;
  for (const auto& quad : junction_quadruples(sys)) out.push_back(boundary_cycle(g, quad));
  return out;
}

HexSystem parse_system(const std::string& json_text) {
  ParsedInput in = parse_input(json_text);
  if (!in.system) fail(ErrorCode::invalid_parameter, "document does not describe a cell system");
  return *in.system;
}

std::string serialize_system(const HexSystem& sys) {
  json cells = json::array();
  for (Cell c : sys.cells) cells.push_back(json::array({c.q, c.r}));
  json doc;
  doc["cells"] = std::move(cells);
  return doc.dump();
}

ParsedInput parse_input(const std::string& json_text) {
  json doc = parse_json(json_text);
  if (!doc.is_object()) fail(ErrorCode::parse_error, "document must be a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    std::string k = it.key();
    if (k != "family" && k != "n" && k != "named" && k != "cells")
      fail(ErrorCode::parse_error, "unknown document key: " + k);
  }

  ParsedInput out;
  if (doc.contains("family")) {
    if (doc.contains("named") || doc.contains("cells") || !doc.contains("n"))
      fail(ErrorCode::parse_error, "family documents take exactly {family, n}");
    std::string family = doc["family"].is_string() ? doc["family"].get<std::string>() : "";
    int n = json_int(doc["n"], "n");
    if (n <= 0) fail(ErrorCode::parse_error, "n must be a positive integer");
    if (family == "pyrene_chain") {
      out.system = build_pyrene_chain(n);
    } else if (family == "auxiliary") {
      out.system = build_auxiliary_system(n);
    } else {
      fail(ErrorCode::parse_error, "unknown family: " + family);
    }
    out.graph = to_graph(*out.system);
    return out;
  }
  if (doc.contains("named")) {
    if (doc.size() != 1 || !doc["named"].is_string())
      fail(ErrorCode::parse_error, "named documents take exactly {named}");
    std::string name = doc["named"].get<std::string>();
    out.named = name;
    if (name == "pyrene") {
      out.system = build_pyrene_chain(1);
      out.graph = to_graph(*out.system);
    } else if (name == "phenanthrene") {
      HexSystem sys;
      sys.cells = {{0, 0}, {0, 1}, {1, -1}};
      std::sort(sys.cells.begin(), sys.cells.end());
      out.system = std::move(sys);
      out.graph = to_graph(*out.system);
    } else if (name == "diphenyl") {
      out.graph = build_named("diphenyl");
    } else {
      fail(ErrorCode::parse_error, "unknown named graph: " + name);
    }
    return out;
  }
  if (doc.contains("cells")) {
    if (doc.size() != 1 || !doc["cells"].is_array())
      fail(ErrorCode::parse_error, "cells documents take exactly {cells: [[q,r],...]}");
    std::vector<Cell> cells;
    for (const auto& item : doc["cells"]) {
      if (!item.is_array() || item.size() != 2)
        fail(ErrorCode::parse_error, "each cell must be a [q, r] pair");
      cells.push_back({json_int(item[0], "cell q"), json_int(item[1], "cell r")});
    }
    HexSystem sys = classify(std::move(cells));
    require_connected(sys.cells);
    out.graph = to_graph(sys);
    out.system = std::move(sys);
    return out;
  }
  fail(ErrorCode::parse_error, "document needs one of: family, named, cells");
}

}  // namespace pyrenic
