#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"

#include "core/antiforcing.hpp"
#include "core/hexsystem.hpp"
#include "core/sequences.hpp"
#include "test_util.hpp"

using namespace pyrenic;
using pyrenic_test::code_of;

namespace {

struct ChainFixture {
  HexSystem sys;
  Graph g;
  std::vector<std::vector<int>> extras;
};

ChainFixture chain(int n) {
  ChainFixture f;
  f.sys = build_pyrene_chain(n);
  f.g = to_graph(f.sys);
  f.extras = triphenylene_peripheries(f.sys, f.g);
  return f;
}

bool antiforces(const Graph& g, const Matching& m, const std::vector<int>& ids) {
  EdgeSet removed(static_cast<std::size_t>(g.edge_count()));
  for (int e : ids) {
    if (m.contains(e)) return false;
    removed.set(static_cast<std::size_t>(e));
  }
  return count_perfect_matchings(g, nullptr, &removed, 2) == 1;
}

}  // namespace

TEST_CASE("per-matching anti-forcing numbers on pyrene") {
  ChainFixture f = chain(1);
  std::map<int, int> hist;
  for (const Matching& m : enumerate_perfect_matchings(f.g)) {
    ForcingResult r = antiforcing_number(f.g, m, f.extras, RunCaps{});
    CHECK(r.method == SearchMethod::definition_search);
    CHECK(r.witness_edges.size() == static_cast<std::size_t>(r.value));
    CHECK(std::is_sorted(r.witness_edges.begin(), r.witness_edges.end()));
    for (int e : r.witness_edges) CHECK_FALSE(m.contains(e));
    CHECK(antiforces(f.g, m, r.witness_edges));
    for (std::size_t drop = 0; drop < r.witness_edges.size(); ++drop) {
      std::vector<int> sub = r.witness_edges;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
      CHECK_FALSE(antiforces(f.g, m, sub));
    }
    ++hist[r.value];

    ForcingResult o = antiforcing_number_oracle(f.g, m, f.extras);
    CHECK(o.value == r.value);
    CHECK(o.method == SearchMethod::minimax_oracle);
    CHECK(o.witness_edges.empty());
    CHECK(o.witness_cycles.size() == static_cast<std::size_t>(o.value));
  }
  CHECK(hist == std::map<int, int>{{1, 2}, {2, 2}, {3, 2}});
}

TEST_CASE("seed anti-forcing polynomials") {
  CHECK(antiforcing_polynomial_brute(chain(1).g, {}, RunCaps{}) == IntPoly{0, 2, 2, 2});
  CHECK(antiforcing_polynomial_brute(build_named("pyrene"), {}, RunCaps{}) ==
        IntPoly{0, 2, 2, 2});
  // Two rings joined by a bridge: each ring must be broken separately.
  CHECK(antiforcing_polynomial_brute(build_named("diphenyl"), {}, RunCaps{}) ==
        IntPoly{0, 0, 4});
}

TEST_CASE("brute, oracle and recurrence agree on short chains") {
  for (int n = 1; n <= 2; ++n) {
    CAPTURE(n);
    ChainFixture f = chain(n);
    IntPoly rec = antiforcing_poly_recurrence(n);
    CHECK(antiforcing_polynomial_brute(f.g, f.extras, RunCaps{}) == rec);
    CHECK(antiforcing_polynomial_oracle(f.g, f.extras) == rec);
  }
  ChainFixture f3 = chain(3);
  CHECK(antiforcing_polynomial_oracle(f3.g, f3.extras) == antiforcing_poly_recurrence(3));
}

TEST_CASE("junction peripheries are load-bearing for the compatible maximum") {
  // For some matchings the maximum compatible family needs an 18-cycle; with
  // faces alone the bound undershoots and the oracle would be wrong.
  bool extras_raise_bound = false;
  for (int n = 2; n <= 3 && !extras_raise_bound; ++n) {
    ChainFixture f = chain(n);
    for (const Matching& m : enumerate_perfect_matchings(f.g)) {
      int faces_only = max_compatible_restricted(f.g, m, {}).size;
      int with_extras = max_compatible_restricted(f.g, m, f.extras).size;
      CHECK(faces_only <= with_extras);
      if (faces_only < with_extras) {
        extras_raise_bound = true;
        break;
      }
    }
  }
  CHECK(extras_raise_bound);
}

TEST_CASE("truncated chains: brute equals the derived polynomial") {
  // Af(G_n) = Af(H_n) - (x^3 - x^2 + x) Af(H_{n-1}).
  const IntPoly mix{0, 1, -1, 1};
  for (int n = 1; n <= 2; ++n) {
    CAPTURE(n);
    HexSystem sys = build_auxiliary_system(n);
    Graph g = to_graph(sys);
    auto extras = junction_peripheries(sys, g);
    IntPoly expect =
        antiforcing_poly_recurrence(n) - mix * antiforcing_poly_recurrence(n - 1);
    CHECK(antiforcing_polynomial_brute(g, extras, RunCaps{}) == expect);
    CHECK(antiforcing_polynomial_oracle(g, extras) == expect);
  }
  CHECK(antiforcing_polynomial_brute(build_auxiliary(1), {}, RunCaps{}) ==
        IntPoly{0, 1, 3, 1});
}

TEST_CASE("anti-forcing error paths") {
  ChainFixture f = chain(1);
  Matching m = enumerate_perfect_matchings(f.g).front();

  Matching bogus{f.g.id, EdgeSet(static_cast<std::size_t>(f.g.edge_count()))};
  CHECK(code_of([&] { antiforcing_number(f.g, bogus, {}, RunCaps{}); }) ==
        ErrorCode::invalid_parameter);

  // Malformed extra cycle: not a cycle of the graph.
  CHECK(code_of([&] { antiforcing_number(f.g, m, {{0, 1, 2}}, RunCaps{}); }) ==
        ErrorCode::invalid_parameter);

  RunCaps tight;
  tight.antiforcing_matchings = 5;
  CHECK(code_of([&] { antiforcing_polynomial_brute(chain(2).g, {}, tight); }) ==
        ErrorCode::cap_exceeded);

  Graph odd = to_graph(parse_system(R"({"cells":[[0,0],[1,0],[0,1]]})"));
  CHECK(code_of([&] { antiforcing_polynomial_brute(odd, {}, RunCaps{}); }) ==
        ErrorCode::no_perfect_matching);
  CHECK(code_of([&] { antiforcing_polynomial_oracle(odd, {}); }) ==
        ErrorCode::no_perfect_matching);
}

TEST_CASE("width cap guards the subset fallback") {
  // Without the peripheries the family bound can undershoot, forcing the
  // subset fallback; a tiny width cap must then refuse rather than truncate.
  ChainFixture f = chain(2);
  bool cap_hit = false;
  RunCaps narrow;
  narrow.antiforcing_width = 3;
  for (const Matching& m : enumerate_perfect_matchings(f.g)) {
    int faces_only = max_compatible_restricted(f.g, m, {}).size;
    int truth = antiforcing_number(f.g, m, f.extras, RunCaps{}).value;
    if (faces_only < truth) {
      CHECK(code_of([&] { antiforcing_number(f.g, m, {}, narrow); }) ==
            ErrorCode::cap_exceeded);
      cap_hit = true;
      break;
    }
  }
  CHECK(cap_hit);
}
