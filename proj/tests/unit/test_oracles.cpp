#include <doctest.h>

#include <algorithm>
#include <random>

#include "combspec/corpus.hpp"
#include "combspec/error.hpp"
#include "combspec/oracles.hpp"

using namespace combspec;
namespace orc = combspec::oracle;

namespace {

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm) {
  SimpleGraph out(g.order());
  for (const auto& e : g.edges()) out.add_edge(perm[static_cast<std::size_t>(e.u - 1)], perm[static_cast<std::size_t>(e.v - 1)]);
  return out;
}

}  // namespace

TEST_SUITE("oracles") {
  TEST_CASE("antimagic") {
    const auto p3 = orc::antimagic(path_graph(3));
    CHECK(p3.holds);
    CHECK(orc::is_antimagic_labeling(path_graph(3), p3.witness));
    CHECK_FALSE(orc::antimagic(complete_graph(2)).holds);
    CHECK(orc::antimagic(cycle_graph(4)).holds);
  }

  TEST_CASE("irregularity strength") {
    CHECK(*orc::strength(path_graph(3), 3).value == 2);
    CHECK(*orc::strength(cycle_graph(3), 3).value == 3);
    CHECK(*orc::strength(path_graph(4), 3).value == 2);
    const auto c3 = orc::strength(cycle_graph(3), 3);
    CHECK(orc::is_irregular_labeling(cycle_graph(3), c3.witness));
    CHECK_FALSE(orc::strength(cycle_graph(3), 2).holds);
  }

  TEST_CASE("vertex-coloring labelings") {
    CHECK(orc::chi_sigma(path_graph(3), 1).holds);
    CHECK_FALSE(orc::chi_sigma(complete_graph(3), 2).holds);
    CHECK(orc::chi_sigma(complete_graph(3), 3).holds);
    const auto c4 = orc::chi_sigma(cycle_graph(4), 2);
    CHECK(c4.holds);
    CHECK(orc::is_vertex_coloring_labeling(cycle_graph(4), c4.witness));
  }

  TEST_CASE("domination") {
    const auto p3 = orc::domination(path_graph(3), 1);
    CHECK(p3.holds);
    CHECK(p3.witness == std::vector<int>{2});
    CHECK_FALSE(orc::domination(cycle_graph(4), 1).holds);
    CHECK(orc::domination(cycle_graph(4), 2).holds);
    CHECK(orc::domination(complete_graph(5), 1).holds);
    CHECK_FALSE(orc::is_dominating_set(path_graph(3), {3}));
  }

  TEST_CASE("edge Roman domination") {
    CHECK(*orc::edge_roman(path_graph(3)).value == 2);
    CHECK(*orc::edge_roman(path_graph(4)).value == 2);
    CHECK(*orc::edge_roman(complete_graph(2)).value == 1);
    const auto p4 = orc::edge_roman(path_graph(4));
    CHECK(orc::is_edge_roman_function(path_graph(4), p4.witness));
    CHECK(p4.witness == std::vector<int>{0, 2, 0});
    CHECK_FALSE(orc::is_edge_roman_function(path_graph(3), {1, 0}));
  }

  TEST_CASE("hamiltonian number") {
    CHECK(*orc::hamiltonian(path_graph(3)).value == 4);
    CHECK(*orc::hamiltonian(cycle_graph(5)).value == 5);
    CHECK(*orc::hamiltonian(star_graph(4)).value == 6);
    CHECK(orc::hamiltonian(cycle_graph(6)).enumerated == 60);
    const auto w = orc::hamiltonian(star_graph(5));
    CHECK(orc::cyclic_length(star_graph(5), w.witness) == *w.value);
  }

  TEST_CASE("guards") {
    Limits tiny;
    tiny.max_steps = 5;
    CHECK_THROWS_AS(orc::antimagic(complete_graph(4), tiny), Error);
    CHECK_THROWS_AS(orc::edge_roman(SimpleGraph(3)), Error);
  }

  TEST_CASE("invariance under relabeling") {
    std::mt19937_64 rng(31);
    for (const auto& g : connected_graphs(5)) {
      std::vector<int> perm = {1, 2, 3, 4, 5};
      std::shuffle(perm.begin(), perm.end(), rng);
      const SimpleGraph h = relabel(g, perm);
      REQUIRE(orc::antimagic(g).holds == orc::antimagic(h).holds);
      REQUIRE(orc::strength(g, 3).value == orc::strength(h, 3).value);
      REQUIRE(orc::edge_roman(g).value == orc::edge_roman(h).value);
      REQUIRE(orc::hamiltonian(g).value == orc::hamiltonian(h).value);
      for (int k = 1; k <= 4; ++k) REQUIRE(orc::domination(g, k).holds == orc::domination(h, k).holds);
    }
  }
}
