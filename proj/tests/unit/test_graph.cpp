#include <doctest.h>

#include "combspec/corpus.hpp"
#include "combspec/error.hpp"
#include "combspec/graph.hpp"

using namespace combspec;

namespace {

ErrorCode code_of(std::string_view text) {
  try {
    (void)parse_graph(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

std::string message_of(std::string_view text) {
  try {
    (void)parse_edge_list(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("edge list parsing") {
    const SimpleGraph p3 = parse_edge_list("3 2\n1 2\n2 3");
    CHECK(p3 == path_graph(3));
    CHECK(parse_edge_list("2 1\n1 2") == complete_graph(2));
    CHECK(parse_edge_list("# comment\n\n3 2\n1 2 # trailing\n\n3 2\n") == path_graph(3));
    CHECK(code_of("3 1\n1 1") == ErrorCode::parse);
    CHECK(message_of("3 1\n1 1").find("line 2") != std::string::npos);
    CHECK(message_of("3 1\n1 1").find("loop") != std::string::npos);
    CHECK(message_of("3 1\n1 4").find("range") != std::string::npos);
    CHECK(message_of("3 2\n1 2\n2 1").find("duplicate") != std::string::npos);
    CHECK(code_of("3 2\n1 2") == ErrorCode::parse);
    CHECK(code_of("3 1\n1 x") == ErrorCode::parse);
  }

  TEST_CASE("graph6 round trip and detection") {
    CHECK(to_graph6(path_graph(3)) == "Bg");
    CHECK(parse_graph("Bg") == path_graph(3));
    CHECK(parse_graph(">>graph6<<Bg\n") == path_graph(3));
    for (int n = 1; n <= 6; ++n) {
      for (const auto& g : all_graphs(n)) {
        REQUIRE(parse_graph6(to_graph6(g)) == g);
        REQUIRE(parse_edge_list(to_edge_list(g)) == g);
      }
    }
    const SimpleGraph big = cycle_graph(70);
    CHECK(parse_graph6(to_graph6(big)) == big);
    const auto many = parse_graphs("Bg\nBw\n");
    REQUIRE(many.size() == 2);
    CHECK(many[1] == complete_graph(3));
  }

  TEST_CASE("distances") {
    const auto d = all_pairs_distances(path_graph(3));
    CHECK(d.at(1, 2) == 1);
    CHECK(d.at(2, 3) == 1);
    CHECK(d.at(1, 3) == 2);
    const auto k3 = all_pairs_distances(complete_graph(3));
    CHECK(k3.at(1, 3) == 1);
    const auto two = all_pairs_distances(SimpleGraph(2));
    CHECK_FALSE(two.at(1, 2).has_value());
    CHECK_FALSE(two.connected());
  }

  TEST_CASE("distance table is symmetric and metric") {
    for (int n = 2; n <= 6; ++n) {
      for (const auto& g : connected_graphs(n)) {
        const auto d = all_pairs_distances(g);
        for (int a = 1; a <= n; ++a) {
          for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            REQUIRE(d.at(a, b) == d.at(b, a));
            for (int c = 1; c <= n; ++c) {
              if (c == a || c == b) continue;
              REQUIRE(*d.at(a, b) <= *d.at(a, c) + *d.at(c, b));
            }
          }
        }
      }
    }
  }

  TEST_CASE("components") {
    CHECK(component_orders(path_graph(3)) == std::vector<int>{3});
    const SimpleGraph k2k3(5, {{1, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(component_orders(k2k3) == std::vector<int>{2, 3});
    CHECK(component_orders(SimpleGraph(1)) == std::vector<int>{1});
    CHECK(has_isolated_vertex(SimpleGraph(3, {{1, 2}})));
  }

  TEST_CASE("construction guards") {
    SimpleGraph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), Error);
    CHECK_THROWS_AS(g.add_edge(0, 2), Error);
    g.add_edge(2, 1);
    CHECK_THROWS_AS(g.add_edge(1, 2), Error);
    CHECK(g.edges().front() == Edge{1, 2});
  }

  TEST_CASE("corpus counts") {
    const std::vector<std::size_t> all = {1, 2, 4, 11, 34, 156};
    const std::vector<std::size_t> connected = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 6; ++n) CHECK(all_graphs(n).size() == all[static_cast<std::size_t>(n - 1)]);
    for (int n = 1; n <= 7; ++n) CHECK(connected_graphs(n).size() == connected[static_cast<std::size_t>(n - 1)]);
    for (const auto& g : connected_graphs(5)) CHECK(is_connected(g));
  }
}
