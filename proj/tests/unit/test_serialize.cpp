#include <doctest.h>

#include "combspec/error.hpp"
#include "combspec/serialize.hpp"

using namespace combspec;

TEST_SUITE("serialize") {
  TEST_CASE("ring element json") {
    const RingElem p = RingElem::i() * RingElem::y() - 1 + RingElem(BigInt("123456789012345678901234567890")) * RingElem::x(2);
    const json j = to_json(p);
    CHECK(j.dump() ==
          R"([{"im":"0","re":"-1","x":0,"y":0},{"im":"1","re":"0","x":0,"y":1},{"im":"0","re":"123456789012345678901234567890","x":2,"y":0}])");
    CHECK(ring_from_json(j) == p);
    CHECK(to_json(RingElem()).dump() == "[]");
    CHECK_THROWS_AS(ring_from_json(json::parse(R"([{"x":0,"y":0,"re":1,"im":"0"}])")), Error);
  }

  TEST_CASE("weighted graph json") {
    const WCG g = roman_polynomial(3);
    const json j = to_json(g);
    CHECK(j["n"] == 3);
    CHECK(j["weights"].size() == 3);
    CHECK(wcg_from_json(j) == g);
  }

  TEST_CASE("family json") {
    const GraphFamily f = edge_deleted_family(3);
    const json j = to_json(f);
    CHECK(j["count"] == 3);
    CHECK(j["members"].size() == 3);
    CHECK_FALSE(to_json(f, 2).contains("members"));
  }

  TEST_CASE("verdict json") {
    SearchOptions o;
    o.limits.workers = 1;
    const Verdict v = dominating_k(path_graph(3), 1, o);
    const json j = to_json(v);
    CHECK(j["schema"] == "1");
    CHECK(j["holds"] == true);
    CHECK(j["witness"]["set"] == json::array({2}));
    CHECK(j["stats"]["candidates"] == 2);
    CHECK_FALSE(j["stats"].contains("elapsed_ms"));
    CHECK(to_json(v, true)["stats"].contains("elapsed_ms"));
    const json none = to_json(dominating_k(cycle_graph(4), 1, o));
    CHECK_FALSE(none.contains("witness"));
  }

  TEST_CASE("graph json") {
    const json j = to_json(path_graph(3));
    CHECK(j["graph6"] == "Bg");
    CHECK(j["edges"] == json::parse("[[1,2],[2,3]]"));
  }
}
