#include <doctest.h>

#include "combspec/corpus.hpp"
#include "combspec/error.hpp"
#include "combspec/spectra.hpp"

using namespace combspec;

namespace {

Limits serial() {
  Limits l;
  l.workers = 1;
  return l;
}

WCG single_edge(int n, long long w) {
  WCG g(n);
  g.set_weight(1, 2, w);
  return g;
}

}  // namespace

TEST_SUITE("spectra") {
  TEST_CASE("family product") {
    const WCG h = embed_weighted(path_graph(3), {{{1, 2}, 1}, {{2, 3}, 2}});
    const GraphFamily perms = family_product(GraphFamily::singleton(indicator(complete_graph(3))),
                                             GraphFamily::singleton(h), serial());
    CHECK(perms.size() == 6);
    CHECK(perms.contains(h));

    const GraphFamily k2 = GraphFamily::singleton(single_edge(2, 0));
    const GraphFamily sq = family_product(k2, k2, serial());
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].weight(1, 2).is_zero());

    CHECK(family_product(edge_deleted_family(3), edge_deleted_family(3), serial()).size() == 6);
    CHECK_THROWS_AS(family_product(k2, edge_deleted_family(3), serial()), Error);
  }

  TEST_CASE("family product cardinality bound and canonical order") {
    const GraphFamily a = edge_deleted_family(4);
    const GraphFamily b = GraphFamily::singleton(indicator(path_graph(4)));
    const GraphFamily prod = family_product(a, b, serial());
    CHECK(prod.size() <= a.size() * b.size() * 24);
    for (std::size_t i = 1; i < prod.size(); ++i) CHECK(prod[i - 1] < prod[i]);
    Limits many = serial();
    many.workers = 3;
    CHECK(family_product(a, b, many) == prod);
  }

  TEST_CASE("family sum") {
    const WCG a = indicator(path_graph(3)), b = indicator(complete_graph(3));
    const GraphFamily s = family_sum(GraphFamily::singleton(a), GraphFamily::singleton(b), serial());
    REQUIRE(s.size() == 1);
    CHECK(s[0] == a + b);
    const GraphFamily lhs(2, {single_edge(2, 0), single_edge(2, 1)});
    const GraphFamily sum = family_sum(lhs, GraphFamily::singleton(single_edge(2, 1)), serial());
    CHECK(sum == GraphFamily(2, {single_edge(2, 1), single_edge(2, 2)}));
    const GraphFamily fam = colorings_family(3, 2, serial());
    CHECK(family_sum(fam, GraphFamily::singleton(zero_graph(3)), serial()) == fam);
  }

  TEST_CASE("fixpoint") {
    const auto k2 = power_infty(GraphFamily::singleton(single_edge(2, 0)), serial());
    CHECK(k2.family.size() == 1);
    const auto k3 = power_infty(edge_deleted_family(3), serial());
    CHECK(k3.family.size() == 7);
    CHECK(k3.exponent <= 3);
    for (const auto& m : k3.family.members()) {
      bool has_zero = false;
      for (const auto& w : m.weights()) has_zero = has_zero || w.is_zero();
      CHECK(has_zero);
    }
    CHECK(power_infty(edge_deleted_family(4), serial()).family.size() == 63);
    const auto ones = power_infty(GraphFamily::singleton(indicator(complete_graph(4))), serial());
    CHECK(ones.family == GraphFamily::singleton(indicator(complete_graph(4))));
    CHECK(power_infty(k3.family, serial()).family == k3.family);
  }

  TEST_CASE("coloring families") {
    const GraphFamily c2 = colorings_family(2, 2, serial());
    CHECK(c2 == GraphFamily(2, {single_edge(2, 1), single_edge(2, 2)}));
    CHECK(colorings_family(3, 2, serial()).size() == 8);
    CHECK(colorings_family(3, 3, serial()).size() == 27);
    CHECK(colorings_family(4, 2, serial()).size() == 64);
    const std::vector<RingElem> pal = {RingElem(1), RingElem(2), RingElem(3)};
    CHECK(colorings_family(3, 3, serial()) == colorings_of_graph(complete_graph(3), pal, serial()));
  }

  TEST_CASE("colorings of a graph") {
    const std::vector<RingElem> two = {RingElem(1), RingElem(2)};
    CHECK(colorings_of_graph(path_graph(3), two, serial()).size() == 4);
    CHECK(colorings_of_graph(path_graph(3), roman_palette(), serial()).size() == 9);
    const std::vector<RingElem> three = {RingElem(1), RingElem(2), RingElem(3)};
    CHECK(colorings_of_graph(complete_graph(3), three, serial()).size() == 27);
    Limits tight = serial();
    tight.max_family = 8;
    CHECK_THROWS_AS(colorings_of_graph(complete_graph(3), three, tight), Error);
  }

  TEST_CASE("coloring lemma on small graphs") {
    for (int n = 2; n <= 4; ++n) {
      for (const auto& g : connected_graphs(n)) {
        for (int k = 2; k <= 3; ++k) {
          std::vector<RingElem> pal;
          for (int c = 1; c <= k; ++c) pal.emplace_back(c);
          const GraphFamily built = family_product(GraphFamily::singleton(indicator(g)),
                                                   colorings_family(n, k, serial()), serial());
          REQUIRE(built == colorings_of_graph(g, pal, serial()));
        }
      }
    }
  }

  TEST_CASE("roman color family") {
    for (int n = 2; n <= 4; ++n) {
      const GraphFamily all = colorings_of_graph(complete_graph(n), roman_palette(), serial());
      for (const auto& h : all.members()) REQUIRE(in_roman_color_family(h));
      for (const auto& g : connected_graphs(n)) {
        const GraphFamily built = family_product(GraphFamily::singleton(indicator(g)), all, serial());
        REQUIRE(built == colorings_of_graph(g, roman_palette(), serial()));
      }
    }
    WCG bad(3);
    bad.set_weight(1, 2, 2);
    CHECK_FALSE(in_roman_color_family(bad));
  }

  TEST_CASE("spectrum") {
    const GraphFamily ham = family_product(GraphFamily::singleton(indicator(cycle_graph(3))),
                                           GraphFamily::singleton(dist_graph(path_graph(3))), serial());
    const Spectrum s = spectrum(ham);
    REQUIRE(s.size() == 1);
    CHECK(s.values()[0] == RingElem(4));
    CHECK(spectrum(GraphFamily::singleton(indicator(complete_graph(3)))).values()[0] == RingElem(3));
    CHECK(spectrum(GraphFamily(3)).empty());
  }

  TEST_CASE("size guards") {
    Limits small = serial();
    small.max_n = 4;
    CHECK_THROWS_AS(colorings_family(5, 2, small), Error);
    Limits steps = serial();
    steps.max_steps = 10;
    try {
      (void)family_product(edge_deleted_family(4), edge_deleted_family(4), steps);
      FAIL("expected size guard");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::size_guard);
    }
  }
}
