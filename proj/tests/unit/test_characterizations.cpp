#include <doctest.h>

#include "combspec/characterizations.hpp"
#include "combspec/error.hpp"

using namespace combspec;

namespace {

const RingElem x = RingElem::x();
const RingElem I = RingElem::i();

SearchOptions serial() {
  SearchOptions o;
  o.limits.workers = 1;
  return o;
}

WCG labelled_p3(long long a, long long b) { return embed_weighted(path_graph(3), {{{1, 2}, a}, {{2, 3}, b}}); }

ErrorCode failure(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

}  // namespace

TEST_SUITE("characterizations") {
  TEST_CASE("weighted antimagic") {
    CHECK(antimagic_weighted(labelled_p3(1, 2), false).holds);
    CHECK_FALSE(antimagic_weighted(embed_weighted(complete_graph(2), {{{1, 2}, 1}}), true).holds);
    CHECK_FALSE(antimagic_weighted(labelled_p3(1, 1), false).holds);
    CHECK(failure([] { (void)antimagic_weighted(WCG(3, {x, RingElem(1), RingElem(2)}), false); }) ==
          ErrorCode::invalid_argument);
  }

  TEST_CASE("family antimagic") {
    const Verdict v = antimagic_family(GraphFamily::singleton(labelled_p3(1, 2)), serial());
    REQUIRE(v.holds);
    CHECK(*v.witness_polynomial == 1 + RingElem(3) * x + RingElem(2) * RingElem::x(2) + RingElem::x(3) +
                                       RingElem(2) * RingElem::x(5));
    CHECK(v.witness_bijection->image() == std::vector<int>{1, 2, 3});
    CHECK_FALSE(antimagic_family(GraphFamily::singleton(labelled_p3(1, 1)), serial()).holds);
    CHECK_FALSE(antimagic_family(GraphFamily(3), serial()).holds);
  }

  TEST_CASE("unweighted antimagic") {
    const Verdict p3 = antimagic_unweighted(path_graph(3), serial());
    REQUIRE(p3.holds);
    std::vector<long long> labels;
    for (const auto& l : p3.witness_labels) labels.push_back(l.label);
    std::sort(labels.begin(), labels.end());
    CHECK(labels == std::vector<long long>{1, 2});
    CHECK_FALSE(antimagic_unweighted(complete_graph(2), serial()).holds);
    CHECK(antimagic_unweighted(complete_graph(3), serial()).holds);
    CHECK(failure([] { (void)antimagic_unweighted(SimpleGraph(3, {{1, 2}}), serial()); }) ==
          ErrorCode::precondition);
  }

  TEST_CASE("irregular labelings") {
    CHECK(irregular_weighted(labelled_p3(1, 2)).holds);
    CHECK_FALSE(irregular_weighted(labelled_p3(1, 1)).holds);
    CHECK(irregular_weighted(embed_weighted(cycle_graph(3), {{{1, 2}, 1}, {{2, 3}, 2}, {{1, 3}, 3}})).holds);
    CHECK_FALSE(strength_at_most(path_graph(3), 1, serial()).holds);
    CHECK(strength_at_most(path_graph(3), 2, serial()).holds);
    CHECK_FALSE(strength_at_most(cycle_graph(3), 2, serial()).holds);
    CHECK(strength_at_most(cycle_graph(3), 3, serial()).holds);
  }

  TEST_CASE("local irregularity") {
    CHECK(local_irregular_weighted(labelled_p3(1, 1)).holds);
    CHECK_FALSE(local_irregular_weighted(embed_weighted(complete_graph(2), {{{1, 2}, 1}})).holds);
    EdgeLabels ones;
    const SimpleGraph c4 = cycle_graph(4);
    for (const auto& e : c4.edges()) ones[e] = 1;
    CHECK_FALSE(local_irregular_weighted(embed_weighted(c4, ones)).holds);
  }

  TEST_CASE("1-2-3") {
    const Verdict p3 = one_two_three(path_graph(3), serial());
    REQUIRE(p3.holds);
    for (const auto& l : p3.witness_labels) CHECK(l.label == 1);
    CHECK(*p3.witness_polynomial == (I - 1) + (1 + I) * RingElem::x(2));
    const Verdict k3 = one_two_three(complete_graph(3), serial());
    REQUIRE(k3.holds);
    std::vector<long long> labels;
    for (const auto& l : k3.witness_labels) labels.push_back(l.label);
    std::sort(labels.begin(), labels.end());
    CHECK(labels == std::vector<long long>{1, 2, 3});
    CHECK(failure([] { (void)one_two_three(complete_graph(2), serial()); }) == ErrorCode::precondition);
  }

  TEST_CASE("domination") {
    const Verdict p3 = dominating_k(path_graph(3), 1, serial());
    REQUIRE(p3.holds);
    CHECK(p3.witness_set == std::vector<int>{2});
    CHECK(*p3.witness_polynomial == 1 + x);
    CHECK(p3.witness_bijection->image() == std::vector<int>{1, 3, 2});
    CHECK_FALSE(dominating_k(cycle_graph(4), 1, serial()).holds);
    CHECK(dominating_k(cycle_graph(4), 2, serial()).holds);
    CHECK(failure([] { (void)dominating_k(path_graph(3), 3, serial()); }) == ErrorCode::precondition);
    CHECK(failure([] { (void)dominating_k(path_graph(3), 0, serial()); }) == ErrorCode::precondition);
  }

  TEST_CASE("edge Roman domination") {
    const RingElem y = RingElem::y();
    const Verdict p3 = edge_roman_at_most(path_graph(3), 2, serial());
    REQUIRE(p3.holds);
    CHECK(*p3.witness_polynomial == (I * y - 1) + (y - 1) * x + (y - I) * RingElem::x(2));
    CHECK(p3.witness_bijection->image() == std::vector<int>{1, 2, 3});
    REQUIRE(p3.witness_labels.size() == 2);
    CHECK(p3.witness_labels[0].label == 2);
    CHECK(p3.witness_labels[1].label == 0);
    CHECK(*p3.witness_weight == 2);
    CHECK_FALSE(edge_roman_at_most(path_graph(3), 1, serial()).holds);
    const Verdict p4 = edge_roman_at_most(path_graph(4), 2, serial());
    REQUIRE(p4.holds);
    CHECK(p4.witness_labels[0].label == 0);
    CHECK(p4.witness_labels[1].label == 2);
    CHECK(p4.witness_labels[2].label == 0);
    CHECK(failure([] { (void)edge_roman_at_most(path_graph(3), 3, serial()); }) == ErrorCode::precondition);
    CHECK(failure([] { (void)edge_roman_at_most(SimpleGraph(3), 0, serial()); }) == ErrorCode::precondition);
  }

  TEST_CASE("edge Roman weight identity") {
    const SimpleGraph g = cycle_graph(4);
    const GraphFamily all = colorings_of_graph(g, roman_palette(), serial().limits);
    for (const auto& h : all.members()) {
      long long w = 0;
      for (const auto& l : decode_roman(g, h)) w += l.label;
      REQUIRE(predicted_roman_weight(g, h) == w);
    }
  }

  TEST_CASE("hamiltonian") {
    const Spectrum p3 = hamiltonian_spectrum(cycle_graph(3), path_graph(3));
    REQUIRE(p3.size() == 1);
    CHECK(p3.values()[0] == RingElem(4));
    CHECK(hamiltonian_number(path_graph(3)) == 4);
    for (int n = 3; n <= 5; ++n) CHECK(hamiltonian_number(cycle_graph(n)) == n);
    CHECK(hamiltonian_number(star_graph(4)) == 6);
    CHECK(failure([] { (void)hamiltonian_number(SimpleGraph(3, {{1, 2}})); }) == ErrorCode::precondition);
  }

  TEST_CASE("search stats and exhaustive mode") {
    SearchOptions o = serial();
    const Verdict first = dominating_k(path_graph(3), 1, o);
    CHECK(first.stats.members == 1);
    CHECK(first.stats.bijections == 6);
    CHECK(first.stats.candidates == 2);
    o.exhaustive = true;
    const Verdict all = dominating_k(path_graph(3), 1, o);
    REQUIRE(all.witness_count.has_value());
    CHECK(*all.witness_count == 2);
    CHECK(all.witness_set == first.witness_set);
    const Verdict none = dominating_k(cycle_graph(4), 1, serial());
    CHECK(none.stats.candidates == 24);
  }

  TEST_CASE("verdicts do not depend on worker count") {
    SearchOptions many = serial();
    many.limits.workers = 4;
    for (int k = 1; k <= 4; ++k) {
      const Verdict a = edge_roman_at_most(cycle_graph(5), k, serial());
      const Verdict b = edge_roman_at_most(cycle_graph(5), k, many);
      CHECK(a.holds == b.holds);
      CHECK(a.stats.candidates == b.stats.candidates);
      CHECK(a.witness_labels == b.witness_labels);
    }
  }

  TEST_CASE("coefficient predicates") {
    CHECK(distinct_vertex_coefficients(1 + RingElem(3) * x + RingElem(2) * RingElem::x(2), 3));
    CHECK_FALSE(distinct_vertex_coefficients(1 + RingElem(2) * x + RingElem::x(2), 3));
    CHECK(no_nonzero_imaginary_coefficient((I - 1) + (1 + I) * RingElem::x(2), 3));
    CHECK_FALSE(no_nonzero_imaginary_coefficient(I * x, 3));
    CHECK(all_coefficients_nonzero(1 + x, 2));
    CHECK_FALSE(all_coefficients_nonzero(x, 2));
    CHECK_FALSE(no_coefficient_in_minus_i_plus_z(RingElem(3) - I, 1));
    CHECK(no_coefficient_in_minus_i_plus_z(RingElem::y() - I, 1));
  }
}
