#include <doctest.h>

#include <random>

#include "combspec/error.hpp"
#include "combspec/ring.hpp"

using namespace combspec;

namespace {

const RingElem x = RingElem::x();
const RingElem y = RingElem::y();
const RingElem I = RingElem::i();

RingElem random_elem(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 4), deg(0, 3), coef(-5, 5);
  std::vector<Term> out;
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    out.push_back({Monomial{static_cast<std::uint32_t>(deg(rng)), static_cast<std::uint32_t>(deg(rng))},
                   GaussInt(BigInt(coef(rng)), BigInt(coef(rng)))});
  }
  return RingElem::from_terms(std::move(out));
}

GaussInt random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  return GaussInt(BigInt(c(rng)), BigInt(c(rng)));
}

}  // namespace

TEST_SUITE("ring") {
  TEST_CASE("addition examples") {
    CHECK((1 + x) + x == 1 + RingElem(2) * x);
    CHECK((I + (-I)).is_zero());
    CHECK((I + (-I)).terms().empty());
    CHECK((y - 1) + RingElem(1) == y);
  }

  TEST_CASE("multiplication examples") {
    CHECK(I * I == RingElem(-1));
    CHECK(RingElem::x(2) * (1 + x) == RingElem::x(2) + RingElem::x(3));
    CHECK(y * I == RingElem::monomial(GaussInt::i(), 0, 1));
  }

  TEST_CASE("evaluation examples") {
    CHECK(eval(RingElem::x(3) + RingElem(2) * RingElem::x(5), 1, 1) == GaussInt(3));
    const RingElem witness = (I * y - 1) + (y - 1) * x + (y - I) * RingElem::x(2);
    CHECK(eval(witness, 1, 1) == GaussInt(0));
    CHECK(eval(RingElem(), GaussInt(7, 2), GaussInt(-1, 4)) == GaussInt(0));
  }

  TEST_CASE("coefficient extraction") {
    CHECK(coef_x(1 + RingElem(3) * x + RingElem(2) * RingElem::x(2), 1) == RingElem(3));
    const RingElem p = I * y - 1 + (y - I) * RingElem::x(2);
    CHECK(coef_x(p, 2) == y - I);
    CHECK(coef_x(p, 9).is_zero());
    const RingElem constant = coef_x(p, 0);
    for (const auto& t : constant.terms()) CHECK(t.mono.x == 0);
  }

  TEST_CASE("exact division") {
    const GaussInt d(2, 1);
    CHECK(exact_div(RingElem(d) * (y - 1), d) == y - 1);
    CHECK(exact_div(RingElem(), d).is_zero());
    try {
      (void)exact_div(RingElem(1), GaussInt(2));
      FAIL("expected not_divisible");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::not_divisible);
    }
    CHECK_THROWS_AS((void)exact_div(RingElem(1), GaussInt(0)), Error);
  }

  TEST_CASE("classification") {
    const auto a = classify(I - 1);
    CHECK_FALSE(a.is_nonzero_pure_imaginary);
    CHECK_FALSE(a.is_in_minus_i_plus_Z);
    const auto z = classify(RingElem());
    CHECK(z.is_zero);
    CHECK(z.is_constant);
    CHECK_FALSE(z.is_nonzero_pure_imaginary);
    CHECK(classify(RingElem(3) - I).is_in_minus_i_plus_Z);
    CHECK(classify(-I).is_in_minus_i_plus_Z);
    CHECK(classify(RingElem(GaussInt(0, -4))).is_nonzero_pure_imaginary);
    CHECK_FALSE(classify(I * y).is_nonzero_pure_imaginary);
    CHECK_FALSE(classify(y - I).is_in_minus_i_plus_Z);
  }

  TEST_CASE("text rendering") {
    CHECK(RingElem().to_string() == "0");
    CHECK(I.to_string() == "i");
    CHECK((-I).to_string() == "-i");
    CHECK(RingElem(GaussInt(1, 2)).to_string() == "1+2i");
    CHECK((1 + RingElem(3) * x + RingElem(2) * RingElem::x(2)).to_string() == "1+3x+2x^2");
  }

  TEST_CASE("arbitrary precision") {
    RingElem p = RingElem(1) + x;
    RingElem acc(1);
    for (int k = 0; k < 80; ++k) acc *= p;
    // Central binomial coefficient C(80,40) exceeds 64 bits.
    CHECK(coef_x(acc, 40).constant()->re() == BigInt("107507208733336176461620"));
  }

  TEST_CASE("ring axioms and evaluation homomorphism on random elements") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 1000; ++trial) {
      const RingElem a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + RingElem() == a);
      REQUIRE(a * RingElem(1) == a);
      REQUIRE((a - a).is_zero());
      REQUIRE((a * RingElem(1) + RingElem()).hash() == a.hash());
      if (a == b) REQUIRE(a.hash() == b.hash());
      const GaussInt px = random_point(rng), py = random_point(rng);
      REQUIRE(eval(a * b, px, py) == eval(a, px, py) * eval(b, px, py));
      REQUIRE(eval(a + b, px, py) == eval(a, px, py) + eval(b, px, py));
      RingElem rebuilt;
      for (std::uint32_t j = 0; j <= a.degree_x(); ++j) rebuilt += coef_x(a, j) * RingElem::x(j);
      REQUIRE(rebuilt == a);
      const GaussInt d = random_point(rng);
      if (!d.is_zero()) REQUIRE(exact_div(a * RingElem(d), d) == a);
    }
  }

  TEST_CASE("accumulator matches plain arithmetic") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      RingAccumulator acc;
      RingElem expect;
      for (int k = 0; k < 5; ++k) {
        const RingElem a = random_elem(rng), b = random_elem(rng);
        acc.add_product(a, b);
        expect += a * b;
      }
      REQUIRE(acc.take() == expect);
    }
  }
}
