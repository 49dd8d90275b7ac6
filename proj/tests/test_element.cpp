#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wittlab/element.hpp"

#include "support/test_util.hpp"

#include <random>

using namespace wittlab;

TEST_CASE("terms merge and exact zeros vanish") {
  Element x;
  x.add_term(BasisSymbol::L(3), Rational(BigInt(1), BigInt(2)));
  x.add_term(BasisSymbol::L(3), Rational(BigInt(1), BigInt(2)));
  CHECK(x.coefficient(BasisSymbol::L(3)) == Rational(1));
  x.add_term(BasisSymbol::L(3), Rational(-1));
  CHECK(x.is_zero());
  CHECK(x.term_count() == 0);
}

TEST_CASE("arithmetic is coefficient-wise") {
  const Element x = Element::L(1) + Element::I(-2) * Rational(BigInt(1), BigInt(3));
  const Element y = Element::L(1) * Rational(2) - Element::C1();
  const Element sum = x + y;
  CHECK(sum.coefficient(BasisSymbol::L(1)) == Rational(3));
  CHECK(sum.coefficient(BasisSymbol::I(-2)) == Rational(BigInt(1), BigInt(3)));
  CHECK(sum.coefficient(BasisSymbol::C1()) == Rational(-1));
  CHECK(x - x == Element{});
  CHECK(-x + x == Element{});
  CHECK(x * Rational(0) == Element{});
}

TEST_CASE("text format matches the documented shape") {
  Element x;
  x.add_term(BasisSymbol::L(3), Rational(2));
  x.add_term(BasisSymbol::I(-1), Rational(BigInt(-1), BigInt(2)));
  x.add_term(BasisSymbol::C1(), Rational(1));
  CHECK(to_text(x, AlgebraKind::wtilde) == "2*L[3] - 1/2*I[-1] + C1");
  CHECK(to_text(Element{}, AlgebraKind::w) == "0");
  CHECK(to_text(-Element::L(0), AlgebraKind::w) == "-L[0]");
  // the merged w22 central prints as C
  CHECK(to_text(Element::C1() * Rational(3) + Element::L(0), AlgebraKind::w22) ==
        "L[0] + 3*C");
}

TEST_CASE("parser accepts the format with insignificant whitespace") {
  const Element x = parse_element("  2*L[ 3] -1/2 * I[-1]+ C1 ", AlgebraKind::wtilde);
  CHECK(x.coefficient(BasisSymbol::L(3)) == Rational(2));
  CHECK(x.coefficient(BasisSymbol::I(-1)) == Rational(BigInt(-1), BigInt(2)));
  CHECK(x.coefficient(BasisSymbol::C1()) == Rational(1));
  CHECK(parse_element("0", AlgebraKind::w).is_zero());
  CHECK(parse_element("L[1] + L[1]", AlgebraKind::w) == Element::L(1) * Rational(2));
  CHECK(parse_element("C", AlgebraKind::w22) == Element::C1());
}

TEST_CASE("parser validates symbols against the algebra") {
  CHECK_THROWS_AS(parse_element("C1", AlgebraKind::w), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("C", AlgebraKind::w), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("C", AlgebraKind::wtilde), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("C2", AlgebraKind::w22), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("C1", AlgebraKind::w22), std::invalid_argument);
  CHECK_NOTHROW(parse_element("C2", AlgebraKind::wtilde));
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_element("2*L[3] + + I[1]", AlgebraKind::w);
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_element("", AlgebraKind::w), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("2*", AlgebraKind::w), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("L[3", AlgebraKind::w), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("3 L[1]", AlgebraKind::w), std::invalid_argument);
}

TEST_CASE("round trip is exact on random elements") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    for (AlgebraKind kind :
         {AlgebraKind::w, AlgebraKind::wtilde, AlgebraKind::w22}) {
      const Element x = test::random_element(rng, 12, 5, kind);
      CHECK(parse_element(to_text(x, kind), kind) == x);
    }
  }
}

TEST_CASE("element_valid tracks the algebra") {
  CHECK(element_valid(Element::L(5) - Element::I(0), AlgebraKind::w));
  CHECK_FALSE(element_valid(Element::C1(), AlgebraKind::w));
  CHECK_FALSE(element_valid(Element::C2(), AlgebraKind::w22));
  CHECK(element_valid(Element::C2(), AlgebraKind::wtilde));
}
