#include <doctest.h>

#include "skewpbw/g2.hpp"
#include "skewpbw/parse.hpp"
#include "support.hpp"

using namespace skewpbw;
using namespace skewpbw::testing;

TEST_CASE("parse.brackets") {
  CHECK(parse_poly("[x1,x2]") == parse_poly("x1 x2 - p12 x2 x1"));
  CHECK(parse_poly("[[x1,x2],[[x1,x2],x2]]") == build_g2().value(kC));
  CHECK(to_bracket_tree(*parse("[[x1,x2],[[x1,x2],x2]]")).to_string() == "[[x1,x2],[[x1,x2],x2]]");
  CHECK(parse_poly("[B]") == parse_poly("[x1,x2]"));
}

TEST_CASE("parse.scalars") {
  CHECK(parse_poly("(1 - q^-3) * x2") == (C(1) - C::q(-3)) * P::var(2));
  CHECK(parse_scalar("p21") == C::p21());
  CHECK(parse_scalar("p21^-2 q") == C::q(7) * C::p12(2));
  CHECK(parse_scalar("(q^3-1)/(q-1)") == parse_scalar("1+q+q^2"));
  CHECK(parse_poly("x2^3") == P::var(2) * P::var(2) * P::var(2));
}

TEST_CASE("parse.precedence") {
  // Juxtaposition binds tighter than sum; power binds tighter than product.
  CHECK(parse_poly("2 x1 + x2") == C(2) * P::var(1) + P::var(2));
  CHECK(parse_poly("q x1^2") == C::q() * (P::var(1) * P::var(1)));
  CHECK(parse_poly("-x1 + x2") == P::var(2) - P::var(1));
}

TEST_CASE("parse.errors_carry_positions") {
  try {
    parse_poly("x1 + \n  [x1,");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() >= 3);
  }
  CHECK_THROWS_AS(parse_poly("x3"), ParseError);
  CHECK_THROWS_AS(parse_poly("alpha x1"), ParseError);
  CHECK_THROWS_AS(parse_poly("x1^-1"), ParseError);
  CHECK_THROWS_AS(parse_scalar("x1"), ParseError);
}

TEST_CASE("parse.linear_templates") {
  const LinearPoly lp = parse_linear("[D] + alpha x2^2 x1 + beta x2 [B]");
  REQUIRE(lp.parts.size() >= 3);
  CHECK(lp.parts[1] == parse_poly("x2^2 x1"));
  CHECK(lp.parts[2] == parse_poly("x2 [x1,x2]"));
  CHECK(lp.has_unknowns());
}

TEST_CASE("parse.render_round_trip_random") {
  for (int k = 0; k < 200; ++k) {
    const P f = random_poly(5, 3);
    CHECK(parse_poly(f.to_string()) == f);
  }
  CHECK(parse_poly(P().to_string()).is_zero());
}

TEST_CASE("parse.monomials") {
  CHECK(parse_monomial("x2^2 [B] x1") == PbwMonomial{kF, kF, kB, kA});
  CHECK(parse_monomial("[D][B]") == PbwMonomial{kD, kB});
  CHECK(render_monomial(parse_monomial("x2 [B]^2")) == "x2 [B]^2");
  CHECK_THROWS_AS(parse_monomial("x1 x2"), std::invalid_argument);
}
