#include <doctest.h>

#include "skewpbw/g2.hpp"
#include "skewpbw/parse.hpp"

using namespace skewpbw;

namespace {

G2Verifier& verifier() {
  static G2Verifier v;
  return v;
}

void require_ok(const Report& r) {
  for (const auto& c : r.checks()) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.status != Status::Fail);
  }
}

}  // namespace

TEST_CASE("g2.letters") {
  CHECK(letter_word(kC) == Word::parse("12122"));
  CHECK(letter_constitution(kE) == Constitution{1, 3});
  CHECK(pbw_monomials({2, 3}).size() == 6 + 1);
}

TEST_CASE("g2.pbw_expansion_of_a_square") {
  auto& v = verifier();
  const auto& g = v.instance();
  const auto e = to_pbw(g, v.oracle(), g.value(kB) * g.value(kB));
  REQUIRE(e.size() == 1);
  CHECK(e.begin()->first == PbwMonomial{kB, kB});
}

TEST_CASE("g2.relation_coefficients") { require_ok(verifier().relation_coefficients()); }
TEST_CASE("g2.letter_invariants") { require_ok(verifier().letter_invariants()); }
TEST_CASE("g2.derived_relations") { require_ok(verifier().derived_relations()); }
TEST_CASE("g2.hard_letters") { require_ok(verifier().hard_letters()); }
TEST_CASE("g2.derivative_table") {
  require_ok(verifier().derivative_table());
  for (const auto& e : verifier().derivative_entries()) CHECK(e.matches);
}
TEST_CASE("g2.structure_constants") {
  require_ok(verifier().structure_constants());
  CHECK(verifier().alpha().has_value());
  CHECK(verifier().beta().has_value());
}
TEST_CASE("g2.nested_vanishing") { require_ok(verifier().nested_vanishing(MembershipMode::Probabilistic, 3)); }
TEST_CASE("g2.heights") {
  for (int t : {5, 7, 9}) require_ok(verifier().heights(t));
  const auto rows = G2Verifier::height_table(9);
  CHECK(rows[kA].order == 3);
  CHECK(rows[kB].order == 9);
}
TEST_CASE("g2.dimension_identity") { require_ok(verifier().dimension_identity(8)); }

TEST_CASE("g2.serre_brackets_vanish") {
  auto& v = verifier();
  CHECK(v.oracle().is_in_ideal(parse_poly("[x1,[x1,x2]]")));
  CHECK(v.oracle().is_in_ideal(parse_poly("[[[[x1,x2],x2],x2],x2]")));
  CHECK_FALSE(v.oracle().is_in_ideal(parse_poly("[[[x1,x2],x2],x2]")));
}
