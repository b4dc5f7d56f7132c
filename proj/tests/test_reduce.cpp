#include <doctest.h>

#include "skewpbw/g2.hpp"
#include "skewpbw/modp.hpp"
#include "skewpbw/reduce.hpp"
#include "support.hpp"

using namespace skewpbw;
using namespace skewpbw::testing;

namespace {

struct Fixture {
  G2Instance<C> g = build_g2();
  IdealOracle<C> oracle{g.relations};
};

Fixture& fixture() {
  static Fixture f;
  return f;
}

/// The two-sided ideal component at d built directly from all u r v.
IdealBlock<C> direct_block(const std::vector<P>& rels, Constitution d) {
  IdealBlock<C> blk(d);
  for (const auto& r : rels) {
    const Constitution dr = r.constitution();
    if (!dr.fits_in(d)) continue;
    const Constitution rest = d - dr;
    for (int a = 0; a <= rest.m1; ++a) {
      for (int b = 0; b <= rest.m2; ++b) {
        for (const Word& u : words_of({a, b})) {
          for (const Word& v : words_of(rest - Constitution{a, b})) {
            blk.insert(P::monomial(u) * r * P::monomial(v));
          }
        }
      }
    }
  }
  blk.finalize();
  return blk;
}

}  // namespace

TEST_CASE("reduce.relations_vanish") {
  auto& f = fixture();
  for (const auto& r : f.g.relations) CHECK(f.oracle.is_in_ideal(r));
  CHECK(f.oracle.is_in_ideal(f.g.bracket(f.g.value(kA), f.g.value(kB))));
  CHECK_FALSE(f.oracle.is_in_ideal(f.g.value(kC)));
}

TEST_CASE("reduce.normal_form_idempotent_random") {
  auto& f = fixture();
  for (int k = 0; k < 100; ++k) {
    const P p = random_poly(7);
    const P n = f.oracle.normal_form(p);
    CHECK(f.oracle.normal_form(n) == n);
    CHECK(f.oracle.is_in_ideal(p - n));
  }
}

TEST_CASE("reduce.normal_form_linear_random") {
  auto& f = fixture();
  for (int k = 0; k < 100; ++k) {
    const P a = random_poly(7);
    const P b = random_poly(7);
    const C s = random_scalar();
    CHECK(f.oracle.normal_form(a + b * s) == f.oracle.normal_form(a) + f.oracle.normal_form(b) * s);
  }
}

TEST_CASE("reduce.ideal_multiple_vanishes_random") {
  auto& f = fixture();
  for (int k = 0; k < 50; ++k) {
    const P u = random_homogeneous(random_constitution(3), 2);
    const P v = random_homogeneous(random_constitution(3), 2);
    const P& r = f.g.relations[static_cast<std::size_t>(uniform(0, 1))];
    CHECK(f.oracle.is_in_ideal(u * r * v));
  }
}

TEST_CASE("reduce.recursive_blocks_match_direct_construction") {
  auto& f = fixture();
  for (Constitution d : {Constitution{2, 1}, Constitution{1, 4}, Constitution{3, 2}, Constitution{2, 4},
                         Constitution{3, 4}, Constitution{1, 6}}) {
    const auto direct = direct_block(f.g.relations, d);
    const auto& recursive = f.oracle.block(d);
    CHECK(direct.rank() == recursive.rank());
    for (int k = 0; k < 5; ++k) {
      const P p = random_homogeneous(d, 4);
      CHECK(direct.reduce(p) == recursive.reduce(p));
    }
  }
}

TEST_CASE("reduce.hard_letters") {
  auto& f = fixture();
  for (int l = 0; l < kLetterCount; ++l) CHECK(f.oracle.is_hard(letter_word(l)));
  CHECK_FALSE(f.oracle.is_hard(Word::parse("1122")));
  CHECK(f.oracle.reduction_witness(Word::parse("1122")).has_value());
}

TEST_CASE("reduce.probabilistic_agrees_with_exact") {
  auto& f = fixture();
  const P member = f.g.value(kB) * f.g.relations[1] * f.g.value(kF) + f.g.relations[0] * f.g.value(kA);
  const auto yes = probabilistic_is_zero(member, f.g.relations, 3);
  CHECK(yes.in_ideal);
  CHECK(yes.error_bound < 1e-15);
  const auto no = probabilistic_is_zero(f.g.value(kC), f.g.relations, 3);
  CHECK_FALSE(no.in_ideal);
  CHECK(f.oracle.is_in_ideal(member));
}

TEST_CASE("reduce.quotient_dimensions") {
  auto& f = fixture();
  CHECK(f.oracle.quotient_dimension({2, 1}) == 2);
  CHECK(f.oracle.quotient_dimension({1, 4}) == 4);
  CHECK(f.oracle.quotient_dimension({1, 1}) == 2);
}
