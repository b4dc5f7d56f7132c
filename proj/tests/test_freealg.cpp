#include <doctest.h>

#include "skewpbw/g2.hpp"
#include "support.hpp"

using namespace skewpbw;
using namespace skewpbw::testing;

namespace {

const CharacterData<C>& chars() {
  static const auto c = make_g2_characters(C::q(), C::p12());
  return c;
}

P x(int i) { return P::var(i); }

}  // namespace

TEST_CASE("word.order_and_constitution") {
  const Word w = Word::parse("x1x2x1x2x2");
  CHECK(w == Word::parse("12122"));
  CHECK(w.constitution() == Constitution{2, 3});
  CHECK(word_cmp(Word::parse("1"), Word::parse("2")) > 0);
  CHECK(word_cmp(Word::parse("12"), Word::parse("1")) < 0);
  CHECK(count_words({3, 4}) == 35);
  CHECK(words_of({2, 2}).size() == 6);
}

TEST_CASE("bracket.of_variables") {
  CHECK(skew_bracket(x(1), x(2), chars()) == x(1) * x(2) - C::p12() * (x(2) * x(1)));
  CHECK(skew_bracket(x(2), x(1), chars()) == x(2) * x(1) - C::p21() * (x(1) * x(2)));
  CHECK(skew_bracket(x(1), x(1), chars()) == (C(1) - C::q(3)) * (x(1) * x(1)));
}

TEST_CASE("bracket.product_identities_random") {
  // [u, vw] = [u,v] w + p(u,v) v [u,w] and [uv, w] = p(v,w) [u,w] v + u [v,w].
  for (int k = 0; k < 200; ++k) {
    const P u = random_homogeneous(random_constitution(3), 2);
    const P v = random_homogeneous(random_constitution(3), 2);
    const P w = random_homogeneous(random_constitution(3), 2);
    const C puv = chars().p_form(u.constitution(), v.constitution());
    const C pvw = chars().p_form(v.constitution(), w.constitution());
    CHECK(skew_bracket(u, v * w, chars()) ==
          skew_bracket(u, v, chars()) * w + puv * (v * skew_bracket(u, w, chars())));
    CHECK(skew_bracket(u * v, w, chars()) ==
          pvw * (skew_bracket(u, w, chars()) * v) + u * skew_bracket(v, w, chars()));
  }
}

TEST_CASE("derivation.examples") {
  CHECK(derivation(2, x(1) * x(2), chars()) == C::p12() * x(1));
  CHECK(derivation(2, x(2) * x(1), chars()) == x(1));
  CHECK(derivation(1, x(2), chars()).is_zero());
  CHECK(derivation_sequence({1, 2}, x(1) * x(2), chars()) == P(C::p12()));
  CHECK(derivation(1, skew_bracket(x(1), x(2), chars()), chars()) == (C(1) - C::q(-3)) * x(2));
}

TEST_CASE("derivation.twisted_leibniz_random") {
  for (int k = 0; k < 200; ++k) {
    const P u = random_homogeneous(random_constitution(4), 2);
    const P v = random_homogeneous(random_constitution(4), 2);
    for (int i = 1; i <= 2; ++i) {
      const Constitution xi = i == 1 ? Constitution{1, 0} : Constitution{0, 1};
      const C twist = chars().p_form(u.constitution(), xi);
      CHECK(derivation(i, u * v, chars()) ==
            derivation(i, u, chars()) * v + twist * (u * derivation(i, v, chars())));
    }
  }
}

TEST_CASE("derivation.kills_defining_relations") {
  const auto g = build_g2();
  for (const auto& r : g.relations) {
    CHECK(g.d(1, r).is_zero());
    CHECK(g.d(2, r).is_zero());
  }
}

TEST_CASE("poly.components_and_leading_term") {
  const P f = x(1) * x(2) + C(3) * x(2) + x(2) * x(1);
  CHECK(f.components().size() == 2);
  CHECK_FALSE(f.is_homogeneous());
  CHECK(f.leading_term().first == Word::parse("12"));
  CHECK(power(x(1) + x(2), 2).size() == 4);
}
