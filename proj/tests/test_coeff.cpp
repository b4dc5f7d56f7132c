#include <doctest.h>

#include <boost/multiprecision/miller_rabin.hpp>

#include "skewpbw/cyclotomic.hpp"
#include "skewpbw/modp.hpp"
#include "support.hpp"

using namespace skewpbw;
using skewpbw::testing::random_scalar;
using skewpbw::testing::uniform;

TEST_CASE("laurent.gcd_and_exact_division") {
  const LaurentPoly a = LaurentPoly(1) - LaurentPoly::q(-3);
  const LaurentPoly b = LaurentPoly(1) - LaurentPoly::q(-2);
  const LaurentPoly g = polynomial_gcd(a * (LaurentPoly(1) + LaurentPoly::p12()), b * LaurentPoly::q(4));
  // 1 - q^-3 and 1 - q^-2 share exactly the factor 1 - q^-1 up to units.
  CHECK(g.size() == 2);
  CHECK(divide_exact(a * b, b) == a);
  CHECK((a * b).to_string() == "1 - q^-2 - q^-3 + q^-5");
}

TEST_CASE("coefficient.p21_identity") {
  const Coefficient p21 = Coefficient::p21();
  CHECK(p21 * Coefficient::q(3) * Coefficient::p12() == Coefficient(1));
  CHECK(Coefficient::p21(2) == p21 * p21);
}

TEST_CASE("coefficient.field_axioms_on_random_values") {
  for (int k = 0; k < 100; ++k) {
    const Coefficient a = random_scalar() + random_scalar();
    const Coefficient b = random_scalar() - random_scalar();
    const Coefficient c = random_scalar();
    CHECK((a + b) * c == a * c + b * c);
    if (!b.is_zero()) CHECK(((a / b) * b).reduced() == a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("coefficient.evaluation_is_a_homomorphism") {
  const ModP q0(123456789), p0(987654321);
  for (int k = 0; k < 100; ++k) {
    const Coefficient a = random_scalar() + random_scalar();
    const Coefficient b = random_scalar() + Coefficient(uniform(1, 5));
    CHECK((a * b).evaluate<ModP>(q0, p0) == a.evaluate<ModP>(q0, p0) * b.evaluate<ModP>(q0, p0));
    CHECK((a + b).evaluate<ModP>(q0, p0) == a.evaluate<ModP>(q0, p0) + b.evaluate<ModP>(q0, p0));
  }
}

TEST_CASE("modp.prime_is_prime") {
  CHECK(ModP::kPrime == (std::uint64_t{1} << 62) - 57);
  boost::random::mt19937 gen(7);
  CHECK(boost::multiprecision::miller_rabin_test(Integer(ModP::kPrime), 40, gen));
}

TEST_CASE("modp.inverse_and_pow") {
  for (int k = 0; k < 50; ++k) {
    const ModP a(uniform(1, 1 << 30));
    CHECK(a * a.inverse() == ModP(1));
    CHECK(a.pow(ModP::kPrime - 1) == ModP(1));
  }
  CHECK(ModP(-1) + ModP(1) == ModP(0));
}

TEST_CASE("cyclotomic.polynomials") {
  CHECK(cyclotomic_polynomial(5) == std::vector<Integer>{1, 1, 1, 1, 1});
  CHECK(cyclotomic_polynomial(9) == std::vector<Integer>{1, 0, 0, 1, 0, 0, 1});
  CHECK_THROWS_AS(CyclotomicContext::make(6), std::invalid_argument);
  CHECK_THROWS_AS(CyclotomicContext::make(4), std::invalid_argument);
}

TEST_CASE("cyclotomic.root_has_exact_order") {
  for (int t : {5, 7, 9}) {
    const auto ctx = CyclotomicContext::make(t);
    const CycloCoefficient q = CycloCoefficient::q(ctx);
    CHECK(q.pow(t) == CycloCoefficient(1));
    for (int k = 1; k < t; ++k) CHECK_FALSE(q.pow(k) == CycloCoefficient(1));
  }
}

TEST_CASE("cyclotomic.specialize_is_a_homomorphism") {
  const auto ctx = CyclotomicContext::make(7);
  for (int k = 0; k < 50; ++k) {
    const Coefficient a = random_scalar() + random_scalar();
    const Coefficient b = random_scalar() + Coefficient(uniform(1, 5));
    CHECK(specialize(a * b, ctx) == specialize(a, ctx) * specialize(b, ctx));
    CHECK(specialize(a + b, ctx) == specialize(a, ctx) + specialize(b, ctx));
  }
  CHECK(specialize(Coefficient(1) - Coefficient::q(-3) * Coefficient::q(-4), ctx).is_zero());
}
