#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "skewpbw/coefficient.hpp"
#include "skewpbw/poly.hpp"
#include "skewpbw/word.hpp"

namespace skewpbw::testing {

using C = Coefficient;
using P = Poly<Coefficient>;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed5eedULL);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Small nonzero integer times q^a p12^b.
inline C random_scalar() {
  int c = uniform(-3, 3);
  if (c == 0) c = 1;
  return C(c) * C::q(uniform(-3, 3)) * C::p12(uniform(-2, 2));
}

inline Word random_word(Constitution d) {
  std::vector<int> letters;
  for (int k = 0; k < d.m1; ++k) letters.push_back(1);
  for (int k = 0; k < d.m2; ++k) letters.push_back(2);
  std::shuffle(letters.begin(), letters.end(), rng());
  return Word::from_letters(letters);
}

inline Constitution random_constitution(int max_total) {
  const int n = uniform(1, max_total);
  const int a = uniform(0, n);
  return {a, n - a};
}

inline P random_homogeneous(Constitution d, int terms = 3) {
  P f;
  for (int k = 0; k < terms; ++k) f += P::monomial(random_word(d), random_scalar());
  // Cancellation can empty it; the callers need a constitution.
  return f.is_zero() ? P::monomial(random_word(d), random_scalar()) : f;
}

/// Sum of homogeneous pieces of total degree at most max_total.
inline P random_poly(int max_total, int pieces = 2) {
  P f;
  for (int k = 0; k < pieces; ++k) f += random_homogeneous(random_constitution(max_total));
  return f;
}

}  // namespace skewpbw::testing
