#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace skewpbw {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponent pair of a Laurent monomial q^q p12^p.
struct Monomial {
  int q = 0;
  int p = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse Laurent polynomial in q and p12 with integer coefficients.
///
/// Terms are kept sorted by ascending (q, p) exponent and never store a zero
/// coefficient, so structural equality is mathematical equality.
class LaurentPoly {
 public:
  using Term = std::pair<Monomial, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Integer& c);

  static LaurentPoly monomial(const Integer& c, int q_exp, int p_exp);
  static LaurentPoly q(int e = 1) { return monomial(1, e, 0); }
  static LaurentPoly p12(int e = 1) { return monomial(1, 0, e); }
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  bool is_constant() const;

  /// Componentwise minimum and maximum exponents; both zero for the zero polynomial.
  Monomial min_exponent() const;
  Monomial max_exponent() const;
  /// True when every term carries the same p12 exponent.
  bool is_p_homogeneous() const;
  /// Total-degree span after shifting to non-negative exponents.
  int total_degree_span() const;

  Integer content() const;
  const Integer& leading_coefficient() const { return terms_.back().second; }

  LaurentPoly shifted(int dq, int dp) const;
  LaurentPoly divided_exact(const Integer& d) const;
  LaurentPoly pow(unsigned e) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Substitutes q -> q0, p12 -> p0. T must support negative powers through
  /// division when negative exponents occur.
  template <class T>
  T evaluate(const T& q0, const T& p0) const;

  /// Canonical text: terms by descending q then p exponent, e.g. `1 - q^-3`.
  std::string to_string() const;

 private:
  void add_scaled(const LaurentPoly& rhs, int sign);

  std::vector<Term> terms_;
};

namespace detail {
template <class T>
T power(const T& base, int e) {
  if (e < 0) return T(1) / power(base, -e);
  T result(1);
  T b = base;
  auto n = static_cast<unsigned>(e);
  while (n != 0) {
    if ((n & 1U) != 0) result = result * b;
    n >>= 1U;
    if (n != 0) b = b * b;
  }
  return result;
}
}  // namespace detail

template <class T>
T LaurentPoly::evaluate(const T& q0, const T& p0) const {
  T acc(0);
  for (const auto& [m, c] : terms_) {
    acc = acc + T(c) * detail::power(q0, m.q) * detail::power(p0, m.p);
  }
  return acc;
}

/// Greatest common divisor of two Laurent polynomials, as an honest polynomial
/// (non-negative exponents, no monomial factor) with positive leading coefficient.
/// The result divides both arguments up to a monomial unit.
LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact division a / b when b divides a up to a monomial unit; throws otherwise.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace skewpbw
