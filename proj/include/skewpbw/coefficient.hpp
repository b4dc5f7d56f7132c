#pragma once

#include <stdexcept>
#include <string>

#include "skewpbw/laurent_poly.hpp"

namespace skewpbw {

/// Raised when an exact computation would divide by zero.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a substitution point makes a denominator vanish; callers resample.
class EvaluationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An element of Q(q, p12): a quotient of Laurent polynomials.
///
/// The remaining structure constants are eliminated before they reach this
/// type (p22 = q, p11 = q^3, p21 = q^-3 p12^-1). Arithmetic only performs the
/// cheap tidy step (monomial and integer content, monomial denominators
/// absorbed into the numerator); fractions are not kept in lowest terms unless
/// reduced() is called. Equality is decided by cross-multiplication.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  explicit Coefficient(LaurentPoly num) : num_(std::move(num)) {}
  Coefficient(LaurentPoly num, LaurentPoly den);

  static Coefficient q(int e = 1) { return Coefficient(LaurentPoly::q(e)); }
  static Coefficient p12(int e = 1) { return Coefficient(LaurentPoly::p12(e)); }
  /// p21 = q^-3 p12^-1, eliminated at construction.
  static Coefficient p21(int e = 1) { return Coefficient(LaurentPoly::monomial(1, -3 * e, -e)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  /// Lowest-terms representative (polynomial gcd of numerator and denominator).
  Coefficient reduced() const;
  Coefficient inverse() const;
  Coefficient pow(int e) const;

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& rhs);
  Coefficient& operator-=(const Coefficient& rhs);
  Coefficient& operator*=(const Coefficient& rhs);
  Coefficient& operator/=(const Coefficient& rhs);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }
  friend bool operator==(const Coefficient& a, const Coefficient& b);

  /// Exact substitution q -> q0, p12 -> p0 into any field type T constructible
  /// from Integer. Throws EvaluationError if the denominator vanishes there.
  template <class T>
  T evaluate(const T& q0, const T& p0) const;

  /// Canonical text form `(num)/(den)`.
  std::string to_string() const;

 private:
  void tidy();

  LaurentPoly num_;
  LaurentPoly den_{1};
};

inline bool is_zero(const Coefficient& c) { return c.is_zero(); }
inline void simplify(Coefficient& c) { c = c.reduced(); }

/// 1 + p + ... + p^(n-1).
Coefficient q_bracket(int n, const Coefficient& p);

template <class T>
T Coefficient::evaluate(const T& q0, const T& p0) const {
  const T d = den_.evaluate(q0, p0);
  if (d == T(0)) throw EvaluationError("denominator vanishes at evaluation point");
  return num_.evaluate(q0, p0) / d;
}

/// Evaluation into exact rationals.
Rational eval_at_point(const Coefficient& a, const Rational& q0, const Rational& p0);

}  // namespace skewpbw
