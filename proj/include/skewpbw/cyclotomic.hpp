#pragma once

#include <memory>
#include <string>
#include <vector>

#include "skewpbw/coefficient.hpp"

namespace skewpbw {

/// q specialized to a primitive t-th root of unity; p12 stays transcendental.
class CyclotomicContext {
 public:
  /// Throws std::invalid_argument unless t > 4 and t != 6.
  static std::shared_ptr<const CyclotomicContext> make(int t);

  int t() const { return t_; }
  /// Dense integer coefficients of Phi_t, constant term first; monic.
  const std::vector<Integer>& modulus() const { return phi_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }

  /// Reduces q-exponents mod t and then the q-polynomial of every p12 power mod Phi_t.
  LaurentPoly reduce(const LaurentPoly& f) const;

  /// Inverse of a q-only polynomial g in Q[q]/Phi_t, written as h / n with integer h and n > 0.
  std::pair<LaurentPoly, Integer> inverse(const LaurentPoly& g) const;

 private:
  explicit CyclotomicContext(int t);

  int t_;
  std::vector<Integer> phi_;
};

/// Dense coefficients of the n-th cyclotomic polynomial.
std::vector<Integer> cyclotomic_polynomial(int n);

/// Element of Q(zeta_t)(p12).
///
/// A default or integer-constructed value carries no context and adopts the
/// context of whatever it is combined with. Whenever the denominator is a
/// single p12 power times a q-polynomial it is inverted inside Q(zeta_t), so
/// in practice denominators are integers.
class CycloCoefficient {
 public:
  using Context = std::shared_ptr<const CyclotomicContext>;

  CycloCoefficient() = default;
  CycloCoefficient(long long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  CycloCoefficient(Context ctx, LaurentPoly num, LaurentPoly den = LaurentPoly(1));

  static CycloCoefficient q(const Context& ctx, int e = 1) { return {ctx, LaurentPoly::q(e)}; }
  static CycloCoefficient p12(const Context& ctx, int e = 1) { return {ctx, LaurentPoly::p12(e)}; }

  const Context& context() const { return ctx_; }
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  CycloCoefficient inverse() const;
  CycloCoefficient pow(int e) const;

  CycloCoefficient operator-() const;
  CycloCoefficient& operator+=(const CycloCoefficient& rhs);
  CycloCoefficient& operator-=(const CycloCoefficient& rhs);
  CycloCoefficient& operator*=(const CycloCoefficient& rhs);
  CycloCoefficient& operator/=(const CycloCoefficient& rhs);
  friend CycloCoefficient operator+(CycloCoefficient a, const CycloCoefficient& b) { return a += b; }
  friend CycloCoefficient operator-(CycloCoefficient a, const CycloCoefficient& b) { return a -= b; }
  friend CycloCoefficient operator*(CycloCoefficient a, const CycloCoefficient& b) { return a *= b; }
  friend CycloCoefficient operator/(CycloCoefficient a, const CycloCoefficient& b) { return a /= b; }
  friend bool operator==(const CycloCoefficient& a, const CycloCoefficient& b);

  std::string to_string() const;

 private:
  void adopt(const CycloCoefficient& rhs);
  void normalize();

  Context ctx_;
  LaurentPoly num_;
  LaurentPoly den_{1};
};

inline bool is_zero(const CycloCoefficient& a) { return a.is_zero(); }
inline void simplify(CycloCoefficient&) {}

/// Image of a generic coefficient; throws EvaluationError if the denominator vanishes at zeta_t.
CycloCoefficient specialize(const Coefficient& a, const CycloCoefficient::Context& ctx);

}  // namespace skewpbw
