#include "skewpbw/coefficient.hpp"

namespace skewpbw {

Coefficient::Coefficient(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("coefficient with zero denominator");
  tidy();
}

void Coefficient::tidy() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.is_one()) return;
  if (den_.is_monomial()) {
    const auto& [m, c] = den_.terms()[0];
    if (c == 1 || c == -1) {
      num_ = num_.shifted(-m.q, -m.p);
      if (c == -1) num_ = -num_;
      den_ = LaurentPoly(1);
      return;
    }
  }
  // Move the monomial content of the denominator to the numerator.
  const Monomial lo = den_.min_exponent();
  if (lo.q != 0 || lo.p != 0) {
    den_ = den_.shifted(-lo.q, -lo.p);
    num_ = num_.shifted(-lo.q, -lo.p);
  }
  const Integer g = boost::multiprecision::gcd(num_.content(), den_.content());
  if (g != 1) {
    num_ = num_.divided_exact(g);
    den_ = den_.divided_exact(g);
  }
  if (den_.leading_coefficient() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Coefficient Coefficient::reduced() const {
  if (num_.is_zero() || den_.is_one()) return *this;
  const LaurentPoly g = polynomial_gcd(num_, den_);
  if (g.is_constant()) return *this;
  Coefficient r;
  r.num_ = divide_exact(num_, g);
  r.den_ = divide_exact(den_, g);
  r.tidy();
  return r;
}

Coefficient Coefficient::inverse() const {
  if (num_.is_zero()) throw DivisionByZero("inverse of zero coefficient");
  return Coefficient(den_, num_);
}

Coefficient Coefficient::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Coefficient r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  r.tidy();
  return r;
}

Coefficient Coefficient::operator-() const {
  Coefficient r = *this;
  r.num_ = -r.num_;
  return r;
}

Coefficient& Coefficient::operator+=(const Coefficient& rhs) {
  if (rhs.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  tidy();
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& rhs) { return *this += -rhs; }

Coefficient& Coefficient::operator*=(const Coefficient& rhs) {
  if (num_.is_zero()) return *this;
  if (rhs.num_.is_zero()) return *this = Coefficient();
  num_ *= rhs.num_;
  if (!rhs.den_.is_one()) den_ *= rhs.den_;
  tidy();
  return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& rhs) {
  if (rhs.num_.is_zero()) throw DivisionByZero("division by zero coefficient");
  if (num_.is_zero()) return *this;
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  tidy();
  return *this;
}

bool operator==(const Coefficient& a, const Coefficient& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

std::string Coefficient::to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

Coefficient q_bracket(int n, const Coefficient& p) {
  if (n < 1) throw std::invalid_argument("q_bracket requires n >= 1");
  Coefficient acc(1);
  Coefficient power(1);
  for (int i = 1; i < n; ++i) {
    power *= p;
    acc += power;
  }
  return acc;
}

Rational eval_at_point(const Coefficient& a, const Rational& q0, const Rational& p0) {
  return a.evaluate<Rational>(q0, p0);
}

}  // namespace skewpbw
