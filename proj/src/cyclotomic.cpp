#include "skewpbw/cyclotomic.hpp"

#include <map>
#include <stdexcept>

namespace skewpbw {

namespace {

using Dense = std::vector<Integer>;
using RDense = std::vector<Rational>;

template <class R>
void trim(std::vector<R>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m; integer coefficients stay integral.
Dense reduce_monic(Dense a, const Dense& m) {
  const std::size_t n = m.size() - 1;
  for (std::size_t i = a.size(); i-- > n;) {
    if (a[i] == 0) continue;
    const Integer c = a[i];
    for (std::size_t j = 0; j <= n; ++j) a[i - n + j] -= c * m[j];
  }
  if (a.size() > n) a.resize(n);
  trim(a);
  return a;
}

Dense divide_monic(const Dense& a, const Dense& m) {
  const std::size_t n = m.size() - 1;
  Dense rem = a;
  Dense quo(a.size() - n, 0);
  for (std::size_t i = rem.size(); i-- > n;) {
    const Integer c = rem[i];
    quo[i - n] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) rem[i - n + j] -= c * m[j];
  }
  trim(rem);
  if (!rem.empty()) throw std::logic_error("inexact cyclotomic division");
  trim(quo);
  return quo;
}

RDense rsub_mul(const RDense& a, const Rational& c, const RDense& b, std::size_t shift) {
  RDense r = a;
  if (r.size() < b.size() + shift) r.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
  trim(r);
  return r;
}

// Quotient and remainder over Q.
std::pair<RDense, RDense> rdivmod(RDense a, const RDense& b) {
  RDense quo;
  const std::size_t n = b.size() - 1;
  if (a.size() > n) quo.assign(a.size() - n, 0);
  while (a.size() > n && !a.empty()) {
    const std::size_t shift = a.size() - 1 - n;
    const Rational c = a.back() / b.back();
    quo[shift] = c;
    a = rsub_mul(a, c, b, shift);
  }
  trim(quo);
  return {quo, a};
}

RDense rmul(const RDense& a, const RDense& b) {
  if (a.empty() || b.empty()) return {};
  RDense r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

RDense rsub(RDense a, const RDense& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
  Dense f(static_cast<std::size_t>(n) + 1, 0);
  f[0] = -1;
  f[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) f = divide_monic(f, cyclotomic_polynomial(d));
  }
  return f;
}

CyclotomicContext::CyclotomicContext(int t) : t_(t), phi_(cyclotomic_polynomial(t)) {}

std::shared_ptr<const CyclotomicContext> CyclotomicContext::make(int t) {
  if (t <= 4 || t == 6) throw std::invalid_argument("order t must satisfy t > 4 and t != 6, got " + std::to_string(t));
  return std::shared_ptr<const CyclotomicContext>(new CyclotomicContext(t));
}

LaurentPoly CyclotomicContext::reduce(const LaurentPoly& f) const {
  std::map<int, Dense> by_p;
  for (const auto& [m, c] : f.terms()) {
    const int e = ((m.q % t_) + t_) % t_;
    Dense& slot = by_p[m.p];
    if (slot.size() <= static_cast<std::size_t>(e)) slot.resize(static_cast<std::size_t>(e) + 1, 0);
    slot[static_cast<std::size_t>(e)] += c;
  }
  std::vector<LaurentPoly::Term> terms;
  for (auto& [p, dense] : by_p) {
    const Dense r = reduce_monic(std::move(dense), phi_);
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] != 0) terms.push_back({Monomial{static_cast<int>(i), p}, r[i]});
    }
  }
  return LaurentPoly::from_terms(std::move(terms));
}

std::pair<LaurentPoly, Integer> CyclotomicContext::inverse(const LaurentPoly& g) const {
  const LaurentPoly gr = reduce(g);
  if (gr.is_zero()) throw EvaluationError("denominator vanishes at the root of unity");
  RDense a;
  for (const auto& [m, c] : gr.terms()) {
    if (m.p != 0) throw std::invalid_argument("inverse expects a q-only polynomial");
    if (a.size() <= static_cast<std::size_t>(m.q)) a.resize(static_cast<std::size_t>(m.q) + 1, 0);
    a[static_cast<std::size_t>(m.q)] = Rational(c);
  }
  // Extended Euclid: track s with s*g == r (mod Phi).
  RDense r0(phi_.begin(), phi_.end());
  RDense r1 = a;
  RDense s0;
  RDense s1{Rational(1)};
  while (r1.size() > 1) {
    auto [quo, rem] = rdivmod(r0, r1);
    RDense s2 = rsub(s0, rmul(quo, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw EvaluationError("element is not invertible modulo the cyclotomic polynomial");
  const Rational lead = r1[0];
  Integer den = 1;
  for (auto& c : s1) {
    c /= lead;
    den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
  }
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < s1.size(); ++i) {
    const Rational scaled = s1[i] * den;
    if (scaled != 0) terms.push_back({Monomial{static_cast<int>(i), 0}, boost::multiprecision::numerator(scaled)});
  }
  return {LaurentPoly::from_terms(std::move(terms)), den};
}

CycloCoefficient::CycloCoefficient(Context ctx, LaurentPoly num, LaurentPoly den)
    : ctx_(std::move(ctx)), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void CycloCoefficient::adopt(const CycloCoefficient& rhs) {
  if (!ctx_) {
    ctx_ = rhs.ctx_;
  } else if (rhs.ctx_ && ctx_->t() != rhs.ctx_->t()) {
    throw std::invalid_argument("mixing cyclotomic contexts of different order");
  }
}

void CycloCoefficient::normalize() {
  if (ctx_) {
    num_ = ctx_->reduce(num_);
    den_ = ctx_->reduce(den_);
  }
  if (den_.is_zero()) throw EvaluationError("denominator vanishes at the root of unity");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (ctx_ && den_.is_p_homogeneous() && !den_.is_constant()) {
    const int pe = den_.terms()[0].first.p;
    auto [h, n] = ctx_->inverse(den_.shifted(0, -pe));
    num_ = ctx_->reduce(num_ * h).shifted(0, -pe);
    den_ = LaurentPoly(n);
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

CycloCoefficient CycloCoefficient::inverse() const {
  if (num_.is_zero()) throw DivisionByZero("inverse of zero coefficient");
  return {ctx_, den_, num_};
}

CycloCoefficient CycloCoefficient::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  CycloCoefficient r(1);
  r.ctx_ = ctx_;
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

CycloCoefficient CycloCoefficient::operator-() const {
  CycloCoefficient r = *this;
  r.num_ = -r.num_;
  return r;
}

CycloCoefficient& CycloCoefficient::operator+=(const CycloCoefficient& rhs) {
  adopt(rhs);
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

CycloCoefficient& CycloCoefficient::operator-=(const CycloCoefficient& rhs) { return *this += -rhs; }

CycloCoefficient& CycloCoefficient::operator*=(const CycloCoefficient& rhs) {
  adopt(rhs);
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

CycloCoefficient& CycloCoefficient::operator/=(const CycloCoefficient& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("division by zero coefficient");
  adopt(rhs);
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

bool operator==(const CycloCoefficient& a, const CycloCoefficient& b) {
  LaurentPoly diff = a.num_ * b.den_ - b.num_ * a.den_;
  const auto& ctx = a.ctx_ ? a.ctx_ : b.ctx_;
  if (ctx) diff = ctx->reduce(diff);
  return diff.is_zero();
}

std::string CycloCoefficient::to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

CycloCoefficient specialize(const Coefficient& a, const CycloCoefficient::Context& ctx) {
  return {ctx, a.num(), a.den()};
}

}  // namespace skewpbw
