#include "skewpbw/laurent_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skewpbw {

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) terms_.push_back({Monomial{}, Integer(c)});
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int q_exp, int p_exp) {
  LaurentPoly r;
  if (c != 0) r.terms_.push_back({Monomial{q_exp, p_exp}, c});
  return r;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly r;
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
      if (r.terms_.back().second == 0) r.terms_.pop_back();
    } else if (t.second != 0) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == Monomial{} && terms_[0].second == 1;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{});
}

Monomial LaurentPoly::min_exponent() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.front().first;
  for (const auto& t : terms_) m.p = std::min(m.p, t.first.p);
  return m;
}

Monomial LaurentPoly::max_exponent() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.back().first;
  for (const auto& t : terms_) m.p = std::max(m.p, t.first.p);
  return m;
}

bool LaurentPoly::is_p_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.first.p != terms_.front().first.p) return false;
  }
  return true;
}

int LaurentPoly::total_degree_span() const {
  const Monomial lo = min_exponent();
  int span = 0;
  for (const auto& t : terms_) span = std::max(span, t.first.q - lo.q + t.first.p - lo.p);
  return span;
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    g = boost::multiprecision::gcd(g, t.second);
    if (g == 1) break;
  }
  return g;
}

LaurentPoly LaurentPoly::shifted(int dq, int dp) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) {
    t.first.q += dq;
    t.first.p += dp;
  }
  return r;
}

LaurentPoly LaurentPoly::divided_exact(const Integer& d) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second /= d;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1);
  LaurentPoly b = *this;
  while (e != 0) {
    if ((e & 1U) != 0) result *= b;
    e >>= 1U;
    if (e != 0) b = b * b;
  }
  return result;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

void LaurentPoly::add_scaled(const LaurentPoly& rhs, int sign) {
  if (rhs.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back({b->first, sign > 0 ? b->second : Integer(-b->second)});
      ++b;
    } else {
      Integer c = a->second;
      if (sign > 0) {
        c += b->second;
      } else {
        c -= b->second;
      }
      if (c != 0) out.push_back({a->first, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  add_scaled(rhs, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  add_scaled(rhs, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) {
    LaurentPoly r = a;
    const auto& [m, c] = b.terms_[0];
    for (auto& t : r.terms_) {
      t.first.q += m.q;
      t.first.p += m.p;
      if (c != 1) t.second *= c;
    }
    return r;
  }
  if (a.is_monomial()) return b * a;
  std::vector<LaurentPoly::Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod.push_back({Monomial{ma.q + mb.q, ma.p + mb.p}, ca * cb});
    }
  }
  return LaurentPoly::from_terms(std::move(prod));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

namespace {

void append_monomial(std::ostringstream& os, const Integer& magnitude, const Monomial& m) {
  bool need_sep = false;
  if (magnitude != 1 || (m.q == 0 && m.p == 0)) {
    os << magnitude;
    need_sep = true;
  }
  if (m.q != 0) {
    if (need_sep) os << '*';
    os << 'q';
    if (m.q != 1) os << '^' << m.q;
    need_sep = true;
  }
  if (m.p != 0) {
    if (need_sep) os << '*';
    os << "p12";
    if (m.p != 1) os << '^' << m.p;
  }
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool negative = it->second < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    append_monomial(os, negative ? Integer(-it->second) : it->second, it->first);
    first = false;
  }
  return os.str();
}

// Polynomial gcd by primitive remainder sequences over Z[p][q].

namespace {

template <class R>
using Dense = std::vector<R>;

bool is_zero(const Integer& x) { return x == 0; }
int lead_sign(const Integer& x) { return x.sign(); }
Integer ring_gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
Integer div_exact(const Integer& a, const Integer& b) { return a / b; }
Integer negate(const Integer& a) { return -a; }
Integer add(const Integer& a, const Integer& b) { return a + b; }
Integer sub(const Integer& a, const Integer& b) { return a - b; }
Integer mul(const Integer& a, const Integer& b) { return a * b; }
Integer make_one(const Integer&) { return Integer(1); }

template <class R> bool is_zero(const Dense<R>& a);
template <class R> int lead_sign(const Dense<R>& a);
template <class R> Dense<R> negate(const Dense<R>& a);
template <class R> Dense<R> add(const Dense<R>& a, const Dense<R>& b);
template <class R> Dense<R> sub(const Dense<R>& a, const Dense<R>& b);
template <class R> Dense<R> mul(const Dense<R>& a, const Dense<R>& b);
template <class R> Dense<R> div_exact(const Dense<R>& a, const Dense<R>& b);
template <class R> Dense<R> ring_gcd(const Dense<R>& a, const Dense<R>& b);
template <class R> Dense<R> make_one(const Dense<R>&);

template <class R>
void trim(Dense<R>& a) {
  while (!a.empty() && is_zero(a.back())) a.pop_back();
}

template <class R>
bool is_zero(const Dense<R>& a) {
  return a.empty();
}

template <class R>
int lead_sign(const Dense<R>& a) {
  return a.empty() ? 0 : lead_sign(a.back());
}

template <class R>
Dense<R> make_one(const Dense<R>&) {
  return Dense<R>{make_one(R{})};
}

template <class R>
Dense<R> negate(const Dense<R>& a) {
  Dense<R> r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(negate(c));
  return r;
}

template <class R>
Dense<R> add(const Dense<R>& a, const Dense<R>& b) {
  Dense<R> r = a.size() >= b.size() ? a : b;
  const Dense<R>& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] = add(r[i], s[i]);
  trim(r);
  return r;
}

template <class R>
Dense<R> sub(const Dense<R>& a, const Dense<R>& b) {
  return add(a, negate(b));
}

template <class R>
Dense<R> mul(const Dense<R>& a, const Dense<R>& b) {
  if (a.empty() || b.empty()) return {};
  Dense<R> r(a.size() + b.size() - 1, R{});
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

template <class R>
Dense<R> scale(const Dense<R>& a, const R& s) {
  Dense<R> r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(mul(c, s));
  trim(r);
  return r;
}

template <class R>
Dense<R> div_exact_scalar(const Dense<R>& a, const R& s) {
  Dense<R> r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(div_exact(c, s));
  return r;
}

template <class R>
Dense<R> div_exact(const Dense<R>& a, const Dense<R>& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw std::domain_error("inexact polynomial division");
  Dense<R> rem = a;
  Dense<R> quo(a.size() - b.size() + 1, R{});
  for (std::size_t k = quo.size(); k-- > 0;) {
    if (rem.size() < b.size() + k) continue;
    const R top = rem[b.size() - 1 + k];
    if (is_zero(top)) continue;
    R c = div_exact(top, b.back());
    for (std::size_t j = 0; j < b.size(); ++j) rem[j + k] = sub(rem[j + k], mul(c, b[j]));
    quo[k] = std::move(c);
    trim(rem);
  }
  if (!rem.empty()) throw std::domain_error("inexact polynomial division");
  trim(quo);
  return quo;
}

template <class R>
R content(const Dense<R>& a) {
  R g{};
  for (const auto& c : a) g = ring_gcd(g, c);
  if (lead_sign(g) < 0) g = negate(g);
  return g;
}

template <class R>
Dense<R> prem(Dense<R> a, const Dense<R>& b) {
  if (a.size() < b.size()) return a;
  const R l = b.back();
  const std::size_t n = b.size() - 1;
  for (std::size_t i = a.size(); i-- > n;) {
    if (a.size() <= i) {
      a = scale(a, l);
      continue;
    }
    const R top = a[i];
    a = scale(a, l);
    for (std::size_t j = 0; j <= n; ++j) a[i - n + j] = sub(a[i - n + j], mul(top, b[j]));
    trim(a);
  }
  return a;
}

template <class R>
Dense<R> primitive_part(const Dense<R>& a) {
  if (a.empty()) return a;
  return div_exact_scalar(a, content(a));
}

template <class R>
Dense<R> ring_gcd(const Dense<R>& a0, const Dense<R>& b0) {
  if (a0.empty()) return lead_sign(b0) < 0 ? negate(b0) : b0;
  if (b0.empty()) return lead_sign(a0) < 0 ? negate(a0) : a0;
  const R c = ring_gcd(content(a0), content(b0));
  Dense<R> a = primitive_part(a0);
  Dense<R> b = primitive_part(b0);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) {
      a = make_one(a);
      break;
    }
    Dense<R> r = prem(a, b);
    a = std::move(b);
    b = r.empty() ? Dense<R>{} : primitive_part(r);
  }
  a = primitive_part(a);
  Dense<R> result = scale(a, c);
  if (lead_sign(result) < 0) result = negate(result);
  return result;
}

using IPoly = Dense<Integer>;
using BPoly = Dense<IPoly>;  // main variable q, coefficients in Z[p]

// Shifted dense conversions; callers guarantee non-negative exponents.
IPoly to_ipoly_q(const LaurentPoly& a) {
  IPoly r(static_cast<std::size_t>(a.max_exponent().q) + 1, Integer(0));
  for (const auto& [m, c] : a.terms()) r[static_cast<std::size_t>(m.q)] += c;
  trim(r);
  return r;
}

BPoly to_bpoly(const LaurentPoly& a) {
  const Monomial hi = a.max_exponent();
  BPoly r(static_cast<std::size_t>(hi.q) + 1);
  for (const auto& [m, c] : a.terms()) {
    auto& slot = r[static_cast<std::size_t>(m.q)];
    if (slot.size() <= static_cast<std::size_t>(m.p)) slot.resize(static_cast<std::size_t>(m.p) + 1, Integer(0));
    slot[static_cast<std::size_t>(m.p)] += c;
  }
  for (auto& s : r) trim(s);
  trim(r);
  return r;
}

LaurentPoly from_ipoly_q(const IPoly& a) {
  std::vector<LaurentPoly::Term> t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) t.push_back({Monomial{static_cast<int>(i), 0}, a[i]});
  }
  return LaurentPoly::from_terms(std::move(t));
}

LaurentPoly from_bpoly(const BPoly& a) {
  std::vector<LaurentPoly::Term> t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (a[i][j] != 0) t.push_back({Monomial{static_cast<int>(i), static_cast<int>(j)}, a[i][j]});
    }
  }
  return LaurentPoly::from_terms(std::move(t));
}

LaurentPoly strip_monomial(const LaurentPoly& a) {
  const Monomial lo = a.min_exponent();
  return a.shifted(-lo.q, -lo.p);
}

}  // namespace

LaurentPoly polynomial_gcd(const LaurentPoly& a0, const LaurentPoly& b0) {
  if (a0.is_zero() && b0.is_zero()) return {};
  if (a0.is_zero() || b0.is_zero()) {
    LaurentPoly r = strip_monomial(a0.is_zero() ? b0 : a0);
    r = r.divided_exact(r.content());
    return r.leading_coefficient() < 0 ? -r : r;
  }
  const LaurentPoly a = strip_monomial(a0);
  const LaurentPoly b = strip_monomial(b0);
  if (a.is_monomial() || b.is_monomial()) {
    return LaurentPoly(boost::multiprecision::gcd(a.content(), b.content()));
  }
  if (a.is_p_homogeneous() && b.is_p_homogeneous()) {
    return from_ipoly_q(ring_gcd(to_ipoly_q(a), to_ipoly_q(b)));
  }
  return from_bpoly(ring_gcd(to_bpoly(a), to_bpoly(b)));
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  const Monomial la = a.min_exponent();
  const Monomial lb = b.min_exponent();
  const LaurentPoly as = a.shifted(-la.q, -la.p);
  const LaurentPoly bs = b.shifted(-lb.q, -lb.p);
  LaurentPoly quo;
  if (bs.is_monomial()) {
    const Integer& c = bs.terms()[0].second;
    for (const auto& t : as.terms()) {
      if (t.second % c != 0) throw std::domain_error("inexact polynomial division");
    }
    quo = as.divided_exact(c);
  } else if (as.is_p_homogeneous() && bs.is_p_homogeneous()) {
    quo = from_ipoly_q(div_exact(to_ipoly_q(as), to_ipoly_q(bs)));
  } else {
    quo = from_bpoly(div_exact(to_bpoly(as), to_bpoly(bs)));
  }
  return quo.shifted(la.q - lb.q, la.p - lb.p);
}

}  // namespace skewpbw
