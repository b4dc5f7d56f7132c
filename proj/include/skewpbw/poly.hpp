#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skewpbw/word.hpp"

namespace skewpbw {

namespace detail {
template <class S>
bool scalar_is_zero(const S& s) {
  return is_zero(s);
}
}  // namespace detail

/// Noncommutative polynomial in x1, x2 with coefficients in S.
///
/// S must provide field arithmetic, construction from long long, `==`, a free
/// `is_zero(const S&)` and a `to_string()` member.
template <class S>
class Poly {
 public:
  using Scalar = S;
  using Map = std::map<Word, S, TermLess>;

  Poly() = default;
  explicit Poly(const S& c) {
    if (!detail::scalar_is_zero(c)) terms_.emplace(Word(), c);
  }
  static Poly monomial(const Word& w, const S& c = S(1)) {
    Poly p;
    if (!detail::scalar_is_zero(c)) p.terms_.emplace(w, c);
    return p;
  }
  static Poly var(int i) { return monomial(Word::letter(i)); }

  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  S coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? S(0) : it->second;
  }

  void add_term(const Word& w, const S& c) {
    if (detail::scalar_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (detail::scalar_is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
  }
  Poly& operator-=(const Poly& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
    return *this;
  }
  Poly& operator*=(const S& s) {
    if (detail::scalar_is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const S& s) { return a *= s; }
  friend Poly operator*(const S& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [w, c] : a.terms_) {
      if (!(it->first == w) || !(it->second == c)) return false;
      ++it;
    }
    return true;
  }

  /// Multihomogeneous components keyed by constitution.
  std::map<Constitution, Poly> components() const {
    std::map<Constitution, Poly> out;
    for (const auto& [w, c] : terms_) out[w.constitution()].terms_.emplace(w, c);
    return out;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.constitution() == terms_.rbegin()->first.constitution();
  }
  /// Constitution of a nonzero homogeneous polynomial.
  Constitution constitution() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no constitution");
    if (!is_homogeneous()) throw std::domain_error("polynomial is not multihomogeneous");
    return terms_.begin()->first.constitution();
  }

  /// The maximal term: highest constitution, then highest word.
  std::pair<Word, S> leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    const auto& [w, c] = *terms_.rbegin();
    return {w, c};
  }

  template <class T, class F>
  Poly<T> map_coefficients(F&& f) const {
    Poly<T> r;
    for (const auto& [w, c] : terms_) r.add_term(w, f(c));
    return r;
  }

  /// Terms in decreasing order joined by ` + `, each as `<coefficient> x1 x2`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += it->second.to_string();
      if (!it->first.empty()) s += " " + it->first.to_string();
    }
    return s;
  }

 private:
  Map terms_;
};

template <class S>
bool is_zero(const Poly<S>& f) {
  return f.is_zero();
}

/// Structure constants p_ij together with the bicharacter they define.
template <class S>
struct CharacterData {
  S p[2][2];

  /// p(u, v) = prod p_ij^(u_i v_j).
  S p_form(Constitution u, Constitution v) const {
    S r(1);
    const int e[2][2] = {{u.m1 * v.m1, u.m1 * v.m2}, {u.m2 * v.m1, u.m2 * v.m2}};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (e[i][j] != 0) r *= p[i][j].pow(e[i][j]);
    return r;
  }
};

/// The G2 data: p11 = q^3, p22 = q, p21 = q^-3 p12^-1.
template <class S>
CharacterData<S> make_g2_characters(const S& q, const S& p12) {
  CharacterData<S> c;
  c.p[0][0] = q * q * q;
  c.p[0][1] = p12;
  c.p[1][0] = S(1) / (q * q * q * p12);
  c.p[1][1] = q;
  return c;
}

template <class S>
S p_form(Constitution u, Constitution v, const CharacterData<S>& chars) {
  return chars.p_form(u, v);
}

/// [f, g] = fg - p(f, g) gf, applied to every pair of homogeneous components.
template <class S>
Poly<S> skew_bracket(const Poly<S>& f, const Poly<S>& g, const CharacterData<S>& chars) {
  Poly<S> r;
  const auto fc = f.components();
  const auto gc = g.components();
  for (const auto& [u, fu] : fc) {
    for (const auto& [v, gv] : gc) {
      r += fu * gv;
      r -= chars.p_form(u, v) * (gv * fu);
    }
  }
  return r;
}

/// The twisted derivation with d_i(x_j) = delta_ij and d_i(uv) = d_i(u) v + p(u, x_i) u d_i(v).
template <class S>
Poly<S> derivation(int i, const Poly<S>& f, const CharacterData<S>& chars) {
  const Constitution xi = i == 1 ? Constitution{1, 0} : Constitution{0, 1};
  Poly<S> r;
  for (const auto& [w, c] : f.terms()) {
    Constitution prefix{0, 0};
    for (int k = 0; k < w.length(); ++k) {
      const int letter = w.at(k);
      if (letter == i) r.add_term(w.erase(k), c * chars.p_form(prefix, xi));
      if (letter == 1) {
        ++prefix.m1;
      } else {
        ++prefix.m2;
      }
    }
  }
  return r;
}

/// Applies derivations right to left: ops = {a, b, c} computes d_a(d_b(d_c(f))).
template <class S>
Poly<S> derivation_sequence(const std::vector<int>& ops, const Poly<S>& f, const CharacterData<S>& chars) {
  Poly<S> r = f;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) r = derivation(*it, r, chars);
  return r;
}

template <class S>
Poly<S> power(const Poly<S>& f, int n) {
  Poly<S> r(S(1));
  for (int k = 0; k < n; ++k) r = r * f;
  return r;
}

}  // namespace skewpbw
