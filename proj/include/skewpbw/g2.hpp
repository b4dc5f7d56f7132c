#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewpbw/coefficient.hpp"
#include "skewpbw/cyclotomic.hpp"
#include "skewpbw/lyndon.hpp"
#include "skewpbw/poly.hpp"
#include "skewpbw/reduce.hpp"
#include "skewpbw/report.hpp"

namespace skewpbw {

/// The six super-letters in decreasing order.
enum Letter : int { kA = 0, kB, kC, kD, kE, kF };
inline constexpr int kLetterCount = 6;

const Word& letter_word(int letter);
Constitution letter_constitution(int letter);
/// "A" .. "F".
std::string letter_name(int letter);

template <class S>
struct G2Instance {
  CharacterData<S> chars;
  /// The quadruple bracket relation of constitution (1,4), then the double one of constitution (2,1).
  std::vector<Poly<S>> relations;
  std::array<SuperLetter<S>, kLetterCount> letters;

  const Poly<S>& value(int letter) const { return letters[static_cast<std::size_t>(letter)].value; }
  Poly<S> bracket(const Poly<S>& f, const Poly<S>& g) const { return skew_bracket(f, g, chars); }
  Poly<S> d(int i, const Poly<S>& f) const { return derivation(i, f, chars); }
  S p(Constitution u, Constitution v) const { return chars.p_form(u, v); }
  /// [u,[u,...[u,f]...]] with `times` copies of u.
  Poly<S> nested(const Poly<S>& u, Poly<S> f, int times) const {
    for (int k = 0; k < times; ++k) f = bracket(u, f);
    return f;
  }
};

template <class S>
G2Instance<S> build_g2(const S& q, const S& p12) {
  G2Instance<S> g;
  g.chars = make_g2_characters(q, p12);
  for (int l = 0; l < kLetterCount; ++l) {
    g.letters[static_cast<std::size_t>(l)] = make_superletter<S>(letter_name(l), letter_word(l), g.chars);
  }
  g.relations.push_back(g.bracket(g.value(kE), g.value(kF)));
  g.relations.push_back(g.bracket(g.value(kA), g.value(kB)));
  return g;
}

/// The generic instance over Q(q, p12).
G2Instance<Coefficient> build_g2();
/// The instance over Q(zeta_t)(p12).
G2Instance<CycloCoefficient> build_g2(const CycloCoefficient::Context& ctx);

/// A product of super-letters, stored left to right. PBW monomials are
/// non-decreasing in the letter order, so indices are non-increasing.
using PbwMonomial = std::vector<int>;

/// All PBW monomials of constitution d, in decreasing order of their words.
std::vector<PbwMonomial> pbw_monomials(Constitution d);
Word monomial_word(const PbwMonomial& m);
/// `x2^2 [B]` style; A and F print as x1 and x2, the empty product as 1.
std::string render_monomial(const PbwMonomial& m);
/// Inverse of render_monomial; also accepts `x2^2[B]x1` without spaces.
PbwMonomial parse_monomial(const std::string& text);

template <class S>
Poly<S> monomial_value(const G2Instance<S>& g, const PbwMonomial& m) {
  Poly<S> r(S(1));
  for (int l : m) r = r * g.value(l);
  return r;
}

template <class S>
using PbwExpansion = std::map<PbwMonomial, S>;

/// Expands f modulo the ideal in the PBW basis: take the leading word of the
/// normal form, factor it into standard words, subtract the matching
/// monomial value, repeat. Throws std::logic_error if a leading word is not a
/// product of letter words.
template <class S>
PbwExpansion<S> to_pbw(const G2Instance<S>& g, IdealOracle<S>& oracle, const Poly<S>& f) {
  PbwExpansion<S> out;
  Poly<S> rest = oracle.normal_form(f);
  while (!rest.is_zero()) {
    const auto [w, c] = rest.leading_term();
    PbwMonomial m;
    for (const Word& factor : lyndon_factorization(w)) {
      int found = -1;
      for (int l = 0; l < kLetterCount; ++l) {
        if (letter_word(l) == factor) found = l;
      }
      if (found < 0) throw std::logic_error("leading word " + w.compact() + " has a factor outside the letter set");
      m.push_back(found);
    }
    const Poly<S> value = oracle.normal_form(monomial_value(g, m));
    const auto [vw, vc] = value.leading_term();
    if (!(vw == w)) throw std::logic_error("monomial " + render_monomial(m) + " does not lead with " + w.compact());
    S k = c / vc;
    simplify(k);
    out[m] += k;
    rest -= value * k;
  }
  for (auto it = out.begin(); it != out.end();) {
    it = is_zero(it->second) ? out.erase(it) : std::next(it);
  }
  return out;
}

template <class S>
std::string render_pbw(const PbwExpansion<S>& e) {
  if (e.empty()) return "0";
  std::string s;
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += it->second.to_string();
    if (!it->first.empty()) s += " " + render_monomial(it->first);
  }
  return s;
}

enum class MembershipMode { Exact, Probabilistic };

/// How [[X],[Y]] for X > Y is accounted for.
struct PairClass {
  int left = 0;
  int right = 0;
  /// "in list: C", "not standard", "not hard", or "hard" (the last is a failure).
  std::string verdict;
};

struct DerivativeEntry {
  int letter = 0;
  int index = 1;
  Poly<Coefficient> value;
  PbwExpansion<Coefficient> pbw;
  std::string expected;
  bool matches = false;
};

struct HeightRow {
  int letter = 0;
  /// "q" or "q^3".
  std::string self_pairing;
  int order = 0;
};

/// Mechanical checks of the G2 computations. Holds the generic instance and a
/// shared membership oracle whose blocks are reused across checks.
class G2Verifier {
 public:
  G2Verifier();

  const G2Instance<Coefficient>& instance() const { return g_; }
  IdealOracle<Coefficient>& oracle() { return oracle_; }

  Report relation_coefficients();
  Report letter_invariants();
  Report derived_relations();
  Report hard_letters();
  Report derivative_table();
  Report structure_constants();
  Report nested_vanishing(MembershipMode c_mode, int trials);
  Report heights(int t);
  Report dimension_identity(int max_total);

  std::vector<PairClass> classify_pairs();
  std::vector<DerivativeEntry> derivative_entries();
  /// alpha with [[C],[F]] = alpha [D]^2 modulo the ideal, if it exists uniquely.
  std::optional<Coefficient> alpha();
  /// beta with [[C],[E]] = beta [D]^3 modulo the ideal, if it exists uniquely.
  std::optional<Coefficient> beta();
  static std::vector<HeightRow> height_table(int t);

  /// The derived relation of constitution (3,4), before and after the
  /// one-step rewrite of x1x1x2 in each word.
  Poly<Coefficient> relation_3_4_raw() const;
  Poly<Coefficient> relation_3_4() const;

 private:
  std::optional<Coefficient> proportionality(const Poly<Coefficient>& f, const Poly<Coefficient>& g);

  G2Instance<Coefficient> g_;
  IdealOracle<Coefficient> oracle_;
};

}  // namespace skewpbw
