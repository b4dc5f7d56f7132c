#include "skewpbw/g2.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "skewpbw/parse.hpp"

namespace skewpbw {

namespace {

using P = Poly<Coefficient>;
using C = Coefficient;

const std::array<Word, kLetterCount>& all_letter_words() {
  static const std::array<Word, kLetterCount> words = {Word::parse("x1"),         Word::parse("x1x2"),
                                                       Word::parse("x1x2x1x2x2"), Word::parse("x1x2x2"),
                                                       Word::parse("x1x2x2x2"),   Word::parse("x2")};
  return words;
}

P word_poly(const std::string& w, const C& c = C(1)) { return P::monomial(Word::parse(w), c); }

// The relation coefficients from their closed forms.
struct RelationCoefficients {
  C a1, a2, a3, a4, b1, b2;
};

RelationCoefficients closed_forms() {
  const C q = C::q();
  const C p = C::p12();
  RelationCoefficients r;
  r.a1 = -p * q_bracket(4, q);
  r.a2 = p.pow(2) * q * q_bracket(3, q) * (q.pow(2) + C(1));
  r.a3 = -p.pow(3) * q.pow(3) * q_bracket(4, q);
  r.a4 = p.pow(4) * q.pow(6);
  r.b1 = -p * (C(1) + q.pow(3));
  r.b2 = p.pow(2) * q.pow(3);
  return r;
}

std::string pair_name(int x, int y) { return "[[" + letter_name(x) + "],[" + letter_name(y) + "]]"; }

int nesting_depth(int letter) {
  switch (letter) {
    case kB:
    case kD:
      return 3;
    case kC:
      return 2;
    default:
      return 1;
  }
}

// The x1-initial part of a polynomial.
P x1_initial(const P& f) {
  P out;
  for (const auto& [w, c] : f.terms()) {
    if (!w.empty() && w.at(0) == 1) out.add_term(w, c);
  }
  return out;
}

}  // namespace

const Word& letter_word(int letter) { return all_letter_words().at(static_cast<std::size_t>(letter)); }

Constitution letter_constitution(int letter) { return letter_word(letter).constitution(); }

std::string letter_name(int letter) { return std::string(1, static_cast<char>('A' + letter)); }

G2Instance<Coefficient> build_g2() { return build_g2<Coefficient>(C::q(), C::p12()); }

G2Instance<CycloCoefficient> build_g2(const CycloCoefficient::Context& ctx) {
  return build_g2<CycloCoefficient>(CycloCoefficient::q(ctx), CycloCoefficient::p12(ctx));
}

std::vector<PbwMonomial> pbw_monomials(Constitution d) {
  std::vector<PbwMonomial> out;
  PbwMonomial current;
  // Letters are chosen from F up to A, so each monomial is built in product order.
  std::function<void(int, Constitution)> rec = [&](int letter, Constitution left) {
    if (left.total() == 0) {
      out.push_back(current);
      return;
    }
    if (letter < 0) return;
    const Constitution c = letter_constitution(letter);
    rec(letter - 1, left);
    int k = 0;
    while (c.fits_in(left)) {
      left = left - c;
      current.push_back(letter);
      ++k;
      rec(letter - 1, left);
    }
    current.resize(current.size() - static_cast<std::size_t>(k));
  };
  rec(kF, d);
  std::sort(out.begin(), out.end(), [](const PbwMonomial& a, const PbwMonomial& b) {
    return word_cmp(monomial_word(a), monomial_word(b)) > 0;
  });
  return out;
}

Word monomial_word(const PbwMonomial& m) {
  Word w;
  for (int l : m) w = w * letter_word(l);
  return w;
}

std::string render_monomial(const PbwMonomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (!s.empty()) s += " ";
    const int l = m[i];
    s += l == kA ? "x1" : l == kF ? "x2" : "[" + letter_name(l) + "]";
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

PbwMonomial parse_monomial(const std::string& text) {
  PbwMonomial m;
  std::size_t i = 0;
  auto fail = [&]() { throw std::invalid_argument("malformed monomial '" + text + "'"); };
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    int letter = -1;
    if (text.compare(i, 2, "x1") == 0 || text.compare(i, 2, "x2") == 0) {
      letter = text[i + 1] == '1' ? kA : kF;
      i += 2;
    } else if (text[i] == '[' && i + 2 < text.size() && text[i + 2] == ']' && text[i + 1] >= 'A' && text[i + 1] <= 'F') {
      letter = text[i + 1] - 'A';
      i += 3;
    } else {
      fail();
    }
    int times = 1;
    if (i < text.size() && text[i] == '^') {
      std::size_t j = ++i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) != 0) ++j;
      if (j == i) fail();
      times = std::stoi(text.substr(i, j - i));
      i = j;
    }
    m.insert(m.end(), static_cast<std::size_t>(times), letter);
  }
  for (std::size_t k = 1; k < m.size(); ++k) {
    if (m[k] > m[k - 1]) throw std::invalid_argument("'" + text + "' is not in PBW order");
  }
  return m;
}

G2Verifier::G2Verifier() : g_(build_g2()), oracle_(g_.relations) {}

Report G2Verifier::relation_coefficients() {
  Report rep;
  const auto r = closed_forms();
  const P& quad = g_.relations[0];
  const P& dbl = g_.relations[1];
  rep.add("relations.shape", "the relations have constitutions (1,4) and (2,1) and are monic",
          quad.constitution() == Constitution{1, 4} && dbl.constitution() == Constitution{2, 1} &&
              quad.leading_term().first == Word::parse("x1x2x2x2x2") && quad.leading_term().second == C(1) &&
              dbl.leading_term().first == Word::parse("x1x1x2") && dbl.leading_term().second == C(1),
          "quadruple: " + quad.to_string() + "; double: " + dbl.to_string());
  const std::vector<std::tuple<std::string, std::string, std::string, C>> items = {
      {"relations.a1", "a1 = -p12 (1+q+q^2+q^3)", "x2x1x2x2x2", r.a1},
      {"relations.a2", "a2 = p12^2 q (1+q+q^2)(q^2+1)", "x2x2x1x2x2", r.a2},
      {"relations.a3", "a3 = -p12^3 q^3 (1+q+q^2+q^3)", "x2x2x2x1x2", r.a3},
      {"relations.a4", "a4 = p12^4 q^6", "x2x2x2x2x1", r.a4},
      {"relations.b1", "b1 = -p12 (1+q^3)", "x1x2x1", r.b1},
      {"relations.b2", "b2 = p12^2 q^3", "x2x1x1", r.b2},
  };
  for (const auto& [name, claim, word, expected] : items) {
    const P& rel = name.find(".a") != std::string::npos ? quad : dbl;
    const C got = rel.coefficient(Word::parse(word));
    rep.add(name, claim, got == expected, "computed " + got.reduced().to_string());
  }
  const std::size_t quad_terms = quad.size();
  const std::size_t dbl_terms = dbl.size();
  rep.add("relations.support", "the relations have exactly 5 and 3 terms", quad_terms == 5 && dbl_terms == 3,
          std::to_string(quad_terms) + " and " + std::to_string(dbl_terms) + " terms");
  return rep;
}

Report G2Verifier::letter_invariants() {
  Report rep;
  const C q = C::q();
  rep.add("characters.pairing", "p12 p21 = q^-3, p11 = q^3, p22 = q",
          g_.chars.p[0][1] * g_.chars.p[1][0] == q.pow(-3) && g_.chars.p[0][0] == q.pow(3) && g_.chars.p[1][1] == q);
  const std::array<std::string, kLetterCount> trees = {"x1",     "[x1,x2]", "[[x1,x2],[[x1,x2],x2]]", "[[x1,x2],x2]",
                                                       "[[[x1,x2],x2],x2]", "x2"};
  bool trees_ok = true;
  bool leads_ok = true;
  std::string detail;
  for (int l = 0; l < kLetterCount; ++l) {
    const auto& s = g_.letters[static_cast<std::size_t>(l)];
    trees_ok = trees_ok && s.tree.to_string() == trees[static_cast<std::size_t>(l)];
    const auto [w, c] = s.value.leading_term();
    leads_ok = leads_ok && w == s.word && c == C(1);
    detail += letter_name(l) + "=" + s.tree.to_string() + " ";
  }
  rep.add("letters.bracketing", "the standard bracketings of the six letter words", trees_ok, detail);
  rep.add("letters.leading", "each letter value has its word as leading word with coefficient 1", leads_ok);
  bool sorted = true;
  for (int l = 0; l + 1 < kLetterCount; ++l) sorted = sorted && word_cmp(letter_word(l), letter_word(l + 1)) > 0;
  rep.add("letters.order", "A > B > C > D > E > F", sorted);
  return rep;
}

Poly<Coefficient> G2Verifier::relation_3_4_raw() const {
  const auto r = closed_forms();
  const P& quad = g_.relations[0];
  const P& dbl = g_.relations[1];
  const P e1 = P::var(1) * quad - dbl * word_poly("x2x2x2");
  return dbl * word_poly("x1x2x2x2", r.a1 - r.b1) - P::var(1) * e1;
}

Poly<Coefficient> G2Verifier::relation_3_4() const {
  const auto r = closed_forms();
  const P replacement = word_poly("x1x2x1", -r.b1) + word_poly("x2x1x1", -r.b2);
  const P raw = relation_3_4_raw();
  P out;
  for (const auto& [w, c] : raw.terms()) {
    int at = -1;
    for (int k = 0; k + 2 < w.length(); ++k) {
      if (w.at(k) == 1 && w.at(k + 1) == 1 && w.at(k + 2) == 2) {
        at = k;
        break;
      }
    }
    if (at < 0) {
      out.add_term(w, c);
      continue;
    }
    out += P::monomial(w.prefix(at), c) * replacement * P::monomial(w.suffix_from(at + 3));
  }
  return out;
}

Report G2Verifier::derived_relations() {
  Report rep;
  const auto r = closed_forms();
  const P& quad = g_.relations[0];
  const P& dbl = g_.relations[1];
  const C k1 = r.a1 - r.b1;

  const P e1 = P::var(1) * quad - dbl * word_poly("x2x2x2");
  const P e1_display = word_poly("x1x2x1x2x2x2", k1) + word_poly("x1x2x2x1x2x2", r.a2) +
                       word_poly("x1x2x2x2x1x2", r.a3) + word_poly("x1x2x2x2x2x1", r.a4) -
                       word_poly("x2x1x1x2x2x2", r.b2);
  rep.add("derived.relation_2_4.recipe",
          "x1 times the quadruple relation minus the double relation times x2^3 equals the displayed (2,4) relation",
          e1 == e1_display);
  rep.add("derived.relation_2_4.member", "the displayed (2,4) relation lies in the ideal", oracle_.is_in_ideal(e1_display));

  const P e2 = P::monomial(Word::parse("x1x2"), k1) * quad - e1 * P::var(2);
  const P e2_display = word_poly("x1x2x2x1x2x2x2", r.a1 * k1 - r.a2) + word_poly("x1x2x2x2x1x2x2", r.a2 * k1 - r.a3) +
                       word_poly("x1x2x2x2x2x1x2", r.a3 * k1 - r.a4) + word_poly("x1x2x2x2x2x2x1", r.a4 * k1) +
                       word_poly("x2x1x1x2x2x2x2", r.b2);
  rep.add("derived.relation_2_5.recipe", "the (2,5) recipe reproduces the displayed relation", e2 == e2_display);
  rep.add("derived.relation_2_5.member", "the displayed (2,5) relation lies in the ideal", oracle_.is_in_ideal(e2_display));

  const C kk = r.b1 * k1 + r.b2;
  const C c4 = r.a2 * r.b1 - kk * r.b1;
  const P g = relation_3_4();
  const P g_display = word_poly("x1x2x1x2x1x2x2", c4) - word_poly("x1x2x2x1x1x2x2", kk * r.b2) +
                      word_poly("x1x2x1x2x2x1x2", r.a3 * r.b1) + word_poly("x1x2x1x2x2x2x1", r.a4 * r.b1);
  const P w_part = g - g_display;
  bool w_ok = true;
  for (const auto& [w, c] : w_part.terms()) w_ok = w_ok && w.at(0) == 2;
  rep.add("derived.relation_3_4.recipe",
          "after one rewrite of x1x1x2 per word, the x1-initial terms match the displayed (3,4) relation",
          x1_initial(g) == g_display, "x1-initial part: " + x1_initial(g).to_string());
  rep.add("derived.relation_3_4.remainder", "the remaining terms all start with x2", w_ok,
          std::to_string(w_part.size()) + " x2-initial terms");
  rep.add("derived.relation_3_4.member", "the (3,4) relation lies in the ideal", oracle_.is_in_ideal(g));

  const P f = g * P::monomial(Word::parse("x2"), k1) - P::monomial(Word::parse("x1x2"), c4) * e1;
  const auto [lw, lc] = f.leading_term();
  const C q = C::q();
  const C expected = -C::p12(5) * q.pow(5) * (C(1) + q.pow(3)) * (C(1) + q.pow(2));
  const C displayed = r.a3 * r.b1 * k1 - r.a2 * c4;
  const Word cd = letter_word(kC) * letter_word(kD);
  rep.add("derived.cd_leading",
          "the (3,5) combination leads with the word CD and coefficient -p12^5 q^5 (1+q^3)(1+q^2)",
          lw == cd && lc == expected && displayed == expected,
          "leading word " + lw.compact() + ", coefficient " + lc.reduced().to_string());
  rep.add("derived.cd_member", "the (3,5) combination lies in the ideal", oracle_.is_in_ideal(f));
  return rep;
}

std::vector<PairClass> G2Verifier::classify_pairs() {
  std::vector<PairClass> out;
  for (int x = 0; x < kLetterCount; ++x) {
    for (int y = x + 1; y < kLetterCount; ++y) {
      PairClass pc{x, y, {}};
      const BracketTree t = BracketTree::node(g_.letters[static_cast<std::size_t>(x)].tree,
                                              g_.letters[static_cast<std::size_t>(y)].tree);
      for (int l = 0; l < kLetterCount; ++l) {
        if (g_.letters[static_cast<std::size_t>(l)].tree == t) pc.verdict = "in list: " + letter_name(l);
      }
      if (pc.verdict.empty()) {
        if (!is_standard_nonassociative(t)) {
          pc.verdict = "not standard";
        } else {
          pc.verdict = oracle_.is_hard(t.word()) ? "hard" : "not hard";
        }
      }
      out.push_back(pc);
    }
  }
  return out;
}

Report G2Verifier::hard_letters() {
  Report rep;
  for (int l = 0; l < kLetterCount; ++l) {
    rep.add("hard." + letter_name(l), "[" + letter_name(l) + "] is hard", oracle_.is_hard(letter_word(l)));
  }
  const std::map<std::string, std::string> expected = {
      {"[[A],[B]]", "not hard"},     {"[[A],[C]]", "not hard"},     {"[[A],[D]]", "not hard"},
      {"[[A],[E]]", "not hard"},     {"[[A],[F]]", "in list: B"},   {"[[B],[C]]", "not hard"},
      {"[[B],[D]]", "in list: C"},   {"[[B],[E]]", "not hard"},     {"[[B],[F]]", "in list: D"},
      {"[[C],[D]]", "not hard"},     {"[[C],[E]]", "not standard"}, {"[[C],[F]]", "not standard"},
      {"[[D],[E]]", "not hard"},     {"[[D],[F]]", "in list: E"},   {"[[E],[F]]", "not hard"},
  };
  for (const auto& pc : classify_pairs()) {
    const std::string name = pair_name(pc.left, pc.right);
    const std::string& want = expected.at(name);
    rep.add("pairs." + name, name + " is " + want, pc.verdict == want, "computed: " + pc.verdict);
  }
  // Every standard word up to (3,6) other than the six letter words is not hard.
  std::size_t examined = 0;
  std::vector<std::string> wrong;
  for (const Word& w : enumerate_standard({3, 6})) {
    ++examined;
    bool is_letter = false;
    for (int l = 0; l < kLetterCount; ++l) is_letter = is_letter || w == letter_word(l);
    if (oracle_.is_hard(w) != is_letter) wrong.push_back(w.compact());
  }
  std::string detail = std::to_string(examined) + " standard words examined";
  for (const auto& s : wrong) detail += "; unexpected: " + s;
  rep.add("hard.exhaustive", "the hard standard words up to (3,6) are exactly the six letter words", wrong.empty(),
          detail);
  return rep;
}

std::vector<DerivativeEntry> G2Verifier::derivative_entries() {
  const std::array<std::array<std::string, 2>, kLetterCount> table = {{
      {"1", "0"},
      {"(1-q^-3) x2", "0"},
      {"q^2 (1-q^-3)^2 x2 [D] + p21 (1-q^-3)(q^3-q^2-q) [E]", "0"},
      {"(1-q^-3)(1-q^-2) x2^2", "0"},
      {"(1-q^-3)(1-q^-2)(1-q^-1) x2^3", "0"},
      {"0", "1"},
  }};
  std::vector<DerivativeEntry> out;
  for (int l = 0; l < kLetterCount; ++l) {
    for (int i = 1; i <= 2; ++i) {
      DerivativeEntry e;
      e.letter = l;
      e.index = i;
      e.value = g_.d(i, g_.value(l));
      e.pbw = to_pbw(g_, oracle_, e.value);
      e.expected = table[static_cast<std::size_t>(l)][static_cast<std::size_t>(i - 1)];
      const P expected = parse_poly(e.expected);
      const auto expected_pbw = to_pbw(g_, oracle_, expected);
      bool same = expected_pbw.size() == e.pbw.size();
      for (const auto& [m, c] : e.pbw) {
        auto it = expected_pbw.find(m);
        same = same && it != expected_pbw.end() && it->second == c;
      }
      e.matches = same && e.value == expected;
      out.push_back(std::move(e));
    }
  }
  return out;
}

Report G2Verifier::derivative_table() {
  Report rep;
  for (const auto& e : derivative_entries()) {
    const std::string name = "table.d" + std::to_string(e.index) + "." + letter_name(e.letter);
    rep.add(name, "d" + std::to_string(e.index) + "([" + letter_name(e.letter) + "]) = " + e.expected, e.matches,
            "computed: " + render_pbw(e.pbw));
  }
  return rep;
}

std::optional<Coefficient> G2Verifier::proportionality(const P& f, const P& g) {
  const P nf = oracle_.normal_form(f);
  const P ng = oracle_.normal_form(g);
  if (ng.is_zero()) return std::nullopt;
  const auto [w, c] = ng.leading_term();
  C ratio = nf.coefficient(w) / c;
  ratio = ratio.reduced();
  if (!(nf - ng * ratio).is_zero()) return std::nullopt;
  return ratio;
}

std::optional<Coefficient> G2Verifier::alpha() {
  return proportionality(g_.bracket(g_.value(kC), g_.value(kF)), power(g_.value(kD), 2));
}

std::optional<Coefficient> G2Verifier::beta() {
  return proportionality(g_.bracket(g_.value(kC), g_.value(kE)), power(g_.value(kD), 3));
}

Report G2Verifier::structure_constants() {
  Report rep;
  const auto a = alpha();
  rep.add("constants.alpha", "[[C],[F]] is a scalar multiple of [D]^2 modulo the ideal", a.has_value(),
          a ? "alpha = " + a->to_string() : "no solution");
  const auto b = beta();
  rep.add("constants.beta", "[[C],[E]] is a scalar multiple of [D]^3 modulo the ideal", b.has_value(),
          b ? "beta = " + b->to_string() : "no solution");
  const std::array<std::pair<int, int>, 3> zeros = {{{kB, kC}, {kC, kD}, {kD, kE}}};
  for (const auto& [x, y] : zeros) {
    const P f = g_.bracket(g_.value(x), g_.value(y));
    const P nf = oracle_.normal_form(f);
    rep.add("constants.zero." + pair_name(x, y), pair_name(x, y) + " = 0 modulo the ideal", nf.is_zero(),
            nf.is_zero() ? "" : "normal form " + nf.to_string());
  }
  return rep;
}

Report G2Verifier::nested_vanishing(MembershipMode c_mode, int trials) {
  Report rep;
  for (int l = 0; l < kLetterCount; ++l) {
    const P& u = g_.value(l);
    for (int i = 1; i <= 2; ++i) {
      const P du = g_.d(i, u);
      const std::string name = "nested." + letter_name(l) + ".d" + std::to_string(i);
      const int depth = nesting_depth(l);
      const bool trivial = (l == kF) != (i == 2);
      if (trivial) {
        rep.add(name, "d" + std::to_string(i) + "([" + letter_name(l) + "]) = 0", du.is_zero());
        continue;
      }
      const std::string claim =
          std::to_string(depth) + "-fold bracket of [" + letter_name(l) + "] with its d" + std::to_string(i) + " vanishes";
      const P f = g_.nested(u, du, depth);
      if (f.is_zero()) {
        rep.add(name, claim, true, "zero in the free algebra");
        continue;
      }
      const Constitution d = f.constitution();
      if (l == kC && c_mode == MembershipMode::Probabilistic) {
        const auto v = probabilistic_is_zero(f, g_.relations, trials);
        std::ostringstream os;
        os << "constitution " << d.to_string() << ", " << v.trials << " random trials, error bound " << v.error_bound;
        if (!v.in_ideal) os << "; " << v.witness;
        rep.add(name, claim, v.in_ideal && v.error_bound < 1e-15, os.str());
        continue;
      }
      const bool ok = oracle_.is_in_ideal(f);
      rep.add(name, claim, ok, "constitution " + d.to_string() + ", exact");
      if (l == kB || l == kD) {
        const auto v = probabilistic_is_zero(f, g_.relations, trials);
        rep.add(name + ".agree", "exact and randomized membership agree for [" + letter_name(l) + "]",
                v.in_ideal == ok);
      }
    }
  }
  return rep;
}

std::vector<HeightRow> G2Verifier::height_table(int t) {
  const auto ctx = CyclotomicContext::make(t);
  const auto g = build_g2();
  std::vector<HeightRow> rows;
  for (int l = 0; l < kLetterCount; ++l) {
    HeightRow row;
    row.letter = l;
    const Constitution u = letter_constitution(l);
    const C puu = g.p(u, u);
    row.self_pairing = puu == C::q() ? "q" : puu == C::q(3) ? "q^3" : puu.to_string();
    const CycloCoefficient z = specialize(puu, ctx);
    CycloCoefficient acc = z;
    int order = 1;
    while (!(acc == CycloCoefficient(1)) && order <= t) {
      acc *= z;
      ++order;
    }
    row.order = order;
    rows.push_back(row);
  }
  return rows;
}

Report G2Verifier::heights(int t) {
  Report rep;
  const std::string tag = "heights.t" + std::to_string(t);
  const auto rows = height_table(t);
  const std::array<std::string, kLetterCount> pairing = {"q^3", "q", "q^3", "q", "q^3", "q"};
  bool pair_ok = true;
  bool order_ok = true;
  std::string detail;
  for (const auto& r : rows) {
    pair_ok = pair_ok && r.self_pairing == pairing[static_cast<std::size_t>(r.letter)];
    const int expected = r.self_pairing == "q" ? t : t / std::gcd(t, 3);
    order_ok = order_ok && r.order == expected;
    detail += letter_name(r.letter) + ":" + std::to_string(r.order) + " ";
  }
  rep.add(tag + ".self_pairing", "p(u,u) is q^3 for A, C, E and q for B, D, F", pair_ok);
  rep.add(tag + ".orders", "heights are t for B, D, F and t or t/3 for A, C, E", order_ok, detail);

  if (t == 5 || t == 7) {
    const auto ctx = CyclotomicContext::make(t);
    const auto g = build_g2(ctx);
    for (int l : {kB, kD}) {
      const auto& u = g.value(l);
      const auto lhs = g.d(1, power(u, t));
      const auto coeff = g.p(letter_constitution(l), {1, 0}).pow(t - 1);
      const auto rhs = g.nested(u, g.d(1, u), t - 1) * coeff;
      rep.add(tag + ".power_rule." + letter_name(l),
              "d1([" + letter_name(l) + "]^t) = p(u,x1)^(t-1) times the (t-1)-fold bracket, at t = " + std::to_string(t),
              (lhs - rhs).is_zero());
    }
    if (t == 5) {
      IdealOracle<CycloCoefficient> oracle(g.relations);
      const auto f = g.d(1, power(g.value(kB), t));
      rep.add(tag + ".power_vanishes.B", "d1([B]^t) lies in the ideal at t = 5", oracle.is_in_ideal(f));
    }
  }
  return rep;
}

Report G2Verifier::dimension_identity(int max_total) {
  Report rep;
  for (int s = 1; s <= max_total; ++s) {
    bool ok = true;
    std::string detail;
    for (int a = 0; a <= s; ++a) {
      const Constitution d{a, s - a};
      const std::size_t dim = oracle_.quotient_dimension(d);
      const std::size_t pbw = pbw_monomials(d).size();
      ok = ok && dim == pbw;
      detail += (a == 0 ? "" : " ") + std::to_string(dim);
      if (dim != pbw) detail += "(pbw " + std::to_string(pbw) + ")";
    }
    rep.add("dimension.total" + std::to_string(s),
            "quotient dimension equals the PBW monomial count in every constitution of total degree " +
                std::to_string(s),
            ok, detail);
  }
  return rep;
}

}  // namespace skewpbw
