#include "skewpbw/coideal.hpp"

#include <algorithm>
#include <deque>
#include <json.hpp>
#include <map>
#include <random>
#include <stdexcept>

namespace skewpbw {

std::string to_string(Branch b) { return b == Branch::X1 ? "x1" : "x2"; }

const std::vector<CanonicalGenerator>& canonical_generators() {
  static const std::vector<CanonicalGenerator> list = {
      {"x1", kA},
      {"[x2,x1]", kB},
      {"[x2,[x2,x1]]", kD},
      {"[x2,[x2,[x2,x1]]]", kE},
      {"[[x1,x2],[x2,[x2,x1]]]", kC},
      {"x2", kF},
      {"[[[x1,x2],x2],x2]", kE},
      {"[[x1,x2],x2]", kD},
      {"[[x1,x2],[[x1,x2],x2]]", kC},
      {"[x1,x2]", kB},
      {"[[x2,[x2,x1]],[x2,x1]]", kC},
  };
  return list;
}

const std::vector<int>& template_heads() {
  static const std::vector<int> heads = {kB, kD, kE, kC};
  return heads;
}

const std::vector<std::string>& reference_tails(int head) {
  static const std::vector<std::string> none;
  static const std::vector<std::string> b = {"x2 x1"};
  static const std::vector<std::string> d = {"x2^2 x1", "x2 [B]"};
  static const std::vector<std::string> e = {"x2^3 x1", "x2^2 [B]", "x2 [D]"};
  static const std::vector<std::string> c = {"x2^3 x1^2", "x2^2 [B] x1", "x2 [D] x1", "x2 [B]^2", "[D] [B]", "[E] x1"};
  switch (head) {
    case kB:
      return b;
    case kC:
      return c;
    case kD:
      return d;
    case kE:
      return e;
    default:
      return none;
  }
}

std::vector<PbwMonomial> mechanical_tails(int head) {
  std::vector<PbwMonomial> out;
  for (const auto& m : pbw_monomials(letter_constitution(head))) {
    if (!m.empty() && m.front() > head) out.push_back(m);
  }
  return out;
}

template <class S>
GeneratorTemplate<S> make_template(const G2Instance<S>& g, int head) {
  GeneratorTemplate<S> t;
  t.head = head;
  const auto found = mechanical_tails(head);
  std::vector<PbwMonomial> ref;
  for (const auto& s : reference_tails(head)) ref.push_back(parse_monomial(s));
  t.matches_reference = std::set<PbwMonomial>(found.begin(), found.end()) == std::set<PbwMonomial>(ref.begin(), ref.end()) &&
                        found.size() == ref.size();
  t.tails = t.matches_reference ? ref : found;
  const auto& names = template_unknowns();
  for (std::size_t k = 0; k < t.tails.size(); ++k) {
    t.unknowns.push_back(k < names.size() ? names[k] : "u" + std::to_string(k + 1));
  }
  t.parts.push_back(g.value(head));
  for (const auto& m : t.tails) t.parts.push_back(monomial_value(g, m));
  return t;
}

namespace {

void arrangements(int n1, int n2, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n1 == 0 && n2 == 0) {
    out.push_back(cur);
    return;
  }
  if (n1 > 0) {
    cur.push_back(1);
    arrangements(n1 - 1, n2, cur, out);
    cur.pop_back();
  }
  if (n2 > 0) {
    cur.push_back(2);
    arrangements(n1, n2 - 1, cur, out);
    cur.pop_back();
  }
}

Word letter_power(int letter, int k) {
  Word w;
  for (int i = 0; i < k; ++i) w = w * Word::letter(letter);
  return w;
}

}  // namespace

template <class S>
LinearSystem<S> derivative_constraints(const G2Instance<S>& g, const GeneratorTemplate<S>& t, Branch b) {
  LinearSystem<S> sys;
  const Constitution d = letter_constitution(t.head);
  // X2 branch: strip every x2 and some x1, leaving x1^k with k >= 1.
  const int forbidden = b == Branch::X2 ? 1 : 2;
  const int keep_all = b == Branch::X2 ? d.m2 : d.m1;
  const int partial = b == Branch::X2 ? d.m1 : d.m2;
  for (int n = 0; n < partial; ++n) {
    std::vector<std::vector<int>> seqs;
    std::vector<int> cur;
    if (b == Branch::X2) {
      arrangements(n, keep_all, cur, seqs);
    } else {
      arrangements(keep_all, n, cur, seqs);
    }
    const Word target = letter_power(forbidden, partial - n);
    for (const auto& ops : seqs) {
      std::vector<S> row;
      bool nonzero = false;
      for (const auto& part : t.parts) {
        row.push_back(derivation_sequence(ops, part, g.chars).coefficient(target));
        nonzero = nonzero || !is_zero(row.back());
      }
      if (!nonzero) continue;
      sys.sequences.push_back(ops);
      sys.rows.push_back(std::move(row));
    }
  }
  return sys;
}

template <class S>
SolutionSpace<S> solve_linear(const std::vector<std::vector<S>>& rows, std::size_t unknowns) {
  // Augmented rows [c1 .. cn | -c0].
  std::vector<std::vector<S>> m;
  for (const auto& r : rows) {
    std::vector<S> a(unknowns + 1, S(0));
    for (std::size_t k = 0; k < unknowns; ++k) a[k] = r[k + 1];
    a[unknowns] = -r[0];
    m.push_back(std::move(a));
  }
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < unknowns && rank < m.size(); ++col) {
    std::size_t sel = rank;
    while (sel < m.size() && is_zero(m[sel][col])) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    const S inv = S(1) / m[rank][col];
    for (auto& v : m[rank]) {
      v *= inv;
      simplify(v);
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || is_zero(m[r][col])) continue;
      const S f = m[r][col];
      for (std::size_t k = 0; k <= unknowns; ++k) {
        m[r][k] -= f * m[rank][k];
        simplify(m[r][k]);
      }
    }
    pivot_col.push_back(static_cast<int>(col));
    ++rank;
  }
  SolutionSpace<S> sol;
  sol.consistent = true;
  for (std::size_t r = rank; r < m.size(); ++r) {
    if (!is_zero(m[r][unknowns])) sol.consistent = false;
  }
  if (!sol.consistent) return sol;
  sol.particular.assign(unknowns, S(0));
  for (std::size_t r = 0; r < rank; ++r) sol.particular[static_cast<std::size_t>(pivot_col[r])] = m[r][unknowns];
  for (std::size_t col = 0; col < unknowns; ++col) {
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(col)) != pivot_col.end()) continue;
    sol.free_unknowns.push_back(static_cast<int>(col));
    std::vector<S> v(unknowns, S(0));
    v[col] = S(1);
    for (std::size_t r = 0; r < rank; ++r) {
      v[static_cast<std::size_t>(pivot_col[r])] = -m[r][col];
    }
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

int Lattice::find(const std::set<int>& members) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].members == members) return static_cast<int>(i);
  }
  return -1;
}

std::string to_dot(const Lattice& l) {
  std::string s = "digraph coideals {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  auto quote = [](const std::string& x) { return nlohmann::json(x).dump(); };
  for (std::size_t i = 0; i < l.nodes.size(); ++i) {
    s += "  n" + std::to_string(i) + " [label=" + quote(l.nodes[i].name) + "];\n";
  }
  for (const auto& [a, b] : l.edges) s += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  return s + "}\n";
}

std::string to_records(const Lattice& l) {
  std::string out;
  for (std::size_t i = 0; i < l.nodes.size(); ++i) {
    nlohmann::ordered_json j;
    j["name"] = l.nodes[i].name;
    j["generator"] = l.nodes[i].generator;
    j["pbw"] = l.nodes[i].pbw_generators;
    std::vector<std::string> covers;
    for (const auto& [a, b] : l.edges) {
      if (a == static_cast<int>(i)) covers.push_back(l.nodes[static_cast<std::size_t>(b)].name);
    }
    j["covers"] = covers;
    out += j.dump() + "\n";
  }
  return out;
}

namespace {

template <class S>
Poly<S> bracket_value(const std::string& text, const CharacterData<S>& chars) {
  return superletter_value(to_bracket_tree(*parse(text)), chars);
}

std::set<int> all_canonical() {
  std::set<int> s;
  for (int k = 0; k < kCanonicalCount; ++k) s.insert(k);
  return s;
}

}  // namespace

template <class S>
CoidealEngine<S>::CoidealEngine(G2Instance<S> g) : g_(std::move(g)), oracle_(g_.relations) {
  for (const auto& c : canonical_generators()) canonical_.push_back(bracket_value(c.bracket, g_.chars));
}

template <class S>
std::optional<S> CoidealEngine<S>::proportional(const Poly<S>& f, const Poly<S>& g) {
  const Poly<S> nf = oracle_.normal_form(f);
  const Poly<S> ng = oracle_.normal_form(g);
  if (ng.is_zero() || nf.is_zero()) return std::nullopt;
  const auto [w, c] = ng.leading_term();
  S ratio = nf.coefficient(w) / c;
  simplify(ratio);
  if (is_zero(ratio) || !(nf - ng * ratio).is_zero()) return std::nullopt;
  return ratio;
}

template <class S>
std::optional<std::pair<int, S>> CoidealEngine<S>::recognize(const Poly<S>& f) {
  const Poly<S> nf = oracle_.normal_form(f);
  if (nf.is_zero() || !nf.is_homogeneous()) return std::nullopt;
  for (int k = 0; k < kCanonicalCount; ++k) {
    if (!(canonical(k).constitution() == nf.constitution())) continue;
    if (auto s = proportional(nf, canonical(k))) return std::make_pair(k, *s);
  }
  return std::nullopt;
}

template <class S>
ClosureResult CoidealEngine<S>::closure(const std::vector<Poly<S>>& generators) {
  ClosureResult res;
  std::deque<Poly<S>> work(generators.begin(), generators.end());
  std::vector<Poly<S>> seen;
  for (;;) {
    while (!work.empty()) {
      const Poly<S> e = oracle_.normal_form(work.front());
      work.pop_front();
      if (e.is_zero() || (e.size() == 1 && e.terms().begin()->first.empty())) continue;
      seen.push_back(e);
      for (const auto& [d, part] : e.components()) {
        if (auto r = recognize(part)) res.members.insert(r->first);
      }
      work.push_back(g_.d(1, e));
      work.push_back(g_.d(2, e));
    }
    if (res.members.count(kCanonicalX1) != 0 && res.members.count(kCanonicalX2) != 0) {
      res.top = true;
      res.members = all_canonical();
      return res;
    }
    // Canonical elements already generated are PBW generators too.
    bool grew = false;
    for (int k = 0; k < kCanonicalCount; ++k) {
      if (res.members.count(k) != 0 || !in_subalgebra(res.members, canonical(k))) continue;
      res.members.insert(k);
      work.push_back(canonical(k));
      grew = true;
    }
    if (!grew) break;
  }
  for (const auto& e : seen) {
    if (!in_subalgebra(res.members, e)) {
      throw std::logic_error("closure escapes the canonical list at " + e.leading_term().first.compact());
    }
  }
  return res;
}

template <class S>
const IdealBlock<S>& CoidealEngine<S>::span(const std::set<int>& members, Constitution d) {
  auto key = std::make_pair(members, d);
  auto it = spans_.find(key);
  if (it != spans_.end()) return *it->second;
  auto blk = std::make_unique<IdealBlock<S>>(d);
  // Every ordered product of members with total constitution d.
  std::vector<std::pair<Constitution, Poly<S>>> stack = {{{0, 0}, Poly<S>(S(1))}};
  while (!stack.empty()) {
    auto [c, prod] = std::move(stack.back());
    stack.pop_back();
    if (c == d) {
      blk->insert(oracle_.normal_form(prod));
      continue;
    }
    for (int k : members) {
      const Constitution next = c + canonical(k).constitution();
      if (next.fits_in(d)) stack.emplace_back(next, prod * canonical(k));
    }
  }
  blk->finalize();
  return *spans_.emplace(key, std::move(blk)).first->second;
}

template <class S>
bool CoidealEngine<S>::in_subalgebra(const std::set<int>& members, const Poly<S>& f) {
  for (const auto& [d, part] : oracle_.normal_form(f).components()) {
    if (d.total() == 0) continue;
    if (!span(members, d).reduce(part).is_zero()) return false;
  }
  return true;
}

template <class S>
std::size_t CoidealEngine<S>::subalgebra_dimension(const std::set<int>& members, Constitution d) {
  return d.total() == 0 ? 1 : span(members, d).rank();
}

template <class S>
std::size_t CoidealEngine<S>::monomial_count(const std::set<int>& members, Constitution d) const {
  // Multisets of members, counted one generator at a time.
  std::map<Constitution, std::size_t> ways = {{{0, 0}, 1}};
  for (int k : members) {
    const Constitution c = canonical(k).constitution();
    std::map<Constitution, std::size_t> next;
    for (const auto& [base, n] : ways) {
      for (Constitution at = base; at.fits_in(d); at = at + c) next[at] += n;
    }
    ways = std::move(next);
  }
  auto it = ways.find(d);
  return it == ways.end() ? 0 : it->second;
}

template <class S>
Lattice CoidealEngine<S>::lattice() {
  Lattice l;
  l.nodes.push_back({"k[G]", "1", {}, {}});
  for (int k = 0; k < kCanonicalCount; ++k) {
    const auto& entry = canonical_generators()[static_cast<std::size_t>(k)];
    const ClosureResult r = closure({canonical(k)});
    if (r.top || l.find(r.members) >= 0) continue;
    l.nodes.push_back({"⟨" + entry.bracket + "⟩", entry.bracket, r.members, {}});
  }
  // x1 side first, each side bottom to top.
  std::stable_sort(l.nodes.begin() + 1, l.nodes.end(), [](const LatticeNode& a, const LatticeNode& b) {
    const bool ax = a.members.count(kCanonicalX1) != 0;
    const bool bx = b.members.count(kCanonicalX1) != 0;
    if (ax != bx) return ax;
    return a.members.size() < b.members.size();
  });
  l.nodes.push_back({"U_q^+(g)", "x1, x2", all_canonical(), {}});
  const auto& gens = canonical_generators();
  for (auto& n : l.nodes) {
    std::vector<int> list(n.members.begin(), n.members.end());
    if (&n == &l.nodes.back()) list = {0, 9, 8, 7, 6, 5};
    std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
      return gens[static_cast<std::size_t>(a)].letter < gens[static_cast<std::size_t>(b)].letter;
    });
    for (int k : list) n.pbw_generators.push_back(gens[static_cast<std::size_t>(k)].bracket);
  }
  auto below = [&](std::size_t a, std::size_t b) {
    const auto& x = l.nodes[a].members;
    const auto& y = l.nodes[b].members;
    return x != y && std::includes(y.begin(), y.end(), x.begin(), x.end());
  };
  for (std::size_t a = 0; a < l.nodes.size(); ++a) {
    for (std::size_t b = 0; b < l.nodes.size(); ++b) {
      if (!below(a, b)) continue;
      bool cover = true;
      for (std::size_t m = 0; m < l.nodes.size() && cover; ++m) cover = !(below(a, m) && below(m, b));
      if (cover) l.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return l;
}

template struct GeneratorTemplate<Coefficient>;
template GeneratorTemplate<Coefficient> make_template(const G2Instance<Coefficient>&, int);
template GeneratorTemplate<CycloCoefficient> make_template(const G2Instance<CycloCoefficient>&, int);
template LinearSystem<Coefficient> derivative_constraints(const G2Instance<Coefficient>&,
                                                          const GeneratorTemplate<Coefficient>&, Branch);
template LinearSystem<CycloCoefficient> derivative_constraints(const G2Instance<CycloCoefficient>&,
                                                               const GeneratorTemplate<CycloCoefficient>&, Branch);
template SolutionSpace<Coefficient> solve_linear(const std::vector<std::vector<Coefficient>>&, std::size_t);
template SolutionSpace<CycloCoefficient> solve_linear(const std::vector<std::vector<CycloCoefficient>>&, std::size_t);
template class CoidealEngine<Coefficient>;
template class CoidealEngine<CycloCoefficient>;

}  // namespace skewpbw
