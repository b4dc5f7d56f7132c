#include <doctest.h>

#include "skewpbw/coideal.hpp"

using namespace skewpbw;

namespace {

CoidealEngine<Coefficient>& engine() {
  static CoidealEngine<Coefficient> e(build_g2());
  return e;
}

std::set<int> closure_of(int k) { return engine().closure({engine().canonical(k)}).members; }

}  // namespace

TEST_CASE("coideal.templates") {
  const auto& g = engine().instance();
  for (int h : template_heads()) {
    const auto t = make_template(g, h);
    CHECK(t.matches_reference);
    CHECK(t.tails.size() == reference_tails(h).size());
    CHECK(t.parts.size() == t.tails.size() + 1);
  }
  CHECK(mechanical_tails(kA).empty());
}

TEST_CASE("coideal.solve_linear") {
  using C = Coefficient;
  // u0 + u1 = 1, 2 u0 + 2 u1 = 2: one free unknown.
  const std::vector<std::vector<C>> rows = {{C(-1), C(1), C(1)}, {C(-2), C(2), C(2)}};
  const auto s = solve_linear(rows, 2);
  CHECK(s.consistent);
  CHECK(s.nullspace.size() == 1);
  const auto bad = solve_linear(std::vector<std::vector<C>>{{C(1), C(0)}}, 1);
  CHECK_FALSE(bad.consistent);
}

TEST_CASE("coideal.branch_systems_shape") {
  const auto& g = engine().instance();
  const std::map<int, std::pair<std::size_t, std::size_t>> free = {
      {kB, {0, 0}}, {kD, {0, 1}}, {kE, {0, 2}}, {kC, {2, 2}}};
  for (int h : template_heads()) {
    const auto t = make_template(g, h);
    const auto x1 = solve_linear(derivative_constraints(g, t, Branch::X1).rows, t.unknowns.size());
    const auto x2 = solve_linear(derivative_constraints(g, t, Branch::X2).rows, t.unknowns.size());
    CHECK(x1.consistent);
    CHECK(x2.consistent);
    CHECK(x1.nullspace.size() == free.at(h).first);
    CHECK(x2.nullspace.size() == free.at(h).second);
  }
}

TEST_CASE("coideal.x2_chain_closures") {
  CHECK(closure_of(5) == std::set<int>{5});
  CHECK(closure_of(6) == std::set<int>{5, 6});
  CHECK(closure_of(7) == std::set<int>{5, 6, 7});
  CHECK(closure_of(8) == std::set<int>{5, 6, 7, 8});
  CHECK(closure_of(9) == std::set<int>{5, 6, 7, 8, 9});
}

TEST_CASE("coideal.x1_side_mixed_element") {
  // [[x2,[x2,x1]],[x2,x1]] is killed by d1 and closes with x1 and [x2,x1] only.
  const auto& g = engine().instance();
  CHECK(g.d(1, engine().canonical(kCanonicalX1Mixed)).is_zero());
  CHECK(closure_of(kCanonicalX1Mixed) == std::set<int>{0, 1, kCanonicalX1Mixed});
  CHECK(closure_of(2) == std::set<int>{0, 1, 2, kCanonicalX1Mixed});
}

TEST_CASE("coideal.reference_x1_side_top_generates_everything") {
  const auto& g = engine().instance();
  const auto r = engine().closure({engine().canonical(kCanonicalReferenceX1Top)});
  CHECK(r.top);
  const auto x2 = derivation_sequence({1, 1, 2, 2}, engine().canonical(kCanonicalReferenceX1Top), g.chars);
  CHECK_FALSE(x2.is_zero());
  CHECK(x2.leading_term().first == Word::letter(2));
}

TEST_CASE("coideal.hilbert_counts") {
  // The set {x1, [x2,x1], [x2,[x2,x1]]} misses a dimension at (2,3).
  const std::set<int> short_set = {0, 1, 2};
  CHECK(engine().subalgebra_dimension(short_set, {2, 3}) == 2);
  CHECK(engine().monomial_count(short_set, {2, 3}) == 1);
  const std::set<int> full = {0, 1, 2, kCanonicalX1Mixed};
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 5; ++b) {
      if (a + b > 0) CHECK(engine().subalgebra_dimension(full, {a, b}) == engine().monomial_count(full, {a, b}));
    }
  }
}

TEST_CASE("coideal.lattice") {
  const Lattice l = engine().lattice();
  CHECK(l.nodes.size() == 12);
  CHECK(l.edges.size() == 12);
  CHECK(l.nodes.front().name == "k[G]");
  CHECK(l.nodes.back().name == "U_q^+(g)");
  CHECK(l.nodes.back().pbw_generators.size() == 6);
  const std::string dot = to_dot(l);
  CHECK(dot.find("digraph") == 0);
  CHECK(to_records(l).find("\"covers\"") != std::string::npos);
}

TEST_CASE("coideal.lattice_at_roots_of_unity") {
  const Lattice generic = engine().lattice();
  for (int t : {5, 7, 9}) {
    CoidealEngine<CycloCoefficient> e(build_g2(CyclotomicContext::make(t)));
    const Lattice l = e.lattice();
    CHECK(to_dot(l) == to_dot(generic));
  }
}
