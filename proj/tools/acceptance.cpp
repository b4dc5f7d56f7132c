// Prints one PASS/FAIL line per acceptance criterion. Exits 1 if any is red,
// unless --report-only is given.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "skewpbw/coideal.hpp"
#include "skewpbw/g2.hpp"
#include "skewpbw/lyndon.hpp"

namespace {

using namespace skewpbw;
using C = Coefficient;
using P = Poly<Coefficient>;

struct Outcome {
  bool ok = false;
  std::string detail;
};

Outcome from_report(const Report& r, std::size_t min_checks = 1) {
  Outcome o;
  o.ok = r.ok() && r.checks().size() >= min_checks;
  o.detail = std::to_string(r.count(Status::Pass)) + " pass";
  if (r.count(Status::Discrepancy) != 0) o.detail += ", " + std::to_string(r.count(Status::Discrepancy)) + " misprints";
  for (const auto& c : r.checks()) {
    if (c.status == Status::Fail) o.detail += "; failed " + c.name;
  }
  return o;
}

Outcome properties() {
  std::mt19937_64 gen(20240917);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); };
  auto homogeneous = [&](int max_total) {
    const int n = uniform(1, max_total);
    const int a = uniform(0, n);
    const auto words = words_of({a, n - a});
    P f;
    while (f.is_zero()) {
      const int c = uniform(1, 3) * (uniform(0, 1) != 0 ? 1 : -1);
      f += P::monomial(words[static_cast<std::size_t>(uniform(0, static_cast<int>(words.size()) - 1))],
                       C(c) * C::q(uniform(-2, 2)) * C::p12(uniform(-2, 2)));
    }
    return f;
  };
  const auto g = build_g2();
  const auto& ch = g.chars;
  IdealOracle<C> oracle(g.relations);
  std::size_t brackets = 0, leibniz = 0, nf = 0;
  bool ok = true;
  for (int k = 0; k < 200; ++k) {
    const P u = homogeneous(3), v = homogeneous(3), w = homogeneous(3);
    const C puv = ch.p_form(u.constitution(), v.constitution());
    const C pvw = ch.p_form(v.constitution(), w.constitution());
    ok = ok && skew_bracket(u, v * w, ch) == skew_bracket(u, v, ch) * w + puv * (v * skew_bracket(u, w, ch));
    ok = ok && skew_bracket(u * v, w, ch) == pvw * (skew_bracket(u, w, ch) * v) + u * skew_bracket(v, w, ch);
    ++brackets;
  }
  for (int k = 0; k < 200; ++k) {
    const P u = homogeneous(4), v = homogeneous(4);
    for (int i = 1; i <= 2; ++i) {
      const C twist = ch.p_form(u.constitution(), i == 1 ? Constitution{1, 0} : Constitution{0, 1});
      ok = ok && derivation(i, u * v, ch) == derivation(i, u, ch) * v + twist * (u * derivation(i, v, ch));
    }
    ++leibniz;
  }
  for (int k = 0; k < 100; ++k) {
    const P a = homogeneous(7) + homogeneous(7), b = homogeneous(7);
    const C s = C::q(uniform(-2, 2)) * C(uniform(1, 4));
    const P na = oracle.normal_form(a);
    ok = ok && oracle.normal_form(na) == na;
    ok = ok && oracle.normal_form(a + b * s) == na + oracle.normal_form(b) * s;
    ++nf;
  }
  bool counts = true;
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t found = 0;
    for (int a = 0; a <= n; ++a) found += standard_words_of({a, n - a}).size();
    counts = counts && found == necklace_count(n);
  }
  return {ok && counts, std::to_string(brackets) + " bracket triples, " + std::to_string(leibniz) +
                            " Leibniz products, " + std::to_string(nf) + " normal forms, Lyndon counts to 8 " +
                            (counts ? "match" : "differ")};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria, one line each"};
  bool report_only = false;
  bool exact_c = false;
  app.add_flag("--report-only", report_only, "always exit 0 after printing");
  app.add_flag("--exact", exact_c, "decide the [C] nested bracket exactly (long-running)");
  CLI11_PARSE(app, argc, argv);

  G2Verifier g2;
  CoidealVerifier coideal;
  bool all = true;

  auto criterion = [&](int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > limit_s) {
      o.ok = false;
      o.detail += "; over the time limit";
    }
    all = all && o.ok;
    std::printf("%s %2d  %-34s %8.2fs  %s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), s, o.detail.c_str());
    std::fflush(stdout);
  };

  criterion(1, "derivative table", 5, [&] { return from_report(g2.derivative_table(), 12); });
  criterion(2, "relation coefficients", 1, [&] { return from_report(g2.relation_coefficients(), 6); });
  criterion(3, "derived relations", 30, [&] { return from_report(g2.derived_relations(), 9); });
  criterion(4, "hard super-letters", 120, [&] { return from_report(g2.hard_letters(), 22); });
  criterion(5, "dimension identity to degree 9", 600, [&] { return from_report(g2.dimension_identity(9), 9); });
  criterion(6, "nested brackets vanish", exact_c ? 600 : 60, [&] {
    return from_report(g2.nested_vanishing(exact_c ? MembershipMode::Exact : MembershipMode::Probabilistic, 3), 12);
  });
  criterion(7, "heights at t = 5, 7, 9", 300, [&] {
    Report r;
    for (int t : {5, 7, 9}) r.append(g2.heights(t));
    return from_report(r, 8);
  });
  criterion(8, "generator systems", 60, [&] {
    Report r;
    r.append(coideal.templates());
    r.append(coideal.displayed_lines());
    r.append(coideal.branch_systems());
    return from_report(r, 40);
  });
  criterion(9, "coideal lattice", 120, [&] {
    Report r;
    r.append(coideal.closure_facts());
    r.append(coideal.lattice_checks());
    for (int t : {5, 7, 9}) r.append(coideal.cyclotomic(t));
    return from_report(r, 20);
  });
  criterion(10, "property suites", 120, properties);

  return all || report_only ? 0 : 1;
}
