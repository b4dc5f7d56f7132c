// Command-line driver: verification suites, normal forms, hardness, exports.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>

#include "skewpbw/coideal.hpp"
#include "skewpbw/g2.hpp"
#include "skewpbw/lyndon.hpp"
#include "skewpbw/parse.hpp"

namespace {

using namespace skewpbw;
using nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

Report run_g2(MembershipMode mode, int trials, int max_total) {
  G2Verifier v;
  Report r;
  r.append(v.relation_coefficients());
  r.append(v.letter_invariants());
  r.append(v.derived_relations());
  r.append(v.hard_letters());
  r.append(v.derivative_table());
  r.append(v.structure_constants());
  r.append(v.nested_vanishing(mode, trials));
  for (int t : {5, 7, 9}) r.append(v.heights(t));
  r.append(v.dimension_identity(max_total));
  return r;
}

Report run_coideal() {
  CoidealVerifier v;
  Report r;
  r.append(v.templates());
  r.append(v.displayed_lines());
  r.append(v.branch_systems());
  r.append(v.closure_facts());
  r.append(v.lattice_checks());
  for (int t : {5, 7, 9}) r.append(v.cyclotomic(t));
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact skew-commutator engine for the positive part of quantum G2"};
  app.require_subcommand(1);

  std::string mode = "probabilistic";
  int trials = 3;
  std::string suite = "all";
  int max_total = 9;
  auto* verify = app.add_subcommand("verify", "run the verification suites, one JSON record per check");
  verify->add_option("--mode", mode, "membership test for the [C] nested bracket")
      ->check(CLI::IsMember({"exact", "probabilistic"}));
  verify->add_option("--trials", trials, "trials in probabilistic mode")->check(CLI::PositiveNumber);
  verify->add_option("--suite", suite, "which suite to run")->check(CLI::IsMember({"all", "g2", "coideal"}));
  verify->add_option("--max-degree", max_total, "total degree bound of the dimension identity")
      ->check(CLI::Range(1, 12));

  std::string expr;
  auto* nf = app.add_subcommand("nf", "normal form of an expression modulo the defining relations");
  nf->add_option("EXPR", expr, "expression, e.g. \"[x1,[x1,x2]]\"")->required();

  std::string word;
  auto* hard = app.add_subcommand("hard", "hardness verdict for a word, with a reduction witness");
  hard->add_option("WORD", word, "word such as x1x2x1x2x2 or 12122")->required();

  app.add_subcommand("table", "derivatives of the six super-letters in the PBW basis");

  std::string format = "dot";
  auto* lattice = app.add_subcommand("lattice", "lattice of right coideal subalgebras containing the coradical");
  lattice->add_option("--format", format, "dot or records")->check(CLI::IsMember({"dot", "records"}));

  int t = 5;
  auto* heights = app.add_subcommand("heights", "heights of the super-letters at a root of unity");
  heights->add_option("--t", t, "order of q (t > 4, t != 6)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) {
      Report r;
      const auto m = mode == "exact" ? MembershipMode::Exact : MembershipMode::Probabilistic;
      if (suite != "coideal") r.append(run_g2(m, trials, max_total));
      if (suite != "g2") r.append(run_coideal());
      std::cout << r.to_jsonl();
      ordered_json summary = {{"summary", true},
                              {"pass", r.count(Status::Pass)},
                              {"discrepancy", r.count(Status::Discrepancy)},
                              {"fail", r.count(Status::Fail)}};
      std::cout << summary.dump() << "\n";
      return r.ok() ? 0 : kExitFail;
    }
    if (*nf) {
      const auto g = build_g2();
      IdealOracle<Coefficient> oracle(g.relations);
      std::cout << oracle.normal_form(parse_poly(expr)).to_string() << "\n";
      return 0;
    }
    if (*hard) {
      const Word w = Word::parse(word);
      ordered_json out = {{"word", w.compact()}};
      if (!is_standard(w)) {
        out["verdict"] = "not standard";
      } else {
        const auto g = build_g2();
        IdealOracle<Coefficient> oracle(g.relations);
        const auto witness = oracle.reduction_witness(w);
        out["verdict"] = witness ? "not hard" : "hard";
        if (witness) out["witness"] = witness->to_string() + " = 0";
      }
      std::cout << out.dump() << "\n";
      return 0;
    }
    if (app.got_subcommand("table")) {
      G2Verifier v;
      bool ok = true;
      for (const auto& e : v.derivative_entries()) {
        ordered_json row = {{"letter", letter_name(e.letter)},
                            {"derivation", e.index},
                            {"pbw", render_pbw(e.pbw)},
                            {"expected", e.expected},
                            {"matches", e.matches}};
        ok = ok && e.matches;
        std::cout << row.dump() << "\n";
      }
      return ok ? 0 : kExitFail;
    }
    if (*lattice) {
      CoidealEngine<Coefficient> engine(build_g2());
      const Lattice l = engine.lattice();
      std::cout << (format == "dot" ? to_dot(l) : to_records(l));
      return 0;
    }
    if (*heights) {
      for (const auto& row : G2Verifier::height_table(t)) {
        ordered_json out = {{"letter", letter_name(row.letter)}, {"self_pairing", row.self_pairing}, {"height", row.order}};
        std::cout << out.dump() << "\n";
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
