#include "skewpbw/reduce.hpp"

#include <cmath>

namespace skewpbw {

int degree_span(const Coefficient& c) { return c.num().total_degree_span() + c.den().total_degree_span(); }

ProbabilisticVerdict probabilistic_is_zero(const Poly<Coefficient>& f, const std::vector<Poly<Coefficient>>& rels,
                                           int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  ProbabilisticVerdict verdict;
  if (f.is_zero()) {
    verdict.in_ideal = true;
    verdict.trials = trials;
    verdict.error_bound = 0.0;
    return verdict;
  }
  int e_rel = 0;
  for (const auto& r : rels)
    for (const auto& [w, c] : r.terms()) e_rel = std::max(e_rel, degree_span(c));
  int e_f = 0;
  double words = 0;
  for (const auto& [d, part] : f.components()) words = std::max(words, static_cast<double>(count_words(d)));
  for (const auto& [w, c] : f.terms()) e_f = std::max(e_f, degree_span(c));
  const double per_trial = (words * e_rel + e_f + 1.0) / static_cast<double>(ModP::kPrime);

  std::mt19937_64 rng(seed);
  int done = 0;
  while (done < trials) {
    const ModP q0 = random_nonzero(rng);
    const ModP p0 = random_nonzero(rng);
    Poly<ModP> g;
    std::vector<Poly<ModP>> rels_p;
    try {
      g = f.map_coefficients<ModP>([&](const Coefficient& c) { return evaluate_modp(c, q0, p0); });
      for (const auto& r : rels)
        rels_p.push_back(r.map_coefficients<ModP>([&](const Coefficient& c) { return evaluate_modp(c, q0, p0); }));
      for (const auto& r : rels_p) {
        if (r.is_zero() || !r.is_homogeneous()) throw EvaluationError("relation degenerates at sample point");
      }
    } catch (const EvaluationError&) {
      continue;
    }
    IdealOracle<ModP> oracle(rels_p);
    const Poly<ModP> nf = oracle.normal_form(g);
    ++done;
    if (!nf.is_zero()) {
      verdict.in_ideal = false;
      verdict.trials = done;
      verdict.error_bound = 0.0;
      const auto [w, c] = nf.leading_term();
      verdict.witness = "remainder has leading word " + w.compact() + " at q=" + q0.to_string() + ", p12=" + p0.to_string();
      return verdict;
    }
  }
  verdict.in_ideal = true;
  verdict.trials = trials;
  verdict.error_bound = std::pow(std::min(per_trial, 1.0), trials);
  return verdict;
}

}  // namespace skewpbw
