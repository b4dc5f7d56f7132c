#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "skewpbw/coefficient.hpp"
#include "skewpbw/cyclotomic.hpp"
#include "skewpbw/g2.hpp"
#include "skewpbw/parse.hpp"
#include "skewpbw/reduce.hpp"
#include "skewpbw/report.hpp"

namespace skewpbw {

/// Which variable a coideal subalgebra is assumed to contain.
/// On the X1 branch x2 is forbidden, on the X2 branch x1 is.
enum class Branch { X1, X2 };
std::string to_string(Branch b);

/// PBW generators that can occur, as bracket expressions. Indices 0..4 are
/// the x1-side list of the reference figure, 5..9 the x2-side list; index 10
/// is the x1-side element of constitution (2,3) that the closure actually
/// needs (the reference x1-side element of that constitution generates
/// everything).
struct CanonicalGenerator {
  std::string bracket;
  /// The super-letter whose constitution it shares.
  int letter = 0;
};
const std::vector<CanonicalGenerator>& canonical_generators();
inline constexpr int kCanonicalX1 = 0;
inline constexpr int kCanonicalX2 = 5;
inline constexpr int kCanonicalReferenceX1Top = 4;
inline constexpr int kCanonicalX1Mixed = 10;
inline constexpr int kCanonicalCount = 11;

/// h + sum_k u_k t_k, where the tails t_k run over PBW monomials of the
/// constitution of h whose first letter is smaller than h.
template <class S>
struct GeneratorTemplate {
  int head = 0;
  std::vector<PbwMonomial> tails;
  std::vector<std::string> unknowns;
  /// parts[0] is the head value, parts[k] the value of tails[k-1].
  std::vector<Poly<S>> parts;
  /// Whether the mechanically found tails agree, as a set, with the reference list.
  bool matches_reference = false;
};

/// Heads with a nontrivial template, in the order they are treated.
const std::vector<int>& template_heads();
/// Reference tail list for a head; it fixes the names alpha, beta, ...
const std::vector<std::string>& reference_tails(int head);
/// Tails found by enumeration, in decreasing word order.
std::vector<PbwMonomial> mechanical_tails(int head);

template <class S>
GeneratorTemplate<S> make_template(const G2Instance<S>& g, int head);

/// Rows [c0, c1, ..., cn] standing for c0 + sum_k c_k u_k = 0.
template <class S>
struct LinearSystem {
  std::vector<std::vector<int>> sequences;
  std::vector<std::vector<S>> rows;
};

/// Every derivation sequence that carries the template onto a power of the
/// forbidden variable contributes the coefficient of that power.
template <class S>
LinearSystem<S> derivative_constraints(const G2Instance<S>& g, const GeneratorTemplate<S>& t, Branch b);

template <class S>
struct SolutionSpace {
  bool consistent = false;
  /// Free unknowns set to zero.
  std::vector<S> particular;
  std::vector<std::vector<S>> nullspace;
  std::vector<int> free_unknowns;

  bool unique() const { return consistent && nullspace.empty(); }
};

template <class S>
SolutionSpace<S> solve_linear(const std::vector<std::vector<S>>& rows, std::size_t unknowns);

template <class S>
Poly<S> instantiate(const GeneratorTemplate<S>& t, const std::vector<S>& values) {
  Poly<S> r = t.parts[0];
  for (std::size_t k = 0; k < values.size(); ++k) r += t.parts[k + 1] * values[k];
  return r;
}

struct LatticeNode {
  std::string name;
  std::string generator;
  /// Canonical indices of the PBW generators.
  std::set<int> members;
  std::vector<std::string> pbw_generators;
};

struct Lattice {
  std::vector<LatticeNode> nodes;
  /// Hasse edges (lower, upper).
  std::vector<std::pair<int, int>> edges;

  int find(const std::set<int>& members) const;
};

std::string to_dot(const Lattice& l);
/// One JSON object per node with keys name, generator, pbw, covers.
std::string to_records(const Lattice& l);

struct ClosureResult {
  std::set<int> members;
  bool top = false;
};

/// Differential-subalgebra closure machinery over one scalar field.
template <class S>
class CoidealEngine {
 public:
  explicit CoidealEngine(G2Instance<S> g);

  const G2Instance<S>& instance() const { return g_; }
  IdealOracle<S>& oracle() { return oracle_; }
  const Poly<S>& canonical(int k) const { return canonical_[static_cast<std::size_t>(k)]; }

  /// (k, s) with f = s * canonical(k) modulo the ideal.
  std::optional<std::pair<int, S>> recognize(const Poly<S>& f);
  std::optional<S> proportional(const Poly<S>& f, const Poly<S>& g);

  /// Smallest set P of canonical generators such that the subalgebra they
  /// generate contains the given elements, all their iterated derivatives,
  /// and every canonical element it contains. Throws std::logic_error when a
  /// derivative falls outside the subalgebra of the final set.
  ClosureResult closure(const std::vector<Poly<S>>& generators);
  /// Whether f lies in the subalgebra generated by the listed canonical generators.
  bool in_subalgebra(const std::set<int>& members, const Poly<S>& f);
  /// Dimension of the component of constitution d of that subalgebra.
  std::size_t subalgebra_dimension(const std::set<int>& members, Constitution d);
  /// Number of ordered monomials in the members with constitution d.
  std::size_t monomial_count(const std::set<int>& members, Constitution d) const;

  Lattice lattice();

 private:
  const IdealBlock<S>& span(const std::set<int>& members, Constitution d);

  G2Instance<S> g_;
  IdealOracle<S> oracle_;
  std::vector<Poly<S>> canonical_;
  std::map<std::pair<std::set<int>, Constitution>, std::unique_ptr<IdealBlock<S>>> spans_;
};

/// The checks over the generic field plus the cyclotomic reruns.
class CoidealVerifier {
 public:
  CoidealVerifier();

  CoidealEngine<Coefficient>& engine() { return engine_; }

  Report templates();
  Report displayed_lines();
  Report branch_systems();
  Report closure_facts();
  Report lattice_checks();
  Report cyclotomic(int t);

  Lattice lattice() { return engine_.lattice(); }

 private:
  CoidealEngine<Coefficient> engine_;
};

}  // namespace skewpbw
