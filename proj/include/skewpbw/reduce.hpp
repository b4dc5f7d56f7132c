#pragma once

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "skewpbw/coefficient.hpp"
#include "skewpbw/modp.hpp"
#include "skewpbw/poly.hpp"

namespace skewpbw {

namespace detail {
template <class S>
void scalar_simplify(S& s) {
  simplify(s);
}
}  // namespace detail

/// Echelon basis of the subspace of one constitution spanned by inserted polynomials.
///
/// Columns are the words of the constitution in decreasing order, so column 0
/// is the largest word. Rows are monic with the pivot at their largest word.
/// After finalize() every row is zero on all other pivot columns.
template <class S>
class IdealBlock {
 public:
  struct Entry {
    int col;
    S value;
  };
  using Row = std::vector<Entry>;

  explicit IdealBlock(Constitution d) : d_(d), columns_(words_of(d)), pivot_row_(columns_.size(), -1) {
    index_.reserve(columns_.size());
    for (std::size_t i = 0; i < columns_.size(); ++i) index_.emplace(columns_[i], static_cast<int>(i));
  }

  Constitution constitution() const { return d_; }
  const std::vector<Word>& columns() const { return columns_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }
  bool finalized() const { return finalized_; }

  int column_of(const Word& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? -1 : it->second;
  }
  bool is_pivot(const Word& w) const {
    const int c = column_of(w);
    return c >= 0 && pivot_row_[static_cast<std::size_t>(c)] >= 0;
  }
  /// Row whose pivot is w, if any.
  const Row* pivot_row(const Word& w) const {
    const int c = column_of(w);
    if (c < 0 || pivot_row_[static_cast<std::size_t>(c)] < 0) return nullptr;
    return &rows_[static_cast<std::size_t>(pivot_row_[static_cast<std::size_t>(c)])];
  }

  /// Reduces f (of this constitution) and keeps it if independent. Returns true if the rank grew.
  bool insert(const Poly<S>& f) {
    std::vector<S> acc = to_dense(f);
    reduce_dense(acc, 0);
    int lead = -1;
    for (std::size_t c = 0; c < acc.size(); ++c) {
      if (!is_zero(acc[c])) {
        lead = static_cast<int>(c);
        break;
      }
    }
    if (lead < 0) return false;
    const S inv = S(1) / acc[static_cast<std::size_t>(lead)];
    Row row;
    row.push_back({lead, S(1)});
    for (std::size_t c = static_cast<std::size_t>(lead) + 1; c < acc.size(); ++c) {
      if (is_zero(acc[c])) continue;
      S v = acc[c] * inv;
      detail::scalar_simplify(v);
      row.push_back({static_cast<int>(c), std::move(v)});
    }
    pivot_row_[static_cast<std::size_t>(lead)] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    finalized_ = false;
    return true;
  }

  /// Inserts a row already known to be reduced: monic, pivot first, no pivot columns in its tail.
  void insert_reduced(Row row) {
    const int lead = row.front().col;
    if (pivot_row_[static_cast<std::size_t>(lead)] >= 0) throw std::logic_error("pivot already present");
    pivot_row_[static_cast<std::size_t>(lead)] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    finalized_ = false;
  }

  /// Back-substitution to reduced row echelon form.
  void finalize() {
    if (finalized_) return;
    std::vector<std::size_t> order;
    for (std::size_t c = columns_.size(); c-- > 0;) {
      if (pivot_row_[c] >= 0) order.push_back(static_cast<std::size_t>(pivot_row_[c]));
    }
    for (std::size_t r : order) {
      Row& row = rows_[r];
      bool dirty = false;
      for (std::size_t k = 1; k < row.size(); ++k) {
        if (pivot_row_[static_cast<std::size_t>(row[k].col)] >= 0) {
          dirty = true;
          break;
        }
      }
      if (!dirty) continue;
      std::vector<S> acc(columns_.size(), S(0));
      for (const auto& e : row) acc[static_cast<std::size_t>(e.col)] = e.value;
      reduce_dense(acc, row.front().col + 1);
      Row out;
      out.push_back({row.front().col, S(1)});
      for (std::size_t c = static_cast<std::size_t>(row.front().col) + 1; c < acc.size(); ++c) {
        if (is_zero(acc[c])) continue;
        detail::scalar_simplify(acc[c]);
        out.push_back({static_cast<int>(c), std::move(acc[c])});
      }
      row = std::move(out);
    }
    finalized_ = true;
  }

  /// Representative of f modulo the span, supported on non-pivot words.
  Poly<S> reduce(const Poly<S>& f) const {
    std::vector<S> acc = to_dense(f);
    reduce_dense(acc, 0);
    return from_dense(acc);
  }

  Poly<S> row_poly(const Row& row) const {
    Poly<S> p;
    for (const auto& e : row) p.add_term(columns_[static_cast<std::size_t>(e.col)], e.value);
    return p;
  }

  /// Words that are not pivots, decreasing.
  std::vector<Word> non_pivot_words() const {
    std::vector<Word> out;
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      if (pivot_row_[c] < 0) out.push_back(columns_[c]);
    }
    return out;
  }

  std::vector<S> to_dense(const Poly<S>& f) const {
    std::vector<S> acc(columns_.size(), S(0));
    for (const auto& [w, c] : f.terms()) {
      const int col = column_of(w);
      if (col < 0) throw std::invalid_argument("term " + w.compact() + " outside constitution " + d_.to_string());
      acc[static_cast<std::size_t>(col)] = c;
    }
    return acc;
  }

  Poly<S> from_dense(const std::vector<S>& acc) const {
    Poly<S> p;
    for (std::size_t c = 0; c < acc.size(); ++c) {
      if (!is_zero(acc[c])) p.add_term(columns_[c], acc[c]);
    }
    return p;
  }

 private:
  void reduce_dense(std::vector<S>& acc, int start) const {
    for (std::size_t c = static_cast<std::size_t>(start); c < acc.size(); ++c) {
      if (is_zero(acc[c])) continue;
      const int r = pivot_row_[c];
      if (r < 0) continue;
      detail::scalar_simplify(acc[c]);
      const S factor = acc[c];
      const Row& row = rows_[static_cast<std::size_t>(r)];
      for (std::size_t k = 1; k < row.size(); ++k) acc[static_cast<std::size_t>(row[k].col)] -= factor * row[k].value;
      acc[c] = S(0);
    }
  }

  Constitution d_;
  std::vector<Word> columns_;
  std::unordered_map<Word, int, WordHash> index_;
  std::vector<int> pivot_row_;
  std::vector<Row> rows_;
  bool finalized_ = true;
};

/// Checks that every relation is nonzero and multihomogeneous.
template <class S>
void validate_relations(const std::vector<Poly<S>>& rels) {
  for (const auto& r : rels) {
    if (r.is_zero()) throw std::invalid_argument("zero relation");
    if (!r.is_homogeneous()) throw std::invalid_argument("relation is not multihomogeneous");
  }
}

/// Block built directly from every product w1 r w2 of the given constitution.
template <class S>
IdealBlock<S> ideal_block(const std::vector<Poly<S>>& rels, Constitution d) {
  validate_relations(rels);
  IdealBlock<S> block(d);
  for (const auto& r : rels) {
    const Constitution dr = r.constitution();
    if (!dr.fits_in(d)) continue;
    const Constitution pad = d - dr;
    for (int a = 0; a <= pad.m1; ++a) {
      for (int b = 0; b <= pad.m2; ++b) {
        for (const Word& w1 : words_of({a, b})) {
          const Poly<S> left = Poly<S>::monomial(w1) * r;
          for (const Word& w2 : words_of(pad - Constitution{a, b})) block.insert(left * Poly<S>::monomial(w2));
        }
      }
    }
  }
  block.finalize();
  return block;
}

/// Ideal membership oracle over the two-sided ideal generated by `relations`,
/// with one cached block per constitution.
///
/// The block at d is assembled from x1 * I(d - e1), x2 * I(d - e2) and the
/// products r * w; every w1 r w2 with w1 nonempty lies in one of the first two.
template <class S>
class IdealOracle {
 public:
  explicit IdealOracle(std::vector<Poly<S>> relations) : rels_(std::move(relations)) { validate_relations(rels_); }

  const std::vector<Poly<S>>& relations() const { return rels_; }

  const IdealBlock<S>& block(Constitution d) {
    auto it = cache_.find(d);
    if (it != cache_.end()) return *it->second;
    auto blk = std::make_unique<IdealBlock<S>>(d);
    bool any = false;
    for (const auto& r : rels_) any = any || r.constitution().fits_in(d);
    if (any) {
      for (int letter = 1; letter <= 2; ++letter) {
        const Constitution e = letter == 1 ? Constitution{1, 0} : Constitution{0, 1};
        if ((letter == 1 ? d.m1 : d.m2) == 0) continue;
        const IdealBlock<S>& sub = block(d - e);
        const Word x = Word::letter(letter);
        for (const auto& row : sub.rows()) {
          typename IdealBlock<S>::Row shifted;
          shifted.reserve(row.size());
          for (const auto& entry : row) {
            const Word w = x * sub.columns()[static_cast<std::size_t>(entry.col)];
            shifted.push_back({blk->column_of(w), entry.value});
          }
          blk->insert_reduced(std::move(shifted));
        }
      }
      for (const auto& r : rels_) {
        const Constitution dr = r.constitution();
        if (!dr.fits_in(d)) continue;
        for (const Word& w : words_of(d - dr)) blk->insert(r * Poly<S>::monomial(w));
      }
      blk->finalize();
    }
    auto [pos, inserted] = cache_.emplace(d, std::move(blk));
    return *pos->second;
  }

  Poly<S> normal_form(const Poly<S>& f) {
    Poly<S> out;
    for (const auto& [d, part] : f.components()) out += block(d).reduce(part);
    return out;
  }

  bool is_in_ideal(const Poly<S>& f) { return normal_form(f).is_zero(); }

  /// A word is hard exactly when it is not the leading word of an ideal element.
  bool is_hard(const Word& w) { return !block(w.constitution()).is_pivot(w); }

  /// If w is not hard, the row expressing w modulo the ideal through smaller words.
  std::optional<Poly<S>> reduction_witness(const Word& w) {
    const auto& blk = block(w.constitution());
    const auto* row = blk.pivot_row(w);
    if (row == nullptr) return std::nullopt;
    return blk.row_poly(*row);
  }

  /// Quotient dimension at d.
  std::size_t quotient_dimension(Constitution d) { return count_words(d) - block(d).rank(); }

 private:
  std::vector<Poly<S>> rels_;
  std::map<Constitution, std::unique_ptr<IdealBlock<S>>> cache_;
};

/// Outcome of a randomized membership test.
struct ProbabilisticVerdict {
  bool in_ideal = false;
  int trials = 0;
  /// Upper bound on the probability that a non-member was reported as a member.
  double error_bound = 1.0;
  std::string witness;
};

/// Maps a generic coefficient to F_p at (q0, p0).
inline ModP evaluate_modp(const Coefficient& c, ModP q0, ModP p0) { return c.evaluate<ModP>(q0, p0); }

/// Total-degree bound of a coefficient after clearing monomial denominators.
int degree_span(const Coefficient& c);

/// Randomized membership: each trial evaluates f and the relations at a random
/// point of F_p and reduces there. A nonzero remainder proves non-membership.
ProbabilisticVerdict probabilistic_is_zero(const Poly<Coefficient>& f, const std::vector<Poly<Coefficient>>& rels,
                                           int trials, std::uint64_t seed = 20240601);

}  // namespace skewpbw
