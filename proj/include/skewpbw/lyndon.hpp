#pragma once

#include <memory>
#include <string>
#include <vector>

#include "skewpbw/poly.hpp"
#include "skewpbw/word.hpp"

namespace skewpbw {

/// vw > wv for every split u = vw with v, w nonempty. Throws on the empty word.
bool is_standard(const Word& w);

/// w is greater than each of its proper suffixes.
bool is_lyndon_by_suffixes(const Word& w);

/// Standard words of constitution at most `bound` componentwise, in increasing word order.
std::vector<Word> enumerate_standard(Constitution bound);

/// Standard words of exactly this constitution, in increasing word order.
std::vector<Word> standard_words_of(Constitution d);

/// Unique factorization into standard words w = l1 l2 ... lk with l1 <= l2 <= ... <= lk.
std::vector<Word> lyndon_factorization(const Word& w);

/// Binary bracket arrangement of a word.
class BracketTree {
 public:
  static BracketTree leaf(int letter);
  static BracketTree node(const BracketTree& left, const BracketTree& right);

  bool is_leaf() const { return letter_ != 0; }
  int letter() const { return letter_; }
  const BracketTree& left() const { return *left_; }
  const BracketTree& right() const { return *right_; }

  /// The associative word obtained by dropping the brackets.
  Word word() const;
  /// `[[x1,x2],x2]` style text.
  std::string to_string() const;

  friend bool operator==(const BracketTree& a, const BracketTree& b);

 private:
  int letter_ = 0;
  std::shared_ptr<const BracketTree> left_;
  std::shared_ptr<const BracketTree> right_;
};

/// Standard bracketing: split u = vw with v, w standard and v of minimal length.
BracketTree shirshov_bracketing(const Word& w);

/// Same bracketing computed from the longest proper standard suffix.
BracketTree shirshov_bracketing_by_suffix(const Word& w);

/// Conditions 1 and 2 on standard non-associative words, checked recursively.
bool is_standard_nonassociative(const BracketTree& t);

template <class S>
Poly<S> superletter_value(const BracketTree& t, const CharacterData<S>& chars) {
  if (t.is_leaf()) return Poly<S>::var(t.letter());
  return skew_bracket(superletter_value(t.left(), chars), superletter_value(t.right(), chars), chars);
}

/// A standard word with its bracketing and polynomial value.
template <class S>
struct SuperLetter {
  std::string name;
  Word word;
  BracketTree tree = BracketTree::leaf(1);
  Poly<S> value;
};

template <class S>
SuperLetter<S> make_superletter(std::string name, const Word& w, const CharacterData<S>& chars) {
  SuperLetter<S> s;
  s.name = std::move(name);
  s.word = w;
  s.tree = shirshov_bracketing(w);
  s.value = superletter_value(s.tree, chars);
  return s;
}

/// (1/n) sum_{d | n} mu(d) 2^(n/d).
std::uint64_t necklace_count(int n);

}  // namespace skewpbw
