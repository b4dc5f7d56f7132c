#include "skewpbw/lyndon.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewpbw {

bool is_standard(const Word& w) {
  if (w.empty()) throw std::invalid_argument("the empty word is not standard");
  for (int k = 1; k < w.length(); ++k) {
    const Word v = w.prefix(k);
    const Word u = w.suffix_from(k);
    if (word_cmp(w, u * v) <= 0) return false;
  }
  return true;
}

bool is_lyndon_by_suffixes(const Word& w) {
  if (w.empty()) return false;
  for (int k = 1; k < w.length(); ++k) {
    if (word_cmp(w, w.suffix_from(k)) <= 0) return false;
  }
  return true;
}

std::vector<Word> standard_words_of(Constitution d) {
  std::vector<Word> out;
  if (d.total() == 0) return out;
  for (const Word& w : words_of(d)) {
    if (is_standard(w)) out.push_back(w);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Word> enumerate_standard(Constitution bound) {
  std::vector<Word> out;
  for (int a = 0; a <= bound.m1; ++a) {
    for (int b = 0; b <= bound.m2; ++b) {
      const auto part = standard_words_of({a, b});
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  std::sort(out.begin(), out.end(), [](const Word& x, const Word& y) { return word_cmp(x, y) < 0; });
  return out;
}

std::vector<Word> lyndon_factorization(const Word& w) {
  // Duval's algorithm with the classical rank x1 < x2; the factors come out
  // non-increasing classically, which is non-decreasing in the word order here.
  std::vector<Word> out;
  const int n = w.length();
  int i = 0;
  while (i < n) {
    int j = i + 1;
    int k = i;
    while (j < n && w.at(k) <= w.at(j)) {
      k = w.at(k) < w.at(j) ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      out.push_back(w.prefix(i + j - k).suffix_from(i));
      i += j - k;
    }
  }
  return out;
}

BracketTree BracketTree::leaf(int letter) {
  if (letter != 1 && letter != 2) throw std::invalid_argument("leaf letter must be 1 or 2");
  BracketTree t;
  t.letter_ = letter;
  return t;
}

BracketTree BracketTree::node(const BracketTree& left, const BracketTree& right) {
  BracketTree t;
  t.left_ = std::make_shared<const BracketTree>(left);
  t.right_ = std::make_shared<const BracketTree>(right);
  return t;
}

Word BracketTree::word() const {
  if (is_leaf()) return Word::letter(letter_);
  return left_->word() * right_->word();
}

std::string BracketTree::to_string() const {
  if (is_leaf()) return letter_ == 1 ? "x1" : "x2";
  return "[" + left_->to_string() + "," + right_->to_string() + "]";
}

bool operator==(const BracketTree& a, const BracketTree& b) {
  if (a.is_leaf() || b.is_leaf()) return a.letter_ == b.letter_;
  return *a.left_ == *b.left_ && *a.right_ == *b.right_;
}

BracketTree shirshov_bracketing(const Word& w) {
  if (w.empty() || !is_standard(w)) throw std::invalid_argument("word " + w.compact() + " is not standard");
  if (w.length() == 1) return BracketTree::leaf(w.at(0));
  for (int k = 1; k < w.length(); ++k) {
    const Word v = w.prefix(k);
    const Word u = w.suffix_from(k);
    if (is_standard(v) && is_standard(u)) return BracketTree::node(shirshov_bracketing(v), shirshov_bracketing(u));
  }
  throw std::logic_error("standard word without a standard factorization");
}

BracketTree shirshov_bracketing_by_suffix(const Word& w) {
  if (w.empty() || !is_standard(w)) throw std::invalid_argument("word " + w.compact() + " is not standard");
  if (w.length() == 1) return BracketTree::leaf(w.at(0));
  for (int k = 1; k < w.length(); ++k) {
    const Word u = w.suffix_from(k);
    if (is_standard(u)) return BracketTree::node(shirshov_bracketing_by_suffix(w.prefix(k)), shirshov_bracketing_by_suffix(u));
  }
  throw std::logic_error("standard word without a standard suffix");
}

bool is_standard_nonassociative(const BracketTree& t) {
  if (t.is_leaf()) return true;
  const Word v = t.left().word();
  const Word w = t.right().word();
  if (!is_standard(v) || !is_standard(w) || word_cmp(v, w) <= 0) return false;
  if (!is_standard_nonassociative(t.left()) || !is_standard_nonassociative(t.right())) return false;
  if (!t.left().is_leaf() && word_cmp(t.left().right().word(), w) > 0) return false;
  return true;
}

std::uint64_t necklace_count(int n) {
  if (n < 1) return 0;
  auto mobius = [](int m) {
    int r = 1;
    for (int p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        r = -r;
      }
    }
    if (m > 1) r = -r;
    return r;
  };
  long long acc = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) acc += mobius(d) * (1LL << (n / d));
  }
  return static_cast<std::uint64_t>(acc / n);
}

}  // namespace skewpbw
