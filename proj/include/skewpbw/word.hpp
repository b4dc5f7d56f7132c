#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewpbw {

/// Multidegree (number of x1, number of x2).
struct Constitution {
  int m1 = 0;
  int m2 = 0;

  int total() const { return m1 + m2; }
  bool fits_in(const Constitution& bound) const { return m1 <= bound.m1 && m2 <= bound.m2; }

  friend Constitution operator+(Constitution a, Constitution b) { return {a.m1 + b.m1, a.m2 + b.m2}; }
  friend Constitution operator-(Constitution a, Constitution b) { return {a.m1 - b.m1, a.m2 - b.m2}; }
  friend bool operator==(const Constitution&, const Constitution&) = default;
  /// Degree order: the x1 count decides first, then the x2 count.
  friend auto operator<=>(const Constitution&, const Constitution&) = default;

  std::string to_string() const { return "(" + std::to_string(m1) + "," + std::to_string(m2) + ")"; }
};

inline std::strong_ordering degree_cmp(const Constitution& a, const Constitution& b) { return a <=> b; }

/// A word in x1, x2 of length at most 64.
///
/// Letter k sits at bit 63 - k; x1 is a set bit and x2 a clear bit, so the
/// bit pattern of a prefix orders words lexicographically with x1 > x2.
class Word {
 public:
  static constexpr int kMaxLength = 64;

  Word() = default;
  static Word letter(int i) {
    Word w;
    w.push_back(i);
    return w;
  }
  /// Letters given as 1 and 2.
  static Word from_letters(const std::vector<int>& letters) {
    Word w;
    for (int l : letters) w.push_back(l);
    return w;
  }
  /// Parses "x1x2x2", "x1 x2 x2", or compact "122".
  static Word parse(const std::string& text);

  int length() const { return len_; }
  bool empty() const { return len_ == 0; }
  std::uint64_t bits() const { return bits_; }
  int at(int k) const { return ((bits_ >> (63 - k)) & 1U) != 0 ? 1 : 2; }
  int count(int i) const {
    const int ones = std::popcount(bits_);
    return i == 1 ? ones : len_ - ones;
  }
  Constitution constitution() const { return {count(1), count(2)}; }

  void push_back(int letter) {
    if (len_ >= kMaxLength) throw std::length_error("word longer than 64 letters");
    if (letter == 1) {
      bits_ |= std::uint64_t{1} << (63 - len_);
    } else if (letter != 2) {
      throw std::invalid_argument("letters are 1 or 2");
    }
    ++len_;
  }

  Word prefix(int n) const {
    Word w;
    w.len_ = n;
    w.bits_ = n == 0 ? 0 : bits_ & (~std::uint64_t{0} << (64 - n));
    return w;
  }
  Word suffix_from(int k) const {
    Word w;
    w.len_ = len_ - k;
    w.bits_ = k >= 64 ? 0 : bits_ << k;
    return w;
  }
  /// The word with position k removed.
  Word erase(int k) const {
    Word head = prefix(k);
    Word tail = suffix_from(k + 1);
    return head * tail;
  }

  friend Word operator*(const Word& a, const Word& b) {
    if (a.len_ + b.len_ > kMaxLength) throw std::length_error("word longer than 64 letters");
    Word w;
    w.len_ = a.len_ + b.len_;
    w.bits_ = a.bits_ | (a.len_ >= 64 ? 0 : b.bits_ >> a.len_);
    return w;
  }
  friend bool operator==(const Word&, const Word&) = default;

  /// Renders as `x1 x2 x2`; the empty word renders as `1`.
  std::string to_string() const;
  /// Renders as `x1x2x2`.
  std::string compact() const;

 private:
  std::uint64_t bits_ = 0;
  int len_ = 0;
};

/// The word order: lexicographic with x1 > x2, where a proper beginning is
/// greater than the word itself.
inline std::strong_ordering word_cmp(const Word& u, const Word& v) {
  const int n = u.length() < v.length() ? u.length() : v.length();
  if (n > 0) {
    const std::uint64_t mask = ~std::uint64_t{0} << (64 - n);
    const std::uint64_t a = u.bits() & mask;
    const std::uint64_t b = v.bits() & mask;
    if (a != b) return a <=> b;
  }
  return v.length() <=> u.length();
}

/// Term order for polynomials: constitution first, then the word order.
struct TermLess {
  bool operator()(const Word& a, const Word& b) const {
    const auto c = degree_cmp(a.constitution(), b.constitution());
    if (c != 0) return c < 0;
    return word_cmp(a, b) < 0;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    return std::hash<std::uint64_t>{}(w.bits() ^ (static_cast<std::uint64_t>(w.length()) * 0x9E3779B97F4A7C15ULL));
  }
};

/// All words of a given constitution, in decreasing word order.
std::vector<Word> words_of(Constitution d);

/// Number of words of a given constitution.
std::uint64_t count_words(Constitution d);

}  // namespace skewpbw
