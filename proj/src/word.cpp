#include "skewpbw/word.hpp"

#include <cctype>

namespace skewpbw {

Word Word::parse(const std::string& text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0 || c == '*') {
      ++i;
    } else if (c == 'x' && i + 1 < text.size() && (text[i + 1] == '1' || text[i + 1] == '2')) {
      const int letter = text[i + 1] - '0';
      i += 2;
      int times = 1;
      if (i < text.size() && text[i] == '^') {
        std::size_t j = i + 1;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) != 0) ++j;
        if (j == i + 1) throw std::invalid_argument("missing exponent in word at offset " + std::to_string(i));
        times = std::stoi(text.substr(i + 1, j - i - 1));
        i = j;
      }
      for (int k = 0; k < times; ++k) w.push_back(letter);
    } else if (c == '1' || c == '2') {
      w.push_back(c - '0');
      ++i;
    } else {
      throw std::invalid_argument("unexpected character '" + std::string(1, c) + "' in word at offset " + std::to_string(i));
    }
  }
  return w;
}

std::string Word::to_string() const {
  if (len_ == 0) return "1";
  std::string s;
  for (int k = 0; k < len_; ++k) {
    if (k > 0) s += ' ';
    s += at(k) == 1 ? "x1" : "x2";
  }
  return s;
}

std::string Word::compact() const {
  std::string s;
  for (int k = 0; k < len_; ++k) s += at(k) == 1 ? "x1" : "x2";
  return s;
}

namespace {

void extend(Word w, int m1, int m2, std::vector<Word>& out) {
  if (m1 == 0 && m2 == 0) {
    out.push_back(w);
    return;
  }
  if (m1 > 0) {
    Word a = w;
    a.push_back(1);
    extend(a, m1 - 1, m2, out);
  }
  if (m2 > 0) {
    w.push_back(2);
    extend(w, m1, m2 - 1, out);
  }
}

}  // namespace

std::vector<Word> words_of(Constitution d) {
  std::vector<Word> out;
  if (d.m1 < 0 || d.m2 < 0 || d.total() > Word::kMaxLength) return out;
  out.reserve(count_words(d));
  extend(Word(), d.m1, d.m2, out);
  return out;
}

std::uint64_t count_words(Constitution d) {
  if (d.m1 < 0 || d.m2 < 0) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= d.m1; ++i) r = r * static_cast<std::uint64_t>(d.m2 + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace skewpbw
