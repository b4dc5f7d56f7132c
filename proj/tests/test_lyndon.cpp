#include <doctest.h>

#include <set>

#include "skewpbw/g2.hpp"
#include "skewpbw/lyndon.hpp"

using namespace skewpbw;

namespace {

/// Brute force: w is standard iff it beats every proper rotation.
bool standard_by_rotations(const Word& w) {
  for (int k = 1; k < w.length(); ++k) {
    if (word_cmp(w, w.suffix_from(k) * w.prefix(k)) <= 0) return false;
  }
  return true;
}

std::vector<Word> all_words(int n) {
  std::vector<Word> out;
  for (int a = 0; a <= n; ++a) {
    const auto ws = words_of({a, n - a});
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

/// Moebius-formula count of binary Lyndon words, computed independently.
std::uint64_t moebius_count(int n) {
  auto mu = [](int m) {
    int r = 1;
    for (int p = 2; p * p <= m; ++p) {
      if (m % p != 0) continue;
      m /= p;
      if (m % p == 0) return 0;
      r = -r;
    }
    return m > 1 ? -r : r;
  };
  long long s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) s += mu(d) * (1LL << (n / d));
  }
  return static_cast<std::uint64_t>(s / n);
}

}  // namespace

TEST_CASE("lyndon.counts_match_necklaces") {
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t brute = 0, via_suffix = 0, enumerated = 0;
    for (const Word& w : all_words(n)) {
      brute += standard_by_rotations(w) ? 1 : 0;
      via_suffix += is_lyndon_by_suffixes(w) ? 1 : 0;
      CHECK(is_standard(w) == standard_by_rotations(w));
    }
    for (int a = 0; a <= n; ++a) enumerated += standard_words_of({a, n - a}).size();
    CHECK(brute == moebius_count(n));
    CHECK(via_suffix == brute);
    CHECK(enumerated == brute);
    CHECK(necklace_count(n) == moebius_count(n));
  }
}

TEST_CASE("lyndon.factorization") {
  for (int n = 1; n <= 8; ++n) {
    for (const Word& w : all_words(n)) {
      const auto f = lyndon_factorization(w);
      Word joined;
      for (std::size_t k = 0; k < f.size(); ++k) {
        CHECK(is_standard(f[k]));
        if (k > 0) CHECK(word_cmp(f[k - 1], f[k]) <= 0);
        joined = joined * f[k];
      }
      CHECK(joined == w);
    }
  }
}

TEST_CASE("lyndon.bracketings_agree_up_to_length_9") {
  std::size_t n_words = 0;
  for (int n = 1; n <= 9; ++n) {
    for (const Word& w : all_words(n)) {
      if (!is_standard(w)) continue;
      ++n_words;
      const BracketTree t = shirshov_bracketing(w);
      CHECK(t == shirshov_bracketing_by_suffix(w));
      CHECK(t.word() == w);
      CHECK(is_standard_nonassociative(t));
    }
  }
  CHECK(n_words == 2 + 1 + 2 + 3 + 6 + 9 + 18 + 30 + 56);
}

TEST_CASE("lyndon.letter_bracketings") {
  CHECK(shirshov_bracketing(letter_word(kC)).to_string() == "[[x1,x2],[[x1,x2],x2]]");
  CHECK(shirshov_bracketing(letter_word(kE)).to_string() == "[[[x1,x2],x2],x2]");
  CHECK(enumerate_standard({1, 1}).size() == 3);
  CHECK_THROWS(is_standard(Word()));
}
