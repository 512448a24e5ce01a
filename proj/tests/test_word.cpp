#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "word.hpp"

using namespace shufsq;

TEST_CASE("run decomposition") {
  Word w = Word::parse("011011100");
  auto rl = runs(w);
  std::vector<Run> expected{{0, 1}, {1, 2}, {0, 1}, {1, 3}, {0, 2}};
  CHECK(rl.runs() == expected);

  CHECK(runs(Word::parse("0000")).runs() == std::vector<Run>{{0, 4}});
  CHECK(runs(Word::parse("")).runs().empty());
}

TEST_CASE("word and run-length round trip on all short words") {
  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= (k == 3 ? 8 : 12); ++n) {
      long long total = 1;
      for (int i = 0; i < n; ++i) total *= k;
      for (long long code = 0; code < total; ++code) {
        std::vector<uint8_t> symbols;
        long long c = code;
        for (int i = 0; i < n; ++i) {
          symbols.push_back(static_cast<uint8_t>(c % k));
          c /= k;
        }
        Word w(symbols, k);
        REQUIRE(runs(w).to_word() == w);
      }
    }
  }
}

TEST_CASE("parsing and formatting") {
  CHECK(Word::parse("1^3 0^2 1 0^3 1^2 0") == Word::parse("111001000110"));
  CHECK(Word::parse("ABBA") == Word::parse("0110"));
  CHECK(Word::parse("1^2 0^2 1 0").to_dense_string() == "110010");
  CHECK(Word::parse("110010").to_runlength_string() == "1^2 0^2 1 0");
  CHECK(Word::parse("").size() == 0);
  CHECK_THROWS_AS(Word::parse("10x1"), parse_error);
  CHECK_THROWS_AS(Word::parse("1^"), parse_error);
  CHECK_THROWS_AS(Word::parse("1^0"), parse_error);
}

TEST_CASE("evenness") {
  CHECK(is_even(Word::parse("00001001")));
  CHECK(is_even(Word::parse("0110")));
  CHECK_FALSE(is_even(Word::parse("011")));
  CHECK(is_even(Word::parse("")));
  CHECK(is_even(Word::parse("1212")));
  CHECK_FALSE(is_even(Word::parse("122")));
}

TEST_CASE("rotation") {
  Word w = Word::parse("1^7 0^6 1^9 0^8");
  CHECK(rotate(w, 7 + 6 + 9) == Word::parse("0^8 1^7 0^6 1^9"));
  CHECK(rotate(w, 0) == w);
  for (size_t i = 0; i <= w.size(); ++i) CHECK(rotate(rotate(w, i), w.size() - i) == w);
  CHECK_THROWS_AS(rotate(w, w.size() + 1), std::invalid_argument);
}

TEST_CASE("family O") {
  Word w = family_o(47, 24);
  auto rl = runs(w);
  REQUIRE(rl.run_count() == 24);
  for (size_t i = 0; i < 24; ++i) {
    CHECK(rl[i].length == 47 - 2 * static_cast<int>(i));
    CHECK(rl[i].symbol == (i % 2 == 0 ? 1 : 0));
  }
  CHECK(w.size() == 24 * (47 - 24 + 1));
  // r runs with lengths m, m-2, ..., m-2r+2 and total r(m-r+1)
  for (long long m = 1; m <= 15; m += 2)
    for (long long r = 1; 2 * r - 1 <= m; ++r) {
      Word o = family_o(m, r);
      CHECK(static_cast<long long>(o.size()) == r * (m - r + 1));
      CHECK(static_cast<long long>(runs(o).run_count()) == r);
    }
  CHECK_THROWS_AS(family_o(10, 2), std::invalid_argument);
  CHECK_THROWS_AS(family_o(5, 4), std::invalid_argument);
}

TEST_CASE("families A, B, W, abba, separated ones") {
  CHECK(family_a(4) == family_w({27, 9, 3, 1}));
  CHECK(family_b(3) == family_w({10, 7, 4}));
  CHECK(abba_block(2, 3) == Word::parse("100110011001"));
  CHECK(abba_block(2, 1) == Word::parse("1001"));
  CHECK(separated_ones({0, 3, 9, 11, 7}) == Word::parse("1 0^3 1 0^9 1 0^11 1 0^7"));
  CHECK(separated_ones({2, 0, 0, 1, 0}) == Word::parse("0011101"));
  CHECK_THROWS_AS(family_w({3, 0, 1}), std::invalid_argument);
}

TEST_CASE("thue-morse prefixes") {
  CHECK(thue_morse_prefix(12) == Word::parse("011010011001"));
  CHECK(thue_morse_prefix(0).empty());
  // doubling: the second half is the complement of the first
  for (long long n = 1; n <= 64; n *= 2) {
    Word full = thue_morse_prefix(2 * n);
    Word half = thue_morse_prefix(n);
    for (long long i = 0; i < n; ++i) {
      CHECK(full[static_cast<size_t>(i)] == half[static_cast<size_t>(i)]);
      CHECK(full[static_cast<size_t>(n + i)] == 1 - half[static_cast<size_t>(i)]);
    }
  }
}

TEST_CASE("kolakoski prefixes") {
  CHECK(kolakoski_prefix(8) == Word::parse("12211212"));
  CHECK(kolakoski_prefix(16) == Word::parse("1221121221221121"));
  // the run lengths are a prefix of the sequence itself (last run may be cut)
  Word w = kolakoski_prefix(200);
  auto rl = runs(w);
  for (size_t i = 0; i + 1 < rl.run_count(); ++i)
    CHECK(rl[i].length == static_cast<int>(w[i]));
  CHECK(rl[rl.run_count() - 1].length <= static_cast<int>(w[rl.run_count() - 1]));
}

TEST_CASE("even prefixes of the two sequences") {
  CHECK(even_prefixes(SequenceFamily::ThueMorse, 16) ==
        std::vector<long long>{0, 4, 8, 12, 16});
  // 1221 already has two of each letter, then 12211212 and the length-16
  // prefix; length 12 has five 1s
  CHECK(even_prefixes(SequenceFamily::Kolakoski, 16) == std::vector<long long>{0, 4, 8, 16});
  CHECK(even_prefixes(SequenceFamily::ThueMorse, 0) == std::vector<long long>{0});
}

TEST_CASE("generate dispatch") {
  CHECK(generate("thue-morse", {12}) == thue_morse_prefix(12));
  CHECK(generate("O", {47, 24}) == family_o(47, 24));
  CHECK(generate("abba", {2, 5}) == abba_block(2, 5));
  CHECK_THROWS_AS(generate("nope", {1}), std::invalid_argument);
  CHECK_THROWS_AS(generate("O", {47}), std::invalid_argument);
}
