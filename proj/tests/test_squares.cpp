#include <doctest.h>

#include <random>

#include "csfword/error.hpp"
#include "csfword/harness/oracle.hpp"
#include "csfword/squares.hpp"

using namespace csfword;

namespace {

Word cw(std::string_view s) { return Word::parse(s, WordFormat::compact); }

oracle::Tokens tokens(const Word& w) {
  oracle::Tokens t;
  for (const auto& x : w) t.push_back(x.token());
  return t;
}

}  // namespace

TEST_CASE("square factors") {
  auto sq = find_square_factor(cw("231231"));
  REQUIRE(sq);
  CHECK(*sq == SquareFactor{0, 3});
  CHECK(find_square_factor(cw("aa")) == SquareFactor{0, 1});
  CHECK(is_square_free(cw("1323132")));
  CHECK(is_square_free(Word()));
  CHECK(is_square_free(cw("5213243541")));
  CHECK(longest_square_factor(cw("aabcabc")) == SquareFactor{1, 3});
  CHECK_FALSE(longest_square_factor(cw("abc")));
}

TEST_CASE("borders") {
  CHECK_FALSE(find_border(cw("1122")));
  CHECK(find_border(cw("abcab")) == 2u);
  CHECK(find_border(cw("aba")) == 1u);
  CHECK(find_border(cw("abab")) == 2u);
  CHECK_FALSE(find_border(cw("a")));
  CHECK_FALSE(find_border(Word()));
}

TEST_CASE("restriction squares") {
  Word w = cw("125783462145673818725346");
  auto s = find_square_in_restriction(w, parse_letter_set("{2,5,7}"), 3);
  REQUIRE(s);
  CHECK(s->block.to_string(WordFormat::compact) == "257");
  CHECK(s->subset == parse_letter_set("{2,5,7}"));
  CHECK_FALSE(find_square_in_restriction(w, parse_letter_set("{2,5,7}"), 4));
}

TEST_CASE("canonical p-complete square witness") {
  Word w = cw("125783462145673818725346");
  auto three = find_p_complete_square(w, 3);
  REQUIRE(three);
  CHECK(three->subset == parse_letter_set("{1,3,5}"));
  CHECK(three->block.to_string(WordFormat::compact) == "153");
  auto four = find_p_complete_square(w, 4);
  REQUIRE(four);
  CHECK(four->subset == parse_letter_set("{1,3,5,7}"));
  CHECK(four->block.to_string(WordFormat::compact) == "1573");
  CHECK(four->subset == four->block.alphabet());
  CHECK_THROWS_AS(find_p_complete_square(w, 0), PreconditionError);
}

TEST_CASE("csf index") {
  CHECK(csf_index(cw("23123414")) == 4);
  CHECK(csf_index(cw("12")) == 1);
  CHECK(csf_index(cw("1122")) == 2);
  CHECK(csf_index(cw("23414")) == 2);
  CHECK(csf_index(cw("14213243")) == 3);
  CHECK(csf_index(Word()) == 1);
  CHECK(is_p_complete_square_free(cw("23123414"), 4));
  CHECK_FALSE(is_p_complete_square_free(cw("23123414"), 3));
}

TEST_CASE("square witnesses by half-length") {
  auto ws = square_witnesses(cw("1122"), 1);
  REQUIRE(ws.size() == 2);
  CHECK(ws[0].subset == parse_letter_set("{1}"));
  CHECK(ws[1].subset == parse_letter_set("{2}"));
  CHECK(square_witnesses(cw("1122"), 2).empty());
  for (const auto& w : square_witnesses(cw("23123414"), 3)) CHECK(w.subset == w.block.alphabet());
}

TEST_CASE("agreement with the naive oracle") {
  std::mt19937 rng(3);
  const std::vector<std::string> pool{"1", "2", "3", "4"};
  for (int i = 0; i < 400; ++i) {
    std::vector<Letter> xs;
    for (int j = 0, n = 1 + static_cast<int>(rng() % 11); j < n; ++j) xs.emplace_back(pool[rng() % 4]);
    Word w(xs);
    auto t = tokens(w);
    CAPTURE(w.to_string());
    CHECK(csf_index(w) == oracle::csf_index(t));
    auto longest = longest_square_factor(w);
    CHECK((longest ? longest->half_length : 0) == oracle::longest_square(t));
    CHECK(find_border(w).value_or(0) == oracle::shortest_border(t));
  }
}

TEST_CASE("csf index is monotone under restriction") {
  std::mt19937 rng(8);
  const std::vector<std::string> pool{"a", "b", "c", "d", "e"};
  for (int i = 0; i < 200; ++i) {
    std::vector<Letter> xs;
    for (int j = 0; j < 12; ++j) xs.emplace_back(pool[rng() % 5]);
    Word w(xs);
    LetterSet s;
    for (const auto& x : pool)
      if (rng() % 2) s.insert(Letter(x));
    CHECK(csf_index(restrict(w, s)) <= csf_index(w));
    CHECK(csf_index(w) <= w.size() / 2 + 1);
  }
}
