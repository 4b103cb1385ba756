#include <doctest.h>

#include <random>

#include "csfword/error.hpp"
#include "csfword/word.hpp"

using namespace csfword;

namespace {

Word cw(std::string_view s) { return Word::parse(s, WordFormat::compact); }
std::string str(const Word& w) { return w.to_string(WordFormat::compact); }
LetterSet set(std::string_view s) { return parse_letter_set(s); }

}  // namespace

TEST_CASE("letters reject empty and whitespace tokens") {
  CHECK_THROWS_AS(Letter(""), PreconditionError);
  CHECK_THROWS_AS(Letter("a b"), PreconditionError);
  CHECK(Letter("4'").token() == "4'");
  CHECK(Letter("1") < Letter("1'"));
}

TEST_CASE("token and compact parsing") {
  Word t = Word::parse("1 2  4' 3\n");
  REQUIRE(t.size() == 4);
  CHECK(t[2].token() == "4'");
  CHECK(t.to_string() == "1 2 4' 3");

  Word c = cw("1234'43'2'1'");
  CHECK(c.size() == 8);
  CHECK(c[3].token() == "4'");
  CHECK(str(c) == "1234'43'2'1'");
  CHECK(c.to_string() == "1 2 3 4' 4 3' 2' 1'");
  CHECK(cw("  12 ").size() == 2);

  SUBCASE("compact errors carry the offset") {
    try {
      (void)cw("12 3");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS((void)cw("'1"), ParseError);
  }
  SUBCASE("tokens without a compact spelling") {
    Word w = Word::parse("v1 v2");
    CHECK_FALSE(w.has_compact_spelling());
    CHECK_THROWS_AS((void)w.to_string(WordFormat::compact), PreconditionError);
  }
}

TEST_CASE("round trip through both spellings") {
  std::mt19937 rng(11);
  const std::vector<std::string> pool{"1", "2", "3", "1'", "2''", "a"};
  for (int i = 0; i < 200; ++i) {
    std::vector<Letter> xs;
    for (int j = 0, n = static_cast<int>(rng() % 12); j < n; ++j) xs.emplace_back(pool[rng() % pool.size()]);
    Word w(xs);
    CHECK(Word::parse(w.to_string()) == w);
    CHECK(cw(str(w)) == w);
  }
}

TEST_CASE("restrict") {
  Word w = cw("125783462145673818725346");
  CHECK(str(restrict(w, set("{2,5,7}"))) == "257257725");
  CHECK(str(restrict(w, set("{2,5,7,8}"))) == "257825788725");
  CHECK(restrict(cw("abc"), {}).empty());
  CHECK(restrict(cw("abc"), set("{c,z}")).alphabet() == set("{c}"));
}

TEST_CASE("restriction composes as intersection") {
  std::mt19937 rng(5);
  const std::vector<std::string> letters{"a", "b", "c", "d", "e"};
  for (int i = 0; i < 300; ++i) {
    std::vector<Letter> xs;
    for (int j = 0; j < 10; ++j) xs.emplace_back(letters[rng() % 5]);
    Word w(xs);
    LetterSet s, t, both;
    for (const auto& x : letters) {
      if (rng() % 2) s.insert(Letter(x));
      if (rng() % 2) t.insert(Letter(x));
    }
    for (const auto& x : s)
      if (t.contains(x)) both.insert(x);
    CHECK(restrict(restrict(w, s), t) == restrict(w, both));
  }
}

TEST_CASE("alternation") {
  CHECK(alternates(cw("23123414"), Letter("1"), Letter("4")));
  CHECK_FALSE(alternates(cw("1122"), Letter("1"), Letter("2")));
  CHECK(alternates(cw("xy"), Letter("x"), Letter("y")));
  CHECK(alternates(cw("xy"), Letter("y"), Letter("x")));
  CHECK_THROWS_AS(alternates(cw("xy"), Letter("x"), Letter("x")), PreconditionError);
  CHECK_THROWS_AS(alternates(cw("xy"), Letter("x"), Letter("z")), PreconditionError);
}

TEST_CASE("multiplicities and uniformity") {
  CHECK(cw("5213243541").uniformity() == 2u);
  CHECK_FALSE(cw("23414").uniformity().has_value());
  CHECK(cw("1").uniformity() == 1u);
  CHECK_FALSE(Word().uniformity().has_value());
  auto prof = cw("23414").multiplicity_profile();
  CHECK(prof.at(Letter("4")) == 2);
  CHECK(prof.size() == 4);
}

TEST_CASE("occurrence permutations") {
  Word w = cw("142513624356152643");
  CHECK(str(occurrence_permutation(w, 1)) == "142536");
  CHECK(str(occurrence_permutation(w, 3)) == "152643");
  CHECK(str(initial_permutation(w)) == "142536");
  CHECK(str(final_permutation(w)) == "152643");
  CHECK(str(occurrence_permutation(cw("683145217836724568314572"), 3)) == "68314572");
  CHECK_THROWS_AS(occurrence_permutation(w, 0), PreconditionError);
  CHECK_THROWS_AS(occurrence_permutation(w, 4), PreconditionError);
  CHECK_THROWS_AS(occurrence_permutation(cw("23414"), 1), PreconditionError);
  for (std::size_t i = 1; i <= 3; ++i) CHECK(occurrence_permutation(w, i).alphabet() == w.alphabet());
}

TEST_CASE("rotation") {
  CHECK(str(rotate(cw("abcd"), 2)) == "cdab");
  CHECK(str(rotate(cw("abcd"), 0)) == "abcd");
  CHECK(str(rotate(cw("abcd"), 4)) == "abcd");
  CHECK_THROWS_AS(rotate(cw("abcd"), 5), PreconditionError);
  // A border u of uvu rotates to u.uv.
  CHECK(str(rotate(cw("abxab"), 3)) == "ababx");
}

TEST_CASE("occurrence-based maps") {
  Word w = cw("683145217836724568314572");
  Word third = occurrence_based_map(w, [](const Letter& x, std::size_t i) {
    return i < 3 ? Word() : Word({x});
  });
  CHECK(str(third) == "68314572");

  std::map<OccurrenceKey, Word> h;
  Word c5 = cw("5213243541");
  for (const auto& [x, k] : c5.multiplicity_profile())
    for (std::size_t i = 1; i <= k; ++i) h[{x, i}] = Word({x});
  CHECK(occurrence_based_map(c5, h) == c5);
  h[{Letter("1"), 1}] = cw("11'");
  h[{Letter("1"), 2}] = cw("1'1");
  CHECK(str(occurrence_based_map(c5, h)) == "5211'3243541'1");
  h.erase({Letter("2"), 2});
  CHECK_THROWS_AS(occurrence_based_map(c5, h), PreconditionError);
}

TEST_CASE("letter set text") {
  CHECK(set("{a, b,c}") == set("a b c"));
  CHECK(to_string(set("c a")) == "{a,c}");
  CHECK(set("{}").empty());
}
