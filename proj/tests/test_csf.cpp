#include <doctest.h>

#include "csfword/csf.hpp"
#include "csfword/error.hpp"
#include "csfword/harness/fixtures.hpp"
#include "csfword/representation.hpp"

using namespace csfword;

namespace {

Word cw(std::string_view s) { return Word::parse(s, WordFormat::compact); }
std::string str(const Word& w) { return w.to_string(WordFormat::compact); }

SearchBounds wide() {
  SearchBounds b;
  b.n_max = 8;
  return b;
}

Word palindrome(std::size_t n) {
  std::vector<Letter> xs;
  for (std::size_t i = 1; i <= n; ++i) xs.emplace_back(std::to_string(i));
  for (std::size_t i = n; i >= 1; --i) xs.emplace_back(std::to_string(i));
  return Word(xs);
}

}  // namespace

TEST_CASE("p-CSF uniform representations") {
  auto fig1 = fixtures::fig1_graph();
  CHECK(is_p_csf_uniform_representation(cw("23123414"), fig1, 4));
  CHECK_FALSE(is_p_csf_uniform_representation(cw("23123414"), fig1, 3));
  CHECK_FALSE(is_p_csf_uniform_representation(cw("23414"), fig1, 4));
  CHECK_FALSE(is_p_csf_uniform_representation(cw("23123414"), fig1, 0));
  for (std::size_t n = 1; n <= 8; ++n) CHECK(is_p_csf_uniform_representation(palindrome(n), empty_graph(n), 2));
}

TEST_CASE("csf uniform representation numbers") {
  auto k4 = csf_uniform_rep_number(complete_graph(4), wide());
  CHECK(k4.value == 1u);
  CHECK(k4.exact);
  CHECK(k4.reason == CsfExactness::complete_graph);

  auto e5 = csf_uniform_rep_number(empty_graph(5), wide());
  CHECK(e5.value == 2u);
  CHECK(e5.exact);
  REQUIRE(e5.witness);
  CHECK(str(*e5.witness) == "1234554321");

  auto c5 = csf_uniform_rep_number(cycle_graph(5), wide());
  CHECK(c5.value == 3u);
  CHECK(c5.exact);
  CHECK(c5.reason == CsfExactness::circle_clique);
  REQUIRE(c5.witness);
  CHECK(is_p_csf_uniform_representation(*c5.witness, cycle_graph(5), 3));

  auto fig1 = csf_uniform_rep_number(fixtures::fig1_graph(), wide());
  CHECK(fig1.value == 4u);
  CHECK(fig1.exact);

  auto p3 = csf_uniform_rep_number(path_graph(3), wide());
  CHECK(p3.value == 3u);
  CHECK(p3.lower_bound == 3);

  SearchBounds low = wide();
  low.k_max = 2;
  auto crown = csf_uniform_rep_number(crown_graph(4), low);
  CHECK_FALSE(crown.value);
  CHECK_FALSE(crown.exact);
  CHECK(crown.certified_up_to_k == 2);
  CHECK_THROWS_AS(csf_uniform_rep_number(empty_graph(9), wide()), BoundsError);
  CHECK(to_string(CsfExactness::rep_above_three) == "rep-above-three");
}

TEST_CASE("csf witnesses") {
  auto ws = csf_witnesses(cw("23123414"), 3);
  bool found = false;
  for (const auto& w : ws)
    if (w.subset == parse_letter_set("{1,2,3}") && str(w.block) == "231") found = true;
  CHECK(found);
  CHECK(csf_witnesses(cw("14213243"), 3).empty());
  CHECK(csf_witnesses(cw("1122"), 1).size() == 2);
  CHECK(csf_witnesses(cw("1122"), 0).empty());
}

TEST_CASE("p-square vertex reports") {
  auto star = star_graph(3);
  auto survey = p_square_vertex_report(star, 3, wide());
  CHECK_FALSE(survey.warning);
  CHECK(survey.words_examined > 0);
  for (const auto& r : survey.reports) {
    if (r.vertex == Letter("0")) {
      CHECK(r.is_p_square_vertex_up_to_k);
      CHECK_FALSE(r.counterexample_word);
    }
    if (r.counterexample_word) {
      CHECK(is_p_csf_uniform_representation(*r.counterexample_word, star, 3));
      for (const auto& w : csf_witnesses(*r.counterexample_word, 2)) CHECK_FALSE(w.subset.contains(r.vertex));
    }
  }

  auto k3 = p_square_vertex_report(complete_graph(3), 1, wide());
  for (const auto& r : k3.reports) CHECK_FALSE(r.is_p_square_vertex_up_to_k);
  CHECK_FALSE(k3.warning);
  CHECK(p_square_vertex_report(cycle_graph(5), 4, wide()).warning);
  CHECK_THROWS_AS(p_square_vertex_report(star, 0, wide()), PreconditionError);
}

TEST_CASE("K2 module expansion") {
  auto c5 = cycle_graph(5);
  Word w = cw("5213243541");
  auto e = k2_expand(c5, Letter("1"), w);
  CHECK(e.graph.vertex_count() == 6);
  CHECK(e.graph.has_edge(Letter("1a"), Letter("1b")));
  CHECK(e.word.multiplicity(Letter("1a")) == 2);
  CHECK(represents(e.word, e.graph));
  CHECK(csf_index(e.word) == csf_index(w) + 1);
  CHECK_THROWS_AS(k2_expand(c5, Letter("9"), w), PreconditionError);
  CHECK_THROWS_AS(k2_expand(empty_graph(2), Letter("1"), cw("1221")), PreconditionError);
  CHECK_THROWS_AS(k2_expand(c5, Letter("1"), cw("52132435")), PreconditionError);
}

TEST_CASE("twin expansion") {
  auto g1 = twin_expand(cycle_graph(5), Letter("1"), cw(fixtures::kC5Word), Letter("1'"));
  CHECK(str(g1.word) == fixtures::kG1Word);
  CHECK(g1.graph == fixtures::g1_graph());
  CHECK_FALSE(g1.graph.has_edge(Letter("1"), Letter("1'")));
  auto g2 = twin_expand(g1.graph, Letter("5"), g1.word, Letter("5'"));
  CHECK(str(g2.word) == fixtures::kG2Word);
  CHECK(g2.graph == fixtures::g2_graph());
  CHECK_THROWS_AS(twin_expand(cycle_graph(5), Letter("1"), cw(fixtures::kC5Word), Letter("2")),
                  PreconditionError);
  CHECK_THROWS_AS(twin_expand(fixtures::fig1_graph(), Letter("1"), cw("23123414"), Letter("9")),
                  PreconditionError);
}

TEST_CASE("apex removal") {
  auto star = star_graph(3);
  auto r = csf_uniform_rep_number(star, wide());
  REQUIRE(r.witness);
  CHECK(apex_removal_check(star, Letter("0"), *r.witness, *r.value));
  CHECK_THROWS_AS(apex_removal_check(star, Letter("1"), *r.witness, *r.value), PreconditionError);
  CHECK_THROWS_AS(apex_removal_check(complete_graph(1), Letter("1"), cw("1"), 2), PreconditionError);
}
