#include <doctest.h>

#include <random>

#include "csfword/error.hpp"
#include "csfword/harness/fixtures.hpp"
#include "csfword/representation.hpp"
#include "csfword/squares.hpp"

using namespace csfword;

namespace {

Word cw(std::string_view s) { return Word::parse(s, WordFormat::compact); }
std::string str(const Word& w) { return w.to_string(WordFormat::compact); }

SearchBounds wide() {
  SearchBounds b;
  b.n_max = 8;
  return b;
}

SimpleGraph k2_plus_k1() {
  SimpleGraph g = empty_graph(3);
  g.add_edge(Letter("1"), Letter("2"));
  return g;
}

}  // namespace

TEST_CASE("graph of a word") {
  CHECK(graph_of_word(cw("5213243541")) == cycle_graph(5));
  CHECK(graph_of_word(cw("23123414")) == fixtures::fig1_graph());
  CHECK(graph_of_word(fixtures::word(fixtures::kCrownWord)) == crown_graph(4));
  CHECK(graph_of_word(Word()).vertex_count() == 0);
}

TEST_CASE("represents and its diagnostics") {
  CHECK(represents(cw("1122"), empty_graph(2)));
  CHECK_FALSE(represents(cw("12"), empty_graph(2)));
  CHECK(represents(fixtures::word(fixtures::kG1Word), fixtures::g1_graph()));
  CHECK(represents(fixtures::word(fixtures::kG2Word), fixtures::g2_graph()));

  auto d = diagnose_representation(cw("12"), empty_graph(2));
  REQUIRE(d.pairs.size() == 1);
  CHECK_FALSE(d.pairs[0].adjacent_in_graph);
  CHECK(str(d.pairs[0].restriction) == "12");
  auto e = diagnose_representation(cw("13"), empty_graph(2));
  CHECK(e.missing_from_word == LetterSet{Letter("2")});
  CHECK(e.missing_from_graph == LetterSet{Letter("3")});
  CHECK(diagnose_representation(cw("5213243541"), cycle_graph(5)).ok());
}

TEST_CASE("hereditary restriction") {
  std::mt19937 rng(21);
  const std::vector<std::string> pool{"1", "2", "3", "4", "5"};
  for (int i = 0; i < 200; ++i) {
    std::vector<Letter> xs;
    for (int j = 0; j < 12; ++j) xs.emplace_back(pool[rng() % 5]);
    Word w(xs);
    LetterSet s, kept;
    for (const auto& x : pool)
      if (rng() % 2) s.insert(Letter(x));
    for (const auto& x : s)
      if (w.contains(x)) kept.insert(x);
    CHECK(graph_of_word(restrict(w, s)) == induced_subgraph(graph_of_word(w), kept));
  }
}

TEST_CASE("candidate neighbours") {
  CHECK(candidate_neighbors(cw("xabx"), Letter("x")) == parse_letter_set("{a,b}"));
  CHECK(candidate_neighbors(cw("xaax"), Letter("x")).empty());
  CHECK(candidate_neighbors(cw("xab"), Letter("x")) == parse_letter_set("{a,b}"));

  std::mt19937 rng(2);
  const std::vector<std::string> pool{"1", "2", "3", "4", "5"};
  for (int i = 0; i < 100; ++i) {
    std::vector<Letter> xs;
    for (int j = 0; j < 14; ++j) xs.emplace_back(pool[rng() % 5]);
    Word w(xs);
    auto g = graph_of_word(w);
    for (const auto& x : w.alphabet()) {
      auto cand = candidate_neighbors(w, x);
      for (const auto& y : g.neighbors(x)) CHECK(cand.contains(y));
    }
  }
}

TEST_CASE("extension by the initial permutation") {
  CHECK(str(extend_by_initial_permutation(cw("12"))) == "1212");
  Word e = extend_by_initial_permutation(cw("1122"));
  CHECK(str(e) == "121122");
  CHECK(graph_of_word(e) == empty_graph(2));
  Word c5 = cw("5213243541");
  CHECK(extend_by_initial_permutation(c5).uniformity() == 3u);
  CHECK(graph_of_word(extend_by_initial_permutation(c5)) == cycle_graph(5));
}

TEST_CASE("k-uniform search") {
  auto k3 = find_k_uniform_word(complete_graph(3), 1, wide());
  REQUIRE(k3.word);
  CHECK(represents(*k3.word, complete_graph(3)));
  auto c5 = find_k_uniform_word(cycle_graph(5), 2, wide());
  REQUIRE(c5.word);
  CHECK(represents(*c5.word, cycle_graph(5)));
  CHECK(c5.word->uniformity() == 2u);
  auto crown = find_k_uniform_word(crown_graph(4), 2, wide());
  CHECK_FALSE(crown.word);
  CHECK(crown.exhausted);

  SearchBounds tiny = wide();
  tiny.node_budget = 10;
  auto cut = find_k_uniform_word(crown_graph(4), 2, tiny);
  CHECK_FALSE(cut.word);
  CHECK_FALSE(cut.exhausted);
  CHECK_THROWS_AS(find_k_uniform_word(empty_graph(9), 1, wide()), BoundsError);
  CHECK_THROWS_AS(find_k_uniform_word(SimpleGraph(), 1, wide()), PreconditionError);
}

TEST_CASE("representation numbers") {
  CHECK(representation_number(complete_graph(5), wide()).k == 1u);
  auto e2 = representation_number(empty_graph(2), wide());
  CHECK(e2.k == 2u);
  CHECK(e2.certified());
  auto c5 = representation_number(cycle_graph(5), wide());
  CHECK(c5.k == 2u);
  CHECK(c5.certified());
  REQUIRE(c5.witness);
  CHECK(represents(*c5.witness, cycle_graph(5)));
  SearchBounds low = wide();
  low.k_max = 2;
  auto crown = representation_number(crown_graph(4), low);
  CHECK_FALSE(crown.k);
  CHECK_FALSE(crown.certified());
}

TEST_CASE("enumeration") {
  auto k2 = k_uniform_representants(complete_graph(2), 1, wide());
  REQUIRE(k2.size() == 2);
  CHECK(str(k2[0]) == "12");
  CHECK(str(k2[1]) == "21");

  std::vector<std::string> e2;
  for (const auto& w : k_uniform_representants(empty_graph(2), 2, wide())) e2.push_back(str(w));
  CHECK(e2 == std::vector<std::string>{"1122", "1221", "2112", "2211"});

  std::size_t seen = 0;
  auto p3 = path_graph(3);
  enumerate_k_uniform_words(p3, 4, wide(), [&](const Word& w) {
    ++seen;
    CHECK(csf_index(w) >= 4);
    return true;
  });
  CHECK(seen > 0);

  SearchBounds tiny = wide();
  tiny.node_budget = 5;
  CHECK_THROWS_AS(k_uniform_representants(cycle_graph(5), 2, tiny), BoundsError);
}

TEST_CASE("rotation and enumeration invariants on desk-scale graphs") {
  const std::vector<SimpleGraph> graphs{cycle_graph(5), path_graph(4), star_graph(3), empty_graph(3),
                                        fixtures::fig1_graph()};
  for (const auto& g : graphs) {
    std::size_t count = 0;
    enumerate_k_uniform_words(g, 2, wide(), [&](const Word& w) {
      CHECK(represents(w, g));
      CHECK(graph_of_word(extend_by_initial_permutation(w)) == g);
      for (std::size_t c = 0; c <= w.size(); ++c) CHECK(graph_of_word(rotate(w, c)) == g);
      return ++count < 300;
    });
  }
}

TEST_CASE("permutational representations") {
  auto k4 = permutational_representation(complete_graph(4), 3, wide());
  REQUIRE(k4.permutations);
  CHECK(k4.permutations->size() == 1);
  auto p3 = permutational_representation(path_graph(3), 3, wide());
  REQUIRE(p3.permutations);
  REQUIRE(p3.permutations->size() == 2);
  CHECK(represents((*p3.permutations)[0] + (*p3.permutations)[1], path_graph(3)));
  auto c5 = permutational_representation(cycle_graph(5), 4, wide());
  CHECK_FALSE(c5.permutations);
  CHECK(c5.exhausted);
}

TEST_CASE("square-free representations") {
  Word c5 = square_free_representation(cycle_graph(5), wide());
  CHECK(is_square_free(c5));
  CHECK(represents(c5, cycle_graph(5)));
  CHECK(str(square_free_representation(k2_plus_k1(), wide())) == "1323132");
  CHECK_THROWS_AS(square_free_representation(empty_graph(2), wide()), PreconditionError);
  CHECK_THROWS_AS(square_free_representation(empty_graph(3), wide()), BoundsError);
  SearchBounds four = wide();
  four.k_max = 4;
  Word e3 = square_free_representation(empty_graph(3), four);
  CHECK(e3.uniformity() == 4u);
  CHECK(is_square_free(e3));
  CHECK(represents(e3, empty_graph(3)));
}

TEST_CASE("square-free join") {
  const std::vector<Word> pair{cw("12"), cw("3")};
  CHECK(str(tm3_join(pair)) == "1323132");
  const std::vector<Word> single{cw("5213243541")};
  CHECK(tm3_join(single) == single[0]);
  const std::vector<Word> edgeless_first{cw("3"), cw("12")};
  CHECK_THROWS_AS(tm3_join(edgeless_first), PreconditionError);
  const std::vector<Word> overlap{cw("12"), cw("2")};
  CHECK_THROWS_AS(tm3_join(overlap), PreconditionError);
  const std::vector<Word> squared{cw("1212"), cw("3")};
  CHECK_THROWS_AS(tm3_join(squared), PreconditionError);
  CHECK_THROWS_AS(tm3_join(std::span<const Word>()), PreconditionError);

  const std::vector<Word> three{cw("5213243541"), cw("ab"), cw("c")};
  Word j = tm3_join(three);
  CHECK(is_square_free(j));
  CHECK(graph_of_word(j).edge_count() == 6);
}

TEST_CASE("border-free representations") {
  CHECK(str(border_free_representation(empty_graph(2), wide())) == "1122");
  CHECK(str(border_free_representation(complete_graph(2), wide())) == "12");
  Word c5 = border_free_representation(cycle_graph(5), wide());
  CHECK_FALSE(find_border(c5));
  CHECK(represents(c5, cycle_graph(5)));
  for (const auto& g : {k2_plus_k1(), empty_graph(3), empty_graph(4)}) {
    Word w = border_free_representation(g, wide());
    CHECK_FALSE(find_border(w));
    CHECK(represents(w, g));
  }
}
