#include <doctest.h>

#include <random>

#include "csfword/error.hpp"
#include "csfword/graph.hpp"
#include "csfword/graph_io.hpp"
#include "csfword/harness/census.hpp"
#include "csfword/isomorphism.hpp"

using namespace csfword;

namespace {

Letter L(const char* s) { return Letter(s); }

}  // namespace

TEST_CASE("generators") {
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(complete_graph(5).is_complete());
  CHECK(empty_graph(4).is_edgeless());
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(cycle_graph(2) == complete_graph(2));
  auto crown = crown_graph(4);
  CHECK(crown.vertex_count() == 8);
  CHECK(crown.edge_count() == 12);
  CHECK(crown.has_edge(L("1"), L("2'")));
  CHECK_FALSE(crown.has_edge(L("1"), L("1'")));
  CHECK(clique_number(crown) == 2);
  auto star = star_graph(3);
  CHECK(star.degree(L("0")) == 3);
  CHECK(universal_vertices(star) == LetterSet{L("0")});
  CHECK(universal_vertices(complete_graph(3)).size() == 3);
  CHECK(universal_vertices(path_graph(4)).empty());
}

TEST_CASE("simple graph invariants") {
  SimpleGraph g(LetterSet{L("a"), L("b")}, {});
  CHECK_THROWS_AS(g.add_edge(L("a"), L("a")), PreconditionError);
  CHECK_THROWS_AS(g.add_edge(L("a"), L("z")), PreconditionError);
  g.add_edge(L("b"), L("a"));
  CHECK(g.has_edge(L("a"), L("b")));
  CHECK(g.edge_count() == 1);
}

TEST_CASE("cliques") {
  CHECK(clique_number(SimpleGraph()) == 0);
  CHECK(clique_number(empty_graph(3)) == 1);
  CHECK(clique_number(cycle_graph(5)) == 2);
  CHECK(clique_number(complete_graph(6)) == 6);
  CHECK(has_clique(cycle_graph(3), 3));
  CHECK_FALSE(has_clique(cycle_graph(4), 3));
}

TEST_CASE("induced subgraphs and vertex removal") {
  auto c5 = cycle_graph(5);
  auto p = induced_subgraph(c5, parse_letter_set("{1,2,3}"));
  CHECK(p == path_graph(3));
  auto r = remove_vertex(star_graph(3), L("0"));
  CHECK(r == empty_graph(3));
}

TEST_CASE("module substitution") {
  auto p3 = path_graph(3);
  SimpleGraph m(LetterSet{L("2a"), L("2b")}, {});
  m.add_edge(L("2a"), L("2b"));
  auto g = substitute_module(p3, L("2"), m);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 5);
  CHECK(g.has_edge(L("1"), L("2b")));
  CHECK_FALSE(g.has_edge(L("1"), L("3")));
  CHECK_THROWS_AS(substitute_module(p3, L("9"), m), PreconditionError);
  SimpleGraph clash(LetterSet{L("1")}, {});
  CHECK_THROWS_AS(substitute_module(p3, L("2"), clash), PreconditionError);

  auto twin = add_vertex_with_neighbours(p3, L("1'"), p3.neighbors(L("1")));
  CHECK(twin.has_edge(L("1'"), L("2")));
  CHECK_FALSE(twin.has_edge(L("1'"), L("1")));
}

TEST_CASE("components and unions") {
  std::vector<SimpleGraph> parts{path_graph(2), relabel(path_graph(3), {{L("1"), L("a")}, {L("2"), L("b")}, {L("3"), L("c")}})};
  auto u = disjoint_union(parts);
  CHECK_FALSE(is_connected(u));
  auto cs = components(u);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == parts[0]);
  CHECK(cs[1] == parts[1]);
  CHECK(is_connected(cycle_graph(6)));
  CHECK(components(empty_graph(3)).size() == 3);
}

TEST_CASE("canonical forms") {
  CHECK(harness::isomorphism_classes(4).size() == 11);
  CHECK(harness::isomorphism_classes(5).size() == 34);
  CHECK_FALSE(are_isomorphic(path_graph(4), star_graph(3)));
  CHECK(are_isomorphic(crown_graph(3), cycle_graph(6)));

  std::mt19937 rng(17);
  for (int i = 0; i < 60; ++i) {
    SimpleGraph g = empty_graph(6);
    for (int a = 1; a <= 6; ++a)
      for (int b = a + 1; b <= 6; ++b)
        if (rng() % 2) g.add_edge(Letter(std::to_string(a)), Letter(std::to_string(b)));
    std::vector<int> perm{1, 2, 3, 4, 5, 6};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::map<Letter, Letter> m;
    for (int a = 0; a < 6; ++a) m.emplace(Letter(std::to_string(a + 1)), Letter("v" + std::to_string(perm[a])));
    auto h = relabel(g, m);
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(are_isomorphic(graph_from_canonical_key(canonical_form(g)), g));
  }
  CHECK_THROWS_AS(canonical_form(empty_graph(9)), BoundsError);
}

TEST_CASE("graph text format") {
  auto g = parse_graph("# C4\nvertices: 1 2 3 4\nedge: 1 2\n\nedge: 2 3\nedge: 3 4\nedge: 4 1\n");
  CHECK(g == cycle_graph(4));
  CHECK(parse_graph(format_graph(crown_graph(3))) == crown_graph(3));

  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      (void)parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("vertices: 1 2\nedge: 1 3\n") == 2);
  CHECK(line_of("vertices: 1 2\n\nedge: 1 1\n") == 3);
  CHECK(line_of("edge: 1 2\n") == 1);
  CHECK(line_of("vertices: 1 2\nvertices: 3\n") == 2);
  CHECK(line_of("vertices: 1 2\nedges 1 2\n") == 2);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("graph JSON") {
  auto g = crown_graph(3);
  CHECK(graph_from_json(graph_to_json(g)) == g);
  CHECK(parse_graph(R"({"vertices": [1, 2, 3], "edges": [[1, 2]]})").edge_count() == 1);
  CHECK_THROWS_AS(parse_graph(R"({"vertices": ["1"], "edges": [["1", "2"]]})"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices": )"), ParseError);
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.txt"), ParseError);
}
