#include "csfword/harness/fixtures.hpp"

#include <string>
#include <utility>
#include <vector>

namespace csfword::fixtures {

Word word(std::string_view compact) { return Word::parse(compact, WordFormat::compact); }

namespace {

using Edges = std::vector<std::pair<std::string, std::string>>;

}  // namespace

SimpleGraph fig1_graph() {
  Edges e{{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}};
  return from_edge_list(e);
}

SimpleGraph g1_graph() {
  Edges e{{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"1", "5"}, {"1'", "2"}, {"1'", "5"}};
  return from_edge_list(e);
}

SimpleGraph g2_graph() {
  SimpleGraph g = g1_graph();
  g.add_vertex(Letter("5'"));
  for (const char* u : {"1", "4", "1'"}) g.add_edge(Letter("5'"), Letter(u));
  return g;
}

}  // namespace csfword::fixtures
