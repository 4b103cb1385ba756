#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "csfword/coded.hpp"
#include "csfword/word.hpp"

namespace csfword {

/// Unordered vertex pair, stored with first < second.
using Edge = std::pair<Letter, Letter>;

Edge make_edge(const Letter& u, const Letter& v);

/// Labelled undirected simple graph. Vertices share the letter namespace with
/// words, so a word and the graph it represents use the same labels.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(LetterSet vertices) : vertices_(std::move(vertices)) {}
  SimpleGraph(LetterSet vertices, std::span<const Edge> edges);

  void add_vertex(const Letter& v) { vertices_.insert(v); }
  /// Throws PreconditionError for self-loops or unknown endpoints.
  void add_edge(const Letter& u, const Letter& v);
  void remove_edge(const Letter& u, const Letter& v) { edges_.erase(make_edge(u, v)); }

  const LetterSet& vertices() const noexcept { return vertices_; }
  const std::set<Edge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_vertex(const Letter& v) const { return vertices_.contains(v); }
  bool has_edge(const Letter& u, const Letter& v) const;
  LetterSet neighbors(const Letter& v) const;
  std::size_t degree(const Letter& v) const;

  bool is_complete() const;
  bool is_edgeless() const { return edges_.empty(); }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  LetterSet vertices_;
  std::set<Edge> edges_;
};

/// Bitmask view over the sorted vertex labels (at most 64 vertices).
struct DenseGraph {
  std::vector<Letter> labels;
  std::vector<coded::LetterMask> adjacency;

  std::size_t size() const noexcept { return labels.size(); }
};

DenseGraph to_dense(const SimpleGraph& g);
SimpleGraph from_dense(std::span<const Letter> labels, std::span<const coded::LetterMask> adjacency);

// Generators. Labels are "1".."n"; the crown graph's second part is
// "1'".."n'". cycle(1) and cycle(2) degenerate to K1 and K2.
SimpleGraph complete_graph(std::size_t n);
SimpleGraph empty_graph(std::size_t n);
SimpleGraph path_graph(std::size_t n);
SimpleGraph cycle_graph(std::size_t n);
SimpleGraph crown_graph(std::size_t n);
/// K_{1,leaves}: centre "0", leaves "1".."leaves".
SimpleGraph star_graph(std::size_t leaves);
/// Vertices are the edge endpoints plus `isolated`.
SimpleGraph from_edge_list(std::span<const std::pair<std::string, std::string>> edges,
                           std::span<const std::string> isolated = {});

SimpleGraph induced_subgraph(const SimpleGraph& g, const LetterSet& subset);
SimpleGraph remove_vertex(const SimpleGraph& g, const Letter& v);

inline constexpr std::size_t kDefaultCliqueBound = 40;

/// Size of a maximum clique (0 for the graph with no vertices). Exhaustive
/// search; throws BoundsError above `bound` vertices.
std::size_t clique_number(const SimpleGraph& g, std::size_t bound = kDefaultCliqueBound);
bool has_clique(const SimpleGraph& g, std::size_t p, std::size_t bound = kDefaultCliqueBound);

/// Vertices of degree |V| - 1.
LetterSet universal_vertices(const SimpleGraph& g);

/// Replaces v by the module M: edges inside M are kept and every vertex of M
/// is joined to N_G(v). Throws PreconditionError if v is missing or a label
/// of M collides with V(G) \ {v}.
SimpleGraph substitute_module(const SimpleGraph& g, const Letter& v, const SimpleGraph& module);

/// Adds `v` (fresh) adjacent to exactly `neighbours`.
SimpleGraph add_vertex_with_neighbours(const SimpleGraph& g, const Letter& v,
                                       const LetterSet& neighbours);

/// Connected components, ordered by their smallest label.
std::vector<SimpleGraph> components(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
SimpleGraph disjoint_union(std::span<const SimpleGraph> parts);

SimpleGraph relabel(const SimpleGraph& g, const std::map<Letter, Letter>& mapping);

}  // namespace csfword
