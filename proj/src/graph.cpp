#include "csfword/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "csfword/error.hpp"

namespace csfword {

using coded::bit;
using coded::LetterMask;

Edge make_edge(const Letter& u, const Letter& v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

SimpleGraph::SimpleGraph(LetterSet vertices, std::span<const Edge> edges)
    : vertices_(std::move(vertices)) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void SimpleGraph::add_edge(const Letter& u, const Letter& v) {
  if (u == v) throw PreconditionError("self-loop on '" + u.token() + "'");
  if (!has_vertex(u) || !has_vertex(v))
    throw PreconditionError("edge " + u.token() + "-" + v.token() + " has an unknown endpoint");
  edges_.insert(make_edge(u, v));
}

bool SimpleGraph::has_edge(const Letter& u, const Letter& v) const {
  return u != v && edges_.contains(make_edge(u, v));
}

LetterSet SimpleGraph::neighbors(const Letter& v) const {
  LetterSet out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.insert(b);
    if (b == v) out.insert(a);
  }
  return out;
}

std::size_t SimpleGraph::degree(const Letter& v) const { return neighbors(v).size(); }

bool SimpleGraph::is_complete() const {
  const std::size_t n = vertices_.size();
  return edges_.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

DenseGraph to_dense(const SimpleGraph& g) {
  DenseGraph d{std::vector<Letter>(g.vertices().begin(), g.vertices().end()), {}};
  if (d.labels.size() > coded::kMaxLetters)
    throw BoundsError("graph has more than " + std::to_string(coded::kMaxLetters) + " vertices");
  d.adjacency.assign(d.labels.size(), 0);
  auto index = [&](const Letter& x) {
    return static_cast<std::size_t>(std::lower_bound(d.labels.begin(), d.labels.end(), x) -
                                    d.labels.begin());
  };
  for (const auto& [u, v] : g.edges()) {
    auto a = index(u), b = index(v);
    d.adjacency[a] |= bit(b);
    d.adjacency[b] |= bit(a);
  }
  return d;
}

SimpleGraph from_dense(std::span<const Letter> labels, std::span<const LetterMask> adjacency) {
  SimpleGraph g(LetterSet(labels.begin(), labels.end()));
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (LetterMask m = adjacency[a] & ~((bit(a) << 1) - 1); m; m &= m - 1)
      g.add_edge(labels[a], labels[static_cast<std::size_t>(std::countr_zero(m))]);
  return g;
}

namespace {

Letter label(std::size_t i) { return Letter(std::to_string(i)); }
Letter primed(std::size_t i) { return Letter(std::to_string(i) + "'"); }

SimpleGraph numbered(std::size_t n) {
  SimpleGraph g;
  for (std::size_t i = 1; i <= n; ++i) g.add_vertex(label(i));
  return g;
}

}  // namespace

SimpleGraph complete_graph(std::size_t n) {
  auto g = numbered(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) g.add_edge(label(i), label(j));
  return g;
}

SimpleGraph empty_graph(std::size_t n) { return numbered(n); }

SimpleGraph path_graph(std::size_t n) {
  auto g = numbered(n);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(label(i), label(i + 1));
  return g;
}

SimpleGraph cycle_graph(std::size_t n) {
  auto g = path_graph(n);
  if (n >= 3) g.add_edge(label(n), label(1));
  return g;
}

SimpleGraph crown_graph(std::size_t n) {
  auto g = numbered(n);
  for (std::size_t i = 1; i <= n; ++i) g.add_vertex(primed(i));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (i != j) g.add_edge(label(i), primed(j));
  return g;
}

SimpleGraph star_graph(std::size_t leaves) {
  auto g = numbered(leaves);
  g.add_vertex(label(0));
  for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(label(0), label(i));
  return g;
}

SimpleGraph from_edge_list(std::span<const std::pair<std::string, std::string>> edges,
                           std::span<const std::string> isolated) {
  SimpleGraph g;
  for (const auto& t : isolated) g.add_vertex(Letter(t));
  for (const auto& [u, v] : edges) {
    g.add_vertex(Letter(u));
    g.add_vertex(Letter(v));
    g.add_edge(Letter(u), Letter(v));
  }
  return g;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const LetterSet& subset) {
  for (const auto& v : subset)
    if (!g.has_vertex(v))
      throw PreconditionError("induced_subgraph: unknown vertex '" + v.token() + "'");
  SimpleGraph h(subset);
  for (const auto& [u, v] : g.edges())
    if (subset.contains(u) && subset.contains(v)) h.add_edge(u, v);
  return h;
}

SimpleGraph remove_vertex(const SimpleGraph& g, const Letter& v) {
  if (!g.has_vertex(v)) throw PreconditionError("remove_vertex: unknown vertex '" + v.token() + "'");
  LetterSet rest = g.vertices();
  rest.erase(v);
  return induced_subgraph(g, rest);
}

namespace {

// Max clique by branch and bound over candidate masks.
void grow_clique(const std::vector<LetterMask>& adj, LetterMask candidates, std::size_t size,
                 std::size_t& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  while (candidates) {
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
    auto v = static_cast<std::size_t>(std::countr_zero(candidates));
    candidates &= ~bit(v);
    grow_clique(adj, candidates & adj[v], size + 1, best);
  }
}

}  // namespace

std::size_t clique_number(const SimpleGraph& g, std::size_t bound) {
  if (g.vertex_count() > bound)
    throw BoundsError("clique_number: " + std::to_string(g.vertex_count()) +
                      " vertices exceeds bound " + std::to_string(bound));
  auto d = to_dense(g);
  const std::size_t n = d.size();
  LetterMask all = n == 64 ? ~LetterMask{0} : bit(n) - 1;
  std::size_t best = 0;
  grow_clique(d.adjacency, all, 0, best);
  return best;
}

bool has_clique(const SimpleGraph& g, std::size_t p, std::size_t bound) {
  return clique_number(g, bound) >= p;
}

LetterSet universal_vertices(const SimpleGraph& g) {
  LetterSet out;
  for (const auto& v : g.vertices())
    if (g.degree(v) + 1 == g.vertex_count()) out.insert(v);
  return out;
}

SimpleGraph substitute_module(const SimpleGraph& g, const Letter& v, const SimpleGraph& module) {
  if (!g.has_vertex(v))
    throw PreconditionError("substitute_module: unknown vertex '" + v.token() + "'");
  for (const auto& u : module.vertices())
    if (u != v && g.has_vertex(u))
      throw PreconditionError("substitute_module: label collision on '" + u.token() + "'");
  LetterSet outside = g.vertices();
  outside.erase(v);
  auto nv = g.neighbors(v);
  SimpleGraph out = induced_subgraph(g, outside);
  for (const auto& u : module.vertices()) out.add_vertex(u);
  for (const auto& [a, b] : module.edges()) out.add_edge(a, b);
  for (const auto& u : module.vertices())
    for (const auto& x : nv) out.add_edge(u, x);
  return out;
}

SimpleGraph add_vertex_with_neighbours(const SimpleGraph& g, const Letter& v,
                                       const LetterSet& neighbours) {
  if (g.has_vertex(v)) throw PreconditionError("vertex '" + v.token() + "' already exists");
  SimpleGraph out = g;
  out.add_vertex(v);
  for (const auto& u : neighbours) out.add_edge(v, u);
  return out;
}

std::vector<SimpleGraph> components(const SimpleGraph& g) {
  std::vector<SimpleGraph> out;
  LetterSet seen;
  for (const auto& start : g.vertices()) {
    if (seen.contains(start)) continue;
    LetterSet comp{start};
    std::vector<Letter> stack{start};
    while (!stack.empty()) {
      Letter x = stack.back();
      stack.pop_back();
      for (const auto& y : g.neighbors(x))
        if (comp.insert(y).second) stack.push_back(y);
    }
    seen.insert(comp.begin(), comp.end());
    out.push_back(induced_subgraph(g, comp));
  }
  return out;
}

bool is_connected(const SimpleGraph& g) { return components(g).size() <= 1; }

SimpleGraph disjoint_union(std::span<const SimpleGraph> parts) {
  SimpleGraph out;
  for (const auto& part : parts) {
    for (const auto& v : part.vertices()) {
      if (out.has_vertex(v))
        throw PreconditionError("disjoint_union: label '" + v.token() + "' is shared");
      out.add_vertex(v);
    }
    for (const auto& [a, b] : part.edges()) out.add_edge(a, b);
  }
  return out;
}

SimpleGraph relabel(const SimpleGraph& g, const std::map<Letter, Letter>& mapping) {
  auto image = [&](const Letter& x) {
    auto it = mapping.find(x);
    return it == mapping.end() ? x : it->second;
  };
  SimpleGraph out;
  for (const auto& v : g.vertices()) {
    if (out.has_vertex(image(v))) throw PreconditionError("relabel: mapping is not injective");
    out.add_vertex(image(v));
  }
  for (const auto& [a, b] : g.edges()) out.add_edge(image(a), image(b));
  return out;
}

}  // namespace csfword
