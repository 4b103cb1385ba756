#include "csfword/representation.hpp"

#include <algorithm>
#include <string>

#include "csfword/coded.hpp"
#include "csfword/error.hpp"
#include "csfword/squares.hpp"

namespace csfword {

SimpleGraph graph_of_word(const Word& w) {
  auto cw = coded::encode(w);
  auto adj = coded::alternation_graph(cw.codes, cw.alphabet.size());
  return from_dense(cw.alphabet, adj);
}

bool represents(const Word& w, const SimpleGraph& g) {
  if (w.alphabet() != g.vertices()) return false;
  return graph_of_word(w) == g;
}

RepresentationDiagnostics diagnose_representation(const Word& w, const SimpleGraph& g) {
  RepresentationDiagnostics d;
  auto alpha = w.alphabet();
  for (const auto& v : g.vertices())
    if (!alpha.contains(v)) d.missing_from_word.insert(v);
  for (const auto& x : alpha)
    if (!g.has_vertex(x)) d.missing_from_graph.insert(x);
  auto induced = graph_of_word(w);
  for (auto a = alpha.begin(); a != alpha.end(); ++a) {
    if (!g.has_vertex(*a)) continue;
    for (auto b = std::next(a); b != alpha.end(); ++b) {
      if (!g.has_vertex(*b)) continue;
      bool want = g.has_edge(*a, *b);
      if (induced.has_edge(*a, *b) != want)
        d.pairs.push_back({*a, *b, want, restrict(w, {*a, *b})});
    }
  }
  return d;
}

LetterSet candidate_neighbors(const Word& w, const Letter& x) {
  LetterSet others = w.alphabet();
  others.erase(x);
  if (w.multiplicity(x) < 2) return others;

  LetterSet result = others;
  std::map<Letter, std::size_t> gap;
  bool open = false;
  for (const auto& z : w) {
    if (z == x) {
      if (open) {
        LetterSet once;
        for (const auto& [y, c] : gap)
          if (c == 1) once.insert(y);
        LetterSet kept;
        std::set_intersection(result.begin(), result.end(), once.begin(), once.end(),
                              std::inserter(kept, kept.end()));
        result = std::move(kept);
      }
      gap.clear();
      open = true;
    } else if (open) {
      ++gap[z];
    }
  }
  return result;
}

Word extend_by_initial_permutation(const Word& w) { return initial_permutation(w) + w; }

namespace {

void check_bounds(const SimpleGraph& g, const SearchBounds& bounds) {
  bounds.validate();
  if (g.vertex_count() == 0) throw PreconditionError("graph has no vertices");
  if (g.vertex_count() > bounds.n_max)
    throw BoundsError(std::to_string(g.vertex_count()) + " vertices exceeds n_max " +
                      std::to_string(bounds.n_max));
}

}  // namespace

RepSearchResult find_k_uniform_word(const SimpleGraph& g, std::size_t k, const SearchBounds& bounds,
                                    bool fix_first_letter) {
  check_bounds(g, bounds);
  auto d = to_dense(g);
  RepSearchResult result;
  result.k = k;
  UniformSearchOptions opt{k, bounds.node_budget, false, fix_first_letter};
  auto stats = search_uniform_representants(d, opt, [&](std::span<const coded::Code> codes) {
    result.word = coded::decode(codes, d.labels);
    return false;
  });
  result.nodes = stats.nodes;
  // Finding a word settles the question; otherwise only a complete search does.
  result.exhausted = result.word.has_value() || stats.exhausted();
  return result;
}

bool RepNumberResult::certified() const {
  if (!k) return false;
  return std::all_of(attempts.begin(), attempts.end(),
                     [&](const RepSearchResult& a) { return a.k == *k || a.exhausted; });
}

RepNumberResult representation_number(const SimpleGraph& g, const SearchBounds& bounds) {
  RepNumberResult out;
  for (std::size_t k = 1; k <= bounds.k_max; ++k) {
    auto attempt = find_k_uniform_word(g, k, bounds, /*fix_first_letter=*/true);
    out.attempts.push_back(attempt);
    if (attempt.word) {
      out.k = k;
      out.witness = attempt.word;
      break;
    }
  }
  return out;
}

SearchStats enumerate_k_uniform_words(const SimpleGraph& g, std::size_t k, const SearchBounds& bounds,
                                      const WordVisitor& visit) {
  check_bounds(g, bounds);
  auto d = to_dense(g);
  UniformSearchOptions opt{k, bounds.node_budget, false, false};
  return search_uniform_representants(d, opt, [&](std::span<const coded::Code> codes) {
    return visit(coded::decode(codes, d.labels));
  });
}

std::vector<Word> k_uniform_representants(const SimpleGraph& g, std::size_t k,
                                          const SearchBounds& bounds) {
  std::vector<Word> out;
  auto stats = enumerate_k_uniform_words(g, k, bounds, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  if (!stats.exhausted()) throw BoundsError("enumeration exceeded the node budget");
  return out;
}

PermutationalResult permutational_representation(const SimpleGraph& g, std::size_t k_max,
                                                 const SearchBounds& bounds) {
  check_bounds(g, bounds);
  auto d = to_dense(g);
  const std::size_t n = d.size();
  PermutationalResult out;
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::optional<Word> found;
    UniformSearchOptions opt{k, bounds.node_budget, true, false};
    auto stats = search_uniform_representants(d, opt, [&](std::span<const coded::Code> codes) {
      found = coded::decode(codes, d.labels);
      return false;
    });
    if (found) {
      std::vector<Word> perms;
      for (std::size_t i = 0; i < k; ++i) perms.push_back(found->factor(i * n, n));
      out.permutations = std::move(perms);
      return out;
    }
    if (!stats.exhausted()) out.exhausted = false;
  }
  return out;
}

namespace {

bool is_edgeless_pair(const SimpleGraph& g) { return g.vertex_count() == 2 && g.is_edgeless(); }

// First uniform representant with k in [1, k_max] accepted by `pred`.
std::optional<Word> search_uniform(const SimpleGraph& g, const SearchBounds& bounds,
                                   const std::function<bool(const Word&)>& pred) {
  for (std::size_t k = 1; k <= bounds.k_max; ++k) {
    std::optional<Word> found;
    enumerate_k_uniform_words(g, k, bounds, [&](const Word& w) {
      if (!pred(w)) return true;
      found = w;
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

Word minimal_uniform_witness(const SimpleGraph& g, const SearchBounds& bounds) {
  auto rn = representation_number(g, bounds);
  if (!rn.witness)
    throw BoundsError("no uniform representant with k <= " + std::to_string(bounds.k_max));
  return *rn.witness;
}

std::vector<Word> square_free_component_words(const SimpleGraph& g, const SearchBounds& bounds) {
  auto parts = components(g);
  auto first = std::find_if(parts.begin(), parts.end(),
                            [](const SimpleGraph& c) { return !c.is_edgeless(); });
  std::rotate(parts.begin(), first, first + 1);
  std::vector<Word> words;
  for (const auto& c : parts) words.push_back(square_free_representation(c, bounds));
  return words;
}

}  // namespace

Word square_free_representation(const SimpleGraph& g, const SearchBounds& bounds) {
  check_bounds(g, bounds);
  if (is_edgeless_pair(g))
    throw PreconditionError("the edgeless graph on two vertices has no square-free representant");

  if (is_connected(g)) {
    Word w = minimal_uniform_witness(g, bounds);
    if (!is_square_free(w))
      throw ValidationError("minimal uniform witness " + w.to_string() + " contains a square");
    return w;
  }
  if (!g.is_edgeless()) {
    auto words = square_free_component_words(g, bounds);
    return tm3_join(words);
  }
  auto w = search_uniform(g, bounds, [](const Word& w) { return is_square_free(w); });
  if (!w) throw BoundsError("no square-free uniform representant within bounds");
  return *w;
}

Word tm3_join(std::span<const Word> words) {
  if (words.empty()) throw PreconditionError("tm3_join: no component words");
  std::vector<SimpleGraph> graphs;
  LetterSet seen;
  for (const auto& w : words) {
    if (w.empty()) throw PreconditionError("tm3_join: empty component word");
    if (!is_square_free(w))
      throw PreconditionError("tm3_join: component word " + w.to_string() + " contains a square");
    for (const auto& x : w.alphabet())
      if (!seen.insert(x).second)
        throw PreconditionError("tm3_join: letter '" + x.token() + "' appears in two components");
    graphs.push_back(graph_of_word(w));
  }
  if (graphs.front().is_edgeless())
    throw PreconditionError("tm3_join: the first component must have an edge");
  if (words.size() == 1) return words.front();

  const Word& w1 = words.front();
  const Letter last = w1[w1.size() - 1];
  const Word l({last});
  const auto rest = words.subspan(1);

  Word sigma1_minus_last;
  for (const auto& x : final_permutation(w1))
    if (x != last) sigma1_minus_last.push_back(x);

  Word out = w1.factor(0, w1.size() - 1);
  for (const auto& w : rest) out += w;
  out += l;
  for (auto it = rest.rbegin(); it != rest.rend(); ++it) out += final_permutation(*it);
  out += sigma1_minus_last;
  for (const auto& w : rest) out += final_permutation(w);
  out += l;

  auto target = disjoint_union(graphs);
  if (!represents(out, target)) {
    auto diag = diagnose_representation(out, target);
    std::string why = diag.pairs.empty() ? std::string("alphabet mismatch")
                                         : "pair " + diag.pairs.front().x.token() + "," +
                                               diag.pairs.front().y.token() + " restricts to " +
                                               diag.pairs.front().restriction.to_string();
    throw ValidationError("tm3_join: " + out.to_string() + " does not represent the union (" + why + ")");
  }
  if (auto sq = find_square_factor(out))
    throw ValidationError("tm3_join: " + out.to_string() + " has a square at " +
                          std::to_string(sq->start) + " of half-length " +
                          std::to_string(sq->half_length));
  return out;
}

Word border_free_representation(const SimpleGraph& g, const SearchBounds& bounds) {
  check_bounds(g, bounds);
  if (is_edgeless_pair(g)) {
    const Letter& x = *g.vertices().begin();
    const Letter& y = *std::next(g.vertices().begin());
    return Word({x, x, y, y});
  }
  if (is_connected(g)) {
    Word w = minimal_uniform_witness(g, bounds);
    if (find_border(w))
      throw ValidationError("minimal uniform witness " + w.to_string() + " is bordered");
    return w;
  }
  if (!g.is_edgeless()) {
    Word joined = tm3_join(square_free_component_words(g, bounds));
    if (!find_border(joined)) return joined;
  }
  // Rotations of a uniform representant represent the same graph, so search
  // uniform words directly, preferring square-free ones.
  if (auto w = search_uniform(g, bounds, [](const Word& w) { return !find_border(w) && is_square_free(w); }))
    return *w;
  if (auto w = search_uniform(g, bounds, [](const Word& w) { return !find_border(w).has_value(); }))
    return *w;
  throw BoundsError("no border-free uniform representant within bounds");
}

}  // namespace csfword
