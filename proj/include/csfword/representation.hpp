#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "csfword/graph.hpp"
#include "csfword/search.hpp"
#include "csfword/word.hpp"

namespace csfword {

/// Vertices = alphabet(w); x ~ y iff x and y alternate in w.
SimpleGraph graph_of_word(const Word& w);

/// alphabet(w) == V(G) and graph_of_word(w) == G.
bool represents(const Word& w, const SimpleGraph& g);

/// Why `w` fails to represent `g`: letters present on only one side, and the
/// pairs whose alternation disagrees with adjacency.
struct RepresentationDiagnostics {
  struct Pair {
    Letter x, y;
    bool adjacent_in_graph;
    Word restriction;
  };
  LetterSet missing_from_word;
  LetterSet missing_from_graph;
  std::vector<Pair> pairs;

  bool ok() const { return missing_from_word.empty() && missing_from_graph.empty() && pairs.empty(); }
};
RepresentationDiagnostics diagnose_representation(const Word& w, const SimpleGraph& g);

/// Intersection, over consecutive occurrences of x, of the letters occurring
/// exactly once in between. When x occurs at most once the constraint is
/// vacuous and every other letter of w is returned.
LetterSet candidate_neighbors(const Word& w, const Letter& x);

/// pi(w) . w
Word extend_by_initial_permutation(const Word& w);

struct RepSearchResult {
  std::optional<Word> word;
  std::size_t k = 0;
  /// True when the search space at this k was fully covered, so an absent
  /// word proves that no k-uniform representant exists.
  bool exhausted = false;
  std::uint64_t nodes = 0;
};

/// Throws BoundsError when |V| > bounds.n_max.
RepSearchResult find_k_uniform_word(const SimpleGraph& g, std::size_t k, const SearchBounds& bounds,
                                    bool fix_first_letter = false);

struct RepNumberResult {
  std::optional<std::size_t> k;
  std::optional<Word> witness;
  /// One entry per k tried, in increasing k.
  std::vector<RepSearchResult> attempts;

  /// Every smaller k was exhausted, so k really is the least.
  bool certified() const;
};

RepNumberResult representation_number(const SimpleGraph& g, const SearchBounds& bounds);

using WordVisitor = std::function<bool(const Word&)>;

/// Visits every k-uniform word over V(G) representing G exactly once, in
/// lexicographic order of sorted labels. status != complete flags a partial
/// enumeration.
SearchStats enumerate_k_uniform_words(const SimpleGraph& g, std::size_t k, const SearchBounds& bounds,
                                      const WordVisitor& visit);

/// Collects the enumeration; throws BoundsError when the budget runs out.
std::vector<Word> k_uniform_representants(const SimpleGraph& g, std::size_t k,
                                          const SearchBounds& bounds);

struct PermutationalResult {
  std::optional<std::vector<Word>> permutations;
  /// Every k <= k_max tried was exhausted.
  bool exhausted = true;
};

/// Least number of permutations (<= k_max) whose concatenation represents G.
PermutationalResult permutational_representation(const SimpleGraph& g, std::size_t k_max,
                                                 const SearchBounds& bounds);

/// Square-free representant. Connected graphs use the minimal-k uniform
/// witness; disconnected graphs join square-free component words with
/// tm3_join; edgeless graphs fall back to a search over uniform words.
/// Throws PreconditionError for the edgeless graph on two vertices, which has
/// no square-free representant, and BoundsError when bounds are too tight.
Word square_free_representation(const SimpleGraph& g, const SearchBounds& bounds);

/// Square-free join of square-free component words w_1..w_n (alphabets
/// disjoint, w_1 representing a graph with at least one edge):
///   (w_1 \ l) w_2..w_n l sigma(w_n)..sigma(w_2) (sigma(w_1) \ l) sigma(w_2)..sigma(w_n) l
/// with l the last letter of w_1. A single word is returned unchanged. The
/// result is validated (represents the disjoint union, square-free) and a
/// failure throws ValidationError.
Word tm3_join(std::span<const Word> component_words);

/// Border-free representant (xxyy-style word for the edgeless graph on two
/// vertices). Throws BoundsError when bounds are too tight.
Word border_free_representation(const SimpleGraph& g, const SearchBounds& bounds);

}  // namespace csfword
