#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csfword/graph.hpp"
#include "csfword/search.hpp"
#include "csfword/squares.hpp"
#include "csfword/word.hpp"

namespace csfword {

/// uniformity(w) is defined, represents(w, g) and w is p-CSF. False for p == 0.
bool is_p_csf_uniform_representation(const Word& w, const SimpleGraph& g, std::size_t p);

enum class CsfExactness {
  none,            // bound-qualified only
  complete_graph,  // p = 1 exactly for complete graphs
  empty_graph,     // 1..n n..1 is 2-CSF and nothing smaller exists off K_n
  circle_clique,   // 2-uniform representant: p = clique + 1
  clique_bound,    // some witness meets the clique + 1 lower bound
  rep_above_three, // connected, representation number > 3, witness meets p = 4
};

std::string_view to_string(CsfExactness reason);

struct CsfResult {
  /// Absent when no uniform representant with k <= k_max was found.
  std::optional<std::size_t> value;
  std::optional<Word> witness;
  std::size_t k_of_witness = 0;
  /// No smaller p is achievable with any k <= certified_up_to_k.
  std::size_t certified_up_to_k = 0;
  bool exact = false;
  CsfExactness reason = CsfExactness::none;
  /// The lower bound the search stopped at (clique + 1, or 4 per the
  /// representation-number argument), kept for reporting.
  std::size_t lower_bound = 1;
};

/// Least csf_index over uniform representants with k <= bounds.k_max, found
/// by enumerating k = 1, 2, ... and keeping the first word (in enumeration
/// order) that attains each new minimum. Throws BoundsError when
/// |V| > bounds.n_max.
CsfResult csf_uniform_rep_number(const SimpleGraph& g, const SearchBounds& bounds);

/// All canonical witnesses with block_length == half_length, one per
/// letters(X) subset. Empty for half_length == 0.
std::vector<SquareWitness> csf_witnesses(const Word& w, std::size_t half_length);

struct SquareVertexReport {
  Letter vertex;
  bool is_p_square_vertex_up_to_k = false;
  std::size_t k_bound = 0;
  /// A p-CSF uniform representant none of whose (p-1)-witness subsets
  /// contains `vertex`.
  std::optional<Word> counterexample_word;
};

struct SquareVertexSurvey {
  std::size_t p = 0;
  std::vector<SquareVertexReport> reports;
  std::size_t words_examined = 0;
  /// Every enumeration ran to completion.
  bool exhausted = true;
  /// Set when p differs from the computed CSF number.
  std::optional<std::string> warning;
};

/// Bounded p-complete square vertex test: v qualifies iff every p-CSF uniform
/// representant with k <= bounds.k_max has a witness of half-length p-1 whose
/// subset (letters of the block) contains v. For p == 1 every vertex is
/// reported false (no witnesses of half-length 0). Throws PreconditionError
/// for p == 0.
SquareVertexSurvey p_square_vertex_report(const SimpleGraph& g, std::size_t p,
                                          const SearchBounds& bounds);

struct Expansion {
  SimpleGraph graph;
  Word word;
};

/// Replaces v by a K2 module on fresh labels v+"a", v+"b", and every
/// occurrence of v in w by the block (v+"a")(v+"b"). Requires w to be a
/// uniform representant of g with csf_index(w) > 2. The output pair is
/// validated to be a representation.
Expansion k2_expand(const SimpleGraph& g, const Letter& v, const Word& w);

/// Adds new_vertex adjacent to N(x), and maps the i-th occurrence of x to
/// x new_vertex for odd i and new_vertex x for even i. Requires w to be a
/// 3-CSF uniform representant of g; the output is validated to be a 3-CSF
/// uniform representant of the expanded graph.
Expansion twin_expand(const SimpleGraph& g, const Letter& x, const Word& w,
                      const Letter& new_vertex);

/// Whether restrict(w, V \ {v}) is a (p-1)-CSF uniform representant of g - v.
/// Requires v universal, |V| >= 2 and w a p-CSF uniform representant of g.
bool apex_removal_check(const SimpleGraph& g, const Letter& v, const Word& w, std::size_t p);

}  // namespace csfword
