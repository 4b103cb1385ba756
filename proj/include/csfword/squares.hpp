#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "csfword/word.hpp"

namespace csfword {

/// A factor XX of a word: X starts at `start` and has `half_length` letters.
struct SquareFactor {
  std::size_t start = 0;
  std::size_t half_length = 0;
  friend bool operator==(const SquareFactor&, const SquareFactor&) = default;
};

/// Certificate that restrict(w, subset) contains `block` twice in a row
/// starting at `start` (an index into the restricted word).
struct SquareWitness {
  LetterSet subset;
  std::size_t start = 0;
  Word block;

  std::size_t block_length() const noexcept { return block.size(); }
  friend bool operator==(const SquareWitness&, const SquareWitness&) = default;
};

/// Leftmost square factor (smallest half-length at that start), if any.
std::optional<SquareFactor> find_square_factor(const Word& w);
/// A square factor of maximal half-length (leftmost among those).
std::optional<SquareFactor> longest_square_factor(const Word& w);
inline bool is_square_free(const Word& w) { return !find_square_factor(w).has_value(); }

/// Length of the shortest non-empty border u (w = uvu), if w is bordered.
std::optional<std::size_t> find_border(const Word& w);

/// Square with half-length >= min_half inside restrict(w, subset): leftmost
/// start, then shortest half-length. The witness subset is `subset` itself.
std::optional<SquareWitness> find_square_in_restriction(const Word& w, const LetterSet& subset,
                                                        std::size_t min_half);

/// Canonical p-complete square: subsets are scanned by increasing cardinality,
/// then lexicographically on sorted tokens; the first subset whose restriction
/// has a square with |X| >= p yields the witness. Because a square survives
/// restriction to its own letters, the returned subset always equals
/// letters(block). Throws PreconditionError for p == 0.
std::optional<SquareWitness> find_p_complete_square(const Word& w, std::size_t p);

bool is_p_complete_square_free(const Word& w, std::size_t p);

/// Least p such that w is p-complete square-free, i.e. one more than the
/// longest square half-length over all restrictions of w.
std::size_t csf_index(const Word& w);

/// One witness per subset T with letters(X) == T and |X| == half_length, in
/// canonical subset order.
std::vector<SquareWitness> square_witnesses(const Word& w, std::size_t half_length);

}  // namespace csfword
