#pragma once

// Dense kernels over words encoded as small integer codes. Letter i of an
// encoded word is the i-th smallest token of its alphabet, so letter subsets
// are 64-bit masks and bit order matches token order.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "csfword/word.hpp"

namespace csfword::coded {

using Code = std::uint8_t;
using LetterMask = std::uint64_t;

inline constexpr std::size_t kMaxLetters = 64;
/// Subset scans enumerate 2^m masks over the m letters that occur at least
/// twice; beyond this the scan is rejected with BoundsError.
inline constexpr std::size_t kMaxScanLetters = 26;
inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

constexpr LetterMask bit(std::size_t i) { return LetterMask{1} << i; }

struct CodedWord {
  std::vector<Letter> alphabet;  // sorted
  std::vector<Code> codes;
};

CodedWord encode(const Word& w);
/// Encodes against a given sorted alphabet that must contain every letter of w.
std::vector<Code> encode(const Word& w, std::span<const Letter> alphabet);
Word decode(std::span<const Code> codes, std::span<const Letter> alphabet);

std::vector<std::size_t> letter_counts(std::span<const Code> w, std::size_t n);

void restrict_into(std::span<const Code> w, LetterMask subset, std::vector<Code>& out);

/// Length of the longest X with XX a factor of s; 0 when s is square-free.
/// O(|s|^2). When `start` is non-null it receives the leftmost start of a
/// longest square.
std::size_t longest_square_half(std::span<const Code> s, std::size_t* start = nullptr);

/// adjacency[x] has bit y set iff x and y alternate in w (x != y, both occur).
std::vector<LetterMask> alternation_graph(std::span<const Code> w, std::size_t n);

/// Largest half-length of a square in any restriction of w. Returns as soon as
/// a value >= stop_at is seen (the return value is then only a lower bound).
std::size_t max_complete_square_half(std::span<const Code> w, std::size_t n,
                                     std::size_t stop_at = kNoLimit);

/// 1 + max_complete_square_half.
inline std::size_t csf_index(std::span<const Code> w, std::size_t n) {
  return 1 + max_complete_square_half(w, n);
}

/// Union of all subsets T such that w_T contains a square XX with
/// |X| == half and letters(X) == T.
LetterMask square_witness_letters(std::span<const Code> w, std::size_t n, std::size_t half);

/// Masks of letters occurring at least twice (the only letters that can
/// belong to a square's block).
LetterMask repeated_letters(std::span<const Code> w, std::size_t n);

}  // namespace csfword::coded
