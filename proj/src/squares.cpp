#include "csfword/squares.hpp"

#include <algorithm>
#include <bit>

#include "csfword/coded.hpp"
#include "csfword/error.hpp"

namespace csfword {

namespace {

using coded::Code;
using coded::LetterMask;

bool square_at(std::span<const Code> s, std::size_t start, std::size_t half) {
  return std::equal(s.begin() + static_cast<std::ptrdiff_t>(start),
                    s.begin() + static_cast<std::ptrdiff_t>(start + half),
                    s.begin() + static_cast<std::ptrdiff_t>(start + half));
}

// Leftmost square with half >= min_half; shortest half at that start.
std::optional<SquareFactor> first_square(std::span<const Code> s, std::size_t min_half) {
  const std::size_t m = s.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t h = std::max<std::size_t>(min_half, 1); i + 2 * h <= m; ++h)
      if (square_at(s, i, h)) return SquareFactor{i, h};
  return std::nullopt;
}

LetterSet letters_of(LetterMask mask, std::span<const Letter> alphabet) {
  LetterSet out;
  for (LetterMask m = mask; m; m &= m - 1) out.insert(alphabet[std::countr_zero(m)]);
  return out;
}

// Calls f(mask) for each subset of the set bits of `eligible`, by increasing
// cardinality and then lexicographically (bit order equals token order). Stops
// when f returns true.
template <typename F>
void for_each_canonical_subset(LetterMask eligible, F&& f) {
  std::vector<std::size_t> idx;
  for (LetterMask m = eligible; m; m &= m - 1)
    idx.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  if (idx.size() > coded::kMaxScanLetters)
    throw BoundsError("subset scan over more than " + std::to_string(coded::kMaxScanLetters) +
                      " repeated letters");
  const std::size_t m = idx.size();
  for (std::size_t r = 1; r <= m; ++r) {
    std::vector<std::size_t> comb(r);
    for (std::size_t i = 0; i < r; ++i) comb[i] = i;
    while (true) {
      LetterMask mask = 0;
      for (auto c : comb) mask |= coded::bit(idx[c]);
      if (f(mask)) return;
      std::size_t i = r;
      while (i > 0 && comb[i - 1] == m - r + i - 1) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t j = i; j < r; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
}

}  // namespace

std::optional<SquareFactor> find_square_factor(const Word& w) {
  auto cw = coded::encode(w);
  return first_square(cw.codes, 1);
}

std::optional<SquareFactor> longest_square_factor(const Word& w) {
  auto cw = coded::encode(w);
  std::size_t start = 0;
  std::size_t h = coded::longest_square_half(cw.codes, &start);
  if (h == 0) return std::nullopt;
  return SquareFactor{start, h};
}

std::optional<std::size_t> find_border(const Word& w) {
  // The shortest border never overlaps itself, so |u| <= |w| / 2.
  auto letters = w.letters();
  for (std::size_t len = 1; 2 * len <= letters.size(); ++len)
    if (std::equal(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(len),
                   letters.end() - static_cast<std::ptrdiff_t>(len)))
      return len;
  return std::nullopt;
}

std::optional<SquareWitness> find_square_in_restriction(const Word& w, const LetterSet& subset,
                                                        std::size_t min_half) {
  Word r = restrict(w, subset);
  auto cw = coded::encode(r);
  auto sq = first_square(cw.codes, min_half);
  if (!sq) return std::nullopt;
  return SquareWitness{subset, sq->start, r.factor(sq->start, sq->half_length)};
}

std::optional<SquareWitness> find_p_complete_square(const Word& w, std::size_t p) {
  if (p == 0) throw PreconditionError("find_p_complete_square: p must be >= 1");
  auto cw = coded::encode(w);
  const std::size_t n = cw.alphabet.size();
  auto counts = coded::letter_counts(cw.codes, n);
  std::optional<SquareWitness> found;
  std::vector<Code> buffer;
  // The first witness in canonical order has letters(X) == T, so every letter
  // of T repeats; subsets with a single-occurrence letter can be skipped.
  for_each_canonical_subset(coded::repeated_letters(cw.codes, n), [&](LetterMask t) {
    std::size_t len = 0;
    for (LetterMask m = t; m; m &= m - 1) len += counts[std::countr_zero(m)];
    if (len < 2 * p) return false;
    coded::restrict_into(cw.codes, t, buffer);
    auto sq = first_square(buffer, p);
    if (!sq) return false;
    Word block = coded::decode(
        std::span<const Code>(buffer).subspan(sq->start, sq->half_length), cw.alphabet);
    found = SquareWitness{letters_of(t, cw.alphabet), sq->start, std::move(block)};
    return true;
  });
  return found;
}

bool is_p_complete_square_free(const Word& w, std::size_t p) {
  if (p == 0) throw PreconditionError("is_p_complete_square_free: p must be >= 1");
  auto cw = coded::encode(w);
  return coded::max_complete_square_half(cw.codes, cw.alphabet.size(), p) < p;
}

std::size_t csf_index(const Word& w) {
  auto cw = coded::encode(w);
  return coded::csf_index(cw.codes, cw.alphabet.size());
}

std::vector<SquareWitness> square_witnesses(const Word& w, std::size_t half_length) {
  std::vector<SquareWitness> out;
  if (half_length == 0) return out;
  auto cw = coded::encode(w);
  const std::size_t n = cw.alphabet.size();
  std::vector<Code> buffer;
  for_each_canonical_subset(coded::repeated_letters(cw.codes, n), [&](LetterMask t) {
    if (static_cast<std::size_t>(std::popcount(t)) > half_length) return true;
    coded::restrict_into(cw.codes, t, buffer);
    for (std::size_t i = 0; i + 2 * half_length <= buffer.size(); ++i) {
      if (!square_at(buffer, i, half_length)) continue;
      LetterMask block = 0;
      for (std::size_t j = i; j < i + half_length; ++j) block |= coded::bit(buffer[j]);
      if (block != t) continue;
      out.push_back(SquareWitness{
          letters_of(t, cw.alphabet), i,
          coded::decode(std::span<const Code>(buffer).subspan(i, half_length), cw.alphabet)});
      break;
    }
    return false;
  });
  return out;
}

}  // namespace csfword
