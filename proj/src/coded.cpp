#include "csfword/coded.hpp"

#include <algorithm>
#include <bit>

#include "csfword/error.hpp"

namespace csfword::coded {

CodedWord encode(const Word& w) {
  auto alpha = w.alphabet();
  CodedWord out{std::vector<Letter>(alpha.begin(), alpha.end()), {}};
  out.codes = encode(w, out.alphabet);
  return out;
}

std::vector<Code> encode(const Word& w, std::span<const Letter> alphabet) {
  if (alphabet.size() > kMaxLetters)
    throw BoundsError("alphabet larger than " + std::to_string(kMaxLetters) + " letters");
  std::vector<Code> codes;
  codes.reserve(w.size());
  for (const auto& x : w) {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), x);
    if (it == alphabet.end() || *it != x)
      throw PreconditionError("letter '" + x.token() + "' is not in the alphabet");
    codes.push_back(static_cast<Code>(it - alphabet.begin()));
  }
  return codes;
}

Word decode(std::span<const Code> codes, std::span<const Letter> alphabet) {
  std::vector<Letter> out;
  out.reserve(codes.size());
  for (Code c : codes) out.push_back(alphabet[c]);
  return Word(std::move(out));
}

std::vector<std::size_t> letter_counts(std::span<const Code> w, std::size_t n) {
  std::vector<std::size_t> counts(n, 0);
  for (Code c : w) ++counts[c];
  return counts;
}

void restrict_into(std::span<const Code> w, LetterMask subset, std::vector<Code>& out) {
  out.clear();
  for (Code c : w)
    if (subset & bit(c)) out.push_back(c);
}

std::size_t longest_square_half(std::span<const Code> s, std::size_t* start) {
  const std::size_t m = s.size();
  for (std::size_t h = m / 2; h >= 1; --h) {
    // run = number of consecutive i with s[i] == s[i + h] ending here.
    std::size_t run = 0;
    for (std::size_t i = 0; i + h < m; ++i) {
      run = (s[i] == s[i + h]) ? run + 1 : 0;
      if (run == h) {
        if (start) *start = i + 1 - h;
        return h;
      }
    }
  }
  return 0;
}

std::vector<LetterMask> alternation_graph(std::span<const Code> w, std::size_t n) {
  // since[x]: letters seen after the latest x. At a repeat of x, every letter
  // missing from since[x] forms "xx" with it in the two-letter restriction;
  // "yy" is caught symmetrically at the repeat of y.
  std::vector<LetterMask> since(n, 0), broken(n, 0);
  LetterMask present = 0;
  for (Code x : w) {
    if (present & bit(x)) broken[x] |= ~since[x] & ~bit(x);
    since[x] = 0;
    for (LetterMask m = present & ~bit(x); m; m &= m - 1) since[std::countr_zero(m)] |= bit(x);
    present |= bit(x);
  }
  for (std::size_t x = 0; x < n; ++x)
    for (LetterMask m = broken[x] & present; m; m &= m - 1)
      broken[std::countr_zero(m)] |= bit(x);
  std::vector<LetterMask> adj(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (!(present & bit(x))) continue;
    adj[x] = present & ~broken[x] & ~bit(x);
  }
  return adj;
}

LetterMask repeated_letters(std::span<const Code> w, std::size_t n) {
  auto counts = letter_counts(w, n);
  LetterMask out = 0;
  for (std::size_t x = 0; x < n; ++x)
    if (counts[x] >= 2) out |= bit(x);
  return out;
}

namespace {

void check_scan_size(LetterMask eligible) {
  if (static_cast<std::size_t>(std::popcount(eligible)) > kMaxScanLetters)
    throw BoundsError("subset scan over more than " + std::to_string(kMaxScanLetters) +
                      " repeated letters");
}

std::size_t restricted_length(LetterMask subset, const std::vector<std::size_t>& counts) {
  std::size_t len = 0;
  for (LetterMask m = subset; m; m &= m - 1) len += counts[std::countr_zero(m)];
  return len;
}

LetterMask block_letters(std::span<const Code> s, std::size_t start, std::size_t half) {
  LetterMask m = 0;
  for (std::size_t i = start; i < start + half; ++i) m |= bit(s[i]);
  return m;
}

}  // namespace

std::size_t max_complete_square_half(std::span<const Code> w, std::size_t n,
                                     std::size_t stop_at) {
  auto counts = letter_counts(w, n);
  LetterMask eligible = 0;
  for (std::size_t x = 0; x < n; ++x)
    if (counts[x] >= 2) eligible |= bit(x);
  check_scan_size(eligible);

  thread_local std::vector<Code> buffer;
  std::size_t best = 0;
  for (LetterMask t = eligible; t; t = (t - 1) & eligible) {
    if (restricted_length(t, counts) / 2 <= best) continue;
    restrict_into(w, t, buffer);
    best = std::max(best, longest_square_half(buffer));
    if (best >= stop_at) return best;
  }
  return best;
}

LetterMask square_witness_letters(std::span<const Code> w, std::size_t n, std::size_t half) {
  if (half == 0) return 0;
  auto counts = letter_counts(w, n);
  LetterMask eligible = 0;
  for (std::size_t x = 0; x < n; ++x)
    if (counts[x] >= 2) eligible |= bit(x);
  check_scan_size(eligible);

  thread_local std::vector<Code> buffer;
  LetterMask out = 0;
  for (LetterMask t = eligible; t; t = (t - 1) & eligible) {
    if ((t & ~out) == 0) continue;  // adds nothing to the union
    if (restricted_length(t, counts) < 2 * half) continue;
    if (static_cast<std::size_t>(std::popcount(t)) > half) continue;
    restrict_into(w, t, buffer);
    std::size_t run = 0;
    for (std::size_t i = 0; i + half < buffer.size(); ++i) {
      run = (buffer[i] == buffer[i + half]) ? run + 1 : 0;
      if (run >= half && block_letters(buffer, i + 1 - half, half) == t) {
        out |= t;
        break;
      }
    }
  }
  return out;
}

}  // namespace csfword::coded
