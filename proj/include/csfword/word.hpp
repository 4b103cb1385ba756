#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace csfword {

/// A single letter of a word (equivalently a vertex label). Any non-empty
/// token without whitespace, e.g. "1", "4'", "b", "v1a".
class Letter {
 public:
  explicit Letter(std::string token);

  const std::string& token() const noexcept { return token_; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    return a.token_.compare(b.token_) <=> 0;
  }

 private:
  std::string token_;
};

using LetterSet = std::set<Letter>;

/// Text encodings for words.
///  - tokens:  letters separated by whitespace ("1 2 4' 3").
///  - compact: one character per letter; apostrophes bind to the preceding
///             character ("124'3").
enum class WordFormat { tokens, compact };

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word parse(std::string_view text, WordFormat format = WordFormat::tokens);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Distinct letters, sorted by token.
  LetterSet alphabet() const;
  std::map<Letter, std::size_t> multiplicity_profile() const;
  std::size_t multiplicity(const Letter& x) const;
  bool contains(const Letter& x) const;
  /// k when every letter occurs exactly k times; nullopt otherwise (and for
  /// the empty word).
  std::optional<std::size_t> uniformity() const;

  Word factor(std::size_t start, std::size_t length) const;
  void push_back(Letter x) { letters_.push_back(std::move(x)); }
  Word& operator+=(const Word& other);
  friend Word operator+(Word a, const Word& b) { return a += b; }

  /// Throws PreconditionError in compact mode when a token is not a single
  /// character followed by apostrophes.
  std::string to_string(WordFormat format = WordFormat::tokens) const;
  /// Every token is one character followed by zero or more apostrophes.
  bool has_compact_spelling() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

/// Subsequence of `w` made of the letters in `subset`, order preserved.
Word restrict(const Word& w, const LetterSet& subset);

/// True iff `w` restricted to {x, y} has no two equal adjacent letters.
/// Throws PreconditionError when x == y or either letter is absent from w.
bool alternates(const Word& w, const Letter& x, const Letter& y);

/// p_i(w) for a k-uniform w, 1 <= i <= k: keep only the i-th occurrence of each
/// letter.
Word occurrence_permutation(const Word& w, std::size_t i);

/// Letters in order of first occurrence (pi(w) for uniform words).
Word initial_permutation(const Word& w);
/// Letters in order of last occurrence (sigma(w) for uniform words).
Word final_permutation(const Word& w);

/// v.u where w = u.v and |u| = cut.
Word rotate(const Word& w, std::size_t cut);

using OccurrenceKey = std::pair<Letter, std::size_t>;

/// Occurrence-based function h(H(w)): the i-th occurrence (1-based) of each
/// letter x is replaced by h(x, i). Every (x, i) occurring in w must be mapped.
Word occurrence_based_map(const Word& w, const std::map<OccurrenceKey, Word>& h);
Word occurrence_based_map(const Word& w,
                          const std::function<Word(const Letter&, std::size_t)>& h);

/// Parses "{a, b, c}", "a b c" or "a,b,c" into a letter set.
LetterSet parse_letter_set(std::string_view text);
std::string to_string(const LetterSet& set);

}  // namespace csfword

template <>
struct std::hash<csfword::Letter> {
  std::size_t operator()(const csfword::Letter& x) const noexcept {
    return std::hash<std::string>{}(x.token());
  }
};
