#include "csfword/word.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "csfword/error.hpp"

namespace csfword {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

Letter::Letter(std::string token) : token_(std::move(token)) {
  if (token_.empty()) throw PreconditionError("letter token must be non-empty");
  if (std::any_of(token_.begin(), token_.end(), is_space))
    throw PreconditionError("letter token '" + token_ + "' contains whitespace");
}

Word Word::parse(std::string_view text, WordFormat format) {
  std::vector<Letter> out;
  if (format == WordFormat::tokens) {
    std::size_t i = 0;
    while (i < text.size()) {
      if (is_space(text[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && !is_space(text[j])) ++j;
      out.emplace_back(std::string(text.substr(i, j - i)));
      i = j;
    }
    return Word(std::move(out));
  }

  // Compact: leading and trailing whitespace is ignored, inner whitespace is
  // an error so that "12 3" is not silently read as "123".
  std::size_t begin = 0, end = text.size();
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  for (std::size_t i = begin; i < end;) {
    char c = text[i];
    if (is_space(c)) throw ParseError("whitespace inside compact word", i);
    if (c == '\'') throw ParseError("apostrophe without a preceding letter", i);
    std::size_t j = i + 1;
    while (j < end && text[j] == '\'') ++j;
    out.emplace_back(std::string(text.substr(i, j - i)));
    i = j;
  }
  return Word(std::move(out));
}

LetterSet Word::alphabet() const { return LetterSet(letters_.begin(), letters_.end()); }

std::map<Letter, std::size_t> Word::multiplicity_profile() const {
  std::map<Letter, std::size_t> out;
  for (const auto& x : letters_) ++out[x];
  return out;
}

std::size_t Word::multiplicity(const Letter& x) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), x));
}

bool Word::contains(const Letter& x) const {
  return std::find(letters_.begin(), letters_.end(), x) != letters_.end();
}

std::optional<std::size_t> Word::uniformity() const {
  if (letters_.empty()) return std::nullopt;
  auto profile = multiplicity_profile();
  std::size_t k = profile.begin()->second;
  for (const auto& [x, m] : profile)
    if (m != k) return std::nullopt;
  return k;
}

Word Word::factor(std::size_t start, std::size_t length) const {
  if (start > size() || length > size() - start)
    throw PreconditionError("factor out of range");
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(start),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(start + length)));
}

Word& Word::operator+=(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

namespace {

bool compact_token(const std::string& t) {
  return t.front() != '\'' && std::all_of(t.begin() + 1, t.end(), [](char c) { return c == '\''; });
}

}  // namespace

bool Word::has_compact_spelling() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](const Letter& x) { return compact_token(x.token()); });
}

std::string Word::to_string(WordFormat format) const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const std::string& t = letters_[i].token();
    if (format == WordFormat::compact) {
      if (!compact_token(t)) throw PreconditionError("letter '" + t + "' has no compact spelling");
    } else if (i > 0) {
      out += ' ';
    }
    out += t;
  }
  return out;
}

Word restrict(const Word& w, const LetterSet& subset) {
  std::vector<Letter> out;
  for (const auto& x : w)
    if (subset.contains(x)) out.push_back(x);
  return Word(std::move(out));
}

bool alternates(const Word& w, const Letter& x, const Letter& y) {
  if (x == y) throw PreconditionError("alternates: x and y must differ");
  if (!w.contains(x) || !w.contains(y))
    throw PreconditionError("alternates: letter does not occur in word");
  const Letter* prev = nullptr;
  for (const auto& z : w) {
    if (z != x && z != y) continue;
    if (prev && *prev == z) return false;
    prev = &z;
  }
  return true;
}

Word occurrence_permutation(const Word& w, std::size_t i) {
  auto k = w.uniformity();
  if (!k) throw PreconditionError("occurrence_permutation: word is not uniform");
  if (i < 1 || i > *k) throw PreconditionError("occurrence_permutation: index out of range");
  std::unordered_map<Letter, std::size_t> seen;
  std::vector<Letter> out;
  for (const auto& x : w)
    if (++seen[x] == i) out.push_back(x);
  return Word(std::move(out));
}

Word initial_permutation(const Word& w) {
  LetterSet seen;
  std::vector<Letter> out;
  for (const auto& x : w)
    if (seen.insert(x).second) out.push_back(x);
  return Word(std::move(out));
}

Word final_permutation(const Word& w) {
  LetterSet seen;
  std::vector<Letter> out;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    if (seen.insert(*it).second) out.push_back(*it);
  std::reverse(out.begin(), out.end());
  return Word(std::move(out));
}

Word rotate(const Word& w, std::size_t cut) {
  if (cut > w.size()) throw PreconditionError("rotate: cut out of range");
  return w.factor(cut, w.size() - cut) + w.factor(0, cut);
}

Word occurrence_based_map(const Word& w, const std::map<OccurrenceKey, Word>& h) {
  return occurrence_based_map(w, [&h](const Letter& x, std::size_t i) -> Word {
    auto it = h.find({x, i});
    if (it == h.end())
      throw PreconditionError("occurrence_based_map: no image for occurrence " +
                              std::to_string(i) + " of '" + x.token() + "'");
    return it->second;
  });
}

Word occurrence_based_map(const Word& w,
                          const std::function<Word(const Letter&, std::size_t)>& h) {
  std::unordered_map<Letter, std::size_t> seen;
  Word out;
  for (const auto& x : w) out += h(x, ++seen[x]);
  return out;
}

LetterSet parse_letter_set(std::string_view text) {
  std::string cleaned(text);
  for (char& c : cleaned)
    if (c == '{' || c == '}' || c == ',') c = ' ';
  auto w = Word::parse(cleaned, WordFormat::tokens);
  return w.alphabet();
}

std::string to_string(const LetterSet& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& x : set) {
    if (!first) out += ',';
    out += x.token();
    first = false;
  }
  return out + "}";
}

}  // namespace csfword
