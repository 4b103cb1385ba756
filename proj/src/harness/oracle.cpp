#include "csfword/harness/oracle.hpp"

#include <algorithm>
#include <set>

namespace csfword::oracle {

Tokens restrict_tokens(const Tokens& w, const std::vector<std::string>& keep) {
  Tokens out;
  for (const auto& t : w)
    if (std::find(keep.begin(), keep.end(), t) != keep.end()) out.push_back(t);
  return out;
}

std::size_t longest_square(const Tokens& w) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t h = 1; i + 2 * h <= w.size(); ++h) {
      bool sq = true;
      for (std::size_t j = 0; j < h && sq; ++j) sq = w[i + j] == w[i + h + j];
      if (sq) best = std::max(best, h);
    }
  return best;
}

std::vector<std::string> alphabet(const Tokens& w) {
  std::set<std::string> s(w.begin(), w.end());
  return {s.begin(), s.end()};
}

std::size_t longest_complete_square(const Tokens& w) {
  auto a = alphabet(w);
  std::size_t best = 0;
  for (unsigned long mask = 1; mask < (1ul << a.size()); ++mask) {
    std::vector<std::string> keep;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (mask >> i & 1) keep.push_back(a[i]);
    best = std::max(best, longest_square(restrict_tokens(w, keep)));
  }
  return best;
}

std::size_t csf_index(const Tokens& w) { return longest_complete_square(w) + 1; }

bool alternate(const Tokens& w, const std::string& x, const std::string& y) {
  auto r = restrict_tokens(w, {x, y});
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] == r[i - 1]) return false;
  return true;
}

std::vector<std::pair<std::string, std::string>> alternation_edges(const Tokens& w) {
  auto a = alphabet(w);
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (alternate(w, a[i], a[j])) out.emplace_back(a[i], a[j]);
  return out;
}

std::size_t shortest_border(const Tokens& w) {
  for (std::size_t len = 1; 2 * len <= w.size(); ++len)
    if (std::equal(w.begin(), w.begin() + len, w.end() - len)) return len;
  return 0;
}

}  // namespace csfword::oracle
