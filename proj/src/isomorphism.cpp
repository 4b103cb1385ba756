#include "csfword/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <vector>

#include "csfword/error.hpp"

namespace csfword {

namespace {

using coded::bit;
using coded::LetterMask;

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const DenseGraph& g) : adj_(g.adjacency), n_(g.size()) {
    std::vector<std::size_t> degree(n_);
    for (std::size_t v = 0; v < n_; ++v) degree[v] = static_cast<std::size_t>(std::popcount(adj_[v]));
    std::vector<std::size_t> by_degree(n_);
    for (std::size_t v = 0; v < n_; ++v) by_degree[v] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](auto a, auto b) { return degree[a] < degree[b]; });
    slot_degree_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) slot_degree_[i] = degree[by_degree[i]];
    degree_ = std::move(degree);
  }

  std::string run() {
    order_.clear();
    bits_.clear();
    best_.clear();
    have_best_ = false;
    used_ = 0;
    extend(0);
    std::string key = std::to_string(n_) + ":";
    for (bool b : best_) key += b ? '1' : '0';
    return key;
  }

 private:
  void extend(std::size_t pos) {
    if (pos == n_) {
      if (!have_best_ || bits_ < best_) {
        best_ = bits_;
        have_best_ = true;
      }
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if ((used_ & bit(v)) || degree_[v] != slot_degree_[pos]) continue;
      const std::size_t mark = bits_.size();
      for (std::size_t j = 0; j < pos; ++j) bits_.push_back((adj_[order_[j]] & bit(v)) != 0);
      bool worse = have_best_ && std::lexicographical_compare(
                                     best_.begin(), best_.begin() + static_cast<std::ptrdiff_t>(bits_.size()),
                                     bits_.begin(), bits_.end());
      if (!worse) {
        used_ |= bit(v);
        order_.push_back(v);
        extend(pos + 1);
        order_.pop_back();
        used_ &= ~bit(v);
      }
      bits_.resize(mark);
    }
  }

  const std::vector<LetterMask>& adj_;
  std::size_t n_;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> slot_degree_;
  std::vector<std::size_t> order_;
  std::vector<bool> bits_;
  std::vector<bool> best_;
  bool have_best_ = false;
  LetterMask used_ = 0;
};

}  // namespace

std::string canonical_form(const SimpleGraph& g, std::size_t bound) {
  if (g.vertex_count() > bound)
    throw BoundsError("canonical_form: " + std::to_string(g.vertex_count()) +
                      " vertices exceeds bound " + std::to_string(bound));
  auto d = to_dense(g);
  return CanonicalSearch(d).run();
}

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b, std::size_t bound) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a, bound) == canonical_form(b, bound);
}

SimpleGraph graph_from_canonical_key(std::string_view key) {
  auto colon = key.find(':');
  std::size_t n = 0;
  if (colon == std::string_view::npos ||
      std::from_chars(key.data(), key.data() + colon, n).ec != std::errc{})
    throw ParseError("malformed canonical key", 0);
  auto bits = key.substr(colon + 1);
  if (bits.size() != n * (n > 0 ? n - 1 : 0) / 2) throw ParseError("canonical key length mismatch", colon + 1);
  SimpleGraph g = empty_graph(n);
  std::size_t at = 0;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j, ++at) {
      if (bits[at] == '1')
        g.add_edge(Letter(std::to_string(j + 1)), Letter(std::to_string(i + 1)));
      else if (bits[at] != '0')
        throw ParseError("canonical key has a non-binary digit", colon + 1 + at);
    }
  return g;
}

}  // namespace csfword
