#include "csfword/search.hpp"

#include <bit>
#include <cstdlib>
#include <string>
#include <vector>

#include "csfword/error.hpp"

namespace csfword {

using coded::bit;
using coded::Code;
using coded::LetterMask;

SearchBounds SearchBounds::with_env_budget(SearchBounds base) {
  if (const char* env = std::getenv("CSFWORD_BUDGET"); env && *env) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) base.node_budget = v;
  }
  return base;
}

void SearchBounds::validate() const {
  if (k_max == 0 || node_budget == 0 || n_max == 0)
    throw PreconditionError("search bounds must be positive");
}

namespace {

class UniformSearch {
 public:
  UniformSearch(const DenseGraph& g, const UniformSearchOptions& opt, const CodedWordVisitor& visit)
      : n_(g.size()),
        k_(opt.k),
        length_(g.size() * opt.k),
        opt_(opt),
        visit_(visit),
        adj_(g.adjacency),
        nonadj_(g.size()),
        count_(g.size(), 0),
        since_((length_ + 1) * g.size(), 0),
        broken_((length_ + 1) * g.size(), 0),
        word_(length_) {
    all_ = n_ == 64 ? ~LetterMask{0} : bit(n_) - 1;
    for (std::size_t x = 0; x < n_; ++x) nonadj_[x] = all_ & ~adj_[x] & ~bit(x);
  }

  SearchStats run() {
    if (n_ == 0 || k_ == 0) return stats_;
    descend(0);
    return stats_;
  }

 private:
  LetterMask* since(std::size_t depth) { return &since_[depth * n_]; }
  LetterMask* broken(std::size_t depth) { return &broken_[depth * n_]; }

  // Returns false to unwind the whole search.
  bool descend(std::size_t pos) {
    if (++stats_.nodes > opt_.node_budget) {
      stats_.status = SearchStatus::budget_exhausted;
      return false;
    }
    if (pos == length_) {
      const LetterMask* b = broken(pos);
      for (std::size_t x = 0; x < n_; ++x)
        if (nonadj_[x] & ~b[x]) return true;
      ++stats_.words;
      if (!visit_(word_)) {
        stats_.status = SearchStatus::stopped;
        return false;
      }
      return true;
    }

    const LetterMask* s = since(pos);
    const LetterMask* b = broken(pos);
    LetterMask* s2 = since(pos + 1);
    LetterMask* b2 = broken(pos + 1);
    for (std::size_t x = 0; x < n_; ++x) {
      if (count_[x] == k_) continue;
      if (opt_.permutational && count_[x] != pos / n_) continue;
      if (opt_.fix_first_letter && pos == 0 && x != 0) continue;
      const bool repeat = count_[x] > 0;
      // Every neighbour must occur exactly once between consecutive x's; more
      // than once is caught when the neighbour itself repeats.
      if (repeat && (adj_[x] & ~s[x])) continue;

      for (std::size_t z = 0; z < n_; ++z) {
        s2[z] = s[z] | bit(x);
        b2[z] = b[z];
      }
      s2[x] = 0;
      if (repeat) {
        LetterMask gap = all_ & ~s[x] & ~bit(x);
        b2[x] |= gap;
        for (LetterMask m = gap; m; m &= m - 1) b2[std::countr_zero(m)] |= bit(x);
      }
      ++count_[x];

      // A non-adjacent pair still alternating must be breakable: with x just
      // placed and exhausted, another y has to follow twice.
      bool feasible = true;
      if (count_[x] == k_) {
        for (LetterMask m = nonadj_[x] & ~b2[x]; m; m &= m - 1) {
          auto y = static_cast<std::size_t>(std::countr_zero(m));
          if (k_ - count_[y] <= 1) {
            feasible = false;
            break;
          }
        }
      }
      if (feasible) {
        word_[pos] = static_cast<Code>(x);
        if (!descend(pos + 1)) {
          --count_[x];
          return false;
        }
      }
      --count_[x];
    }
    return true;
  }

  std::size_t n_, k_, length_;
  const UniformSearchOptions& opt_;
  const CodedWordVisitor& visit_;
  const std::vector<LetterMask>& adj_;
  std::vector<LetterMask> nonadj_;
  LetterMask all_ = 0;
  std::vector<std::size_t> count_;
  std::vector<LetterMask> since_;
  std::vector<LetterMask> broken_;
  std::vector<Code> word_;
  SearchStats stats_;
};

}  // namespace

SearchStats search_uniform_representants(const DenseGraph& g, const UniformSearchOptions& options,
                                         const CodedWordVisitor& visit) {
  if (options.k == 0) throw PreconditionError("uniformity k must be >= 1");
  return UniformSearch(g, options, visit).run();
}

}  // namespace csfword
