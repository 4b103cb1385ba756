#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "csfword/coded.hpp"
#include "csfword/graph.hpp"

namespace csfword {

/// Limits that qualify every search-based answer.
struct SearchBounds {
  std::size_t k_max = 3;
  std::uint64_t node_budget = 100'000'000;
  std::size_t n_max = 5;

  /// Copy of `base` with node_budget taken from CSFWORD_BUDGET when set.
  static SearchBounds with_env_budget(SearchBounds base);
  /// Throws PreconditionError unless all fields are positive.
  void validate() const;

  friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

enum class SearchStatus {
  complete,          // the whole tree was explored
  budget_exhausted,  // node_budget ran out; absence proves nothing
  stopped,           // the visitor asked to stop
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t words = 0;
  SearchStatus status = SearchStatus::complete;

  bool exhausted() const noexcept { return status == SearchStatus::complete; }
};

struct UniformSearchOptions {
  std::size_t k = 1;
  std::uint64_t node_budget = 100'000'000;
  /// Each block of n consecutive positions must be a permutation of V.
  bool permutational = false;
  /// Only words starting with the smallest label. Sound for existence
  /// queries on uniform words (rotation preserves the represented graph);
  /// never use it when counting or enumerating.
  bool fix_first_letter = false;
};

/// Visitor over coded words (codes index DenseGraph::labels). Return false to
/// stop the search.
using CodedWordVisitor = std::function<bool(std::span<const coded::Code>)>;

/// Backtracking over all k-uniform words on the vertices of g that represent
/// g, in lexicographic order of label indices. A placement is rejected as soon
/// as a required alternation fails (a neighbour missing from the gap since the
/// previous occurrence) or a required non-alternation can no longer happen.
SearchStats search_uniform_representants(const DenseGraph& g, const UniformSearchOptions& options,
                                         const CodedWordVisitor& visit);

}  // namespace csfword
