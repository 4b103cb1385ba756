#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "csfword/graph.hpp"

namespace csfword {

inline constexpr std::size_t kDefaultIsomorphismBound = 8;

/// Canonical key "n:bits". Vertices are ordered by non-decreasing degree and
/// the key is the lexicographically smallest upper-triangle bit string (column
/// by column) over all such orderings. Equal keys iff isomorphic. Throws
/// BoundsError above `bound` vertices.
std::string canonical_form(const SimpleGraph& g, std::size_t bound = kDefaultIsomorphismBound);

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b,
                    std::size_t bound = kDefaultIsomorphismBound);

/// The graph a key describes, labelled "1".."n" in canonical order.
SimpleGraph graph_from_canonical_key(std::string_view key);

}  // namespace csfword
