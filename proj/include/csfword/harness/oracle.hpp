#pragma once

#include <cstddef>
#include <string>
#include <vector>

// Deliberately naive reference implementations over plain strings of token
// indices. Nothing here shares code with the optimized library paths.
namespace csfword::oracle {

using Tokens = std::vector<std::string>;

Tokens restrict_tokens(const Tokens& w, const std::vector<std::string>& keep);

/// Longest X with XX a factor, by checking every (start, half) pair.
std::size_t longest_square(const Tokens& w);

/// Max over all 2^|alphabet| subsets of longest_square of the restriction.
std::size_t longest_complete_square(const Tokens& w);

/// Smallest p such that no restriction has a square of half >= p.
std::size_t csf_index(const Tokens& w);

/// Alternation by inspecting the restricted word letter by letter.
bool alternate(const Tokens& w, const std::string& x, const std::string& y);

/// Sorted alphabet.
std::vector<std::string> alphabet(const Tokens& w);

/// Edge list (x < y) of the alternation graph.
std::vector<std::pair<std::string, std::string>> alternation_edges(const Tokens& w);

/// Shortest border length, 0 if none.
std::size_t shortest_border(const Tokens& w);

}  // namespace csfword::oracle
