#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "csfword/csf.hpp"
#include "csfword/search.hpp"

namespace csfword::harness {

/// Compact spelling when every token allows it, space-separated tokens otherwise.
std::string format_word(const Word& w);

struct CensusRecord {
  std::string canonical_key;
  std::size_t n = 0;
  std::size_t edge_count = 0;
  std::size_t clique_number = 0;
  std::optional<std::size_t> representation_number;
  bool representation_certified = false;
  std::optional<std::size_t> csf_uniform_number;
  bool csf_exact = false;
  CsfExactness csf_reason = CsfExactness::none;
  std::size_t csf_certified_up_to_k = 0;
  std::optional<Word> representation_witness;
  std::optional<Word> csf_witness;
  SearchBounds bounds_used;
};

/// One isomorphism class per canonical key among graphs on exactly n vertices.
std::vector<std::string> isomorphism_classes(std::size_t n);

CensusRecord classify(const SimpleGraph& g, const SearchBounds& bounds);

/// Records for every class on exactly n vertices, ordered by canonical key.
std::vector<CensusRecord> run_census(std::size_t n, const SearchBounds& bounds);

/// Fixed column order:
/// canonical_key,n,edges,clique,rep_number,rep_certified,csf_number,csf_exact,
/// csf_reason,csf_certified_up_to_k,rep_witness,csf_witness,k_max,node_budget
std::string census_csv(const std::vector<CensusRecord>& rows);
nlohmann::json census_json(const std::vector<CensusRecord>& rows);
nlohmann::json to_json(const CensusRecord& r);

/// Violations of the per-row invariants (csf >= clique + 1 off complete
/// graphs, rep = 1 iff complete); empty on a consistent table.
std::vector<std::string> census_violations(const std::vector<CensusRecord>& rows);

}  // namespace csfword::harness
