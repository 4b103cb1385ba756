#include "csfword/harness/census.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "csfword/error.hpp"
#include "csfword/isomorphism.hpp"
#include "csfword/representation.hpp"

namespace csfword::harness {

std::string format_word(const Word& w) {
  return w.to_string(w.has_compact_spelling() ? WordFormat::compact : WordFormat::tokens);
}

std::vector<std::string> isomorphism_classes(std::size_t n) {
  if (n > kDefaultIsomorphismBound)
    throw BoundsError("census is limited to " + std::to_string(kDefaultIsomorphismBound) + " vertices");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  std::set<std::string> keys;
  for (unsigned long mask = 0; mask < (1ul << pairs.size()); ++mask) {
    SimpleGraph g = empty_graph(n);
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (mask >> e & 1)
        g.add_edge(Letter(std::to_string(pairs[e].first)), Letter(std::to_string(pairs[e].second)));
    keys.insert(canonical_form(g));
  }
  return {keys.begin(), keys.end()};
}

CensusRecord classify(const SimpleGraph& g, const SearchBounds& bounds) {
  CensusRecord r;
  r.canonical_key = canonical_form(g);
  r.n = g.vertex_count();
  r.edge_count = g.edges().size();
  r.clique_number = clique_number(g);
  r.bounds_used = bounds;
  auto rn = representation_number(g, bounds);
  r.representation_number = rn.k;
  r.representation_certified = rn.certified();
  r.representation_witness = rn.witness;
  auto csf = csf_uniform_rep_number(g, bounds);
  r.csf_uniform_number = csf.value;
  r.csf_exact = csf.exact;
  r.csf_reason = csf.reason;
  r.csf_certified_up_to_k = csf.certified_up_to_k;
  r.csf_witness = csf.witness;
  return r;
}

std::vector<CensusRecord> run_census(std::size_t n, const SearchBounds& bounds) {
  std::vector<CensusRecord> rows;
  for (const auto& key : isomorphism_classes(n)) rows.push_back(classify(graph_from_canonical_key(key), bounds));
  return rows;
}

namespace {

template <class T>
std::string opt(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, Word>)
    return format_word(*v);
  else
    return std::to_string(*v);
}

}  // namespace

std::string census_csv(const std::vector<CensusRecord>& rows) {
  std::ostringstream out;
  out << "canonical_key,n,edges,clique,rep_number,rep_certified,csf_number,csf_exact,csf_reason,"
         "csf_certified_up_to_k,rep_witness,csf_witness,k_max,node_budget\n";
  for (const auto& r : rows) {
    out << r.canonical_key << ',' << r.n << ',' << r.edge_count << ',' << r.clique_number << ','
        << opt(r.representation_number) << ',' << (r.representation_certified ? 1 : 0) << ','
        << opt(r.csf_uniform_number) << ',' << (r.csf_exact ? 1 : 0) << ','
        << to_string(r.csf_reason) << ',' << r.csf_certified_up_to_k << ','
        << opt(r.representation_witness) << ',' << opt(r.csf_witness) << ','
        << r.bounds_used.k_max << ',' << r.bounds_used.node_budget << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const CensusRecord& r) {
  auto value = [](const auto& v) -> nlohmann::json {
    if (!v) return nullptr;
    if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, Word>)
      return format_word(*v);
    else
      return *v;
  };
  return {
      {"canonical_key", r.canonical_key},
      {"n", r.n},
      {"edge_count", r.edge_count},
      {"clique_number", r.clique_number},
      {"representation_number", value(r.representation_number)},
      {"csf_uniform_number", value(r.csf_uniform_number)},
      {"exact_flags",
       {{"representation_certified", r.representation_certified},
        {"csf_exact", r.csf_exact},
        {"csf_reason", std::string(to_string(r.csf_reason))},
        {"csf_certified_up_to_k", r.csf_certified_up_to_k}}},
      {"witness_words",
       {{"representation", value(r.representation_witness)}, {"csf", value(r.csf_witness)}}},
      {"bounds_used",
       {{"k_max", r.bounds_used.k_max},
        {"node_budget", r.bounds_used.node_budget},
        {"n_max", r.bounds_used.n_max}}},
  };
}

nlohmann::json census_json(const std::vector<CensusRecord>& rows) {
  nlohmann::json j = {{"schema", "csfword/1"}, {"rows", nlohmann::json::array()}};
  for (const auto& r : rows) j["rows"].push_back(to_json(r));
  return j;
}

std::vector<std::string> census_violations(const std::vector<CensusRecord>& rows) {
  std::vector<std::string> out;
  for (const auto& r : rows) {
    const bool complete = r.edge_count == r.n * (r.n - 1) / 2;
    if (!complete && r.csf_uniform_number && *r.csf_uniform_number < r.clique_number + 1)
      out.push_back(r.canonical_key + ": csf " + std::to_string(*r.csf_uniform_number) +
                    " below clique + 1");
    if (r.representation_number && (*r.representation_number == 1) != complete)
      out.push_back(r.canonical_key + ": rep = 1 disagrees with completeness");
    if (complete && !r.representation_number)
      out.push_back(r.canonical_key + ": complete graph without representation number");
  }
  return out;
}

}  // namespace csfword::harness
