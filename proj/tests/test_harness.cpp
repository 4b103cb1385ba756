#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "csfword/error.hpp"
#include "csfword/harness/census.hpp"
#include "csfword/harness/oracle.hpp"
#include "csfword/harness/suites.hpp"

using namespace csfword;

TEST_CASE("oracle sanity") {
  const oracle::Tokens w{"2", "3", "1", "2", "3", "4", "1", "4"};
  CHECK(oracle::csf_index(w) == 4);
  CHECK(oracle::longest_complete_square(w) == 3);
  CHECK(oracle::alternate(w, "1", "4"));
  CHECK_FALSE(oracle::alternate({"1", "1", "2", "2"}, "1", "2"));
  CHECK(oracle::shortest_border({"a", "b", "c", "a", "b"}) == 2);
  CHECK(oracle::shortest_border({"1", "1", "2", "2"}) == 0);
  CHECK(oracle::restrict_tokens(w, {"1", "4"}) == oracle::Tokens{"1", "4", "1", "4"});
  CHECK(oracle::alternation_edges(w).size() == 4);
}

TEST_CASE("census rows") {
  auto rows = harness::run_census(4, SearchBounds{});
  REQUIRE(rows.size() == 11);
  CHECK(std::is_sorted(rows.begin(), rows.end(),
                       [](const auto& a, const auto& b) { return a.canonical_key < b.canonical_key; }));
  CHECK(harness::census_violations(rows).empty());
  for (const auto& r : rows) {
    CHECK(r.n == 4);
    REQUIRE(r.csf_uniform_number);
    CHECK((r.csf_uniform_number == 1u) == (r.edge_count == 6));
  }

  std::istringstream csv(harness::census_csv(rows));
  std::string header;
  std::getline(csv, header);
  CHECK(header ==
        "canonical_key,n,edges,clique,rep_number,rep_certified,csf_number,csf_exact,csf_reason,"
        "csf_certified_up_to_k,rep_witness,csf_witness,k_max,node_budget");
  std::size_t lines = 0;
  for (std::string line; std::getline(csv, line);) ++lines;
  CHECK(lines == 11);

  auto j = harness::census_json(rows);
  CHECK(j["schema"] == "csfword/1");
  CHECK(j["rows"].size() == 11);
}

TEST_CASE("format_word") {
  CHECK(harness::format_word(Word::parse("1 2 3'")) == "123'");
  CHECK(harness::format_word(Word::parse("v1 v2")) == "v1 v2");
}

TEST_CASE("suite registry") {
  const auto& names = harness::suite_names();
  CHECK(names.size() == 12);
  CHECK(std::find(names.begin(), names.end(), "oracle") != names.end());
  CHECK_THROWS_AS(harness::run_suite("no-such-suite", SearchBounds{}), PreconditionError);

  auto report = harness::run_suite("cor1", SearchBounds{});
  CHECK(report.ok());
  CHECK(report.cases_run > 0);
  auto j = harness::to_json(report, false);
  CHECK(j["suite"] == "cor1");
  CHECK_FALSE(j.contains("runtime_seconds"));
}
