#include "csfword/csf.hpp"

#include <algorithm>
#include <string>

#include "csfword/coded.hpp"
#include "csfword/error.hpp"
#include "csfword/representation.hpp"

namespace csfword {

bool is_p_csf_uniform_representation(const Word& w, const SimpleGraph& g, std::size_t p) {
  if (p == 0 || w.empty()) return false;
  return w.uniformity().has_value() && represents(w, g) && is_p_complete_square_free(w, p);
}

std::string_view to_string(CsfExactness reason) {
  switch (reason) {
    case CsfExactness::none: return "none";
    case CsfExactness::complete_graph: return "complete-graph";
    case CsfExactness::empty_graph: return "empty-graph";
    case CsfExactness::circle_clique: return "circle-clique";
    case CsfExactness::clique_bound: return "clique-bound";
    case CsfExactness::rep_above_three: return "rep-above-three";
  }
  return "none";
}

namespace {

Word sorted_letters(const SimpleGraph& g) {
  return Word(std::vector<Letter>(g.vertices().begin(), g.vertices().end()));
}

}  // namespace

CsfResult csf_uniform_rep_number(const SimpleGraph& g, const SearchBounds& bounds) {
  bounds.validate();
  if (g.vertex_count() == 0) throw PreconditionError("graph has no vertices");
  if (g.vertex_count() > bounds.n_max)
    throw BoundsError(std::to_string(g.vertex_count()) + " vertices exceeds n_max " +
                      std::to_string(bounds.n_max));

  CsfResult r;
  if (g.is_complete()) {
    r.value = 1;
    r.witness = sorted_letters(g);
    r.k_of_witness = 1;
    r.certified_up_to_k = bounds.k_max;
    r.exact = true;
    r.reason = CsfExactness::complete_graph;
    r.lower_bound = 1;
    return r;
  }
  if (g.is_edgeless()) {
    std::vector<Letter> back(g.vertices().rbegin(), g.vertices().rend());
    r.value = 2;
    r.witness = sorted_letters(g) + Word(std::move(back));
    r.k_of_witness = 2;
    r.certified_up_to_k = bounds.k_max;
    r.exact = true;
    r.reason = CsfExactness::empty_graph;
    r.lower_bound = 2;
    return r;
  }

  const DenseGraph d = to_dense(g);
  const std::size_t n = d.size();
  const bool connected = is_connected(g);
  r.lower_bound = clique_number(g) + 1;

  std::size_t best = coded::kNoLimit;
  std::vector<coded::Code> best_codes;
  bool all_complete = true;
  bool none_found_yet = true;
  for (std::size_t k = 1; k <= bounds.k_max; ++k) {
    if (k == 4 && connected && none_found_yet && all_complete)
      r.lower_bound = std::max<std::size_t>(r.lower_bound, 4);

    UniformSearchOptions opt{k, bounds.node_budget, false, false};
    auto stats = search_uniform_representants(d, opt, [&](std::span<const coded::Code> codes) {
      none_found_yet = false;
      // Only strict improvements matter: ask for best - 1 and stop there.
      std::size_t stop = best == coded::kNoLimit ? coded::kNoLimit : best - 1;
      std::size_t half = coded::max_complete_square_half(codes, n, stop);
      if (best != coded::kNoLimit && half >= best - 1) return true;
      best = half + 1;
      best_codes.assign(codes.begin(), codes.end());
      r.k_of_witness = k;
      return best > r.lower_bound;
    });
    const bool hit_bound = best != coded::kNoLimit && best <= r.lower_bound;
    if (!stats.exhausted() && !hit_bound) all_complete = false;
    if (all_complete) r.certified_up_to_k = k;
    if (hit_bound) break;
  }

  if (best == coded::kNoLimit) return r;
  r.value = best;
  r.witness = coded::decode(best_codes, d.labels);
  if (best <= r.lower_bound) {
    r.exact = true;
    r.certified_up_to_k = bounds.k_max;
    if (r.lower_bound > clique_number(g) + 1)
      r.reason = CsfExactness::rep_above_three;
    else if (r.k_of_witness == 2)
      r.reason = CsfExactness::circle_clique;
    else
      r.reason = CsfExactness::clique_bound;
  }
  return r;
}

std::vector<SquareWitness> csf_witnesses(const Word& w, std::size_t half_length) {
  if (half_length == 0) return {};
  return square_witnesses(w, half_length);
}

SquareVertexSurvey p_square_vertex_report(const SimpleGraph& g, std::size_t p,
                                          const SearchBounds& bounds) {
  if (p == 0) throw PreconditionError("p must be >= 1");
  SquareVertexSurvey survey;
  survey.p = p;
  auto actual = csf_uniform_rep_number(g, bounds);
  if (actual.value != p)
    survey.warning = "p = " + std::to_string(p) + " differs from the computed CSF number " +
                     (actual.value ? std::to_string(*actual.value) : std::string("(none)"));

  for (const auto& v : g.vertices()) survey.reports.push_back({v, p >= 2, bounds.k_max, {}});
  if (p < 2) {
    for (auto& rep : survey.reports) rep.is_p_square_vertex_up_to_k = false;
    return survey;
  }

  const DenseGraph d = to_dense(g);
  const std::size_t n = d.size();
  for (std::size_t k = 1; k <= bounds.k_max; ++k) {
    UniformSearchOptions opt{k, bounds.node_budget, false, false};
    auto stats = search_uniform_representants(d, opt, [&](std::span<const coded::Code> codes) {
      if (coded::max_complete_square_half(codes, n, p) >= p) return true;
      ++survey.words_examined;
      coded::LetterMask covered = coded::square_witness_letters(codes, n, p - 1);
      for (std::size_t i = 0; i < n; ++i) {
        auto& rep = survey.reports[i];
        if ((covered & coded::bit(i)) || rep.counterexample_word) continue;
        rep.is_p_square_vertex_up_to_k = false;
        rep.counterexample_word = coded::decode(codes, d.labels);
      }
      return true;
    });
    if (!stats.exhausted()) survey.exhausted = false;
  }
  return survey;
}

namespace {

void require_uniform_representant(const SimpleGraph& g, const Word& w, const std::string& who) {
  if (!w.uniformity()) throw PreconditionError(who + ": word is not uniform");
  if (!represents(w, g)) throw PreconditionError(who + ": word does not represent the graph");
}

std::string first_mismatch(const Word& w, const SimpleGraph& g) {
  auto diag = diagnose_representation(w, g);
  if (!diag.missing_from_word.empty() || !diag.missing_from_graph.empty())
    return "alphabet mismatch";
  if (diag.pairs.empty()) return "no mismatch";
  const auto& p = diag.pairs.front();
  return "pair " + p.x.token() + "," + p.y.token() + " restricts to " + p.restriction.to_string() +
         (p.adjacent_in_graph ? " but is an edge" : " but is a non-edge");
}

}  // namespace

Expansion k2_expand(const SimpleGraph& g, const Letter& v, const Word& w) {
  if (!g.has_vertex(v)) throw PreconditionError("k2_expand: unknown vertex '" + v.token() + "'");
  require_uniform_representant(g, w, "k2_expand");
  if (csf_index(w) <= 2) throw PreconditionError("k2_expand: word must have csf index > 2");

  const Letter a(v.token() + "a"), b(v.token() + "b");
  SimpleGraph module(LetterSet{a, b});
  module.add_edge(a, b);
  Expansion out{substitute_module(g, v, module), {}};
  for (const auto& z : w) {
    if (z == v) {
      out.word.push_back(a);
      out.word.push_back(b);
    } else {
      out.word.push_back(z);
    }
  }
  if (!represents(out.word, out.graph))
    throw ValidationError("k2_expand: " + out.word.to_string() + " fails: " +
                          first_mismatch(out.word, out.graph));
  return out;
}

Expansion twin_expand(const SimpleGraph& g, const Letter& x, const Word& w,
                      const Letter& new_vertex) {
  if (!g.has_vertex(x)) throw PreconditionError("twin_expand: unknown vertex '" + x.token() + "'");
  if (g.has_vertex(new_vertex))
    throw PreconditionError("twin_expand: vertex '" + new_vertex.token() + "' already exists");
  require_uniform_representant(g, w, "twin_expand");
  if (!is_p_complete_square_free(w, 3)) throw PreconditionError("twin_expand: word is not 3-CSF");

  Expansion out{add_vertex_with_neighbours(g, new_vertex, g.neighbors(x)), {}};
  out.word = occurrence_based_map(w, [&](const Letter& y, std::size_t i) {
    if (y != x) return Word({y});
    return i % 2 == 1 ? Word({x, new_vertex}) : Word({new_vertex, x});
  });
  if (!represents(out.word, out.graph))
    throw ValidationError("twin_expand: " + out.word.to_string() + " fails: " +
                          first_mismatch(out.word, out.graph));
  if (auto sq = find_p_complete_square(out.word, 3))
    throw ValidationError("twin_expand: " + out.word.to_string() + " has the square (" +
                          sq->block.to_string() + ")^2 on " + to_string(sq->subset));
  return out;
}

bool apex_removal_check(const SimpleGraph& g, const Letter& v, const Word& w, std::size_t p) {
  if (!g.has_vertex(v)) throw PreconditionError("apex_removal_check: unknown vertex '" + v.token() + "'");
  if (g.vertex_count() < 2) throw PreconditionError("apex_removal_check: graph has a single vertex");
  if (!universal_vertices(g).contains(v))
    throw PreconditionError("apex_removal_check: '" + v.token() + "' is not universal");
  if (p < 2 || !is_p_csf_uniform_representation(w, g, p))
    throw PreconditionError("apex_removal_check: word is not a " + std::to_string(p) +
                            "-CSF uniform representant");
  LetterSet rest = g.vertices();
  rest.erase(v);
  return is_p_csf_uniform_representation(restrict(w, rest), remove_vertex(g, v), p - 1);
}

}  // namespace csfword
