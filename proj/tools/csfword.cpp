#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "csfword/csf.hpp"
#include "csfword/error.hpp"
#include "csfword/graph_io.hpp"
#include "csfword/harness/census.hpp"
#include "csfword/harness/suites.hpp"
#include "csfword/representation.hpp"
#include "csfword/squares.hpp"

using namespace csfword;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kInconclusive = 3, kInvalid = 4 };

struct Options {
  std::string word;
  std::string word_file;
  std::string graph;
  bool compact = false;
  bool tokens = false;
  std::size_t k_max = 3;
  std::size_t n_max = 5;
  std::uint64_t budget = 0;
  std::string format;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string s) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && is_space(s[i])) ++i;
  return s.substr(i);
}

// Whitespace-free text is read one character per letter unless --tokens.
Word parse_word_text(const std::string& text, const Options& o) {
  std::string t = trim(text);
  bool compact = o.compact || (!o.tokens && t.find_first_of(" \t\n\r") == std::string::npos);
  return Word::parse(t, compact ? WordFormat::compact : WordFormat::tokens);
}

Word input_word(const Options& o) {
  if (!o.word.empty()) return parse_word_text(o.word, o);
  if (!o.word_file.empty()) return parse_word_text(slurp(o.word_file), o);
  throw PreconditionError("a word is required (--word or --word-file)");
}

// A file path, or a generator spec such as cycle:5, crown:4, complete:3.
SimpleGraph input_graph(const Options& o) {
  if (o.graph.empty()) throw PreconditionError("a graph is required (--graph)");
  static const std::regex spec(R"((complete|empty|path|cycle|crown|star):(\d+))");
  std::smatch m;
  if (std::ifstream probe(o.graph); !probe && std::regex_match(o.graph, m, spec)) {
    std::size_t n = std::stoul(m[2]);
    const std::string kind = m[1];
    if (kind == "complete") return complete_graph(n);
    if (kind == "empty") return empty_graph(n);
    if (kind == "path") return path_graph(n);
    if (kind == "cycle") return cycle_graph(n);
    if (kind == "crown") return crown_graph(n);
    return star_graph(n);
  }
  return read_graph_file(o.graph);
}

SearchBounds bounds_of(const Options& o) {
  SearchBounds b;
  b.k_max = o.k_max;
  b.n_max = o.n_max;
  b = SearchBounds::with_env_budget(b);
  if (o.budget) b.node_budget = o.budget;
  return b;
}

json bounds_json(const SearchBounds& b) {
  return {{"k_max", b.k_max}, {"n_max", b.n_max}, {"node_budget", b.node_budget}};
}

json word_json(const std::optional<Word>& w) {
  return w ? json(harness::format_word(*w)) : json(nullptr);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Error("cannot write '" + o.out + "'");
  f << text;
}

void emit(const Options& o, const json& j) { emit(o, j.dump(2) + "\n"); }

json witness_json(const SquareWitness& w) {
  return {{"subset", to_string(w.subset)}, {"start", w.start}, {"block", harness::format_word(w.block)}};
}

int cmd_analyze(const Options& o) {
  Word w = input_word(o);
  json j = {{"schema", "csfword/1"}, {"command", "analyze-word"}, {"word", harness::format_word(w)}};
  j["length"] = w.size();
  std::vector<std::string> alpha;
  for (const auto& x : w.alphabet()) alpha.push_back(x.token());
  j["alphabet"] = alpha;
  json profile = json::object();
  for (const auto& [x, c] : w.multiplicity_profile()) profile[x.token()] = c;
  j["multiplicity_profile"] = profile;
  j["uniformity"] = w.uniformity() ? json(*w.uniformity()) : json(nullptr);
  j["graph"] = graph_to_json(graph_of_word(w));

  auto sq = find_square_factor(w);
  j["square_factor"] = sq ? json{{"start", sq->start}, {"half_length", sq->half_length}} : json(nullptr);
  auto lsq = longest_square_factor(w);
  j["longest_square_factor"] =
      lsq ? json{{"start", lsq->start}, {"half_length", lsq->half_length}} : json(nullptr);
  auto border = find_border(w);
  j["border"] = border ? json(*border) : json(nullptr);

  const std::size_t csf = csf_index(w);
  j["csf_index"] = csf;
  json per_half = json::array();
  for (std::size_t h = 1; h < csf; ++h) {
    json ws = json::array();
    for (const auto& wit : csf_witnesses(w, h)) ws.push_back(witness_json(wit));
    per_half.push_back({{"half_length", h}, {"witnesses", ws}});
  }
  j["witnesses"] = per_half;
  emit(o, j);
  return kOk;
}

int cmd_check(const Options& o) {
  Word w = input_word(o);
  SimpleGraph g = input_graph(o);
  auto d = diagnose_representation(w, g);
  json pairs = json::array();
  for (const auto& p : d.pairs)
    pairs.push_back({{"x", p.x.token()},
                     {"y", p.y.token()},
                     {"adjacent_in_graph", p.adjacent_in_graph},
                     {"restriction", harness::format_word(p.restriction)}});
  auto tokens = [](const LetterSet& s) {
    std::vector<std::string> out;
    for (const auto& x : s) out.push_back(x.token());
    return out;
  };
  json j = {{"schema", "csfword/1"},
            {"command", "check"},
            {"word", harness::format_word(w)},
            {"represents", d.ok()},
            {"missing_from_word", tokens(d.missing_from_word)},
            {"missing_from_graph", tokens(d.missing_from_graph)},
            {"pairs", pairs}};
  emit(o, j);
  return d.ok() ? kOk : kFailure;
}

int cmd_rep_number(const Options& o) {
  SimpleGraph g = input_graph(o);
  auto b = bounds_of(o);
  auto r = representation_number(g, b);
  json attempts = json::array();
  for (const auto& a : r.attempts)
    attempts.push_back({{"k", a.k}, {"found", a.word.has_value()}, {"exhausted", a.exhausted}, {"nodes", a.nodes}});
  json j = {{"schema", "csfword/1"},
            {"command", "rep-number"},
            {"value", r.k ? json(*r.k) : json(nullptr)},
            {"witness", word_json(r.witness)},
            {"certified", r.certified()},
            {"attempts", attempts},
            {"bounds", bounds_json(b)}};
  emit(o, j);
  return r.k ? kOk : kInconclusive;
}

int cmd_csf_number(const Options& o) {
  SimpleGraph g = input_graph(o);
  auto b = bounds_of(o);
  auto r = csf_uniform_rep_number(g, b);
  json j = {{"schema", "csfword/1"},
            {"command", "csf-number"},
            {"value", r.value ? json(*r.value) : json(nullptr)},
            {"witness", word_json(r.witness)},
            {"k_of_witness", r.k_of_witness},
            {"certified_up_to_k", r.certified_up_to_k},
            {"exact", r.exact},
            {"reason", std::string(to_string(r.reason))},
            {"lower_bound", r.lower_bound},
            {"bounds", bounds_json(b)}};
  emit(o, j);
  return r.value ? kOk : kInconclusive;
}

int cmd_construct(const Options& o, const std::string& kind, const std::vector<std::string>& words,
                  const std::string& vertex, const std::string& new_vertex) {
  Word w;
  SimpleGraph g;
  if (kind == "k2-expand" || kind == "twin-expand") {
    if (vertex.empty()) throw PreconditionError(kind + " needs --vertex");
    Word in = input_word(o);
    SimpleGraph gin = input_graph(o);
    Expansion e = kind == "k2-expand"
                      ? k2_expand(gin, Letter(vertex), in)
                      : twin_expand(gin, Letter(vertex), in, Letter(new_vertex.empty() ? vertex + "'" : new_vertex));
    w = e.word;
    g = e.graph;
  } else if (kind == "tm3-join") {
    if (words.empty()) throw PreconditionError("tm3-join needs component words");
    std::vector<Word> parts;
    for (const auto& t : words) parts.push_back(parse_word_text(t, o));
    w = tm3_join(parts);
    g = graph_of_word(w);
  } else if (kind == "border-free" || kind == "square-free") {
    g = input_graph(o);
    w = kind == "border-free" ? border_free_representation(g, bounds_of(o))
                              : square_free_representation(g, bounds_of(o));
  } else {
    throw PreconditionError("unknown construction '" + kind + "'");
  }

  // Round trip before anything is written.
  Word reparsed = parse_word_text(harness::format_word(w), o);
  if (reparsed != w || !represents(reparsed, g))
    throw ValidationError(kind + ": emitted word does not re-validate");

  json j = {{"schema", "csfword/1"},
            {"command", "construct"},
            {"kind", kind},
            {"word", harness::format_word(w)},
            {"graph", graph_to_json(g)}};
  if (o.out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream(o.out + ".word") << harness::format_word(w) << "\n";
    std::ofstream(o.out + ".graph") << format_graph(g);
    std::ofstream(o.out + ".json") << j.dump(2) << "\n";
  }
  return kOk;
}

int cmd_census(const Options& o) {
  auto b = bounds_of(o);
  auto rows = harness::run_census(b.n_max, b);
  if (o.format == "json")
    emit(o, harness::census_json(rows));
  else
    emit(o, harness::census_csv(rows));
  return kOk;
}

int cmd_verify(const Options& o, const std::string& suite, bool timing) {
  auto b = bounds_of(o);
  std::vector<std::string> names;
  if (suite == "all")
    names = harness::suite_names();
  else
    names.push_back(suite);
  bool ok = true;
  std::string text;
  for (const auto& name : names) {
    auto r = harness::run_suite(name, b);
    ok = ok && r.ok();
    std::string line = harness::to_json(r, timing).dump() + "\n";
    if (o.out.empty())
      std::cout << line << std::flush;
    else
      text += line;
  }
  if (!o.out.empty()) emit(o, text);
  return ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"csfword: p-complete square-free word-representations of graphs"};
  app.require_subcommand(1);
  Options o;

  auto word_opts = [&](CLI::App* c) {
    c->add_option("--word", o.word, "Word text");
    c->add_option("--word-file", o.word_file, "File holding the word");
    c->add_flag("--compact", o.compact, "One character per letter (apostrophes bind left)");
    c->add_flag("--tokens", o.tokens, "Whitespace-separated letters");
  };
  auto bound_opts = [&](CLI::App* c) {
    c->add_option("--k-max", o.k_max, "Largest uniformity to try")->check(CLI::PositiveNumber);
    c->add_option("--n-max", o.n_max, "Largest vertex count for exhaustive routines")->check(CLI::PositiveNumber);
    c->add_option("--budget", o.budget, "Backtracking node budget (default 1e8, or CSFWORD_BUDGET)");
  };
  auto graph_opt = [&](CLI::App* c) {
    c->add_option("--graph", o.graph, "Graph file (text or JSON) or generator such as cycle:5");
  };
  auto out_opt = [&](CLI::App* c) { c->add_option("--out", o.out, "Output file"); };

  auto* analyze = app.add_subcommand("analyze-word", "Squares, borders, alternation graph and csf index of a word");
  word_opts(analyze);
  out_opt(analyze);

  auto* check = app.add_subcommand("check", "Does the word represent the graph?");
  word_opts(check);
  graph_opt(check);
  out_opt(check);

  auto* rep = app.add_subcommand("rep-number", "Representation number within bounds");
  graph_opt(rep);
  bound_opts(rep);
  out_opt(rep);

  auto* csf = app.add_subcommand("csf-number", "Complete square-free uniform representation number");
  graph_opt(csf);
  bound_opts(csf);
  out_opt(csf);

  std::string kind, vertex, new_vertex;
  std::vector<std::string> words;
  auto* construct = app.add_subcommand("construct", "k2-expand | twin-expand | tm3-join | border-free | square-free");
  construct->add_option("kind", kind, "Construction")->required();
  construct->add_option("words", words, "Component words for tm3-join");
  construct->add_option("--vertex", vertex, "Vertex to expand");
  construct->add_option("--new-vertex", new_vertex, "Label of the twin (default: vertex + \"'\")");
  word_opts(construct);
  graph_opt(construct);
  bound_opts(construct);
  construct->add_option("--out", o.out, "Output prefix (writes .word, .graph and .json)");

  auto* census = app.add_subcommand("census", "Classify every graph on exactly --n-max vertices up to isomorphism");
  bound_opts(census);
  census->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  out_opt(census);

  std::string suite = "all";
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run property suites");
  verify->add_option("suite", suite, "Suite name or all");
  verify->add_flag("--timing", timing, "Include runtimes");
  bound_opts(verify);
  out_opt(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*check) return cmd_check(o);
    if (*rep) return cmd_rep_number(o);
    if (*csf) return cmd_csf_number(o);
    if (*construct) return cmd_construct(o, kind, words, vertex, new_vertex);
    if (*census) {
      if (o.n_max > 6) throw BoundsError("census supports at most 6 vertices");
      return cmd_census(o);
    }
    if (*verify) {
      const auto& names = harness::suite_names();
      if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "unknown suite '" << suite << "'; available: all";
        for (const auto& n : names) std::cerr << ' ' << n;
        std::cerr << '\n';
        return kParse;
      }
      return cmd_verify(o, suite, timing);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << (e.line() ? "line " + std::to_string(e.line()) : "offset " + std::to_string(e.position()))
              << ": " << e.what() << '\n';
    return kParse;
  } catch (const ValidationError& e) {
    std::cerr << "validation failed: " << e.what() << '\n';
    return kInvalid;
  } catch (const BoundsError& e) {
    std::cerr << "out of bounds: " << e.what() << '\n';
    return kInconclusive;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  }
  return kFailure;
}
