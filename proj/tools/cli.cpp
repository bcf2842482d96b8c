#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "catalog.hpp"
#include "cluster/automorphism_group.hpp"
#include "cluster/errors.hpp"
#include "cluster/io.hpp"
#include "cluster/mutation_class.hpp"
#include "cluster/parity.hpp"
#include "cluster/similarity.hpp"
#include "suites.hpp"

namespace clusterx {

using namespace cluster;
using io::Json;

namespace {

struct RunConfig {
  std::size_t max_seeds = 20000;
  std::size_t max_depth = 64;
  std::uint64_t rng_seed = 1;
  std::string format = "text";
  std::string output;
  bool verbose_labels = false;
};

/// A document is a file path, "-" for stdin, "type:NAME" for a built-in, or
/// literal JSON starting with '{'.
io::ParsedInput load(const std::string& source, std::istream& in) {
  if (source.rfind("type:", 0) == 0) {
    auto b = named_matrix(source.substr(5));
    if (!b) throw InvalidInput("unknown built-in type \"" + source.substr(5) + "\"");
    return {*b, std::nullopt};
  }
  if (!source.empty() && source.front() == '{') return io::parse_input(source);
  std::stringstream buffer;
  if (source == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(source);
    if (!file) throw ParseError("cannot read \"" + source + "\"");
    buffer << file.rdbuf();
  }
  return io::parse_input(buffer.str());
}

MutationWord parse_word(const std::string& text, std::size_t n) {
  MutationWord w;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(token, &used);
    } catch (const std::exception&) {
      throw ParseError("bad mutation direction \"" + token + "\"");
    }
    if (used != token.size()) throw ParseError("bad mutation direction \"" + token + "\"");
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw IndexOutOfRange("mutation direction " + token + " outside 1.." + std::to_string(n));
    }
    w.push_back(static_cast<std::size_t>(v - 1));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '[' || c == ']') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return w;
}

std::string summary_line(const MutationClassGraph& g) {
  return "labeled=" + std::to_string(g.size()) + " clusters=" + std::to_string(unlabeled_cluster_count(g)) +
         " variables=" + std::to_string(cluster_variables(g).size()) +
         " complete=" + (g.complete() ? "true" : "false") +
         " positive=" + (verify_positivity(g) ? "true" : "false");
}

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (c.format == f) return;
  }
  throw InvalidInput("format \"" + c.format + "\" is not available for this command");
}

int cmd_mutate(const RunConfig& c, const io::ParsedInput& input, const std::string& word_text, std::ostream& out) {
  require_format(c, {"text", "json"});
  const MutationWord w = parse_word(word_text, input.matrix.rank());
  ExchangeMatrix b = input.matrix;
  for (std::size_t k : w) b = mutate_matrix(b, k);
  if (c.format == "text") {
    out << b.to_string() << "\n";
  } else if (input.quiver) {
    ValuedQuiver q = *input.quiver;
    for (std::size_t k : w) q = mutate_quiver(q, k);
    out << io::quiver_to_json(q).dump(2) << "\n";
  } else {
    out << io::matrix_to_json(b).dump(2) << "\n";
  }
  return kOk;
}

int cmd_explore(const RunConfig& c, const io::ParsedInput& input, std::ostream& out) {
  require_format(c, {"text", "json", "dot"});
  const auto g = explore(initial_seed(input.matrix), ExploreLimits{c.max_seeds, c.max_depth});
  if (c.format == "text") {
    out << summary_line(g) << "\n";
  } else if (c.format == "dot") {
    out << io::graph_to_dot(g, c.verbose_labels);
  } else {
    Json j{{"summary", summary_line(g)}, {"graph", io::graph_to_json(g)}};
    out << j.dump(2) << "\n";
  }
  return kOk;
}

int cmd_autgroup(const RunConfig& c, const io::ParsedInput& input, std::ostream& out) {
  require_format(c, {"text", "json"});
  const auto g = explore(initial_seed(input.matrix), ExploreLimits{c.max_seeds, c.max_depth});
  const GroupTable t = automorphism_group(g);
  if (c.format == "json") {
    out << io::group_to_json(t).dump(2) << "\n";
    return kOk;
  }
  out << "order=" << t.order() << "\n";
  out << "generators=";
  for (std::size_t i = 0; i < t.generators.size(); ++i) out << (i ? "," : "") << t.generators[i].name;
  out << "\n";
  for (const auto& rel : detect_relations(t)) out << rel << "\n";
  return kOk;
}

int cmd_certify(const RunConfig& c, const io::ParsedInput& start, const io::ParsedInput& target, std::ostream& out) {
  require_format(c, {"text", "json"});
  if (auto cert = certify_unreachable(start.matrix, target.matrix)) {
    if (c.format == "json") {
      out << Json{{"verdict", "certified"}, {"certificate", io::certificate_to_json(*cert)}}.dump(2) << "\n";
    } else {
      out << "verdict=certified pattern=" << cert->pattern.to_string() << "\n";
      for (const auto& s : cert->closure_proof) {
        out << "mu" << s.k + 1 << " (" << s.i + 1 << "," << s.j + 1 << "): " << s.describe() << "\n";
      }
    }
    return kOk;
  }
  const auto bfs = bounded_reachability(start.matrix, target.matrix, c.max_depth, c.max_seeds);
  if (bfs.reached) {
    if (c.format == "json") {
      Json word = Json::array();
      for (std::size_t k : bfs.word) word.push_back(k + 1);
      out << Json{{"verdict", "reached"}, {"word", word}}.dump(2) << "\n";
    } else {
      out << "verdict=reached word=" << word_to_string(bfs.word) << "\n";
    }
  } else {
    const char* verdict = bfs.exhausted ? "unreachable" : "unknown";
    if (c.format == "json") {
      out << Json{{"verdict", verdict}, {"states", bfs.states}}.dump(2) << "\n";
    } else {
      out << "verdict=" << verdict << " states=" << bfs.states << "\n";
    }
  }
  return kOk;
}

int cmd_similar(const RunConfig& c, const io::ParsedInput& a, const io::ParsedInput& b, std::ostream& out) {
  require_format(c, {"text", "json"});
  const auto witnesses = find_similarities(a.matrix, b.matrix);
  if (c.format == "json") {
    Json list = Json::array();
    for (const auto& w : witnesses) {
      Json images = Json::array();
      for (std::size_t i = 0; i < w.sigma.size(); ++i) images.push_back(w.sigma(i) + 1);
      list.push_back({{"sigma", images}, {"epsilon", w.epsilon}});
    }
    out << Json{{"similar", !witnesses.empty()}, {"witnesses", list}}.dump(2) << "\n";
    return kOk;
  }
  if (witnesses.empty()) out << "none\n";
  for (const auto& w : witnesses) {
    out << "sigma=" << w.sigma.to_string() << " epsilon=" << (w.epsilon > 0 ? "+1" : "-1") << "\n";
  }
  return kOk;
}

int cmd_verify(const RunConfig& c, const std::string& suite, std::size_t trials, std::ostream& out) {
  require_format(c, {"text", "json"});
  const auto reports = run_suite(suite, SuiteOptions{c.rng_seed, trials});
  bool ok = true;
  Json list = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    if (c.format == "json") {
      list.push_back({{"suite", r.name}, {"pass", r.ok()}, {"passed", r.passed}, {"total", r.total}, {"notes", r.notes}});
    } else {
      out << r.name << ": " << (r.ok() ? "pass" : "FAIL") << " " << r.passed << "/" << r.total << "\n";
      for (const auto& note : r.notes) out << "  " << note << "\n";
    }
  }
  if (c.format == "json") out << list.dump(2) << "\n";
  return ok ? kOk : kVerificationFailed;
}

int cmd_expand(const RunConfig& c, const io::ParsedInput& input, const std::string& word_text, std::ostream& out) {
  require_format(c, {"text", "json"});
  const Seed s = apply_word(initial_seed(input.matrix), parse_word(word_text, input.matrix.rank()));
  if (c.format == "json") {
    out << io::seed_to_json(s).dump(2) << "\n";
    return kOk;
  }
  out << "matrix=" << s.matrix.to_string() << "\n";
  for (std::size_t i = 0; i < s.rank(); ++i) out << "x" << i + 1 << " = " << normal_form(s.cluster[i]).to_string() << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cluster algebra seed mutation toolkit", "clusterx"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig config;
  app.add_option("--max-seeds", config.max_seeds, "Seed (or matrix state) cap for explorations")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-depth", config.max_depth, "Depth cap for explorations")->check(CLI::PositiveNumber);
  app.add_option("--rng-seed", config.rng_seed, "Seed for randomized suites");
  app.add_option("--format", config.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--output", config.output, "Write to FILE instead of stdout");
  app.add_flag("--verbose-labels", config.verbose_labels, "Embed clusters in DOT node labels");
  std::string type;
  app.add_option("--type", type, "Built-in input (" + [] {
    std::string s;
    for (const auto& n : catalog_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }() + ")");

  std::string input = "-", second, word, suite;
  std::size_t trials = 0;
  auto* mutate = app.add_subcommand("mutate", "Mutate a quiver or matrix along a word");
  mutate->add_option("input", input, "Input document (default stdin)");
  mutate->add_option("--word,-w", word, "1-based directions, e.g. 2,1");
  auto* explore_cmd = app.add_subcommand("explore", "Explore the mutation class");
  explore_cmd->add_option("input", input, "Input document (default stdin)");
  auto* autgroup = app.add_subcommand("autgroup", "Cluster automorphism group of a finite class");
  autgroup->add_option("input", input, "Input document (default stdin)");
  auto* certify = app.add_subcommand("certify", "Certify or refute reachability between two matrices");
  certify->add_option("start", input, "Start document")->required();
  certify->add_option("target", second, "Target document")->required();
  auto* similar = app.add_subcommand("similar", "List sigma-similarity witnesses");
  similar->add_option("first", input, "First document")->required();
  similar->add_option("second", second, "Second document")->required();
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name or all")->required();
  verify->add_option("--trials", trials, "Trial count for randomized suites");
  auto* expand = app.add_subcommand("expand", "Cluster at a word, in the initial variables");
  expand->add_option("input", input, "Input document (default stdin)");
  expand->add_option("--word,-w", word, "1-based directions, e.g. 2,1");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  std::ostringstream buffer;
  try {
    auto primary = [&] { return load(type.empty() || input != "-" ? input : "type:" + type, in); };
    int code = kOk;
    if (mutate->parsed()) {
      code = cmd_mutate(config, primary(), word, buffer);
    } else if (explore_cmd->parsed()) {
      code = cmd_explore(config, primary(), buffer);
    } else if (autgroup->parsed()) {
      code = cmd_autgroup(config, primary(), buffer);
    } else if (certify->parsed()) {
      code = cmd_certify(config, load(input, in), load(second, in), buffer);
    } else if (similar->parsed()) {
      code = cmd_similar(config, load(input, in), load(second, in), buffer);
    } else if (verify->parsed()) {
      code = cmd_verify(config, suite, trials, buffer);
    } else if (expand->parsed()) {
      code = cmd_expand(config, primary(), word, buffer);
    }
    if (config.output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(config.output);
      if (!file) throw InvalidInput("cannot write \"" + config.output + "\"");
      file << buffer.str();
    }
    return code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const InfiniteOrTruncatedClass& e) {
    err << "limits exceeded: " << e.what() << "\n";
    return kLimitsExceeded;
  } catch (const IncompleteGraph& e) {
    err << "limits exceeded: " << e.what() << "\n";
    return kLimitsExceeded;
  } catch (const LaurentPhenomenonViolation& e) {
    err << "verification failure: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace clusterx
