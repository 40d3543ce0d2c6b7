#ifndef GDSPREAD_TOOLS_CLI_APP_HPP
#define GDSPREAD_TOOLS_CLI_APP_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gdspread/gdspread.hpp"
#include "gdspread/report.hpp"

#ifndef GDSPREAD_CORPUS_DIR
#define GDSPREAD_CORPUS_DIR "corpora"
#endif

namespace gdspread::cli {

enum ExitCode : int { ok = 0, internal = 1, input_error = 2, precondition = 3, violation = 4 };

struct NamedGraph {
  std::string kind;    // graph6 | family | edge_list
  std::string source;  // text as given, or path[:line]
  Graph graph;
};

inline bool looks_like_family(const std::string &s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    return false;
  static const std::vector<std::string> names{"complete", "K",    "kbip",  "complete_bipartite",
                                              "split",    "complete_split", "path", "cycle", "star"};
  return std::find(names.begin(), names.end(), s.substr(0, colon)) != names.end();
}

/// A graph6 string, a family spec such as "kbip:2,3", or a file holding
/// either an edge list (first token is the vertex count) or graph6 lines.
inline std::vector<NamedGraph> resolve_input(const std::string &input) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) {
    std::ifstream in(input);
    if (!in)
      throw IoError("cannot read '" + input + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && std::isdigit(static_cast<unsigned char>(text[first])))
      return {{"edge_list", input, parse_edge_list(text)}};
    std::istringstream lines(text);
    std::vector<NamedGraph> out;
    for (auto &g : parse_corpus(lines))
      out.push_back({"graph6", input, std::move(g)});
    if (out.empty())
      throw ParseError("no graphs in '" + input + "'", 0);
    return out;
  }
  if (looks_like_family(input))
    return {{"family", input, generate(parse_family_spec(input))}};
  return {{"graph6", input, parse_graph6(input)}};
}

/// --tol beats SPREAD_TOL, which beats the built-in default.
inline Tolerances resolve_tolerances(const std::optional<double> &flag) {
  Tolerances tol;
  if (const char *env = std::getenv("SPREAD_TOL"); env && *env) {
    char *end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0))
      throw ParseError("SPREAD_TOL is not a positive number: '" + std::string(env) + "'", 0);
    tol.holds = v;
  }
  if (flag) {
    if (!(*flag > 0.0))
      throw PreconditionError("--tol must be positive");
    tol.holds = *flag;
  }
  return tol;
}

inline Json input_json(const NamedGraph &ng) {
  return {{"kind", ng.kind}, {"source", ng.source}, {"graph6", encode_graph6(ng.graph)}};
}

inline void require_connected(const NamedGraph &ng) {
  if (!is_connected(ng.graph))
    throw PreconditionError("input '" + ng.source + "' is disconnected; a connected graph is required");
}

inline std::string fmt12(double x) {
  const auto j = json_number(x);
  return j.is_null() ? "nan" : j.dump();
}

struct AnalyzeArgs {
  std::string input;
  std::vector<double> alphas;
  std::string format = "json";
  bool invariants = false;
};

inline int cmd_analyze(const AnalyzeArgs &a, std::ostream &out) {
  const auto graphs = resolve_input(a.input);
  for (double alpha : a.alphas)
    check_alpha(alpha);
  auto docs = Json::array();
  for (const auto &ng : graphs) {
    require_connected(ng);
    const auto p = distance_profile(ng.graph);
    Json doc = {
        {"schema_version", kSchemaVersion},
        {"input", input_json(ng)},
        {"n", p.n},
        {"edges", ng.graph.size()},
        {"wiener", p.wiener},
        {"diameter", p.diameter},
        {"tr_min", p.tr_min()},
        {"tr_max", p.tr_max()},
        {"transmissions", p.transmission},
        {"transmission_regular", nullptr},
        {"bipartite", is_bipartite(ng.graph).has_value()},
    };
    if (auto k = is_transmission_regular(p))
      doc["transmission_regular"] = *k;
    if (a.invariants) {
      doc["clique_number"] = clique_number(ng.graph).size;
      doc["independence_number"] = independence_number(ng.graph).size;
    }
    auto analyses = Json::array();
    for (double alpha : a.alphas) {
      const auto values = sym_eigenvalues(generalized_distance_matrix(p, alpha));
      analyses.push_back({{"alpha", json_number(alpha)},
                          {"spectrum", json_numbers(values)},
                          {"spread", json_number(spectral_spread(values))},
                          {"radius", json_number(values.front())},
                          {"smallest", json_number(values.back())}});
      if (a.format == "tsv") {
        out << encode_graph6(ng.graph) << '\t' << fmt12(alpha) << '\t' << fmt12(spectral_spread(values)) << '\t'
            << fmt12(values.front()) << '\t' << fmt12(values.back()) << '\t';
        for (std::size_t i = 0; i < values.size(); ++i)
          out << (i ? "," : "") << fmt12(values[i]);
        out << '\n';
      }
    }
    doc["analyses"] = std::move(analyses);
    docs.push_back(std::move(doc));
  }
  if (a.format == "json")
    out << (docs.size() == 1 ? docs[0] : docs).dump(2) << '\n';
  return ok;
}

struct BoundsArgs {
  std::string input;
  double alpha = 0.0;
  std::optional<double> tol;
  std::string format = "json";
};

inline int cmd_bounds(const BoundsArgs &a, std::ostream &out) {
  const auto graphs = resolve_input(a.input);
  check_alpha(a.alpha);
  const auto tol = resolve_tolerances(a.tol);
  bool violated = false;
  auto docs = Json::array();
  for (const auto &ng : graphs) {
    require_connected(ng);
    BoundContext ctx(ng.graph, a.alpha, tol);
    const auto eval = evaluate_all(ctx);
    violated = violated || eval.any_violation();
    if (a.format == "tsv") {
      out << "# " << encode_graph6(ng.graph) << " alpha=" << fmt12(a.alpha) << " spread=" << fmt12(ctx.spread())
          << '\n';
      for (const auto &r : eval.reports)
        out << r.bound_id << '\t' << to_string(r.direction) << '\t' << (r.applicable ? "applicable" : "inapplicable")
            << '\t' << fmt12(r.bound) << '\t' << fmt12(r.actual) << '\t' << fmt12(r.gap) << '\t'
            << (r.applicable ? (r.holds ? "holds" : "VIOLATED") : "-") << '\t' << (r.equality ? "equality" : "-")
            << '\t' << r.reason << '\n';
      for (const auto &d : eval.discrepancies)
        out << "# discrepancy " << d.id << " claimed=" << fmt12(d.claimed) << " numeric=" << fmt12(d.numeric) << " "
            << d.note << '\n';
      continue;
    }
    auto reports = Json::array();
    std::size_t violations = 0;
    for (const auto &r : eval.reports) {
      reports.push_back(to_json(r));
      violations += r.violated() ? 1 : 0;
    }
    auto disc = Json::array();
    for (const auto &d : eval.discrepancies)
      disc.push_back(to_json(d));
    docs.push_back({{"schema_version", kSchemaVersion},
                    {"input", input_json(ng)},
                    {"n", ctx.n()},
                    {"alpha", json_number(a.alpha)},
                    {"tolerance", json_number(tol.holds)},
                    {"spectrum", json_numbers(ctx.spectrum())},
                    {"spread", json_number(ctx.spread())},
                    {"bounds", reports},
                    {"violation_count", violations},
                    {"discrepancies", disc}});
  }
  if (a.format == "json")
    out << (docs.size() == 1 ? docs[0] : docs).dump(2) << '\n';
  return violated ? violation : ok;
}

struct SweepArgs {
  std::vector<std::string> corpora;
  std::string seed_random;  // "n,count,p"
  std::uint64_t seed = 1;
  std::vector<double> alphas;
  std::optional<double> tol;
  unsigned threads = 1;
};

inline int cmd_sweep(const SweepArgs &a, std::ostream &out) {
  std::vector<Graph> graphs;
  for (const auto &path : a.corpora) {
    auto part = load_corpus(path);
    graphs.insert(graphs.end(), part.begin(), part.end());
  }
  if (!a.seed_random.empty()) {
    int n = 0;
    int count = 0;
    double p = 0.0;
    char c1 = 0;
    char c2 = 0;
    std::istringstream ss(a.seed_random);
    if (!(ss >> n >> c1 >> count >> c2 >> p) || c1 != ',' || c2 != ',' || !ss.eof())
      throw ParseError("--seed-random expects n,count,p", 0);
    for (int k = 0; k < count; ++k)
      graphs.push_back(random_connected_graph(n, p, a.seed + static_cast<std::uint64_t>(k)));
  }
  SweepOptions opt;
  opt.tol = resolve_tolerances(a.tol);
  opt.threads = a.threads;
  const auto summary = sweep(graphs, a.alphas, opt);
  auto doc = to_json(summary);
  doc["alphas"] = json_numbers(a.alphas);
  out << doc.dump(2) << '\n';
  return summary.clean() ? ok : violation;
}

struct ConjectureArgs {
  int n = 0;
  std::string corpus;
  std::vector<double> alphas;
};

inline int cmd_conjecture(const ConjectureArgs &a, std::ostream &out) {
  const std::string path =
      a.corpus.empty() ? std::string(GDSPREAD_CORPUS_DIR) + "/bipartite_connected_n" + std::to_string(a.n) + ".g6"
                       : a.corpus;
  const auto graphs = load_corpus(path);
  auto results = Json::array();
  for (double alpha : a.alphas)
    results.push_back(to_json(check_balanced_bipartite_minimum(graphs, a.n, alpha)));
  out << Json{{"schema_version", kSchemaVersion}, {"corpus", path}, {"results", results}}.dump(2) << '\n';
  return ok;
}

inline const std::vector<double> &default_alpha_grid() {
  static const std::vector<double> grid{0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0};
  return grid;
}

/// Parses argv and dispatches. Never throws; returns the process exit code.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Generalized distance spectra, spectral spread and spread bounds of connected graphs"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  std::optional<double> analyze_alpha;
  auto *an = app.add_subcommand("analyze", "spectrum, spread and distance statistics");
  an->add_option("input", analyze.input, "graph6 string, family spec (kbip:2,3) or file")->required();
  auto *alpha_opt = an->add_option("--alpha", analyze_alpha, "single alpha in [0,1]");
  an->add_option("--alpha-grid", analyze.alphas, "comma-separated alphas")->delimiter(',')->excludes(alpha_opt);
  an->add_option("--format", analyze.format)->check(CLI::IsMember({"json", "tsv"}));
  an->add_flag("--invariants", analyze.invariants, "also report clique and independence numbers");

  BoundsArgs bounds;
  auto *bd = app.add_subcommand("bounds", "evaluate every spread bound");
  bd->add_option("input", bounds.input, "graph6 string, family spec or file")->required();
  bd->add_option("--alpha", bounds.alpha, "alpha in [0,1]");
  bd->add_option("--tol", bounds.tol, "relative tolerance for holds (default 1e-8, env SPREAD_TOL)");
  bd->add_option("--format", bounds.format)->check(CLI::IsMember({"json", "tsv"}));

  SweepArgs sw;
  auto *sp = app.add_subcommand("sweep", "stress-test all bounds over a corpus");
  sp->add_option("--corpus", sw.corpora, "graph6 corpus file (repeatable)");
  sp->add_option("--seed-random", sw.seed_random, "generate count random connected graphs: n,count,p");
  sp->add_option("--seed", sw.seed, "base seed for --seed-random");
  sp->add_option("--alphas", sw.alphas, "comma-separated alphas (default 0,0.1,0.25,0.5,0.75,0.9,1)")->delimiter(',');
  sp->add_option("--tol", sw.tol, "relative tolerance for holds");
  sp->add_option("--threads", sw.threads, "worker threads")->check(CLI::Range(1u, 256u));

  ConjectureArgs cj;
  auto *co = app.add_subcommand("conjecture", "is K_{n/2,n/2} spread-minimal among bipartite graphs of order n?");
  co->add_option("--n", cj.n, "order")->required()->check(CLI::Range(2, 62));
  co->add_option("--corpus", cj.corpus, "corpus of all connected bipartite graphs of order n");
  co->add_option("--alpha", cj.alphas, "comma-separated alphas (default grid)")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    if (*an) {
      if (analyze_alpha)
        analyze.alphas = {*analyze_alpha};
      if (analyze.alphas.empty())
        analyze.alphas = {0.0};
      return cmd_analyze(analyze, out);
    }
    if (*bd)
      return cmd_bounds(bounds, out);
    if (*sp) {
      if (sw.corpora.empty() && sw.seed_random.empty()) {
        err << "sweep: give --corpus and/or --seed-random\n";
        return input_error;
      }
      if (sw.alphas.empty())
        sw.alphas = default_alpha_grid();
      return cmd_sweep(sw, out);
    }
    if (*co) {
      if (cj.alphas.empty())
        cj.alphas = default_alpha_grid();
      return cmd_conjecture(cj, out);
    }
  } catch (const ParseError &e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const GraphError &e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const IoError &e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const PreconditionError &e) {
    err << "error: " << e.what() << '\n';
    return precondition;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return internal;
  }
  return internal;
}

} // namespace gdspread::cli

#endif // GDSPREAD_TOOLS_CLI_APP_HPP
