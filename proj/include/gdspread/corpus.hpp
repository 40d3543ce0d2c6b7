#ifndef GDSPREAD_CORPUS_HPP
#define GDSPREAD_CORPUS_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "gdspread/bounds.hpp"
#include "gdspread/errors.hpp"
#include "gdspread/families.hpp"
#include "gdspread/graph.hpp"

namespace gdspread {

// ---------------------------------------------------------------------------
// Corpus files: one graph6 string per line, '#' starts a comment line.
// ---------------------------------------------------------------------------

inline std::vector<Graph> parse_corpus(std::istream &in) {
  std::vector<Graph> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    try {
      out.push_back(parse_graph6(std::string_view(line).substr(first)));
    } catch (const ParseError &e) {
      throw ParseError("corpus line " + std::to_string(line_no) + ": " + e.what(), e.offset());
    } catch (const GraphError &e) {
      throw ParseError("corpus line " + std::to_string(line_no) + ": " + e.what(), 0);
    }
  }
  return out;
}

inline std::vector<Graph> load_corpus(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot read corpus file '" + path + "'");
  return parse_corpus(in);
}

// ---------------------------------------------------------------------------
// Seeded random graphs
// ---------------------------------------------------------------------------

/// Uniform double in [0,1) from the top 53 bits of a mt19937_64 draw. Both
/// the engine sequence and this mapping are fixed by the standard, so the
/// stream is identical on every platform.
inline double unit_uniform(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// G(n, p) conditioned on connectivity: pairs (i, j), i < j, are visited in
/// lexicographic order and kept when a fresh draw is below p; disconnected
/// samples are redrawn from the same stream, up to `retry_cap` attempts.
inline Graph random_connected_graph(int n, double edge_prob, std::uint64_t seed, int retry_cap = 10000) {
  if (n < 1)
    throw PreconditionError("random graph needs n >= 1");
  if (!(edge_prob > 0.0 && edge_prob <= 1.0))
    throw PreconditionError("edge probability must lie in (0,1]");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < retry_cap; ++attempt) {
    Graph::EdgeList edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (unit_uniform(rng) < edge_prob)
          edges.emplace_back(i, j);
    auto g = Graph::from_edges(n, edges);
    if (is_connected(g))
      return g;
  }
  throw PreconditionError("no connected sample after " + std::to_string(retry_cap) +
                          " attempts; edge probability too small");
}

/// `count` connected graphs; the order is drawn uniformly from [n_min, n_max]
/// and the edge probability uniformly from `probs`, all from one master seed.
inline std::vector<Graph> random_corpus(int count, int n_min, int n_max, std::span<const double> probs,
                                        std::uint64_t seed) {
  std::mt19937_64 master(seed);
  std::vector<Graph> out;
  out.reserve(count);
  const auto span = static_cast<std::uint64_t>(n_max - n_min + 1);
  for (int k = 0; k < count; ++k) {
    const int n = n_min + static_cast<int>(master() % span);
    const double p = probs[master() % probs.size()];
    out.push_back(random_connected_graph(n, p, master()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

inline constexpr std::string_view kMonotonicityId = "lemma37_edge_deletion";
inline constexpr std::string_view kQuotientInterlacingId = "lemma31_quotient_interlacing";
inline constexpr std::string_view kPrincipalInterlacingId = "lemma32_principal_interlacing";

struct BoundTally {
  std::int64_t inapplicable = 0;
  std::int64_t applicable = 0;
  std::int64_t holds = 0;
  std::int64_t equalities = 0;
  /// Direction-adjusted margin of the tightest instance (negative = violated).
  double worst_slack = std::numeric_limits<double>::infinity();
  double worst_gap = std::numeric_limits<double>::quiet_NaN();
  std::string worst_graph;
  double worst_alpha = 0.0;

  void observe(double slack, double gap, const std::string &graph, double alpha) {
    if (std::tie(slack, graph, alpha) < std::tie(worst_slack, worst_graph, worst_alpha) ||
        worst_graph.empty()) {
      worst_slack = slack;
      worst_gap = gap;
      worst_graph = graph;
      worst_alpha = alpha;
    }
  }

  void merge(const BoundTally &o) {
    inapplicable += o.inapplicable;
    applicable += o.applicable;
    holds += o.holds;
    equalities += o.equalities;
    if (!o.worst_graph.empty())
      observe(o.worst_slack, o.worst_gap, o.worst_graph, o.worst_alpha);
  }
};

struct Violation {
  std::string graph6;
  std::string bound_id;
  double alpha = 0.0;
  double gap = 0.0;

  friend bool operator<(const Violation &a, const Violation &b) {
    return std::tie(a.bound_id, a.graph6, a.alpha, a.gap) < std::tie(b.bound_id, b.graph6, b.alpha, b.gap);
  }
};

struct DiscrepancyRecord {
  std::string graph6;
  Discrepancy detail;

  friend bool operator<(const DiscrepancyRecord &a, const DiscrepancyRecord &b) {
    return std::tie(a.detail.id, a.graph6, a.detail.alpha, a.detail.note) <
           std::tie(b.detail.id, b.graph6, b.detail.alpha, b.detail.note);
  }
};

/// Aggregate of a sweep. Merging is commutative once finalize() has sorted
/// the lists, so the result does not depend on evaluation order.
struct CorpusSummary {
  std::int64_t graphs_seen = 0;
  std::int64_t skipped_disconnected = 0;
  std::map<std::string, BoundTally> tallies;
  std::vector<Violation> violations;
  std::vector<DiscrepancyRecord> discrepancies;

  bool clean() const { return violations.empty(); }

  void merge(const CorpusSummary &o) {
    graphs_seen += o.graphs_seen;
    skipped_disconnected += o.skipped_disconnected;
    for (const auto &[id, t] : o.tallies)
      tallies[id].merge(t);
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    discrepancies.insert(discrepancies.end(), o.discrepancies.begin(), o.discrepancies.end());
    finalize();
  }

  void finalize() {
    std::sort(violations.begin(), violations.end());
    std::sort(discrepancies.begin(), discrepancies.end());
  }
};

struct SweepOptions {
  Tolerances tol;
  bool check_monotonicity = true;
  bool check_interlacing = true;
  unsigned threads = 1;
};

namespace detail {

inline void record(CorpusSummary &s, std::string_view id, bool holds, bool equality, double slack, double gap,
                   const std::string &key, double alpha) {
  auto &t = s.tallies[std::string(id)];
  ++t.applicable;
  t.holds += holds ? 1 : 0;
  t.equalities += equality ? 1 : 0;
  t.observe(slack, gap, key, alpha);
  if (!holds)
    s.violations.push_back({key, std::string(id), alpha, gap});
}

inline void sweep_one(CorpusSummary &s, const Graph &g, std::span<const double> alphas, const SweepOptions &opt) {
  ++s.graphs_seen;
  if (!is_connected(g)) {
    ++s.skipped_disconnected;
    return;
  }
  const auto key = encode_graph6(g);
  for (double alpha : alphas) {
    BoundContext ctx(g, alpha, opt.tol);
    const auto eval = evaluate_all(ctx);
    for (const auto &r : eval.reports) {
      auto &t = s.tallies[r.bound_id];
      if (!r.applicable) {
        ++t.inapplicable;
        continue;
      }
      const double slack = r.direction == Direction::lower ? r.gap : -r.gap;
      record(s, r.bound_id, r.holds, r.equality, slack, r.gap, key, alpha);
    }
    for (const auto &d : eval.discrepancies)
      s.discrepancies.push_back({key, d});

    if (opt.check_interlacing) {
      const auto il = check_interlacing_structures(ctx, opt.tol.holds);
      auto tally_checks = [&](std::string_view id, int checks, int failures) {
        for (int k = 0; k < failures; ++k)
          record(s, id, false, false, -1.0, 0.0, key, alpha);
        for (int k = failures; k < checks; ++k)
          record(s, id, true, false, 0.0, 0.0, key, alpha);
      };
      tally_checks(kQuotientInterlacingId, il.quotient_checks, il.quotient_failures);
      tally_checks(kPrincipalInterlacingId, il.principal_checks, il.principal_failures);
    }
    if (opt.check_monotonicity && alpha >= 0.5) {
      for (const auto &[u, v] : g.edges()) {
        const auto m = check_edge_deletion_monotonicity(g, u, v, alpha, opt.tol.holds);
        if (!m.applicable)
          continue;
        record(s, kMonotonicityId, m.holds, false, -m.worst_drop, -m.worst_drop, key, alpha);
      }
    }
  }
}

} // namespace detail

/// Evaluates every registry bound (plus interlacing and edge-deletion checks)
/// on every (graph, alpha). Disconnected graphs are counted and skipped.
inline CorpusSummary sweep(std::span<const Graph> graphs, std::span<const double> alphas, const SweepOptions &opt = {}) {
  for (double a : alphas)
    check_alpha(a);
  const unsigned workers = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(graphs.size())));
  std::vector<CorpusSummary> parts(workers);
  if (workers == 1) {
    for (const auto &g : graphs)
      detail::sweep_one(parts[0], g, alphas, opt);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < graphs.size(); i += workers)
          detail::sweep_one(parts[w], graphs[i], alphas, opt);
      });
    }
    for (auto &t : pool)
      t.join();
  }
  CorpusSummary total;
  for (const auto &p : parts)
    total.merge(p);
  total.finalize();
  return total;
}

// ---------------------------------------------------------------------------
// Complete bipartite extremality
// ---------------------------------------------------------------------------

struct ConjectureResult {
  int n = 0;
  double alpha = 0.0;
  std::int64_t graphs_considered = 0;
  std::int64_t graphs_ignored = 0;  // wrong order, disconnected or not bipartite
  std::string candidate_min_graph;
  double candidate_min_spread = 0.0;
  std::string conjectured_graph;
  double conjectured_graph_spread = 0.0;
  bool confirmed = false;
};

namespace detail {
inline bool is_complete_bipartite_with(const Graph &g, int r, int s) {
  const auto bp = is_bipartite(g);
  if (!bp || !is_connected(g))
    return false;
  const auto a = static_cast<int>(bp->first.size());
  const auto b = static_cast<int>(bp->second.size());
  return std::min(a, b) == r && std::max(a, b) == s && g.size() == static_cast<std::size_t>(r) * s;
}
} // namespace detail

/// Does K_{floor(n/2),ceil(n/2)} attain the minimum spread among the connected
/// bipartite graphs of order n in `corpus`? The corpus is trusted to be
/// complete; it must at least contain the balanced complete bipartite graph.
inline ConjectureResult check_balanced_bipartite_minimum(std::span<const Graph> corpus, int n, double alpha, Tolerances tol = {}) {
  check_alpha(alpha);
  if (n < 2)
    throw PreconditionError("conjecture check needs n >= 2");
  ConjectureResult r;
  r.n = n;
  r.alpha = alpha;
  const int lo = n / 2;
  const int hi = n - n / 2;
  bool found = false;
  bool have_min = false;
  for (const auto &g : corpus) {
    if (g.order() != n || !is_connected(g) || !is_bipartite(g)) {
      ++r.graphs_ignored;
      continue;
    }
    ++r.graphs_considered;
    const double spread = spectral_spread(sym_eigenvalues(generalized_distance_matrix(distance_profile(g), alpha)));
    if (!have_min || spread < r.candidate_min_spread) {
      have_min = true;
      r.candidate_min_spread = spread;
      r.candidate_min_graph = encode_graph6(g);
    }
    if (!found && detail::is_complete_bipartite_with(g, lo, hi)) {
      found = true;
      r.conjectured_graph = encode_graph6(g);
      r.conjectured_graph_spread = spread;
    }
  }
  if (!found)
    throw PreconditionError("corpus for n=" + std::to_string(n) + " is missing K_{" + std::to_string(lo) + "," +
                            std::to_string(hi) + "}; it cannot be complete");
  r.confirmed = r.conjectured_graph_spread <= r.candidate_min_spread + tol.equality;
  return r;
}

struct OrderingResult {
  int n = 0;
  double alpha = 0.0;
  std::vector<double> spreads;  // spreads[a-1] = spread of K_{a,n-a}, a = 1..n/2
  bool non_increasing = false;  // over a = 2..n/2
  bool star_is_max = false;
  bool holds() const { return non_increasing && star_is_max; }
};

/// Spreads of K_{a,n-a} for a = 1..floor(n/2), from the numeric eigensolver.
inline OrderingResult check_bipartite_spread_ordering(int n, double alpha, double tol = 1e-8) {
  check_alpha(alpha);
  if (n < 4)
    throw PreconditionError("ordering check needs n >= 4");
  OrderingResult r;
  r.n = n;
  r.alpha = alpha;
  for (int a = 1; 2 * a <= n; ++a)
    r.spreads.push_back(
        spectral_spread(sym_eigenvalues(generalized_distance_matrix(distance_profile(complete_bipartite(a, n - a)), alpha))));
  r.non_increasing = true;
  for (std::size_t i = 2; i < r.spreads.size(); ++i)
    r.non_increasing = r.non_increasing && r.spreads[i] <= r.spreads[i - 1] + tol;
  r.star_is_max = std::all_of(r.spreads.begin(), r.spreads.end(), [&](double s) { return s <= r.spreads[0] + tol; });
  return r;
}

} // namespace gdspread

#endif // GDSPREAD_CORPUS_HPP
