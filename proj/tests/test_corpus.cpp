#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "gdspread/corpus.hpp"
#include "gdspread/families.hpp"
#include "gdspread/report.hpp"

using namespace gdspread;

namespace {

const std::vector<double> kGrid{0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0};

std::string corpus_path(int n) {
  return std::string(GDSPREAD_CORPUS_DIR) + "/bipartite_connected_n" + std::to_string(n) + ".g6";
}

// The two order-based branches for 1/2 <= alpha <= 1 are known to fail; every
// other registry entry and check must stay clean.
bool known_false_branch(const Violation &v) {
  return (v.bound_id == "thm38_bipartite_lower" || v.bound_id == "thm43_independence_lower") && v.alpha >= 0.5;
}

} // namespace

TEST(CorpusFile, ParsesCommentsAndBlanks) {
  std::istringstream in("# header\n\nBg\n  Bw\n# end\n");
  const auto gs = parse_corpus(in);
  ASSERT_EQ(gs.size(), 2u);
  EXPECT_EQ(gs[1], complete_graph(3));
}

TEST(CorpusFile, ReportsLineNumber) {
  std::istringstream in("Bg\nB!\n");
  try {
    parse_corpus(in);
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_NE(std::string(e.what()).find("corpus line 2"), std::string::npos);
  }
}

TEST(CorpusFile, MissingFileIsIoError) { EXPECT_THROW(load_corpus("/nonexistent/missing.g6"), IoError); }

TEST(ShippedCorpora, AreExhaustiveAndDistinct) {
  const std::map<int, std::size_t> counts{{3, 1}, {4, 3}, {5, 5}, {6, 17}, {7, 44}};
  for (const auto &[n, count] : counts) {
    const auto gs = load_corpus(corpus_path(n));
    EXPECT_EQ(gs.size(), count) << n;
    std::set<std::string> seen;
    for (const auto &g : gs) {
      EXPECT_EQ(g.order(), n);
      EXPECT_TRUE(is_connected(g));
      EXPECT_TRUE(is_bipartite(g));
      seen.insert(encode_graph6(g));
    }
    EXPECT_EQ(seen.size(), count);
  }
}

TEST(RandomGraphs, SpecCases) {
  EXPECT_EQ(random_connected_graph(5, 1.0, 123), complete_graph(5));
  EXPECT_EQ(random_connected_graph(8, 0.4, 7), random_connected_graph(8, 0.4, 7));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = random_connected_graph(3, 0.5, seed);
    EXPECT_TRUE(is_connected(g));
    EXPECT_GE(g.size(), 2);
  }
  EXPECT_THROW(random_connected_graph(3, 0.0, 1), PreconditionError);
  EXPECT_THROW(random_connected_graph(30, 0.001, 1, 5), PreconditionError);
}

TEST(RandomGraphs, DocumentedGenerator) {
  // The engine is fully specified by the standard: 10000th output of the
  // default-seeded mt19937_64.
  std::mt19937_64 std_engine;
  std_engine.discard(9999);
  EXPECT_EQ(std_engine(), 9981545732273789042ULL);

  std::mt19937_64 a(7);
  std::mt19937_64 b(7);
  for (int i = 0; i < 100; ++i) {
    const double u = unit_uniform(a);
    EXPECT_EQ(u, static_cast<double>(b() >> 11) / 9007199254740992.0);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }

  // Replay the documented procedure by hand for one sample.
  std::mt19937_64 rng(31);
  Graph expected = Graph::from_edges(1, EdgeList{});
  for (bool done = false; !done;) {
    EdgeList e;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (unit_uniform(rng) < 0.35)
          e.emplace_back(i, j);
    expected = Graph::from_edges(6, e);
    done = is_connected(expected);
  }
  EXPECT_EQ(random_connected_graph(6, 0.35, 31), expected);
}

TEST(RandomGraphs, CorpusIsDeterministic) {
  const std::vector<double> probs{0.3, 0.5, 0.8};
  const auto a = random_corpus(30, 3, 12, probs, 99);
  const auto b = random_corpus(30, 3, 12, probs, 99);
  EXPECT_EQ(a, b);
  for (const auto &g : a) {
    EXPECT_GE(g.order(), 3);
    EXPECT_LE(g.order(), 12);
    EXPECT_TRUE(is_connected(g));
  }
}

TEST(Sweep, ThreadCountDoesNotChangeOutput) {
  const std::vector<double> probs{0.3, 0.5, 0.8};
  const auto gs = random_corpus(24, 3, 9, probs, 5);
  SweepOptions one;
  SweepOptions four;
  four.threads = 4;
  const auto a = to_json(sweep(gs, kGrid, one)).dump();
  const auto b = to_json(sweep(gs, kGrid, four)).dump();
  EXPECT_EQ(a, b);
}

TEST(Sweep, DisconnectedGraphsAreSkipped) {
  const std::vector<Graph> gs{Graph::from_edges(3, EdgeList{{0, 1}}), path_graph(3)};
  const std::vector<double> alphas{0.0};
  const auto s = sweep(gs, alphas);
  EXPECT_EQ(s.graphs_seen, 2);
  EXPECT_EQ(s.skipped_disconnected, 1);
}

TEST(Sweep, ShippedBipartiteCorporaOnlyFailKnownBranches) {
  std::vector<Graph> gs;
  for (int n = 3; n <= 6; ++n) {
    const auto part = load_corpus(corpus_path(n));
    gs.insert(gs.end(), part.begin(), part.end());
  }
  const auto s = sweep(gs, kGrid);
  EXPECT_EQ(s.graphs_seen, 26);
  for (const auto &v : s.violations)
    EXPECT_TRUE(known_false_branch(v)) << v.bound_id << " " << v.graph6 << " alpha=" << v.alpha;
  // C4 at alpha = 1 is among them: D_1(C4) = 4I.
  const bool c4 = std::any_of(s.violations.begin(), s.violations.end(), [](const Violation &v) {
    return v.graph6 == "Cl" && v.alpha == 1.0 && v.bound_id == "thm38_bipartite_lower";
  });
  EXPECT_TRUE(c4);
  EXPECT_GT(s.tallies.at(std::string(kQuotientInterlacingId)).applicable, 0);
  EXPECT_EQ(s.tallies.at(std::string(kQuotientInterlacingId)).holds,
            s.tallies.at(std::string(kQuotientInterlacingId)).applicable);
}

TEST(Sweep, RandomGraphsOnlyFailKnownBranches) {
  const std::vector<double> probs{0.3, 0.5, 0.8};
  const auto gs = random_corpus(80, 3, 10, probs, 2024);
  SweepOptions opt;
  opt.threads = 4;
  const auto s = sweep(gs, kGrid, opt);
  for (const auto &v : s.violations)
    EXPECT_TRUE(known_false_branch(v)) << v.bound_id << " " << v.graph6 << " alpha=" << v.alpha;
  EXPECT_GT(s.tallies.at(std::string(kMonotonicityId)).applicable, 0);
}

TEST(Conjecture, OrderFourAtZero) {
  const auto gs = load_corpus(corpus_path(4));
  const auto r = check_balanced_bipartite_minimum(gs, 4, 0.0);
  EXPECT_TRUE(r.confirmed);
  EXPECT_EQ(r.candidate_min_graph, "Cl");
  EXPECT_EQ(encode_graph6(cycle_graph(4)), r.candidate_min_graph);
  EXPECT_EQ(r.graphs_considered, 3);
  EXPECT_EQ(r.conjectured_graph, r.candidate_min_graph);
}

TEST(Conjecture, IgnoresForeignGraphsAndNeedsBalancedGraph) {
  std::vector<Graph> gs{complete_graph(4), path_graph(4)};
  EXPECT_THROW(check_balanced_bipartite_minimum(gs, 4, 0.0), PreconditionError);
  gs.push_back(cycle_graph(4));
  const auto r = check_balanced_bipartite_minimum(gs, 4, 0.5);
  EXPECT_EQ(r.graphs_ignored, 1);
  EXPECT_EQ(r.graphs_considered, 2);
}

TEST(Conjecture, Reproducible) {
  for (int n = 3; n <= 6; ++n) {
    const auto gs = load_corpus(corpus_path(n));
    for (double a : kGrid)
      EXPECT_EQ(to_json(check_balanced_bipartite_minimum(gs, n, a)).dump(), to_json(check_balanced_bipartite_minimum(gs, n, a)).dump());
  }
}

TEST(Ordering, CompleteBipartiteSpreads) {
  for (int n = 4; n <= 14; ++n)
    for (double a : kGrid) {
      const auto r = check_bipartite_spread_ordering(n, a);
      EXPECT_TRUE(r.holds()) << "n=" << n << " alpha=" << a;
      EXPECT_EQ(r.spreads.size(), static_cast<std::size_t>(n / 2));
    }
  EXPECT_THROW(check_bipartite_spread_ordering(3, 0.0), PreconditionError);
}

TEST(Json, NumberFormatting) {
  EXPECT_EQ(json_number(1.0 / 3.0).dump(), "0.333333333333");
  EXPECT_EQ(json_number(5e-12).dump(), "0.0");
  EXPECT_EQ(json_number(-5e-12).dump(), "0.0");
  EXPECT_TRUE(json_number(std::nan("")).is_null());
  EXPECT_EQ(json_number(2.0).dump(), "2.0");
  EXPECT_EQ(json_number(4.73205080756887719).dump(), "4.73205080757");
}
