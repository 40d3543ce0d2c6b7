#include <gtest/gtest.h>

#include <cmath>

#include "gdspread/eigensolve.hpp"
#include "gdspread/families.hpp"

using namespace gdspread;

namespace {

const double kGrid[] = {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0};

std::vector<double> numeric(const Graph &g, double alpha) {
  return sym_eigenvalues(generalized_distance_matrix(distance_profile(g), alpha));
}

} // namespace

TEST(FamilySpecs, ParseAndFormat) {
  EXPECT_EQ(parse_family_spec("complete:4").to_string(), "complete:4");
  EXPECT_EQ(parse_family_spec("kbip:2,3").to_string(), "kbip:2,3");
  EXPECT_EQ(parse_family_spec("complete_bipartite:2,3").to_string(), "kbip:2,3");
  EXPECT_EQ(parse_family_spec("split:2,5").order(), 5);
  EXPECT_EQ(parse_family_spec("star:5").order(), 5);
  EXPECT_THROW(parse_family_spec("kbip:2"), ParseError);
  EXPECT_THROW(parse_family_spec("kbip:2,x"), ParseError);
  EXPECT_THROW(parse_family_spec("wheel:5"), ParseError);
  EXPECT_THROW(parse_family_spec("complete"), ParseError);
  EXPECT_THROW(parse_family_spec("split:5,5"), PreconditionError);
  EXPECT_THROW(parse_family_spec("cycle:2"), PreconditionError);
}

TEST(FamilyGraphs, EdgeCountsAndLabels) {
  EXPECT_EQ(complete_graph(4).size(), 6);
  const auto k23 = complete_bipartite(2, 3);
  EXPECT_EQ(k23.size(), 6);
  EXPECT_FALSE(k23.adjacent(0, 1));
  EXPECT_TRUE(k23.adjacent(0, 2));
  const auto cs = complete_split(2, 5);
  EXPECT_EQ(cs.size(), 7);
  EXPECT_TRUE(cs.adjacent(0, 1));
  EXPECT_FALSE(cs.adjacent(2, 3));
  EXPECT_EQ(complete_split(4, 5), complete_graph(5));
  EXPECT_EQ(complete_split(1, 4), complete_bipartite(1, 3));
  EXPECT_EQ(path_graph(5).size(), 4);
  EXPECT_EQ(cycle_graph(6).size(), 6);
  EXPECT_EQ(generate(parse_family_spec("star:4")), complete_bipartite(1, 3));
}

TEST(CompleteSpectrum, Values) {
  EXPECT_EQ(spectrum_complete(4, 0.0).expand(), (std::vector<double>{3, -1, -1, -1}));
  EXPECT_EQ(spectrum_complete(4, 1.0).expand(), (std::vector<double>{3, 3, 3, 3}));
  const auto s5 = spectrum_complete(5, 0.5).expand();
  EXPECT_EQ(s5, (std::vector<double>{4, 1.5, 1.5, 1.5, 1.5}));
  EXPECT_DOUBLE_EQ(spectral_spread(s5), 2.5);
  EXPECT_EQ(spectrum_complete(1, 0.3).order(), 1);
}

TEST(CompleteBipartiteSpectrum, HandValues) {
  const double r3 = std::sqrt(3.0);
  EXPECT_TRUE(multiset_matches(spectrum_complete_bipartite(1, 2, 0.0).expand(), {-2, 1 + r3, 1 - r3}, 1e-12));
  const auto k23 = spectrum_complete_bipartite(2, 3, 0.5).expand();
  const double r = std::sqrt(8.25);
  EXPECT_TRUE(multiset_matches(k23, {1.5, 2, 2, (8.5 + r) / 2, (8.5 - r) / 2}, 1e-12));
  double sum = 0.0;
  for (double x : k23)
    sum += x;
  EXPECT_NEAR(sum, 14.0, 1e-12);  // trace = 2 alpha W
}

TEST(CompleteBipartiteSpectrum, MatchesNumeric) {
  for (int n = 2; n <= 12; ++n)
    for (int r = 1; 2 * r <= n; ++r)
      for (double a : kGrid)
        EXPECT_TRUE(multiset_matches(spectrum_complete_bipartite(r, n - r, a).expand(),
                                     numeric(complete_bipartite(r, n - r), a), 1e-8))
            << "r=" << r << " s=" << n - r << " alpha=" << a;
}

TEST(CompleteSplitSpectrum, MatchesNumeric) {
  for (int n = 2; n <= 12; ++n)
    for (int t = 1; t < n; ++t)
      for (double a : kGrid)
        EXPECT_TRUE(
            multiset_matches(spectrum_complete_split(t, n, a).expand(), numeric(complete_split(t, n), a), 1e-8))
            << "t=" << t << " n=" << n << " alpha=" << a;
}

TEST(CompleteSplitSpectrum, DegenerateMembers) {
  for (double a : kGrid) {
    EXPECT_TRUE(multiset_matches(spectrum_complete_split(5, 6, a).expand(), spectrum_complete(6, a).expand(), 1e-9));
    EXPECT_TRUE(multiset_matches(spectrum_complete_split(1, 4, a).expand(),
                                 spectrum_complete_bipartite(1, 3, a).expand(), 1e-9));
  }
}

TEST(CoNeighbor, Cases) {
  const auto star = complete_bipartite(1, 3);
  const auto ps = distance_profile(star);
  const auto leaves = co_neighbor_eigenvalue(star, ps, {1, 2, 3}, 0.0);
  EXPECT_EQ(leaves.kind, CoNeighborKind::independent);
  EXPECT_DOUBLE_EQ(leaves.value, -2.0);
  EXPECT_EQ(leaves.multiplicity, 2);
  EXPECT_EQ(leaves.transmission, 5);

  for (double a : {0.0, 0.4, 1.0}) {
    const auto k5 = complete_graph(5);
    const auto c = co_neighbor_eigenvalue(k5, distance_profile(k5), {0, 3}, a);
    EXPECT_EQ(c.kind, CoNeighborKind::clique);
    EXPECT_NEAR(c.value, 5 * a - 1, 1e-15);
    EXPECT_EQ(c.multiplicity, 1);
  }

  const auto k23 = complete_bipartite(2, 3);
  const auto part = co_neighbor_eigenvalue(k23, distance_profile(k23), {0, 1}, 0.5);
  EXPECT_DOUBLE_EQ(part.value, 1.5);
  EXPECT_EQ(part.multiplicity, 1);
  EXPECT_TRUE(multiset_matches({part.value}, {spectrum_complete_bipartite(2, 3, 0.5).expand().back()}, 1e-12));

  const auto p4 = path_graph(4);
  EXPECT_THROW(co_neighbor_eigenvalue(p4, distance_profile(p4), {0, 3}, 0.0), PreconditionError);
  EXPECT_THROW(co_neighbor_eigenvalue(p4, distance_profile(p4), {}, 0.0), PreconditionError);
}

TEST(CoNeighbor, ValueIsInNumericSpectrum) {
  const auto g = complete_split(3, 8);
  const auto p = distance_profile(g);
  for (double a : kGrid) {
    const auto spec = numeric(g, a);
    for (const auto &set : {std::vector<int>{0, 1, 2}, std::vector<int>{3, 4, 5, 6, 7}}) {
      const auto ev = co_neighbor_eigenvalue(g, p, set, a);
      const auto hits = std::count_if(spec.begin(), spec.end(), [&](double x) { return std::abs(x - ev.value) < 1e-9; });
      EXPECT_GE(hits, ev.multiplicity);
    }
  }
}

TEST(BipartiteSpread, VerifiedBranchMatchesNumeric) {
  const double r3 = std::sqrt(3.0);
  const auto p3 = spread_complete_bipartite(1, 3, 0.0);
  EXPECT_EQ(p3.status, FormulaStatus::verified);
  EXPECT_NEAR(p3.formula, 3 + r3, 1e-12);
  EXPECT_TRUE(p3.agrees(1e-9));
  for (int n = 4; n <= 14; ++n)
    for (int a = 2; 2 * a <= n; ++a)
      for (double al : kGrid) {
        const auto s = spread_complete_bipartite(a, n, al);
        EXPECT_EQ(s.status, FormulaStatus::verified);
        EXPECT_TRUE(s.agrees(1e-8)) << "a=" << a << " n=" << n << " alpha=" << al;
      }
  // a = 1 with alpha = 0: n + sqrt(n^2 - 3n + 3).
  for (int n = 3; n <= 10; ++n) {
    const auto s = spread_complete_bipartite(1, n, 0.0);
    EXPECT_NEAR(s.formula, n + std::sqrt(n * n - 3.0 * n + 3.0), 1e-12);
    EXPECT_TRUE(s.agrees(1e-8));
  }
}

TEST(BipartiteSpread, StarClaimIsFlagged) {
  const auto s = spread_complete_bipartite(1, 4, 0.1);
  EXPECT_EQ(s.status, FormulaStatus::claimed);
  // Numeric smallest eigenvalue is the leaf eigenvalue alpha(2n-1)-2 = -1.3.
  const auto spec = numeric(complete_bipartite(1, 3), 0.1);
  EXPECT_NEAR(spec.back(), -1.3, 1e-12);
  EXPECT_NEAR(s.numeric, spec.front() - spec.back(), 1e-12);
  EXPECT_FALSE(s.agrees(1e-6));
  EXPECT_THROW(spread_complete_bipartite(3, 5, 0.1), PreconditionError);
}
