#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "gdspread/eigensolve.hpp"
#include "gdspread/families.hpp"

using namespace gdspread;

namespace {

SymMatrix random_symmetric(int n, std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  DenseMatrix d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      d(i, j) = d(j, i) = u(rng);
  return SymMatrix::from_dense(d);
}

std::vector<double> eigen_oracle(const SymMatrix &m) {
  const int n = m.order();
  Eigen::MatrixXd e(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      e(i, j) = m(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(e, Eigen::EigenvaluesOnly);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(v.rbegin(), v.rend());
  return v;
}

} // namespace

TEST(Jacobi, DiagonalInput) {
  const auto s = sym_eigen(SymMatrix::from_rows({{3, 0, 0}, {0, 2, 0}, {0, 0, 3}}));
  EXPECT_EQ(s.values, (std::vector<double>{3, 3, 2}));
}

TEST(Jacobi, PathDistanceMatrix) {
  const auto p = distance_profile(path_graph(3));
  const auto s = sym_eigen(distance_matrix(p));
  const double r3 = std::sqrt(3.0);
  ASSERT_EQ(s.order(), 3);
  EXPECT_NEAR(s.values[0], 1 + r3, 1e-12);
  EXPECT_NEAR(s.values[1], 1 - r3, 1e-12);
  EXPECT_NEAR(s.values[2], -2.0, 1e-12);
  EXPECT_NEAR(spectral_spread(s), 3 + r3, 1e-12);
}

TEST(Jacobi, CompleteGraphHalf) {
  const auto s = sym_eigenvalues(generalized_distance_matrix(distance_profile(complete_graph(4)), 0.5));
  for (std::size_t i = 0; i < s.size(); ++i)
    EXPECT_NEAR(s[i], i == 0 ? 3.0 : 1.0, 1e-12);
  EXPECT_NEAR(spectral_spread(s), 2.0, 1e-12);
}

TEST(Jacobi, TrivialSizes) {
  EXPECT_EQ(sym_eigen(SymMatrix{}).order(), 0);
  const auto one = sym_eigen(SymMatrix::from_rows({{7.5}}));
  EXPECT_EQ(one.values, std::vector<double>{7.5});
  EXPECT_EQ(spectral_spread(one), 0.0);
}

TEST(Jacobi, AgreesWithEigenOnRandomMatrices) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 30;
    const auto m = random_symmetric(n, rng);
    const auto got = sym_eigenvalues(m);
    const auto want = eigen_oracle(m);
    ASSERT_EQ(got.size(), want.size());
    for (int i = 0; i < n; ++i)
      EXPECT_NEAR(got[i], want[i], 1e-9) << "n=" << n << " i=" << i;
  }
}

TEST(Jacobi, EigenvectorsSatisfyDefinition) {
  std::mt19937_64 rng(7);
  for (int n : {2, 5, 12, 25}) {
    const auto m = random_symmetric(n, rng);
    const auto s = sym_eigen(m);
    ASSERT_TRUE(s.has_vectors());
    for (int k = 0; k < n; ++k) {
      double norm = 0.0;
      for (int i = 0; i < n; ++i) {
        double mv = 0.0;
        for (int j = 0; j < n; ++j)
          mv += m(i, j) * s.vectors[k][j];
        EXPECT_NEAR(mv, s.values[k] * s.vectors[k][i], 1e-9);
        norm += s.vectors[k][i] * s.vectors[k][i];
      }
      EXPECT_NEAR(norm, 1.0, 1e-12);
    }
  }
}

TEST(Jacobi, SweepCapRaisesConvergenceError) {
  std::mt19937_64 rng(3);
  EigenOptions opt;
  opt.max_sweeps = 1;
  EXPECT_THROW(sym_eigen(random_symmetric(20, rng), opt), ConvergenceError);
}

TEST(Jacobi, DeterministicAcrossCalls) {
  std::mt19937_64 rng(99);
  const auto m = random_symmetric(15, rng);
  EXPECT_EQ(sym_eigenvalues(m), sym_eigenvalues(m));
}

TEST(Perron, CompleteAndCycle) {
  for (int n : {3, 6}) {
    const auto x = perron_vector(distance_matrix(distance_profile(complete_graph(n))));
    for (double e : x)
      EXPECT_NEAR(e, 1.0 / std::sqrt(n), 1e-10);
  }
  const auto c4 = perron_vector(distance_matrix(distance_profile(cycle_graph(4))));
  for (double e : c4)
    EXPECT_NEAR(e, 0.5, 1e-10);
}

TEST(Perron, ReducibleInputFails) {
  const auto d1 = generalized_distance_matrix(distance_profile(path_graph(3)), 1.0);
  EXPECT_THROW(perron_vector(d1), PreconditionError);
}

TEST(Perron, PositiveOnPath) {
  const auto x = perron_vector(distance_matrix(distance_profile(path_graph(6))));
  for (double e : x)
    EXPECT_GT(e, 0.0);
}

TEST(Rayleigh, LowerBoundsTheRadius) {
  EXPECT_DOUBLE_EQ(rayleigh_lower_bound(distance_profile(complete_graph(4))), 3.0);
  EXPECT_NEAR(rayleigh_lower_bound(distance_profile(path_graph(3))), 8.0 / 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(rayleigh_lower_bound(distance_profile(cycle_graph(4))), 4.0);
  for (int n = 3; n <= 9; ++n) {
    const auto p = distance_profile(path_graph(n));
    EXPECT_LE(rayleigh_lower_bound(p), sym_eigenvalues(distance_matrix(p)).front() + 1e-12);
  }
}

TEST(QuotientSpectrum, MatchesDirectRoots) {
  for (double a : {0.0, 0.3, 0.7}) {
    const auto m = generalized_distance_matrix(distance_profile(complete_bipartite(2, 5)), a);
    const auto q = quotient_matrix(m, VertexPartition({{0, 1}, {2, 3, 4, 5, 6}}, 7));
    const auto ev = quotient_eigenvalues(q);
    ASSERT_EQ(ev.size(), 2u);
    EXPECT_NEAR(ev[0] - ev[1], eigen_gap_2x2(q.entries), 1e-10);
    const double tr = q.entries(0, 0) + q.entries(1, 1);
    EXPECT_NEAR(ev[0] + ev[1], tr, 1e-10);
  }
}
