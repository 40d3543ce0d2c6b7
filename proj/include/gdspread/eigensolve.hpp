#ifndef GDSPREAD_EIGENSOLVE_HPP
#define GDSPREAD_EIGENSOLVE_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "gdspread/errors.hpp"
#include "gdspread/graph.hpp"
#include "gdspread/matrix.hpp"

namespace gdspread {

struct EigenOptions {
  /// Stop once max |off-diagonal| <= tol * ||M||_F.
  double tol = 1e-12;
  int max_sweeps = 100;
  bool vectors = true;
};

/// Eigenvalues in descending order; vectors[i] (if computed) pairs with values[i].
struct Spectrum {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;

  int order() const noexcept { return static_cast<int>(values.size()); }
  bool has_vectors() const noexcept { return !vectors.empty(); }
  double largest() const { return values.front(); }
  double smallest() const { return values.back(); }
};

/// Full eigendecomposition by the cyclic Jacobi rotation method. Works on a
/// private copy; ties in the final ordering keep their original diagonal slot.
inline Spectrum sym_eigen(const SymMatrix &m, const EigenOptions &opt = {}) {
  const int n = m.order();
  Spectrum out;
  if (n == 0)
    return out;

  std::vector<double> a(m.dense().values().begin(), m.dense().values().end());
  auto at = [&](int i, int j) -> double & { return a[static_cast<std::size_t>(i) * n + j]; };

  std::vector<double> v;
  if (opt.vectors) {
    v.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
      v[static_cast<std::size_t>(i) * n + i] = 1.0;
  }
  auto vat = [&](int i, int j) -> double & { return v[static_cast<std::size_t>(i) * n + j]; };

  const double norm = std::sqrt(frobenius_sq(m));
  const double threshold = opt.tol * norm;

  auto off_max = [&] {
    double worst = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        worst = std::max(worst, std::abs(at(p, q)));
    return worst;
  };

  int sweep = 0;
  for (double off = off_max(); off > threshold; off = off_max()) {
    if (sweep++ >= opt.max_sweeps)
      throw ConvergenceError("Jacobi did not converge in " + std::to_string(opt.max_sweeps) +
                                 " sweeps; max off-diagonal " + std::to_string(off),
                             off);
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0)
          continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0)
            t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q)
            continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          at(r, p) = at(p, r) = arp - s * (arq + tau * arp);
          at(r, q) = at(q, r) = arq + s * (arp - tau * arq);
        }
        if (opt.vectors) {
          for (int r = 0; r < n; ++r) {
            const double vrp = vat(r, p);
            const double vrq = vat(r, q);
            vat(r, p) = vrp - s * (vrq + tau * vrp);
            vat(r, q) = vrq + s * (vrp - tau * vrq);
          }
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return at(x, x) > at(y, y); });

  out.values.reserve(n);
  for (int k : order)
    out.values.push_back(at(k, k));
  if (opt.vectors) {
    out.vectors.reserve(n);
    for (int k : order) {
      std::vector<double> col(n);
      for (int r = 0; r < n; ++r)
        col[r] = vat(r, k);
      out.vectors.push_back(std::move(col));
    }
  }
  return out;
}

inline Spectrum sym_eigen(const SymMatrix &m, double tol) {
  EigenOptions opt;
  opt.tol = tol;
  return sym_eigen(m, opt);
}

inline std::vector<double> sym_eigenvalues(const SymMatrix &m) {
  EigenOptions opt;
  opt.vectors = false;
  return sym_eigen(m, opt).values;
}

/// Largest minus smallest eigenvalue; 0 for an empty or 1x1 spectrum.
inline double spectral_spread(const Spectrum &s) {
  if (s.values.size() < 2)
    return 0.0;
  return s.values.front() - s.values.back();
}

inline double spectral_spread(const std::vector<double> &descending) {
  if (descending.size() < 2)
    return 0.0;
  return descending.front() - descending.back();
}

/// Positive unit eigenvector of the (simple) largest eigenvalue. Throws
/// PreconditionError when the top eigenvalue is repeated or the eigenvector
/// has entries that are not strictly positive, i.e. the input is not
/// irreducible (D_1 of any graph, for instance).
inline std::vector<double> perron_vector(const SymMatrix &m, double tol = 1e-9) {
  const auto s = sym_eigen(m);
  if (s.order() == 0)
    throw PreconditionError("Perron vector of an empty matrix");
  if (s.order() > 1 && s.values[0] - s.values[1] <= tol)
    throw PreconditionError("largest eigenvalue is repeated; matrix is reducible or degenerate");
  auto x = s.vectors[0];
  if (std::accumulate(x.begin(), x.end(), 0.0) < 0.0)
    for (double &e : x)
      e = -e;
  for (double e : x)
    if (e <= tol)
      throw PreconditionError("top eigenvector has mixed-sign or zero entries; matrix is not irreducible");
  return x;
}

/// 2W/n, the Rayleigh quotient of the all-ones vector; never exceeds the
/// spectral radius of D_alpha.
inline double rayleigh_lower_bound(const DistanceProfile &p) {
  return 2.0 * static_cast<double>(p.wiener) / static_cast<double>(p.n);
}

/// Eigenvalues of a quotient matrix, descending. B = N^-1 S with S symmetric
/// (block sums), so N^{1/2} B N^{-1/2} is symmetric and shares B's spectrum.
inline std::vector<double> quotient_eigenvalues(const QuotientMatrix &q) {
  const int r = q.entries.order();
  DenseMatrix sym(r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const double scale = std::sqrt(static_cast<double>(q.block_sizes[i]) / q.block_sizes[j]);
      sym(i, j) = q.entries(i, j) * scale;
    }
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      sym(i, j) = sym(j, i) = 0.5 * (sym(i, j) + sym(j, i));
  return sym_eigenvalues(SymMatrix::from_dense(std::move(sym)));
}

/// Difference of the two eigenvalues of a 2x2 matrix with real spectrum,
/// from its characteristic polynomial.
inline double eigen_gap_2x2(const DenseMatrix &b) {
  const double d = b(0, 0) - b(1, 1);
  return std::sqrt(std::max(0.0, d * d + 4.0 * b(0, 1) * b(1, 0)));
}

} // namespace gdspread

#endif // GDSPREAD_EIGENSOLVE_HPP
