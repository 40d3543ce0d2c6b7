#ifndef GDSPREAD_MATRIX_HPP
#define GDSPREAD_MATRIX_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "gdspread/errors.hpp"
#include "gdspread/graph.hpp"

namespace gdspread {

/// Dense square row-major matrix of doubles.
class DenseMatrix {
public:
  DenseMatrix() = default;
  explicit DenseMatrix(int order, double fill = 0.0)
      : order_(order), data_(static_cast<std::size_t>(order) * order, fill) {}

  int order() const noexcept { return order_; }

  double &operator()(int i, int j) { return data_[index(i, j)]; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }

  std::span<const double> values() const noexcept { return data_; }

  friend bool operator==(const DenseMatrix &, const DenseMatrix &) = default;

private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * order_ + j; }

  int order_ = 0;
  std::vector<double> data_;
};

/// Real symmetric matrix. Only symmetric builders and a validating factory
/// can create one, so entry (i,j) == entry (j,i) exactly.
class SymMatrix {
public:
  SymMatrix() = default;

  /// Throws PreconditionError unless `m` is exactly symmetric.
  static SymMatrix from_dense(DenseMatrix m) {
    for (int i = 0; i < m.order(); ++i)
      for (int j = i + 1; j < m.order(); ++j)
        if (m(i, j) != m(j, i))
          throw PreconditionError("matrix is not symmetric at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
    return SymMatrix(std::move(m));
  }

  static SymMatrix from_rows(const std::vector<std::vector<double>> &rows) {
    DenseMatrix m(static_cast<int>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size())
        throw PreconditionError("matrix rows must form a square");
      for (std::size_t j = 0; j < rows.size(); ++j)
        m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
    return from_dense(std::move(m));
  }

  int order() const noexcept { return m_.order(); }
  double operator()(int i, int j) const { return m_(i, j); }
  const DenseMatrix &dense() const noexcept { return m_; }

  friend bool operator==(const SymMatrix &, const SymMatrix &) = default;

private:
  explicit SymMatrix(DenseMatrix m) : m_(std::move(m)) {}

  DenseMatrix m_;
};

inline void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw PreconditionError("alpha must lie in [0,1], got " + std::to_string(alpha));
}

namespace detail {

// diag_weight * Tr + off_weight * D
inline SymMatrix combine_tr_and_dist(const DistanceProfile &p, double diag_weight, double off_weight) {
  DenseMatrix m(p.n);
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) {
      m(i, j) = (i == j) ? diag_weight * static_cast<double>(p.transmission[i])
                         : off_weight * static_cast<double>(p.d(i, j));
    }
  }
  return SymMatrix::from_dense(std::move(m));
}

} // namespace detail

/// D_alpha = alpha * Tr(G) + (1 - alpha) * D(G).
inline SymMatrix generalized_distance_matrix(const DistanceProfile &p, double alpha) {
  check_alpha(alpha);
  return detail::combine_tr_and_dist(p, alpha, 1.0 - alpha);
}

inline SymMatrix distance_matrix(const DistanceProfile &p) { return detail::combine_tr_and_dist(p, 0.0, 1.0); }

inline SymMatrix distance_laplacian(const DistanceProfile &p) { return detail::combine_tr_and_dist(p, 1.0, -1.0); }

inline SymMatrix distance_signless_laplacian(const DistanceProfile &p) {
  return detail::combine_tr_and_dist(p, 1.0, 1.0);
}

inline double trace(const SymMatrix &m) {
  double s = 0.0;
  for (int i = 0; i < m.order(); ++i)
    s += m(i, i);
  return s;
}

/// Squared Frobenius norm.
inline double frobenius_sq(const SymMatrix &m) {
  double s = 0.0;
  for (double x : m.dense().values())
    s += x * x;
  return s;
}

/// Rows/columns `idx` of `m`, in the given order.
inline SymMatrix principal_submatrix(const SymMatrix &m, std::span<const int> idx) {
  DenseMatrix out(static_cast<int>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      out(static_cast<int>(a), static_cast<int>(b)) = m(idx[a], idx[b]);
  return SymMatrix::from_dense(std::move(out));
}

/// Ordered blocks of vertices; block order fixes quotient row order.
class VertexPartition {
public:
  /// Throws PreconditionError unless the blocks are nonempty, pairwise
  /// disjoint and cover 0..order-1.
  VertexPartition(std::vector<std::vector<int>> blocks, int order) : blocks_(std::move(blocks)) {
    std::vector<char> seen(order, 0);
    int covered = 0;
    for (const auto &b : blocks_) {
      if (b.empty())
        throw PreconditionError("partition block is empty");
      for (int v : b) {
        if (v < 0 || v >= order)
          throw PreconditionError("partition vertex " + std::to_string(v) + " out of range");
        if (seen[v]++)
          throw PreconditionError("vertex " + std::to_string(v) + " appears in two blocks");
        ++covered;
      }
    }
    if (covered != order)
      throw PreconditionError("partition does not cover every vertex");
  }

  static VertexPartition trivial(int order) {
    std::vector<int> all(order);
    for (int i = 0; i < order; ++i)
      all[i] = i;
    return VertexPartition({all}, order);
  }

  static VertexPartition singletons(int order) {
    std::vector<std::vector<int>> b(order);
    for (int i = 0; i < order; ++i)
      b[i] = {i};
    return VertexPartition(std::move(b), order);
  }

  /// `block` first, everything else second.
  static VertexPartition split(std::span<const int> block, int order) {
    std::vector<char> in(order, 0);
    for (int v : block)
      if (v >= 0 && v < order)
        in[v] = 1;
    std::vector<int> rest;
    for (int v = 0; v < order; ++v)
      if (!in[v])
        rest.push_back(v);
    return VertexPartition({std::vector<int>(block.begin(), block.end()), rest}, order);
  }

  const std::vector<std::vector<int>> &blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  int order() const {
    int s = 0;
    for (const auto &b : blocks_)
      s += static_cast<int>(b.size());
    return s;
  }

private:
  std::vector<std::vector<int>> blocks_;
};

/// Block-averaged matrix: entry (i,j) is the sum of block M_ij divided by the
/// number of rows in block i. Not symmetric when block sizes differ.
struct QuotientMatrix {
  DenseMatrix entries;
  std::vector<int> block_sizes;
};

inline QuotientMatrix quotient_matrix(const SymMatrix &m, const VertexPartition &part) {
  if (part.order() != m.order())
    throw PreconditionError("partition order " + std::to_string(part.order()) +
                            " does not match matrix order " + std::to_string(m.order()));
  const int r = static_cast<int>(part.size());
  QuotientMatrix q{DenseMatrix(r), std::vector<int>(r)};
  const auto &blocks = part.blocks();
  for (int i = 0; i < r; ++i) {
    q.block_sizes[i] = static_cast<int>(blocks[i].size());
    for (int j = 0; j < r; ++j) {
      double s = 0.0;
      for (int u : blocks[i])
        for (int v : blocks[j])
          s += m(u, v);
      q.entries(i, j) = s / static_cast<double>(blocks[i].size());
    }
  }
  return q;
}

/// True iff every block M_ij has constant row sums (within tol).
inline bool is_equitable(const SymMatrix &m, const VertexPartition &part, double tol = 1e-9) {
  if (part.order() != m.order())
    throw PreconditionError("partition order does not match matrix order");
  const auto &blocks = part.blocks();
  for (const auto &bi : blocks) {
    for (const auto &bj : blocks) {
      double first = 0.0;
      for (std::size_t k = 0; k < bi.size(); ++k) {
        double s = 0.0;
        for (int v : bj)
          s += m(bi[k], v);
        if (k == 0)
          first = s;
        else if (std::abs(s - first) > tol)
          return false;
      }
    }
  }
  return true;
}

inline std::string to_tsv(const DenseMatrix &m) {
  std::ostringstream os;
  os.precision(12);
  for (int i = 0; i < m.order(); ++i) {
    for (int j = 0; j < m.order(); ++j)
      os << (j ? "\t" : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

inline std::string to_tsv(const SymMatrix &m) { return to_tsv(m.dense()); }

} // namespace gdspread

#endif // GDSPREAD_MATRIX_HPP
