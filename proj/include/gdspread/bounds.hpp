#ifndef GDSPREAD_BOUNDS_HPP
#define GDSPREAD_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdspread/cliques.hpp"
#include "gdspread/eigensolve.hpp"
#include "gdspread/errors.hpp"
#include "gdspread/families.hpp"
#include "gdspread/graph.hpp"
#include "gdspread/matrix.hpp"

namespace gdspread {

enum class Direction { lower, upper };

inline const char *to_string(Direction d) { return d == Direction::lower ? "lower" : "upper"; }

struct Tolerances {
  /// Relative slack for holds: bound +- max(holds, holds * |bound|).
  double holds = 1e-8;
  /// Absolute |gap| at or below which a report counts as an equality.
  double equality = 1e-6;
};

/// One bound evaluated on one (graph, alpha).
struct BoundReport {
  std::string bound_id;
  Direction direction = Direction::lower;
  double bound = std::numeric_limits<double>::quiet_NaN();
  double actual = std::numeric_limits<double>::quiet_NaN();
  bool holds = false;
  double gap = std::numeric_limits<double>::quiet_NaN();  // actual - bound
  bool equality = false;
  bool applicable = true;
  std::string reason;

  bool violated() const { return applicable && !holds; }
};

/// A published closed form that disagrees with the numeric ground truth
/// without being a violation of a proven bound.
struct Discrepancy {
  std::string id;
  double alpha = 0.0;
  double claimed = 0.0;
  double numeric = 0.0;
  std::string note;
};

/// Everything the registry formulas need for one (graph, alpha), computed
/// once. Lazily filled members are not thread-safe; use one context per worker.
class BoundContext {
public:
  BoundContext(const Graph &g, double alpha, Tolerances tol = {})
      : graph_(g), profile_(distance_profile(g)), alpha_(alpha), tol_(tol),
        matrix_(generalized_distance_matrix(profile_, alpha)), spectrum_(sym_eigenvalues(matrix_)) {}

  const Graph &graph() const noexcept { return graph_; }
  const DistanceProfile &profile() const noexcept { return profile_; }
  double alpha() const noexcept { return alpha_; }
  int n() const noexcept { return profile_.n; }
  const Tolerances &tolerances() const noexcept { return tol_; }
  const SymMatrix &matrix() const noexcept { return matrix_; }

  /// D_alpha eigenvalues, descending.
  const std::vector<double> &spectrum() const noexcept { return spectrum_; }
  double radius() const { return spectrum_.front(); }
  double smallest() const { return spectrum_.back(); }
  double spread() const { return spectral_spread(spectrum_); }

  /// Distance-matrix eigenvalues rho_1 >= ... >= rho_n.
  const std::vector<double> &distance_spectrum() {
    if (!rho_)
      rho_ = sym_eigenvalues(distance_matrix(profile_));
    return *rho_;
  }

  const std::optional<Bipartition> &bipartition() {
    if (!bipartition_checked_) {
      bipartition_ = is_bipartite(graph_);
      bipartition_checked_ = true;
    }
    return bipartition_;
  }

  const CliqueResult &cliques() {
    if (!cliques_)
      cliques_ = clique_number(graph_);
    return *cliques_;
  }

  const IndependentSetResult &independence() {
    if (!independence_)
      independence_ = independence_number(graph_);
    return *independence_;
  }

  /// 2(1-a)^2 sum_{i<j} d_ij^2 + a^2 sum Tr_i^2, the squared Frobenius norm of
  /// D_alpha written in graph invariants.
  double frobenius_sq_invariant() const {
    const double w = 1.0 - alpha_;
    return w * w * static_cast<double>(profile_.sum_sq_distances()) +
           alpha_ * alpha_ * static_cast<double>(profile_.sum_sq_transmissions());
  }

  double wiener() const { return static_cast<double>(profile_.wiener); }

  void note(Discrepancy d) { discrepancies_.push_back(std::move(d)); }
  const std::vector<Discrepancy> &discrepancies() const noexcept { return discrepancies_; }

private:
  Graph graph_;
  DistanceProfile profile_;
  double alpha_;
  Tolerances tol_;
  SymMatrix matrix_;
  std::vector<double> spectrum_;
  std::optional<std::vector<double>> rho_;
  std::optional<Bipartition> bipartition_;
  bool bipartition_checked_ = false;
  std::optional<CliqueResult> cliques_;
  std::optional<IndependentSetResult> independence_;
  std::vector<Discrepancy> discrepancies_;
};

/// Output of one registry formula before holds/equality are judged.
struct Evaluation {
  bool applicable = true;
  std::string reason;
  double bound = std::numeric_limits<double>::quiet_NaN();
  double actual = std::numeric_limits<double>::quiet_NaN();

  static Evaluation skip(std::string why) {
    Evaluation e;
    e.applicable = false;
    e.reason = std::move(why);
    return e;
  }
  static Evaluation value(double bound, double actual) {
    Evaluation e;
    e.bound = bound;
    e.actual = actual;
    return e;
  }
};

struct BoundEntry {
  std::string_view id;
  Direction direction;
  std::string_view description;
  std::function<Evaluation(BoundContext &)> evaluate;
};

/// sqrt(2||M||_F^2 - (2/n)(tr M)^2): an upper bound on the spread of any
/// real symmetric (indeed any normal) matrix.
inline double mirsky_spread_bound(const SymMatrix &m) {
  const double n = m.order();
  if (n == 0)
    return 0.0;
  const double tr = trace(m);
  return std::sqrt(std::max(0.0, 2.0 * frobenius_sq(m) - 2.0 / n * tr * tr));
}

// ---------------------------------------------------------------------------
// Closed forms of the quotient bounds, kept for cross-checking
// ---------------------------------------------------------------------------

/// Published closed form of the quotient eigenvalue gap for the split
/// N[v] | rest of a bipartite graph (v of maximum degree Delta <= n-2).
inline double degree_quotient_gap_closed_form(const Graph &g, const DistanceProfile &p, int v, double alpha) {
  const double n = p.n;
  const double delta = g.degree(v);
  const double w = static_cast<double>(p.wiener);
  const double s = p.avg_distance_degree[v] * delta + static_cast<double>(p.transmission[v]);
  const double a_i = alpha * n * (s - 2.0 * delta * delta) + 2.0 * n * delta * delta + (delta + 1.0) * (2.0 * w - 2.0 * s);
  const double b_i = 2.0 * alpha * w * (s - 2.0 * delta * delta) + 4.0 * w * delta * delta - s * s;
  const double pq = (delta + 1.0) * (n - delta - 1.0);
  return std::sqrt(std::max(0.0, a_i * a_i - 4.0 * b_i * pq)) / pq;
}

/// Closed form of the quotient eigenvalue gap for the split clique | rest
/// (clique of order omega <= n-1). `printed` selects the published alpha_i,
/// whose 2W*omega term carries a spurious (1-alpha) factor; the two agree
/// only at alpha = 0.
inline double clique_quotient_gap_closed_form(const DistanceProfile &p, const std::vector<int> &clique, double alpha,
                                              bool printed = false) {
  const double n = p.n;
  const double omega = static_cast<double>(clique.size());
  const double w = static_cast<double>(p.wiener);
  double s = 0.0;
  for (int v : clique)
    s += static_cast<double>(p.transmission[v]);
  const double a_i = printed ? s * (alpha * n - 2.0 * omega) + omega * (1.0 - alpha) * (2.0 * w + n * (omega - 1.0))
                             : s * (alpha * n - 2.0 * omega) + 2.0 * w * omega + (1.0 - alpha) * n * omega * (omega - 1.0);
  const double b_i = 2.0 * w * omega * (omega - 1.0) - s * s + 2.0 * w * alpha * (s - omega * (omega - 1.0));
  const double pq = omega * (n - omega);
  return std::sqrt(std::max(0.0, a_i * a_i - 4.0 * b_i * pq)) / pq;
}

namespace detail {

inline double root(double x) { return std::sqrt(std::max(0.0, x)); }

inline bool in_upper_half(double alpha) { return alpha >= 0.5 && alpha <= 1.0; }

inline constexpr const char *kAlphaBranchReason = "alpha outside {0} ∪ [1/2,1]";

/// Gap between the two eigenvalues of the 2x2 quotient of D_alpha over
/// (block, rest).
inline double split_quotient_gap(BoundContext &ctx, const std::vector<int> &block) {
  const auto q = quotient_matrix(ctx.matrix(), VertexPartition::split(block, ctx.n()));
  return eigen_gap_2x2(q.entries);
}

inline Evaluation thm35(BoundContext &ctx) {
  const int n = ctx.n();
  if (n < 3)
    return Evaluation::skip("needs n >= 3");
  if (!ctx.bipartition())
    return Evaluation::skip("not bipartite");
  const auto &g = ctx.graph();
  const int delta = g.max_degree();
  const double alpha = ctx.alpha();
  if (delta <= n - 2) {
    double best = -std::numeric_limits<double>::infinity();
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) != delta)
        continue;
      std::vector<int> closed{v};
      closed.insert(closed.end(), g.neighbors(v).begin(), g.neighbors(v).end());
      best = std::max(best, split_quotient_gap(ctx, closed));
    }
    return Evaluation::value(best, ctx.spread());
  }
  // Connected bipartite with a dominating vertex: the star K_{1,n-1}.
  const double nn = n;
  double value;
  FormulaStatus status;
  if (alpha == 0.0) {
    value = nn + std::sqrt(nn * nn - 3.0 * nn + 3.0);
    status = FormulaStatus::verified;
  } else {
    value = root((alpha - 2.0) * (alpha - 2.0) * (nn * nn - 2.0 * nn + 2.0) + 2.0 * (nn - 1.0) * (alpha * alpha - 2.0));
    status = FormulaStatus::claimed;
  }
  if (std::abs(value - ctx.spread()) > ctx.tolerances().equality)
    ctx.note({"thm35_star_exact", alpha, value, ctx.spread(),
              std::string(to_string(status)) + " exact spread of K_{1,n-1} differs from the numeric spread"});
  return Evaluation::value(value, ctx.spread());
}

inline Evaluation thm38(BoundContext &ctx) {
  const int n = ctx.n();
  if (n < 3)
    return Evaluation::skip("needs n >= 3");
  if (!ctx.bipartition())
    return Evaluation::skip("not bipartite");
  const double alpha = ctx.alpha();
  const double f = n / 2;
  const double c = n - n / 2;
  if (alpha == 0.0)
    return Evaluation::value(n + std::sqrt(c * c + f * f - f * c), ctx.spread());
  if (!in_upper_half(alpha))
    return Evaluation::skip(kAlphaBranchReason);
  const double nn = n;
  const double theta = root(nn * nn * alpha * alpha - 4.0 * (alpha - 1.0) * (f * f + c * c) - 4.0 * f * c) +
                       root(9.0 * alpha * alpha - 20.0 * alpha + 12.0);
  return Evaluation::value((alpha * (nn - 3.0) + 2.0 * nn - 6.0 + theta) / 2.0, ctx.spread());
}

inline Evaluation thm41(BoundContext &ctx) {
  const int n = ctx.n();
  if (n < 3)
    return Evaluation::skip("needs n >= 3");
  const auto &cl = ctx.cliques();
  if (cl.size < 2)
    return Evaluation::skip("clique number below 2");
  if (cl.size == n) {
    const double exact = (1.0 - ctx.alpha()) * n;
    if (std::abs(exact - ctx.spread()) > ctx.tolerances().equality)
      ctx.note({"thm41_complete_exact", ctx.alpha(), exact, ctx.spread(),
                "verified exact spread of K_n differs from the numeric spread"});
    return Evaluation::value(exact, ctx.spread());
  }
  double best = -std::numeric_limits<double>::infinity();
  double printed = -std::numeric_limits<double>::infinity();
  for (const auto &clique : cl.cliques) {
    best = std::max(best, split_quotient_gap(ctx, clique));
    printed = std::max(printed, clique_quotient_gap_closed_form(ctx.profile(), clique, ctx.alpha(), true));
  }
  if (std::abs(printed - best) > ctx.tolerances().equality)
    ctx.note({"thm41_printed_alpha_i", ctx.alpha(), printed, best,
              "printed alpha_i gives a quotient gap different from the quotient matrix"});
  return Evaluation::value(best, ctx.spread());
}

inline Evaluation thm43(BoundContext &ctx) {
  const int n = ctx.n();
  if (n < 3)
    return Evaluation::skip("needs n >= 3");
  const int t = ctx.independence().size;
  if (t < 2)
    return Evaluation::skip("independence number below 2");
  const double alpha = ctx.alpha();
  const double nn = n;
  const double tt = t;
  if (alpha == 0.0) {
    const double radical = std::sqrt((nn - tt + 1.0) * (nn - tt + 1.0) + 4.0 * tt * tt - 4.0 * tt);
    // The printed form adds the radical without halving it; that exceeds the
    // spread of the complete split graph it names as the equality case.
    const double printed = (nn + tt + 1.0) / 2.0 + radical;
    const auto &tol = ctx.tolerances();
    if (printed > ctx.spread() + std::max(tol.holds, tol.holds * std::abs(printed)))
      ctx.note({"thm43_alpha0_printed", alpha, printed, ctx.spread(),
                "unhalved radical exceeds the numeric spread"});
    return Evaluation::value((nn + tt + 1.0 + radical) / 2.0, ctx.spread());
  }
  if (!in_upper_half(alpha))
    return Evaluation::skip(kAlphaBranchReason);
  const double theta = (5.0 - 4.0 * alpha) * tt * tt + (6.0 * alpha * nn - 8.0 * nn - 4.0 * alpha + 6.0) * tt +
                       nn * nn * (alpha - 2.0) * (alpha - 2.0) + 2.0 * nn * alpha - 4.0 * nn + 1.0;
  const double value =
      (2.0 * nn - tt + alpha * (nn - 3.0) - 5.0 + root(theta) + root(9.0 * alpha * alpha - 20.0 * alpha + 12.0)) / 2.0;
  return Evaluation::value(value, ctx.spread());
}

inline std::vector<BoundEntry> make_registry() {
  std::vector<BoundEntry> r;
  auto add = [&](std::string_view id, Direction d, std::string_view what, std::function<Evaluation(BoundContext &)> f) {
    r.push_back({id, d, what, std::move(f)});
  };

  add("thm24_lower", Direction::lower, "|a(Tr_max-Tr_min) - (1-a)S_D| <= spread", [](BoundContext &c) {
    const auto &rho = c.distance_spectrum();
    const double sd = spectral_spread(rho);
    const double dtr = static_cast<double>(c.profile().tr_max() - c.profile().tr_min());
    return Evaluation::value(std::abs(c.alpha() * dtr - (1.0 - c.alpha()) * sd), c.spread());
  });
  add("thm24_upper", Direction::upper, "spread <= a(Tr_max-Tr_min) + (1-a)S_D", [](BoundContext &c) {
    const double sd = spectral_spread(c.distance_spectrum());
    const double dtr = static_cast<double>(c.profile().tr_max() - c.profile().tr_min());
    return Evaluation::value(c.alpha() * dtr + (1.0 - c.alpha()) * sd, c.spread());
  });
  add("ineq24_radius_lower", Direction::lower, "a Tr_min + (1-a) rho_1 <= d_1", [](BoundContext &c) {
    const double rho1 = c.distance_spectrum().front();
    return Evaluation::value(c.alpha() * static_cast<double>(c.profile().tr_min()) + (1.0 - c.alpha()) * rho1,
                             c.radius());
  });
  add("ineq24_radius_upper", Direction::upper, "d_1 <= a Tr_max + (1-a) rho_1", [](BoundContext &c) {
    const double rho1 = c.distance_spectrum().front();
    return Evaluation::value(c.alpha() * static_cast<double>(c.profile().tr_max()) + (1.0 - c.alpha()) * rho1,
                             c.radius());
  });
  add("ineq25_smallest_lower", Direction::lower, "a Tr_min + (1-a) rho_n <= d_n", [](BoundContext &c) {
    const double rhon = c.distance_spectrum().back();
    return Evaluation::value(c.alpha() * static_cast<double>(c.profile().tr_min()) + (1.0 - c.alpha()) * rhon,
                             c.smallest());
  });
  add("ineq25_smallest_upper", Direction::upper, "d_n <= a Tr_max + (1-a) rho_n", [](BoundContext &c) {
    const double rhon = c.distance_spectrum().back();
    return Evaluation::value(c.alpha() * static_cast<double>(c.profile().tr_max()) + (1.0 - c.alpha()) * rhon,
                             c.smallest());
  });
  add("thm25_lower", Direction::lower, "spread >= n/(n-1) d_1 - 2aW/(n-1)", [](BoundContext &c) {
    if (c.n() < 2)
      return Evaluation::skip("needs n >= 2");
    const double n = c.n();
    return Evaluation::value(n / (n - 1.0) * c.radius() - 2.0 * c.alpha() * c.wiener() / (n - 1.0), c.spread());
  });
  add("thm26_lower", Direction::lower, "spread >= d_1 - sqrt((F - d_1^2)/(n-1))", [](BoundContext &c) {
    if (c.n() < 2)
      return Evaluation::skip("needs n >= 2");
    const double n = c.n();
    const double d1 = c.radius();
    return Evaluation::value(d1 - root((c.frobenius_sq_invariant() - d1 * d1) / (n - 1.0)), c.spread());
  });
  add("cor27_lower", Direction::lower, "spread >= (2W - sqrt((n^2 F - 4W^2)/(n-1)))/n", [](BoundContext &c) {
    if (c.n() < 2)
      return Evaluation::skip("needs n >= 2");
    const double n = c.n();
    const double w = c.wiener();
    return Evaluation::value((2.0 * w - root((n * n * c.frobenius_sq_invariant() - 4.0 * w * w) / (n - 1.0))) / n,
                             c.spread());
  });
  add("thm28_lower", Direction::lower, "spread >= (2/n) sqrt(n F - 4a^2 W^2)", [](BoundContext &c) {
    const double n = c.n();
    const double aw = c.alpha() * c.wiener();
    return Evaluation::value(2.0 / n * root(n * c.frobenius_sq_invariant() - 4.0 * aw * aw), c.spread());
  });
  add("mirsky_upper", Direction::upper, "spread <= sqrt(2||M||_F^2 - (2/n)(tr M)^2)", [](BoundContext &c) {
    return Evaluation::value(mirsky_spread_bound(c.matrix()), c.spread());
  });
  add("thm210_upper", Direction::upper, "spread <= sqrt(2F - (8/n) a^2 W^2)", [](BoundContext &c) {
    const double n = c.n();
    const double a = c.alpha();
    const double w = c.wiener();
    const double dsq = static_cast<double>(c.profile().sum_sq_distances());
    const double trsq = static_cast<double>(c.profile().sum_sq_transmissions());
    const double bound = root(2.0 * c.frobenius_sq_invariant() - 8.0 / n * a * a * w * w);
    // As printed, the transmission term carries a^2 instead of 2a^2.
    const double printed_radicand = 2.0 * (1.0 - a) * (1.0 - a) * dsq + a * a * trsq - 8.0 / n * a * a * w * w;
    const auto &tol = c.tolerances();
    if (printed_radicand < 0.0) {
      c.note({"thm210_printed", a, std::numeric_limits<double>::quiet_NaN(), c.spread(),
              "printed radicand is negative (" + std::to_string(printed_radicand) + ")"});
    } else if (const double printed = std::sqrt(printed_radicand);
               printed < c.spread() - std::max(tol.holds, tol.holds * printed)) {
      c.note({"thm210_printed", a, printed, c.spread(), "printed upper bound lies below the numeric spread"});
    }
    return Evaluation::value(bound, c.spread());
  });
  add("halfrange_radius_upper", Direction::upper, "spread <= d_1 for 1/2 <= a <= 1", [](BoundContext &c) {
    if (!in_upper_half(c.alpha()))
      return Evaluation::skip("alpha below 1/2");
    return Evaluation::value(c.radius(), c.spread());
  });
  add("thm35_bipartite_lower", Direction::lower, "max-degree quotient bound for bipartite graphs", thm35);
  add("thm38_bipartite_lower", Direction::lower, "order bound for bipartite graphs", thm38);
  add("thm41_clique_lower", Direction::lower, "clique-number quotient bound", thm41);
  add("thm43_independence_lower", Direction::lower, "independence-number bound", thm43);
  return r;
}

} // namespace detail

/// Static table of every bound, in report order.
inline const std::vector<BoundEntry> &bound_registry() {
  static const std::vector<BoundEntry> registry = detail::make_registry();
  return registry;
}

inline BoundReport judge(const BoundEntry &entry, const Evaluation &ev, const Tolerances &tol) {
  BoundReport r;
  r.bound_id = std::string(entry.id);
  r.direction = entry.direction;
  r.applicable = ev.applicable;
  r.reason = ev.reason;
  if (!ev.applicable)
    return r;
  r.bound = ev.bound;
  r.actual = ev.actual;
  r.gap = ev.actual - ev.bound;
  const double slack = std::max(tol.holds, tol.holds * std::abs(ev.bound));
  r.holds = entry.direction == Direction::lower ? ev.actual >= ev.bound - slack : ev.actual <= ev.bound + slack;
  r.equality = std::abs(r.gap) <= tol.equality;
  return r;
}

struct BoundEvaluation {
  std::vector<BoundReport> reports;
  std::vector<Discrepancy> discrepancies;

  bool any_violation() const {
    return std::any_of(reports.begin(), reports.end(), [](const BoundReport &r) { return r.violated(); });
  }

  const BoundReport *find(std::string_view id) const {
    for (const auto &r : reports)
      if (r.bound_id == id)
        return &r;
    return nullptr;
  }
};

inline BoundEvaluation evaluate_all(BoundContext &ctx) {
  BoundEvaluation out;
  for (const auto &entry : bound_registry())
    out.reports.push_back(judge(entry, entry.evaluate(ctx), ctx.tolerances()));
  out.discrepancies = ctx.discrepancies();
  return out;
}

/// Evaluates every registry entry. Inapplicable entries are included with a reason.
inline BoundEvaluation evaluate_all(const Graph &g, double alpha, Tolerances tol = {}) {
  BoundContext ctx(g, alpha, tol);
  return evaluate_all(ctx);
}

/// Throws PreconditionError for an unknown id.
inline BoundReport evaluate_bound(std::string_view id, const Graph &g, double alpha, Tolerances tol = {}) {
  for (const auto &entry : bound_registry()) {
    if (entry.id == id) {
      BoundContext ctx(g, alpha, tol);
      return judge(entry, entry.evaluate(ctx), tol);
    }
  }
  throw PreconditionError("unknown bound id '" + std::string(id) + "'");
}

// ---------------------------------------------------------------------------
// Spectral comparison checks
// ---------------------------------------------------------------------------

/// a_i >= b_i >= a_{n-r+i} for all i, both lists descending, within tol.
inline bool check_interlacing(const std::vector<double> &parent, const std::vector<double> &child, double tol = 1e-8) {
  const std::size_t n = parent.size();
  const std::size_t r = child.size();
  if (r > n)
    return false;
  for (std::size_t i = 0; i < r; ++i) {
    if (child[i] > parent[i] + tol)
      return false;
    if (child[i] < parent[n - r + i] - tol)
      return false;
  }
  return true;
}

struct MonotonicityResult {
  bool applicable = true;
  std::string reason;
  bool holds = false;
  /// max over i of d_i(G) - d_i(G - e); <= tol when monotone.
  double worst_drop = 0.0;
};

/// Deleting an edge never lowers any D_alpha eigenvalue when 1/2 <= alpha <= 1.
inline MonotonicityResult check_edge_deletion_monotonicity(const Graph &g, int u, int v, double alpha,
                                                           double tol = 1e-8) {
  check_alpha(alpha);
  MonotonicityResult r;
  if (!detail::in_upper_half(alpha)) {
    r.applicable = false;
    r.reason = "alpha below 1/2";
    return r;
  }
  const Graph h = g.without_edge(u, v);
  if (!is_connected(h)) {
    r.applicable = false;
    r.reason = "edge is a bridge; G - e is disconnected";
    return r;
  }
  const auto before = sym_eigenvalues(generalized_distance_matrix(distance_profile(g), alpha));
  const auto after = sym_eigenvalues(generalized_distance_matrix(distance_profile(h), alpha));
  r.worst_drop = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < before.size(); ++i)
    r.worst_drop = std::max(r.worst_drop, before[i] - after[i]);
  r.holds = r.worst_drop <= tol;
  return r;
}

/// Smallest eigenvalue of D_alpha(K_{1,2}): the leaf eigenvalue 5a - 2 for
/// a < 3/5, the smaller quotient root (3a + 2 - sqrt(9a^2 - 20a + 12)) / 2
/// from 3/5 on.
inline double path3_smallest_eigenvalue(double alpha) {
  const double quotient = (3.0 * alpha + 2.0 - std::sqrt(9.0 * alpha * alpha - 20.0 * alpha + 12.0)) / 2.0;
  return std::min(5.0 * alpha - 2.0, quotient);
}

struct InterlacingSummary {
  int quotient_checks = 0;
  int quotient_failures = 0;
  int principal_checks = 0;
  int principal_failures = 0;
  /// Induced P3 where d_n(G) exceeds d_3(D_alpha(K_{1,2})) itself; the
  /// principal block carries G's transmissions, so this is informational.
  int path3_reference_exceeded = 0;
};

/// Quotient interlacing for the bipartition (when bipartite), every
/// maximum-clique split and every maximum-degree closed-neighbourhood split;
/// principal-block interlacing d_n(G) <= smallest eigenvalue of the block for
/// every induced 3-vertex path.
inline InterlacingSummary check_interlacing_structures(BoundContext &ctx, double tol = 1e-8) {
  InterlacingSummary s;
  const int n = ctx.n();
  const auto &parent = ctx.spectrum();
  auto quotient = [&](const VertexPartition &part) {
    ++s.quotient_checks;
    if (!check_interlacing(parent, quotient_eigenvalues(quotient_matrix(ctx.matrix(), part)), tol))
      ++s.quotient_failures;
  };
  if (n >= 2) {
    if (const auto &bp = ctx.bipartition(); bp && !bp->second.empty())
      quotient(VertexPartition({bp->first, bp->second}, n));
    if (n <= kDefaultExactSearchCap) {
      for (const auto &c : ctx.cliques().cliques)
        if (static_cast<int>(c.size()) < n)
          quotient(VertexPartition::split(c, n));
    }
    const auto &g = ctx.graph();
    const int delta = g.max_degree();
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) != delta || delta == n - 1)
        continue;
      std::vector<int> closed{v};
      closed.insert(closed.end(), g.neighbors(v).begin(), g.neighbors(v).end());
      quotient(VertexPartition::split(closed, n));
    }
  }
  const double reference = path3_smallest_eigenvalue(ctx.alpha());
  for (const auto &p3 : induced_paths3(ctx.graph())) {
    ++s.principal_checks;
    const auto block = sym_eigenvalues(principal_submatrix(ctx.matrix(), p3));
    if (!check_interlacing(parent, block, tol))
      ++s.principal_failures;
    if (ctx.smallest() > reference + tol)
      ++s.path3_reference_exceeded;
  }
  return s;
}

} // namespace gdspread

#endif // GDSPREAD_BOUNDS_HPP
