#ifndef GDSPREAD_FAMILIES_HPP
#define GDSPREAD_FAMILIES_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gdspread/eigensolve.hpp"
#include "gdspread/errors.hpp"
#include "gdspread/graph.hpp"
#include "gdspread/matrix.hpp"

namespace gdspread {

enum class FamilyKind { complete, complete_bipartite, complete_split, path, cycle, star };

/// A named graph family instance. Parameter meaning per kind:
///   complete n | complete_bipartite r s | complete_split t n (clique t, order n)
///   path n | cycle n | star n
struct FamilySpec {
  FamilyKind kind = FamilyKind::complete;
  int a = 0;
  int b = 0;

  int order() const {
    switch (kind) {
    case FamilyKind::complete_bipartite:
      return a + b;
    case FamilyKind::complete_split:
      return b;
    default:
      return a;
    }
  }

  std::string to_string() const {
    switch (kind) {
    case FamilyKind::complete:
      return "complete:" + std::to_string(a);
    case FamilyKind::complete_bipartite:
      return "kbip:" + std::to_string(a) + "," + std::to_string(b);
    case FamilyKind::complete_split:
      return "split:" + std::to_string(a) + "," + std::to_string(b);
    case FamilyKind::path:
      return "path:" + std::to_string(a);
    case FamilyKind::cycle:
      return "cycle:" + std::to_string(a);
    case FamilyKind::star:
      return "star:" + std::to_string(a);
    }
    return {};
  }
};

inline void validate(const FamilySpec &f) {
  auto fail = [&](const std::string &why) { throw PreconditionError(f.to_string() + ": " + why); };
  switch (f.kind) {
  case FamilyKind::complete:
  case FamilyKind::path:
    if (f.a < 1)
      fail("order must be >= 1");
    break;
  case FamilyKind::cycle:
    if (f.a < 3)
      fail("a cycle needs at least 3 vertices");
    break;
  case FamilyKind::star:
    if (f.a < 2)
      fail("a star needs at least 2 vertices");
    break;
  case FamilyKind::complete_bipartite:
    if (f.a < 1 || f.b < 1)
      fail("both parts must be nonempty");
    break;
  case FamilyKind::complete_split:
    if (f.a < 1 || f.a > f.b - 1)
      fail("clique size t must satisfy 1 <= t <= n-1");
    break;
  }
}

/// Parses "complete:4", "kbip:2,3", "split:2,5", "path:5", "cycle:6", "star:4".
/// Long names (complete_bipartite, complete_split) are accepted too.
inline FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("family spec needs the form kind:params", 0);
  const auto name = text.substr(0, colon);
  FamilySpec f;
  int arity = 1;
  if (name == "complete" || name == "K") {
    f.kind = FamilyKind::complete;
  } else if (name == "kbip" || name == "complete_bipartite") {
    f.kind = FamilyKind::complete_bipartite;
    arity = 2;
  } else if (name == "split" || name == "complete_split") {
    f.kind = FamilyKind::complete_split;
    arity = 2;
  } else if (name == "path") {
    f.kind = FamilyKind::path;
  } else if (name == "cycle") {
    f.kind = FamilyKind::cycle;
  } else if (name == "star") {
    f.kind = FamilyKind::star;
  } else {
    throw ParseError("unknown graph family '" + std::string(name) + "'", 0);
  }

  std::vector<int> params;
  std::size_t pos = colon + 1;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    int value = 0;
    const auto *first = text.data() + pos;
    const auto *last = text.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
      throw ParseError("family parameter is not an integer", pos);
    params.push_back(value);
    if (comma == std::string_view::npos)
      break;
    pos = comma + 1;
  }
  if (static_cast<int>(params.size()) != arity)
    throw ParseError("family '" + std::string(name) + "' takes " + std::to_string(arity) + " parameter(s)",
                     colon + 1);
  f.a = params[0];
  f.b = arity == 2 ? params[1] : 0;
  validate(f);
  return f;
}

/// Builds the family member with canonical labels: clique / first part occupy
/// vertices 0..r-1, so positional partitions line up with the structure.
inline Graph generate(const FamilySpec &f) {
  validate(f);
  Graph::EdgeList e;
  switch (f.kind) {
  case FamilyKind::complete:
    for (int u = 0; u < f.a; ++u)
      for (int v = u + 1; v < f.a; ++v)
        e.emplace_back(u, v);
    return Graph::from_edges(f.a, e);
  case FamilyKind::complete_bipartite:
    for (int u = 0; u < f.a; ++u)
      for (int v = f.a; v < f.a + f.b; ++v)
        e.emplace_back(u, v);
    return Graph::from_edges(f.a + f.b, e);
  case FamilyKind::star:
    return generate(FamilySpec{FamilyKind::complete_bipartite, 1, f.a - 1});
  case FamilyKind::complete_split:
    for (int u = 0; u < f.a; ++u)
      for (int v = u + 1; v < f.b; ++v)
        e.emplace_back(u, v);
    return Graph::from_edges(f.b, e);
  case FamilyKind::path:
    for (int u = 0; u + 1 < f.a; ++u)
      e.emplace_back(u, u + 1);
    return Graph::from_edges(f.a, e);
  case FamilyKind::cycle:
    for (int u = 0; u < f.a; ++u)
      e.emplace_back(u, (u + 1) % f.a);
    return Graph::from_edges(f.a, e);
  }
  throw PreconditionError("unhandled family kind");
}

inline Graph complete_graph(int n) { return generate({FamilyKind::complete, n, 0}); }
inline Graph complete_bipartite(int r, int s) { return generate({FamilyKind::complete_bipartite, r, s}); }
inline Graph complete_split(int t, int n) { return generate({FamilyKind::complete_split, t, n}); }
inline Graph path_graph(int n) { return generate({FamilyKind::path, n, 0}); }
inline Graph cycle_graph(int n) { return generate({FamilyKind::cycle, n, 0}); }

// ---------------------------------------------------------------------------
// Analytic spectra
// ---------------------------------------------------------------------------

/// Eigenvalues with multiplicities, as given by a closed form.
struct AnalyticSpectrum {
  std::vector<std::pair<double, int>> entries;

  int order() const {
    int s = 0;
    for (const auto &[value, mult] : entries)
      s += mult;
    return s;
  }

  /// Multiset expanded and sorted descending.
  std::vector<double> expand() const {
    std::vector<double> out;
    for (const auto &[value, mult] : entries)
      out.insert(out.end(), static_cast<std::size_t>(mult), value);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }
};

/// Sorted-multiset comparison with absolute tolerance.
inline bool multiset_matches(const std::vector<double> &a, const std::vector<double> &b, double tol) {
  if (a.size() != b.size())
    return false;
  auto x = a;
  auto y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(std::abs(x[i] - y[i]) <= tol))
      return false;
  return true;
}

namespace detail {
inline void push_if(AnalyticSpectrum &s, double value, int mult) {
  if (mult > 0)
    s.entries.emplace_back(value, mult);
}
inline double safe_sqrt(double x) { return std::sqrt(std::max(0.0, x)); }
} // namespace detail

/// K_n: {n-1, (n*alpha - 1)^[n-1]}.
inline AnalyticSpectrum spectrum_complete(int n, double alpha) {
  check_alpha(alpha);
  if (n < 1)
    throw PreconditionError("complete graph needs n >= 1");
  AnalyticSpectrum s;
  s.entries.emplace_back(static_cast<double>(n - 1), 1);
  detail::push_if(s, n * alpha - 1.0, n - 1);
  return s;
}

/// Quotient eigenvalues x1 >= x2 of D_alpha(K_{r,s}) over its bipartition.
inline std::pair<double, double> complete_bipartite_quotient_roots(int r, int s, double alpha) {
  const double rs = static_cast<double>(r) + s;
  const double disc = (static_cast<double>(r) * r + static_cast<double>(s) * s) * (alpha - 2.0) * (alpha - 2.0) +
                      2.0 * r * s * (alpha * alpha - 2.0);
  const double centre = alpha * rs + 2.0 * rs - 4.0;
  const double root = detail::safe_sqrt(disc);
  return {(centre + root) / 2.0, (centre - root) / 2.0};
}

/// K_{r,s}: alpha(2r+s)-2 [r-1], alpha(2s+r)-2 [s-1], and the two quotient roots.
inline AnalyticSpectrum spectrum_complete_bipartite(int r, int s, double alpha) {
  check_alpha(alpha);
  if (r < 1 || s < 1)
    throw PreconditionError("complete bipartite graph needs r, s >= 1");
  AnalyticSpectrum out;
  detail::push_if(out, alpha * (2 * r + s) - 2.0, r - 1);
  detail::push_if(out, alpha * (2 * s + r) - 2.0, s - 1);
  const auto [x1, x2] = complete_bipartite_quotient_roots(r, s, alpha);
  out.entries.emplace_back(x1, 1);
  out.entries.emplace_back(x2, 1);
  return out;
}

/// CS_{t,n-t} (clique of order t joined to n-t independent vertices).
inline AnalyticSpectrum spectrum_complete_split(int t, int n, double alpha) {
  check_alpha(alpha);
  if (t < 1 || t > n - 1)
    throw PreconditionError("complete split graph needs 1 <= t <= n-1");
  const double tt = t;
  const double nn = n;
  const double theta = (5.0 - 4.0 * alpha) * tt * tt + (6.0 * alpha * nn - 8.0 * nn - 4.0 * alpha + 6.0) * tt +
                       nn * nn * (alpha - 2.0) * (alpha - 2.0) + 2.0 * nn * alpha - 4.0 * nn + 1.0;
  const double centre = 2.0 * nn - tt + alpha * nn - 3.0;
  const double root = detail::safe_sqrt(theta);
  AnalyticSpectrum out;
  detail::push_if(out, alpha * nn - 1.0, t - 1);
  detail::push_if(out, alpha * (2.0 * nn - tt) - 2.0, n - t - 1);
  out.entries.emplace_back((centre + root) / 2.0, 1);
  out.entries.emplace_back((centre - root) / 2.0, 1);
  return out;
}

enum class CoNeighborKind { independent, clique };

struct CoNeighborEigenvalue {
  CoNeighborKind kind;
  double value;
  int multiplicity;  // lower bound
  std::int64_t transmission;
};

/// Eigenvalue forced by a set of twins: vertices with equal open
/// neighbourhoods (S independent) give alpha(Tr+2)-2, vertices with equal
/// closed neighbourhoods (S a clique) give alpha(Tr+1)-1, each with
/// multiplicity at least |S|-1.
inline CoNeighborEigenvalue co_neighbor_eigenvalue(const Graph &g, const DistanceProfile &p,
                                                   const std::vector<int> &set, double alpha) {
  check_alpha(alpha);
  if (set.empty())
    throw PreconditionError("co-neighbour set is empty");
  for (int v : set)
    if (v < 0 || v >= g.order())
      throw PreconditionError("co-neighbour vertex out of range");

  auto closed = [&](int v) {
    std::vector<int> nb(g.neighbors(v).begin(), g.neighbors(v).end());
    nb.push_back(v);
    std::sort(nb.begin(), nb.end());
    return nb;
  };
  auto open = [&](int v) { return std::vector<int>(g.neighbors(v).begin(), g.neighbors(v).end()); };

  bool independent = true;
  bool clique = true;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (set[i] == set[j])
        throw PreconditionError("co-neighbour set has a repeated vertex");
      const bool adj = g.adjacent(set[i], set[j]);
      independent = independent && !adj && open(set[i]) == open(set[j]);
      clique = clique && adj && closed(set[i]) == closed(set[j]);
    }
  }
  if (!independent && !clique)
    throw PreconditionError("vertices do not share a neighbourhood as an independent set or a clique");

  const auto tr = p.transmission[set.front()];
  for (int v : set)
    if (p.transmission[v] != tr)
      throw PreconditionError("co-neighbour vertices differ in transmission");

  const int mult = static_cast<int>(set.size()) - 1;
  // A single vertex is trivially both; report the independent form.
  if (independent)
    return {CoNeighborKind::independent, alpha * (static_cast<double>(tr) + 2.0) - 2.0, mult, tr};
  return {CoNeighborKind::clique, alpha * (static_cast<double>(tr) + 1.0) - 1.0, mult, tr};
}

enum class FormulaStatus { verified, claimed };

inline const char *to_string(FormulaStatus s) { return s == FormulaStatus::verified ? "verified" : "claimed"; }

/// Spread of K_{a,n-a}: the published closed form next to the value from the
/// numeric eigensolver, which is the ground truth.
struct BipartiteSpread {
  double formula = 0.0;
  double numeric = 0.0;
  FormulaStatus status = FormulaStatus::verified;

  bool agrees(double tol) const { return std::abs(formula - numeric) <= tol; }
};

/// sigma = n^2 a^2 - 4a (n^2 + 2a^2 - 2an) + 4(n^2 - 3an + 3a^2), here with
/// `a` the smaller part and `alpha` the weight.
inline double complete_bipartite_sigma(int a, int n, double alpha) {
  const double aa = a;
  const double nn = n;
  return nn * nn * alpha * alpha - (nn * nn + 2.0 * aa * aa - 2.0 * aa * nn) * 4.0 * alpha +
         4.0 * (nn * nn - 3.0 * aa * nn + 3.0 * aa * aa);
}

/// For a >= 2, or a = 1 with alpha = 0, the formula (n(2-alpha) - 2a*alpha +
/// sqrt(sigma))/2 follows from the smallest eigenvalue alpha(n+a)-2 (or -2).
/// For a = 1 and alpha != 0 the published value is sqrt(sigma), which rests
/// on identifying the smaller quotient root as the smallest eigenvalue; it
/// is tagged claimed.
inline BipartiteSpread spread_complete_bipartite(int a, int n, double alpha) {
  check_alpha(alpha);
  if (n < 3 || a < 1 || 2 * a > n)
    throw PreconditionError("spread_complete_bipartite needs n >= 3 and 1 <= a <= n/2");
  BipartiteSpread out;
  const double sigma = complete_bipartite_sigma(a, n, alpha);
  if (a == 1 && alpha != 0.0) {
    out.formula = detail::safe_sqrt(sigma);
    out.status = FormulaStatus::claimed;
  } else {
    out.formula = (n * (2.0 - alpha) - 2.0 * a * alpha + detail::safe_sqrt(sigma)) / 2.0;
    out.status = FormulaStatus::verified;
  }
  const auto p = distance_profile(complete_bipartite(a, n - a));
  out.numeric = spectral_spread(sym_eigenvalues(generalized_distance_matrix(p, alpha)));
  return out;
}

} // namespace gdspread

#endif // GDSPREAD_FAMILIES_HPP
