#ifndef GDSPREAD_GRAPH_HPP
#define GDSPREAD_GRAPH_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gdspread/errors.hpp"

namespace gdspread {

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
  using EdgeList = std::vector<std::pair<int, int>>;

  /// Validates and normalizes the edge set. Throws GraphError on self-loops,
  /// duplicate edges (in either orientation) and endpoints outside [0, n).
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 1)
      throw GraphError("graph needs at least one vertex");
    Graph g;
    g.n_ = n;
    g.matrix_.assign(static_cast<std::size_t>(n) * n, 0);
    g.adj_.resize(n);
    g.edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw GraphError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                         ") has an endpoint outside [0," + std::to_string(n) + ")");
      if (a == b)
        throw GraphError("self-loop at vertex " + std::to_string(a));
      auto &cell = g.matrix_[static_cast<std::size_t>(a) * n + b];
      if (cell)
        throw GraphError("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
      cell = 1;
      g.matrix_[static_cast<std::size_t>(b) * n + a] = 1;
      g.edges_.emplace_back(std::min(a, b), std::max(a, b));
      g.adj_[a].push_back(b);
      g.adj_[b].push_back(a);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    for (auto &nb : g.adj_)
      std::sort(nb.begin(), nb.end());
    return g;
  }

  static Graph from_edges(int n, const EdgeList &edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges));
  }

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  const EdgeList &edges() const noexcept { return edges_; }

  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(int u, int v) const {
    return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v)
      d = std::max(d, degree(v));
    return d;
  }

  Graph without_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || !adjacent(u, v))
      throw GraphError("no edge (" + std::to_string(u) + "," + std::to_string(v) + ") to delete");
    EdgeList kept;
    kept.reserve(edges_.size() - 1);
    const auto key = std::pair{std::min(u, v), std::max(u, v)};
    for (const auto &e : edges_)
      if (e != key)
        kept.push_back(e);
    return from_edges(n_, kept);
  }

  /// Complement graph; used for independence number via clique search.
  Graph complement() const {
    EdgeList e;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (!adjacent(u, v))
          e.emplace_back(u, v);
    return from_edges(n_, e);
  }

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  Graph() = default;

  int n_ = 0;
  EdgeList edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<unsigned char> matrix_;
};

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

using EdgeList = Graph::EdgeList;

namespace detail {

inline std::string_view trim_right(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

inline void append_graph6_size(std::string &out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

} // namespace detail

/// Decodes one graph6 line (trailing whitespace ignored). Short form (n <= 62)
/// and the two long '~' forms are accepted.
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  std::size_t base = 0;
  if (text.substr(0, header.size()) == header) {
    text.remove_prefix(header.size());
    base = header.size();
  }
  text = detail::trim_right(text);
  if (text.empty())
    throw ParseError("empty graph6 string", base);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw ParseError("character outside graph6 range 63..126", base + i);
  }

  std::uint64_t n = 0;
  std::size_t pos = 0;
  auto read_size = [&](std::size_t first, int count) {
    if (text.size() < first + count)
      throw ParseError("truncated graph6 size field", base + text.size());
    for (int k = 0; k < count; ++k)
      n = (n << 6) | static_cast<std::uint64_t>(text[first + k] - 63);
    pos = first + count;
  };
  if (text[0] != '~') {
    n = static_cast<std::uint64_t>(text[0] - 63);
    pos = 1;
  } else if (text.size() > 1 && text[1] == '~') {
    read_size(2, 6);
  } else {
    read_size(1, 3);
  }
  if (n == 0)
    throw ParseError("graph6 encodes a graph with no vertices", base);
  if (n > static_cast<std::uint64_t>(std::numeric_limits<int>::max()) || n > 100000)
    throw ParseError("graph6 vertex count too large", base);

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  const std::uint64_t have = text.size() - pos;
  if (have < bytes)
    throw ParseError("truncated graph6 bit string: expected " + std::to_string(bytes) +
                         " data bytes, found " + std::to_string(have),
                     base + text.size());
  if (have > bytes)
    throw ParseError("trailing data after graph6 bit string", base + pos + bytes);

  Graph::EdgeList edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const int chunk = text[pos + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  for (; k < bytes * 6; ++k) {
    const int chunk = text[pos + k / 6] - 63;
    if ((chunk >> (5 - k % 6)) & 1)
      throw ParseError("nonzero graph6 padding bits", base + pos + k / 6);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

inline std::string encode_graph6(const Graph &g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  detail::append_graph6_size(out, n);
  int chunk = 0;
  int filled = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

/// "n u0 v0 u1 v1 ..." with arbitrary whitespace, 0-indexed endpoints.
inline Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<long long, std::size_t>> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    const auto tok = text.substr(start, i - start);
    long long value = 0;
    for (char c : tok) {
      if (c < '0' || c > '9')
        throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'", start);
      value = value * 10 + (c - '0');
      if (value > std::numeric_limits<int>::max())
        throw ParseError("integer out of range", start);
    }
    tokens.emplace_back(value, start);
  }
  if (tokens.empty())
    throw ParseError("edge list is empty; expected vertex count", 0);
  if ((tokens.size() - 1) % 2 != 0)
    throw ParseError("dangling endpoint without a partner", tokens.back().second);
  Graph::EdgeList edges;
  for (std::size_t t = 1; t < tokens.size(); t += 2)
    edges.emplace_back(static_cast<int>(tokens[t].first), static_cast<int>(tokens[t + 1].first));
  return Graph::from_edges(static_cast<int>(tokens[0].first), edges);
}

// ---------------------------------------------------------------------------
// Traversal
// ---------------------------------------------------------------------------

/// BFS distances from `source`; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const Graph &g, int source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph &g) {
  const auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

struct Bipartition {
  std::vector<int> first;  // colour class of vertex 0
  std::vector<int> second;
};

/// BFS 2-colouring of a connected graph; nullopt when an odd cycle exists.
inline std::optional<Bipartition> is_bipartite(const Graph &g) {
  const int n = g.order();
  std::vector<int> colour(n, -1);
  for (int s = 0; s < n; ++s) {
    if (colour[s] >= 0)
      continue;
    colour[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (int v = 0; v < n; ++v)
    (colour[v] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

/// Induced paths u - c - w (u < w, u and w non-adjacent) as {u, c, w}.
inline std::vector<std::array<int, 3>> induced_paths3(const Graph &g) {
  std::vector<std::array<int, 3>> out;
  for (int c = 0; c < g.order(); ++c) {
    const auto nb = g.neighbors(c);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b)
        if (!g.adjacent(nb[a], nb[b]))
          out.push_back({nb[a], c, nb[b]});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Distance statistics
// ---------------------------------------------------------------------------

/// All-pairs distances of a connected graph plus the scalars derived from them.
struct DistanceProfile {
  int n = 0;
  std::vector<int> dist;                          // row-major n*n
  std::vector<std::int64_t> transmission;         // Tr_i, row sums of dist
  std::vector<std::int64_t> second_transmission;  // T_i = sum_j d_ij Tr_j
  std::int64_t wiener = 0;
  int diameter = 0;
  std::vector<double> avg_distance_degree;        // mean Tr over neighbours

  int d(int i, int j) const { return dist[static_cast<std::size_t>(i) * n + j]; }

  std::int64_t tr_min() const { return *std::min_element(transmission.begin(), transmission.end()); }
  std::int64_t tr_max() const { return *std::max_element(transmission.begin(), transmission.end()); }

  /// sum over ordered pairs i != j of d_ij^2
  std::int64_t sum_sq_distances() const {
    std::int64_t s = 0;
    for (int x : dist)
      s += static_cast<std::int64_t>(x) * x;
    return s;
  }

  std::int64_t sum_sq_transmissions() const {
    std::int64_t s = 0;
    for (auto t : transmission)
      s += t * t;
    return s;
  }
};

inline DistanceProfile distance_profile(const Graph &g) {
  const int n = g.order();
  DistanceProfile p;
  p.n = n;
  p.dist.resize(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s) {
    const auto row = bfs_distances(g, s);
    for (int t = 0; t < n; ++t) {
      if (row[t] < 0)
        throw PreconditionError("distance profile requires connected graph");
      p.dist[static_cast<std::size_t>(s) * n + t] = row[t];
    }
  }
  p.transmission.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      p.transmission[i] += p.d(i, j);
      p.diameter = std::max(p.diameter, p.d(i, j));
    }
  }
  std::int64_t total = 0;
  for (auto t : p.transmission)
    total += t;
  p.wiener = total / 2;

  p.second_transmission.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      p.second_transmission[i] += p.d(i, j) * p.transmission[j];

  p.avg_distance_degree.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (g.degree(i) == 0)
      continue;
    std::int64_t s = 0;
    for (int w : g.neighbors(i))
      s += p.transmission[w];
    p.avg_distance_degree[i] = static_cast<double>(s) / g.degree(i);
  }
  return p;
}

/// Common transmission k when every vertex has the same transmission.
inline std::optional<std::int64_t> is_transmission_regular(const DistanceProfile &p) {
  if (p.tr_min() != p.tr_max())
    return std::nullopt;
  return p.transmission.front();
}

} // namespace gdspread

#endif // GDSPREAD_GRAPH_HPP
