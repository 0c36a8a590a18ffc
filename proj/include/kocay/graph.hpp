#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include "common.hpp"

namespace kocay {

/// Simple undirected graph on vertices 0..n-1, edges stored as a bitmask over
/// the unordered-pair index.  Value type; at most kMaxVertices vertices.
class Graph {
 public:
  explicit Graph(int n) : n_(checked_order(n)) {}

  Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [a, b] : edges) add_edge(a, b);
  }

  Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [a, b] : edges) add_edge(a, b);
  }

  static Graph from_bits(int n, std::uint64_t bits) {
    Graph g(n);
    if (bits & ~detail::all_pairs_mask(n))
      throw input_error("edge bits out of range for graph order");
    g.bits_ = bits;
    return g;
  }

  int order() const { return n_; }
  std::uint64_t edge_bits() const { return bits_; }
  int edge_count() const { return std::popcount(bits_); }

  bool has_edge(int a, int b) const {
    check_pair(a, b);
    return bits_ >> detail::pair_index(a, b) & 1;
  }

  void add_edge(int a, int b) {
    check_pair(a, b);
    bits_ |= detail::pair_bit(a, b);
  }

  void remove_edge(int a, int b) {
    check_pair(a, b);
    bits_ &= ~detail::pair_bit(a, b);
  }

  /// Bitmask of vertices adjacent to v.
  std::uint16_t neighbors(int v) const {
    check_vertex(v);
    std::uint16_t out = 0;
    for (int w = 0; w < n_; ++w)
      if (w != v && (bits_ >> detail::pair_index(v, w) & 1)) out |= std::uint16_t(1u << w);
    return out;
  }

  int degree(int v) const { return std::popcount(neighbors(v)); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    detail::for_each_bit(bits_, [&](int k) {
      out.emplace_back(detail::kPairs.u[k], detail::kPairs.v[k]);
    });
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw input_error("vertex out of range");
  }

  void check_pair(int a, int b) const {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw input_error("vertex pair must be two distinct vertices");
  }

 private:
  static int checked_order(int n) {
    if (n < 1 || n > kMaxVertices) throw input_error("graph order must be between 1 and 10");
    return n;
  }

  int n_;
  std::uint64_t bits_ = 0;
};

/// Bijection on 0..n-1.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : map_(std::move(images)) {
    const int n = static_cast<int>(map_.size());
    if (n < 1 || n > kMaxVertices) throw input_error("permutation size must be between 1 and 10");
    std::uint16_t seen = 0;
    for (int v : map_) {
      if (v < 0 || v >= n || (seen >> v & 1)) throw input_error("permutation images must be a bijection");
      seen |= std::uint16_t(1u << v);
    }
  }

  static Permutation identity(int n) {
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    return Permutation(std::move(m));
  }

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int v) const { return map_.at(v); }
  const std::vector<int>& images() const { return map_; }

  Permutation inverse() const {
    std::vector<int> m(map_.size());
    for (int v = 0; v < size(); ++v) m[map_[v]] = v;
    return Permutation(std::move(m));
  }

  /// Composition: result(v) = next(this(v)).
  Permutation then(const Permutation& next) const {
    if (next.size() != size()) throw input_error("permutation sizes differ");
    std::vector<int> m(map_.size());
    for (int v = 0; v < size(); ++v) m[v] = next(map_[v]);
    return Permutation(std::move(m));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> map_;
};

namespace detail {

// Edge bits of the relabeled graph v -> p[v].
inline std::uint64_t permuted_bits(std::uint64_t bits, const std::uint8_t* p) {
  std::uint64_t out = 0;
  for_each_bit(bits, [&](int k) { out |= pair_bit(p[kPairs.u[k]], p[kPairs.v[k]]); });
  return out;
}

// Canonical codes read pair (0,1) as the most significant bit, so comparing
// codes as integers is comparing edge sequences lexicographically.
inline std::uint64_t reversed_code(int n, std::uint64_t bits, const std::uint8_t* p) {
  const int m = pair_count(n);
  std::uint64_t out = 0;
  for_each_bit(bits, [&](int k) {
    out |= std::uint64_t{1} << (m - 1 - pair_index(p[kPairs.u[k]], p[kPairs.v[k]]));
  });
  return out;
}

inline std::uint64_t code_to_bits(int n, std::uint64_t code) {
  const int m = pair_count(n);
  std::uint64_t bits = 0;
  for_each_bit(code, [&](int t) { bits |= std::uint64_t{1} << (m - 1 - t); });
  return bits;
}

template <class F>
inline void for_each_permutation(int n, F&& f) {
  std::array<std::uint8_t, kMaxVertices> p{};
  std::iota(p.begin(), p.begin() + n, static_cast<std::uint8_t>(0));
  do {
    f(p);
  } while (std::next_permutation(p.begin(), p.begin() + n));
}

struct U64Cache {
  std::mutex mu;
  std::unordered_map<std::uint64_t, std::uint64_t> map;

  template <class F>
  std::uint64_t get(std::uint64_t key, F&& compute) {
    {
      std::lock_guard lk(mu);
      auto it = map.find(key);
      if (it != map.end()) return it->second;
    }
    const std::uint64_t value = compute();
    std::lock_guard lk(mu);
    return map.emplace(key, value).first->second;
  }
};

inline std::uint64_t graph_key(int n, std::uint64_t bits) {
  return bits | std::uint64_t(n) << kMaxPairs;
}

inline std::uint64_t canonical_code(int n, std::uint64_t bits) {
  static U64Cache cache;
  return cache.get(graph_key(n, bits), [&] {
    std::uint64_t best = ~std::uint64_t{0};
    for_each_permutation(n, [&](const auto& p) {
      best = std::min(best, reversed_code(n, bits, p.data()));
    });
    return best;
  });
}

inline std::uint64_t automorphism_count_bits(int n, std::uint64_t bits) {
  static U64Cache cache;
  return cache.get(graph_key(n, bits), [&] {
    std::uint64_t total = 0;
    for_each_permutation(n, [&](const auto& p) {
      if (permuted_bits(bits, p.data()) == bits) ++total;
    });
    return total;
  });
}

}  // namespace detail

/// Canonical form: order plus the minimum edge code over all relabelings.
/// Equal canonical forms is the library-wide isomorphism certificate.
struct CanonicalForm {
  int n = 0;
  std::uint64_t code = 0;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

  Graph representative() const { return Graph::from_bits(n, detail::code_to_bits(n, code)); }
};

inline CanonicalForm canonical_form(const Graph& g) {
  return {g.order(), detail::canonical_code(g.order(), g.edge_bits())};
}

inline Graph permute(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) throw input_error("permutation size must match graph order");
  std::array<std::uint8_t, kMaxVertices> img{};
  for (int v = 0; v < g.order(); ++v) img[v] = static_cast<std::uint8_t>(p(v));
  return Graph::from_bits(g.order(), detail::permuted_bits(g.edge_bits(), img.data()));
}

/// Deliberately independent of canonical_form: searches for an explicit
/// bijection so the two can cross-check each other in tests.
inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  std::array<int, kMaxVertices> da{}, db{};
  for (int v = 0; v < a.order(); ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  std::sort(da.begin(), da.begin() + a.order());
  std::sort(db.begin(), db.begin() + a.order());
  if (!std::equal(da.begin(), da.begin() + a.order(), db.begin())) return false;
  bool found = false;
  detail::for_each_permutation(a.order(), [&](const auto& p) {
    if (!found && detail::permuted_bits(a.edge_bits(), p.data()) == b.edge_bits()) found = true;
  });
  return found;
}

inline std::uint64_t automorphism_count(const Graph& g) {
  return detail::automorphism_count_bits(g.order(), g.edge_bits());
}

inline std::vector<Permutation> automorphisms(const Graph& g) {
  std::vector<Permutation> out;
  detail::for_each_permutation(g.order(), [&](const auto& p) {
    if (detail::permuted_bits(g.edge_bits(), p.data()) == g.edge_bits())
      out.push_back(Permutation(std::vector<int>(p.begin(), p.begin() + g.order())));
  });
  return out;
}

/// Size of the orbit of the unordered pair {a,b} under Aut(g).
inline int pair_orbit_size(const Graph& g, int a, int b) {
  g.check_pair(a, b);
  std::uint64_t orbit = 0;
  detail::for_each_permutation(g.order(), [&](const auto& p) {
    if (detail::permuted_bits(g.edge_bits(), p.data()) == g.edge_bits())
      orbit |= detail::pair_bit(p[a], p[b]);
  });
  return std::popcount(orbit);
}

inline Graph complement(const Graph& g) {
  return Graph::from_bits(g.order(), ~g.edge_bits() & detail::all_pairs_mask(g.order()));
}

inline int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

namespace detail {

// Vertex masks of the connected components of an adjacency relation given as
// pair bits, ordered by smallest contained vertex.
inline std::vector<std::uint16_t> component_masks(int n, std::uint64_t bits) {
  std::array<std::uint16_t, kMaxVertices> adj{};
  for_each_bit(bits, [&](int k) {
    adj[kPairs.u[k]] |= std::uint16_t(1u << kPairs.v[k]);
    adj[kPairs.v[k]] |= std::uint16_t(1u << kPairs.u[k]);
  });
  std::vector<std::uint16_t> out;
  std::uint16_t left = static_cast<std::uint16_t>((1u << n) - 1);
  while (left) {
    std::uint16_t comp = std::uint16_t(1u << std::countr_zero(left));
    for (;;) {
      std::uint16_t grown = comp;
      for_each_bit(comp, [&](int v) { grown |= adj[v]; });
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(comp);
    left &= static_cast<std::uint16_t>(~comp);
  }
  return out;
}

// Relabel the vertices in vmask onto 0..popcount-1 preserving order.
inline std::uint64_t renumbered_bits(std::uint16_t vmask, std::uint64_t ebits) {
  std::array<std::uint8_t, kMaxVertices> rank{};
  int next = 0;
  for_each_bit(vmask, [&](int v) { rank[v] = static_cast<std::uint8_t>(next++); });
  std::uint64_t out = 0;
  for_each_bit(ebits, [&](int k) { out |= pair_bit(rank[kPairs.u[k]], rank[kPairs.v[k]]); });
  return out;
}

}  // namespace detail

struct Component {
  std::vector<int> vertices;  // ascending labels in the host graph
  Graph graph;                // induced subgraph, relabeled onto 0..k-1
};

inline std::vector<Component> connected_components(const Graph& g) {
  std::vector<Component> out;
  for (std::uint16_t vmask : detail::component_masks(g.order(), g.edge_bits())) {
    Component c{{}, Graph::from_bits(std::popcount(vmask),
                                     detail::renumbered_bits(vmask, detail::pairs_within(vmask, g.edge_bits())))};
    detail::for_each_bit(vmask, [&](int v) { c.vertices.push_back(v); });
    out.push_back(std::move(c));
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  return detail::component_masks(g.order(), g.edge_bits()).size() == 1;
}

/// One canonical representative per isomorphism class on n vertices, sorted
/// by canonical code.  Built by vertex augmentation; cached.
inline const std::vector<Graph>& enumerate_graphs(int n) {
  if (n < 1 || n > kMaxVertices) throw input_error("graph order must be between 1 and 10");
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> levels;
  std::lock_guard lk(mu);
  if (auto it = levels.find(n); it != levels.end()) return it->second;
  if (levels.empty()) levels.emplace(1, std::vector<Graph>{Graph(1)});
  for (int k = static_cast<int>(levels.size()) + 1; k <= n; ++k) {
    std::vector<std::uint64_t> codes;
    for (const Graph& parent : levels.at(k - 1)) {
      for (std::uint32_t s = 0; s < (1u << (k - 1)); ++s) {
        std::uint64_t bits = parent.edge_bits();
        detail::for_each_bit(s, [&](int v) { bits |= detail::pair_bit(v, k - 1); });
        codes.push_back(detail::canonical_code(k, bits));
      }
    }
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    std::vector<Graph> level;
    level.reserve(codes.size());
    for (std::uint64_t code : codes) level.push_back(Graph::from_bits(k, detail::code_to_bits(k, code)));
    levels.emplace(k, std::move(level));
  }
  return levels.at(n);
}

// ---- named constructions ----

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_graph(int n) {
  return Graph::from_bits(n, detail::all_pairs_mask(n));
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw input_error("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph star_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

/// k disjoint edges on 2k vertices.
inline Graph matching_graph(int k) {
  if (k < 1) throw input_error("matching needs at least one edge");
  Graph g(2 * k);
  for (int i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [x, y] : a.edges()) g.add_edge(x, y);
  for (auto [x, y] : b.edges()) g.add_edge(a.order() + x, a.order() + y);
  return g;
}

inline bool is_tree(const Graph& g) {
  return g.edge_count() == g.order() - 1 && is_connected(g);
}

}  // namespace kocay
