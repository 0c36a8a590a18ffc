#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace kocay {

enum class EdgeColor { red, blue };

/// Graph with edges colored red or blue; pairs carrying neither color are
/// uncolored.  Red and blue are disjoint by construction.
class ColoredGraph {
 public:
  explicit ColoredGraph(int n) : n_(checked_order(n)) {}

  ColoredGraph(int n, const std::vector<std::pair<int, int>>& red,
               const std::vector<std::pair<int, int>>& blue)
      : ColoredGraph(n) {
    for (auto [a, b] : red) add_edge(a, b, EdgeColor::red);
    for (auto [a, b] : blue) add_edge(a, b, EdgeColor::blue);
  }

  static ColoredGraph from_bits(int n, std::uint64_t red, std::uint64_t blue) {
    ColoredGraph g(n);
    if ((red | blue) & ~detail::all_pairs_mask(n))
      throw input_error("edge bits out of range for graph order");
    if (red & blue) throw input_error("a pair cannot be both red and blue");
    g.red_ = red;
    g.blue_ = blue;
    return g;
  }

  int order() const { return n_; }
  std::uint64_t red_bits() const { return red_; }
  std::uint64_t blue_bits() const { return blue_; }
  std::uint64_t colored_bits() const { return red_ | blue_; }
  int red_count() const { return std::popcount(red_); }
  int blue_count() const { return std::popcount(blue_); }

  bool has_red(int a, int b) const { check_pair(a, b); return red_ >> detail::pair_index(a, b) & 1; }
  bool has_blue(int a, int b) const { check_pair(a, b); return blue_ >> detail::pair_index(a, b) & 1; }

  /// Every pair carries a color; the complete-information case decks are made of.
  bool is_complete() const { return colored_bits() == detail::all_pairs_mask(n_); }

  void add_edge(int a, int b, EdgeColor c) {
    check_pair(a, b);
    const std::uint64_t bit = detail::pair_bit(a, b);
    if ((red_ | blue_) & bit) throw input_error("pair already colored");
    (c == EdgeColor::red ? red_ : blue_) |= bit;
  }

  std::vector<std::pair<int, int>> red_edges() const { return edges_of(red_); }
  std::vector<std::pair<int, int>> blue_edges() const { return edges_of(blue_); }

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

  void check_pair(int a, int b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) throw input_error("vertex out of range");
    if (a == b) throw input_error("vertex pair must be two distinct vertices");
  }

 private:
  static int checked_order(int n) {
    if (n < 1 || n > kMaxVertices) throw input_error("graph order must be between 1 and 10");
    return n;
  }

  static std::vector<std::pair<int, int>> edges_of(std::uint64_t bits) {
    std::vector<std::pair<int, int>> out;
    detail::for_each_bit(bits, [&](int k) {
      out.emplace_back(detail::kPairs.u[k], detail::kPairs.v[k]);
    });
    return out;
  }

  int n_;
  std::uint64_t red_ = 0;
  std::uint64_t blue_ = 0;
};

/// Red on the edges of g, blue on the non-edges: the complete colored graph
/// that carries exactly the information of g.
inline ColoredGraph two_form(const Graph& g) {
  return ColoredGraph::from_bits(g.order(), g.edge_bits(),
                                 ~g.edge_bits() & detail::all_pairs_mask(g.order()));
}

inline ColoredGraph swap_colors(const ColoredGraph& g) {
  return ColoredGraph::from_bits(g.order(), g.blue_bits(), g.red_bits());
}

/// Remove the pair {a,b} entirely (uncolor it); the vertex set stays put.
inline ColoredGraph delete_pair(const ColoredGraph& g, int a, int b) {
  g.check_pair(a, b);
  const std::uint64_t bit = detail::pair_bit(a, b);
  if (!((g.red_bits() | g.blue_bits()) & bit)) throw input_error("pair is not colored");
  return ColoredGraph::from_bits(g.order(), g.red_bits() & ~bit, g.blue_bits() & ~bit);
}

/// Color the currently uncolored pair {a,b}.
inline ColoredGraph recolor(const ColoredGraph& g, int a, int b, EdgeColor c) {
  ColoredGraph out = g;
  out.add_edge(a, b, c);
  return out;
}

inline ColoredGraph all_red(const Graph& g) {
  return ColoredGraph::from_bits(g.order(), g.edge_bits(), 0);
}

inline ColoredGraph all_blue(const Graph& g) {
  return ColoredGraph::from_bits(g.order(), 0, g.edge_bits());
}

struct ColoredCanonicalForm {
  int n = 0;
  std::uint64_t red_code = 0;
  std::uint64_t blue_code = 0;

  friend auto operator<=>(const ColoredCanonicalForm&, const ColoredCanonicalForm&) = default;

  ColoredGraph representative() const {
    return ColoredGraph::from_bits(n, detail::code_to_bits(n, red_code),
                                   detail::code_to_bits(n, blue_code));
  }
};

namespace detail {

struct ColoredKey {
  std::uint64_t a = 0, b = 0;
  friend bool operator==(const ColoredKey&, const ColoredKey&) = default;
};

struct ColoredKeyHash {
  std::size_t operator()(const ColoredKey& k) const {
    std::uint64_t h = k.a * 0x9e3779b97f4a7c15ull;
    h ^= k.b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

inline std::pair<std::uint64_t, std::uint64_t> colored_canonical_codes(int n, std::uint64_t red,
                                                                       std::uint64_t blue) {
  struct Cache {
    std::mutex mu;
    std::unordered_map<ColoredKey, std::pair<std::uint64_t, std::uint64_t>, ColoredKeyHash> map;
  };
  static Cache cache;
  const ColoredKey key{graph_key(n, red), blue};
  {
    std::lock_guard lk(cache.mu);
    auto it = cache.map.find(key);
    if (it != cache.map.end()) return it->second;
  }
  std::pair<std::uint64_t, std::uint64_t> best{~std::uint64_t{0}, ~std::uint64_t{0}};
  for_each_permutation(n, [&](const auto& p) {
    std::pair<std::uint64_t, std::uint64_t> cand{reversed_code(n, red, p.data()),
                                                 reversed_code(n, blue, p.data())};
    best = std::min(best, cand);
  });
  std::lock_guard lk(cache.mu);
  return cache.map.emplace(key, best).first->second;
}

inline std::uint64_t colored_automorphism_count_bits(int n, std::uint64_t red, std::uint64_t blue) {
  struct Cache {
    std::mutex mu;
    std::unordered_map<ColoredKey, std::uint64_t, ColoredKeyHash> map;
  };
  static Cache cache;
  const ColoredKey key{graph_key(n, red), blue};
  {
    std::lock_guard lk(cache.mu);
    auto it = cache.map.find(key);
    if (it != cache.map.end()) return it->second;
  }
  std::uint64_t total = 0;
  for_each_permutation(n, [&](const auto& p) {
    if (permuted_bits(red, p.data()) == red && permuted_bits(blue, p.data()) == blue) ++total;
  });
  std::lock_guard lk(cache.mu);
  return cache.map.emplace(key, total).first->second;
}

}  // namespace detail

inline ColoredCanonicalForm colored_canonical_form(const ColoredGraph& g) {
  auto [r, b] = detail::colored_canonical_codes(g.order(), g.red_bits(), g.blue_bits());
  return {g.order(), r, b};
}

inline ColoredGraph permute(const ColoredGraph& g, const Permutation& p) {
  if (p.size() != g.order()) throw input_error("permutation size must match graph order");
  std::array<std::uint8_t, kMaxVertices> img{};
  for (int v = 0; v < g.order(); ++v) img[v] = static_cast<std::uint8_t>(p(v));
  return ColoredGraph::from_bits(g.order(), detail::permuted_bits(g.red_bits(), img.data()),
                                 detail::permuted_bits(g.blue_bits(), img.data()));
}

/// Explicit bijection search preserving both colors; independent of the
/// canonical form on purpose.
inline bool colored_isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.order() != b.order()) return false;
  if (a.red_count() != b.red_count() || a.blue_count() != b.blue_count()) return false;
  bool found = false;
  detail::for_each_permutation(a.order(), [&](const auto& p) {
    if (!found && detail::permuted_bits(a.red_bits(), p.data()) == b.red_bits() &&
        detail::permuted_bits(a.blue_bits(), p.data()) == b.blue_bits())
      found = true;
  });
  return found;
}

inline std::uint64_t colored_automorphism_count(const ColoredGraph& g) {
  return detail::colored_automorphism_count_bits(g.order(), g.red_bits(), g.blue_bits());
}

inline std::vector<Permutation> colored_automorphisms(const ColoredGraph& g) {
  std::vector<Permutation> out;
  detail::for_each_permutation(g.order(), [&](const auto& p) {
    if (detail::permuted_bits(g.red_bits(), p.data()) == g.red_bits() &&
        detail::permuted_bits(g.blue_bits(), p.data()) == g.blue_bits())
      out.push_back(Permutation(std::vector<int>(p.begin(), p.begin() + g.order())));
  });
  return out;
}

inline int colored_pair_orbit_size(const ColoredGraph& g, int a, int b) {
  g.check_pair(a, b);
  std::uint64_t orbit = 0;
  detail::for_each_permutation(g.order(), [&](const auto& p) {
    if (detail::permuted_bits(g.red_bits(), p.data()) == g.red_bits() &&
        detail::permuted_bits(g.blue_bits(), p.data()) == g.blue_bits())
      orbit |= detail::pair_bit(p[a], p[b]);
  });
  return std::popcount(orbit);
}

/// Components of the relation "joined by an edge of either color".
inline std::vector<ColoredGraph> colored_components(const ColoredGraph& g) {
  std::vector<ColoredGraph> out;
  for (std::uint16_t vmask : detail::component_masks(g.order(), g.colored_bits())) {
    out.push_back(ColoredGraph::from_bits(
        std::popcount(vmask),
        detail::renumbered_bits(vmask, detail::pairs_within(vmask, g.red_bits())),
        detail::renumbered_bits(vmask, detail::pairs_within(vmask, g.blue_bits()))));
  }
  return out;
}

inline bool is_connected(const ColoredGraph& g) {
  return detail::component_masks(g.order(), g.colored_bits()).size() == 1;
}

/// One canonical representative per colored isomorphism class on n vertices.
inline const std::vector<ColoredGraph>& enumerate_colored_graphs(int n) {
  if (n < 1 || n > kMaxVertices) throw input_error("graph order must be between 1 and 10");
  static std::mutex mu;
  static std::map<int, std::vector<ColoredGraph>> levels;
  std::lock_guard lk(mu);
  if (auto it = levels.find(n); it != levels.end()) return it->second;
  if (levels.empty()) levels.emplace(1, std::vector<ColoredGraph>{ColoredGraph(1)});
  for (int k = static_cast<int>(levels.size()) + 1; k <= n; ++k) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> codes;
    std::array<int, kMaxVertices> color{};  // 0 none, 1 red, 2 blue per new pair
    for (const ColoredGraph& parent : levels.at(k - 1)) {
      color.fill(0);
      for (;;) {
        std::uint64_t red = parent.red_bits(), blue = parent.blue_bits();
        for (int v = 0; v < k - 1; ++v) {
          if (color[v] == 1) red |= detail::pair_bit(v, k - 1);
          if (color[v] == 2) blue |= detail::pair_bit(v, k - 1);
        }
        codes.push_back(detail::colored_canonical_codes(k, red, blue));
        int v = 0;
        while (v < k - 1 && color[v] == 2) color[v++] = 0;
        if (v == k - 1) break;
        ++color[v];
      }
    }
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    std::vector<ColoredGraph> level;
    level.reserve(codes.size());
    for (auto [r, b] : codes)
      level.push_back(ColoredGraph::from_bits(k, detail::code_to_bits(k, r), detail::code_to_bits(k, b)));
    levels.emplace(k, std::move(level));
  }
  return levels.at(n);
}

}  // namespace kocay
