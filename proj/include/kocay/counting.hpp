#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "colored_graph.hpp"
#include "graph.hpp"

namespace kocay {

namespace detail {

// Per-vertex adjacency rows, one mask per color.  Plain graphs use the red
// rows only; a pattern pair with no color imposes no constraint.
struct AdjRows {
  std::array<std::uint16_t, kMaxVertices> red{};
  std::array<std::uint16_t, kMaxVertices> blue{};
  int n = 0;
};

inline void add_rows(std::array<std::uint16_t, kMaxVertices>& rows, std::uint64_t bits) {
  for_each_bit(bits, [&](int k) {
    rows[kPairs.u[k]] |= static_cast<std::uint16_t>(1u << kPairs.v[k]);
    rows[kPairs.v[k]] |= static_cast<std::uint16_t>(1u << kPairs.u[k]);
  });
}

inline AdjRows rows_of(const Graph& g) {
  AdjRows r;
  r.n = g.order();
  add_rows(r.red, g.edge_bits());
  return r;
}

inline AdjRows rows_of(const ColoredGraph& g) {
  AdjRows r;
  r.n = g.order();
  add_rows(r.red, g.red_bits());
  add_rows(r.blue, g.blue_bits());
  return r;
}

// Pseudo-host whose rows satisfy every constraint: used to enumerate abstract
// placements of a pattern into a bare vertex pool.
inline AdjRows free_rows(int n) {
  AdjRows r;
  r.n = n;
  const auto full = static_cast<std::uint16_t>((1u << n) - 1);
  r.red.fill(full);
  r.blue.fill(full);
  return r;
}

// Injections of the pattern into the host mapping red pattern edges onto red
// host edges and blue onto blue.  Uncolored pattern pairs are unconstrained.
// emit(vertex mask, red pair bits of the image, blue pair bits of the image)
// fires once per injection.
template <class Emit>
inline void for_each_injection(const AdjRows& host, const AdjRows& pat, Emit&& emit) {
  if (pat.n > host.n) return;
  std::array<std::uint8_t, kMaxVertices> image{};
  auto rec = [&](auto&& self, int t, std::uint16_t used, std::uint64_t red, std::uint64_t blue) -> void {
    if (t == pat.n) {
      emit(used, red, blue);
      return;
    }
    const auto prev = static_cast<std::uint16_t>((1u << t) - 1);
    const std::uint16_t red_req = pat.red[t] & prev;
    const std::uint16_t blue_req = pat.blue[t] & prev;
    for (int w = 0; w < host.n; ++w) {
      if (used >> w & 1) continue;
      bool ok = true;
      for_each_bit(red_req, [&](int s) { ok = ok && (host.red[w] >> image[s] & 1); });
      if (ok) for_each_bit(blue_req, [&](int s) { ok = ok && (host.blue[w] >> image[s] & 1); });
      if (!ok) continue;
      std::uint64_t nr = red, nb = blue;
      for_each_bit(red_req, [&](int s) { nr |= pair_bit(w, image[s]); });
      for_each_bit(blue_req, [&](int s) { nb |= pair_bit(w, image[s]); });
      image[t] = static_cast<std::uint8_t>(w);
      self(self, t + 1, static_cast<std::uint16_t>(used | (1u << w)), nr, nb);
    }
  };
  rec(rec, 0, 0, 0, 0);
}

inline std::uint64_t count_injections(const AdjRows& host, const AdjRows& pat) {
  std::uint64_t total = 0;
  for_each_injection(host, pat, [&](std::uint16_t, std::uint64_t, std::uint64_t) { ++total; });
  return total;
}

// Composite-key memo shared by the counting entry points.  std::map keeps
// iteration deterministic, which keeps everything downstream deterministic.
template <std::size_t N>
struct CountMemo {
  std::mutex mu;
  std::map<std::array<std::uint64_t, N>, std::uint64_t> map;

  template <class F>
  std::uint64_t get(const std::array<std::uint64_t, N>& key, F&& compute) {
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

}  // namespace detail

/// Number of h-subgraphs of g: subsets of V(g) together with subsets of the
/// induced edges forming a copy of h.  Equals injections / |Aut(h)|.
inline Count count_subgraph(const Graph& g, const Graph& h) {
  if (h.order() > g.order()) return 0;
  const auto cg = canonical_form(g);
  const auto ch = canonical_form(h);
  static detail::CountMemo<2> memo;
  const std::uint64_t copies = memo.get(
      {detail::graph_key(cg.n, cg.code), detail::graph_key(ch.n, ch.code)}, [&] {
        const std::uint64_t inj = detail::count_injections(detail::rows_of(g), detail::rows_of(h));
        const std::uint64_t aut = automorphism_count(h);
        if (inj % aut != 0) throw consistency_error("injection count not divisible by automorphisms");
        return inj / aut;
      });
  return Count(copies);
}

/// Number of vertex subsets of g inducing a copy of h.
inline Count count_induced(const Graph& g, const Graph& h) {
  if (h.order() > g.order()) return 0;
  const auto cg = canonical_form(g);
  const auto ch = canonical_form(h);
  static detail::CountMemo<2> memo;
  const std::uint64_t copies = memo.get(
      {detail::graph_key(cg.n, cg.code), detail::graph_key(ch.n, ch.code)}, [&] {
        std::uint64_t total = 0;
        for (std::uint32_t vmask = 0; vmask < (1u << g.order()); ++vmask) {
          if (std::popcount(vmask) != h.order()) continue;
          const auto sub = detail::renumbered_bits(static_cast<std::uint16_t>(vmask),
                                                   detail::pairs_within(static_cast<std::uint16_t>(vmask), g.edge_bits()));
          if (detail::canonical_code(h.order(), sub) == ch.code) ++total;
        }
        return total;
      });
  return Count(copies);
}

/// Number of congruent copies of hp in gp: vertex subsets plus colored pair
/// subsets isomorphic to hp with colors preserved (red on red, blue on blue;
/// uncolored pairs of hp impose nothing).
inline Count count_colored_subgraph(const ColoredGraph& gp, const ColoredGraph& hp) {
  if (hp.order() > gp.order()) return 0;
  const auto cg = colored_canonical_form(gp);
  const auto ch = colored_canonical_form(hp);
  static detail::CountMemo<4> memo;
  const std::uint64_t copies = memo.get(
      {detail::graph_key(cg.n, cg.red_code), cg.blue_code, detail::graph_key(ch.n, ch.red_code),
       ch.blue_code},
      [&] {
        const std::uint64_t inj = detail::count_injections(detail::rows_of(gp), detail::rows_of(hp));
        const std::uint64_t aut = colored_automorphism_count(hp);
        if (inj % aut != 0) throw consistency_error("injection count not divisible by automorphisms");
        return inj / aut;
      });
  return Count(copies);
}

/// Number of vertex subsets of gp whose induced colored graph is a copy of hp.
inline Count count_colored_induced(const ColoredGraph& gp, const ColoredGraph& hp) {
  if (hp.order() > gp.order()) return 0;
  const auto ch = colored_canonical_form(hp);
  std::uint64_t total = 0;
  for (std::uint32_t vmask = 0; vmask < (1u << gp.order()); ++vmask) {
    if (std::popcount(vmask) != hp.order()) continue;
    const auto vm = static_cast<std::uint16_t>(vmask);
    const auto codes = detail::colored_canonical_codes(
        hp.order(), detail::renumbered_bits(vm, detail::pairs_within(vm, gp.red_bits())),
        detail::renumbered_bits(vm, detail::pairs_within(vm, gp.blue_bits())));
    if (codes.first == ch.red_code && codes.second == ch.blue_code) ++total;
  }
  return Count(total);
}

/// Multiset of one-vertex-deleted subgraphs, as canonical forms.  The number
/// of cards equals the order of the (unseen) source graph.
class Deck {
 public:
  explicit Deck(std::vector<CanonicalForm> cards) : cards_(std::move(cards)) {
    if (cards_.size() < 2 || cards_.size() > kMaxVertices)
      throw input_error("deck must hold n cards with 2 <= n <= 10");
    std::sort(cards_.begin(), cards_.end());
    for (const auto& c : cards_)
      if (c.n != order() - 1) throw input_error("every card must have n-1 vertices");
  }

  int order() const { return static_cast<int>(cards_.size()); }
  const std::vector<CanonicalForm>& cards() const { return cards_; }

  friend bool operator==(const Deck&, const Deck&) = default;

 private:
  std::vector<CanonicalForm> cards_;
};

/// Deck of complete colored graphs.  Cards must be complete: every pair red
/// or blue, no uncolored pairs.
class ColoredDeck {
 public:
  explicit ColoredDeck(std::vector<ColoredCanonicalForm> cards) : cards_(std::move(cards)) {
    if (cards_.size() < 2 || cards_.size() > kMaxVertices)
      throw input_error("deck must hold n cards with 2 <= n <= 10");
    std::sort(cards_.begin(), cards_.end());
    for (const auto& c : cards_) {
      if (c.n != order() - 1) throw input_error("every card must have n-1 vertices");
      if ((c.red_code | c.blue_code) != detail::all_pairs_mask(c.n))
        throw input_error("every card must be a complete colored graph");
    }
  }

  int order() const { return static_cast<int>(cards_.size()); }
  const std::vector<ColoredCanonicalForm>& cards() const { return cards_; }

  friend bool operator==(const ColoredDeck&, const ColoredDeck&) = default;

 private:
  std::vector<ColoredCanonicalForm> cards_;
};

inline Deck deck(const Graph& g) {
  if (g.order() < 2) throw input_error("deck needs a graph on at least 2 vertices");
  std::vector<CanonicalForm> cards;
  for (int v = 0; v < g.order(); ++v) {
    const auto vmask = static_cast<std::uint16_t>(((1u << g.order()) - 1) & ~(1u << v));
    const auto bits = detail::renumbered_bits(vmask, detail::pairs_within(vmask, g.edge_bits()));
    cards.push_back({g.order() - 1, detail::canonical_code(g.order() - 1, bits)});
  }
  return Deck(std::move(cards));
}

inline ColoredDeck colored_deck(const ColoredGraph& gp) {
  if (gp.order() < 2) throw input_error("deck needs a graph on at least 2 vertices");
  if (!gp.is_complete()) throw input_error("colored deck is defined for complete colored graphs");
  std::vector<ColoredCanonicalForm> cards;
  for (int v = 0; v < gp.order(); ++v) {
    const auto vmask = static_cast<std::uint16_t>(((1u << gp.order()) - 1) & ~(1u << v));
    const auto codes = detail::colored_canonical_codes(
        gp.order() - 1, detail::renumbered_bits(vmask, detail::pairs_within(vmask, gp.red_bits())),
        detail::renumbered_bits(vmask, detail::pairs_within(vmask, gp.blue_bits())));
    cards.push_back({gp.order() - 1, codes.first, codes.second});
  }
  return ColoredDeck(std::move(cards));
}

/// Kelly's lemma: for |V(h)| < n, (n - |V(h)|) * (G,h) equals the sum of
/// (card,h) over the deck, so (G,h) is computable without seeing G.
inline Count kelly_count_from_deck(const Deck& d, const Graph& h) {
  if (h.order() >= d.order())
    throw input_error("Kelly count needs a pattern with fewer vertices than the deck order");
  Count total = 0;
  for (const auto& card : d.cards()) total += count_subgraph(card.representative(), h);
  const Count div = d.order() - h.order();
  if (total % div != 0)
    throw consistency_error("Kelly sum not divisible: not the deck of any graph");
  return total / div;
}

/// Kelly's lemma for congruent copies in a colored deck.
inline Count colored_kelly_count_from_deck(const ColoredDeck& d, const ColoredGraph& hp) {
  if (hp.order() >= d.order())
    throw input_error("Kelly count needs a pattern with fewer vertices than the deck order");
  Count total = 0;
  for (const auto& card : d.cards()) total += count_colored_subgraph(card.representative(), hp);
  const Count div = d.order() - hp.order();
  if (total % div != 0)
    throw consistency_error("Kelly sum not divisible: not the deck of any graph");
  return total / div;
}

/// Deck of the complement: complement every card.  deck(complement(g)) ==
/// deck_of_complement(deck(g)) for every g, so complement decks never need G.
inline Deck deck_of_complement(const Deck& d) {
  std::vector<CanonicalForm> cards;
  cards.reserve(d.cards().size());
  for (const auto& card : d.cards()) cards.push_back(canonical_form(complement(card.representative())));
  return Deck(std::move(cards));
}

/// Swap red and blue on every card.  For two-form decks this is the deck of
/// the complement's two-form.
inline ColoredDeck swap_colors(const ColoredDeck& d) {
  std::vector<ColoredCanonicalForm> cards;
  cards.reserve(d.cards().size());
  for (const auto& card : d.cards())
    cards.push_back(colored_canonical_form(swap_colors(card.representative())));
  return ColoredDeck(std::move(cards));
}

}  // namespace kocay
