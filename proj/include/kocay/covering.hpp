#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "counting.hpp"

namespace kocay {

/// A labeled copy of a pattern inside a host (or a bare vertex pool): the
/// vertex image plus the pair bits its edges land on.  Plain copies keep
/// blue empty.
struct LabeledCopy {
  std::uint16_t vertices = 0;
  std::uint64_t red = 0;
  std::uint64_t blue = 0;

  friend auto operator<=>(const LabeledCopy&, const LabeledCopy&) = default;
};

/// Sequence 𝓕 = (F_1, ..., F_k) of patterns; order matters for products but
/// cover counts only depend on the multiset.
using CoverSequence = std::vector<Graph>;
using ColoredCoverSequence = std::vector<ColoredGraph>;

template <class ObjectT>
struct KocayTerm {
  ObjectT cls;   // canonical representative of the subobject class X
  Count covers;  // c(𝓕, X)
  Count copies;  // (G, X)
};

template <class ObjectT>
struct KocayReport {
  Count lhs = 0;
  Count rhs = 0;
  bool equal = false;
  std::vector<KocayTerm<ObjectT>> terms;  // covers > 0 only, sorted by class
};

using PlainKocayReport = KocayReport<Graph>;
using ColoredKocayReport = KocayReport<ColoredGraph>;

namespace detail {

// The covering engine is written once against this trait shape and
// instantiated for plain graphs and for colored graphs.
struct PlainSystem {
  using Object = Graph;
  using Canon = CanonicalForm;
  using DeckType = Deck;

  static int order(const Object& g) { return g.order(); }
  static Canon canon(const Object& g) { return canonical_form(g); }
  static Canon canon_bits(int n, std::uint64_t red, std::uint64_t /*blue*/) {
    return {n, canonical_code(n, red)};
  }
  static void append_code(const Canon& c, std::vector<std::uint64_t>& key) {
    key.push_back(graph_key(c.n, c.code));
  }
  static std::pair<int, int> color_sizes(const Object& g) { return {g.edge_count(), 0}; }
  static LabeledCopy whole(const Object& g) {
    return {static_cast<std::uint16_t>((1u << g.order()) - 1), g.edge_bits(), 0};
  }
  static bool copy_ok(const LabeledCopy&) { return true; }
  static Count deck_count(const DeckType& d, const Object& h) { return kelly_count_from_deck(d, h); }
  static Count host_count(const Object& g, const Object& h) { return count_subgraph(g, h); }
  static bool connected(const Object& g) { return is_connected(g); }
  static std::vector<Object> components(const Object& g) {
    std::vector<Object> out;
    for (auto& c : connected_components(g)) out.push_back(c.graph);
    return out;
  }

  static std::vector<std::pair<Object, Count>> subobject_classes(const Object& host) {
    std::map<Canon, std::uint64_t> acc;
    for (std::uint32_t vmask = 1; vmask < (1u << host.order()); ++vmask) {
      const auto vm = static_cast<std::uint16_t>(vmask);
      const int k = std::popcount(vmask);
      const std::uint64_t within = pairs_within(vm, host.edge_bits());
      for (std::uint64_t esub = within;; esub = (esub - 1) & within) {
        ++acc[Canon{k, canonical_code(k, renumbered_bits(vm, esub))}];
        if (esub == 0) break;
      }
    }
    std::vector<std::pair<Object, Count>> out;
    out.reserve(acc.size());
    for (const auto& [canon, copies] : acc) out.emplace_back(canon.representative(), Count(copies));
    return out;
  }
};

struct ColoredSystem {
  using Object = ColoredGraph;
  using Canon = ColoredCanonicalForm;
  using DeckType = ColoredDeck;

  static int order(const Object& g) { return g.order(); }
  static Canon canon(const Object& g) { return colored_canonical_form(g); }
  static Canon canon_bits(int n, std::uint64_t red, std::uint64_t blue) {
    auto [r, b] = colored_canonical_codes(n, red, blue);
    return {n, r, b};
  }
  static void append_code(const Canon& c, std::vector<std::uint64_t>& key) {
    key.push_back(graph_key(c.n, c.red_code));
    key.push_back(c.blue_code);
  }
  static std::pair<int, int> color_sizes(const Object& g) { return {g.red_count(), g.blue_count()}; }
  static LabeledCopy whole(const Object& g) {
    return {static_cast<std::uint16_t>((1u << g.order()) - 1), g.red_bits(), g.blue_bits()};
  }
  static bool copy_ok(const LabeledCopy& c) { return (c.red & c.blue) == 0; }
  static Count deck_count(const DeckType& d, const Object& h) {
    return colored_kelly_count_from_deck(d, h);
  }
  static Count host_count(const Object& g, const Object& h) { return count_colored_subgraph(g, h); }
  static bool connected(const Object& g) { return is_connected(g); }
  static std::vector<Object> components(const Object& g) { return colored_components(g); }

  static std::vector<std::pair<Object, Count>> subobject_classes(const Object& host) {
    std::map<Canon, std::uint64_t> acc;
    for (std::uint32_t vmask = 1; vmask < (1u << host.order()); ++vmask) {
      const auto vm = static_cast<std::uint16_t>(vmask);
      const int k = std::popcount(vmask);
      const std::uint64_t within = pairs_within(vm, host.colored_bits());
      for (std::uint64_t esub = within;; esub = (esub - 1) & within) {
        ++acc[canon_bits(k, renumbered_bits(vm, esub & host.red_bits()),
                         renumbered_bits(vm, esub & host.blue_bits()))];
        if (esub == 0) break;
      }
    }
    std::vector<std::pair<Object, Count>> out;
    out.reserve(acc.size());
    for (const auto& [canon, copies] : acc) out.emplace_back(canon.representative(), Count(copies));
    return out;
  }
};

// Distinct copies of the pattern inside the host, sorted.
template <class Object>
std::vector<LabeledCopy> copies_in(const Object& host, const Object& pattern) {
  std::vector<LabeledCopy> out;
  for_each_injection(rows_of(host), rows_of(pattern),
                     [&](std::uint16_t vm, std::uint64_t r, std::uint64_t b) {
                       out.push_back({vm, r, b});
                     });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Distinct placements of the pattern into a bare pool of `pool` vertices.
template <class Object>
std::vector<LabeledCopy> placements_in_pool(int pool, const Object& pattern) {
  std::vector<LabeledCopy> out;
  for_each_injection(free_rows(pool), rows_of(pattern),
                     [&](std::uint16_t vm, std::uint64_t r, std::uint64_t b) {
                       out.push_back({vm, r, b});
                     });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class S>
std::vector<std::uint64_t> sequence_key(const std::vector<typename S::Object>& f) {
  std::vector<typename S::Canon> canons;
  canons.reserve(f.size());
  for (const auto& g : f) canons.push_back(S::canon(g));
  std::sort(canons.begin(), canons.end());
  std::vector<std::uint64_t> key;
  key.push_back(f.size());
  for (const auto& c : canons) S::append_code(c, key);
  return key;
}

// c(𝓕, X): assignments of one copy per member whose union reproduces X
// exactly, vertices and edges (and colors) alike.
template <class S>
Count cover_count_impl(const std::vector<typename S::Object>& f, const typename S::Object& x) {
  if (f.empty()) throw input_error("cover sequence must have at least one member");
  auto key = sequence_key<S>(f);
  S::append_code(S::canon(x), key);

  static std::mutex mu;
  static std::map<std::vector<std::uint64_t>, Count> memo;
  {
    std::lock_guard lk(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  const LabeledCopy target = S::whole(x);
  std::vector<std::vector<LabeledCopy>> lists;
  lists.reserve(f.size());
  for (const auto& member : f) lists.push_back(copies_in(x, member));

  std::uint64_t total = 0;
  auto rec = [&](auto&& self, std::size_t i, const LabeledCopy& acc) -> void {
    if (i == lists.size()) {
      if (acc == target) ++total;
      return;
    }
    for (const auto& c : lists[i])
      self(self, i + 1,
           LabeledCopy{static_cast<std::uint16_t>(acc.vertices | c.vertices), acc.red | c.red,
                       acc.blue | c.blue});
  };
  rec(rec, 0, LabeledCopy{});

  std::lock_guard lk(mu);
  return memo.emplace(std::move(key), Count(total)).first->second;
}

// Union classes: isomorphism classes X realizable as a full-support union of
// one placement per member, over pool sizes lo..hi, with c(𝓕, X) for each.
// Every labeled graph in a class is covered equally often; that is asserted.
template <class S>
std::vector<std::pair<typename S::Object, Count>> union_classes_impl(
    const std::vector<typename S::Object>& f, int lo, int hi) {
  if (f.empty()) throw input_error("cover sequence must have at least one member");
  int max_order = 0, sum_order = 0;
  for (const auto& member : f) {
    max_order = std::max(max_order, S::order(member));
    sum_order += S::order(member);
  }
  lo = std::max(lo, max_order);
  hi = std::min({hi, sum_order, kMaxVertices});

  auto key = sequence_key<S>(f);
  key.push_back(static_cast<std::uint64_t>(lo) << 32 | static_cast<std::uint64_t>(std::max(hi, 0)));

  using Canon = typename S::Canon;
  static std::mutex mu;
  static std::map<std::vector<std::uint64_t>, std::vector<std::pair<Canon, Count>>> memo;
  {
    std::lock_guard lk(mu);
    auto it = memo.find(key);
    if (it != memo.end()) {
      std::vector<std::pair<typename S::Object, Count>> out;
      out.reserve(it->second.size());
      for (const auto& [c, covers] : it->second) out.emplace_back(c.representative(), covers);
      return out;
    }
  }

  std::map<Canon, std::uint64_t> covers_by_class;
  for (int v = lo; v <= hi; ++v) {
    std::vector<std::vector<LabeledCopy>> lists;
    lists.reserve(f.size());
    for (const auto& member : f) lists.push_back(placements_in_pool(v, member));
    const auto full = static_cast<std::uint16_t>((1u << v) - 1);

    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> labeled;
    auto rec = [&](auto&& self, std::size_t i, const LabeledCopy& acc) -> void {
      if (!S::copy_ok(acc)) return;
      if (i == lists.size()) {
        if (acc.vertices == full) ++labeled[{acc.red, acc.blue}];
        return;
      }
      for (const auto& c : lists[i])
        self(self, i + 1,
             LabeledCopy{static_cast<std::uint16_t>(acc.vertices | c.vertices), acc.red | c.red,
                         acc.blue | c.blue});
    };
    rec(rec, 0, LabeledCopy{});

    std::map<Canon, std::uint64_t> first_seen;
    for (const auto& [bits, count] : labeled) {
      const Canon c = S::canon_bits(v, bits.first, bits.second);
      auto [it, fresh] = first_seen.emplace(c, count);
      if (!fresh && it->second != count)
        throw consistency_error("cover multiplicity differs within an isomorphism class");
      if (fresh) covers_by_class[c] = count;
    }
  }

  std::vector<std::pair<Canon, Count>> value;
  value.reserve(covers_by_class.size());
  for (const auto& [c, covers] : covers_by_class) value.emplace_back(c, Count(covers));

  std::vector<std::pair<typename S::Object, Count>> out;
  out.reserve(value.size());
  for (const auto& [c, covers] : value) out.emplace_back(c.representative(), covers);

  std::lock_guard lk(mu);
  memo.emplace(std::move(key), std::move(value));
  return out;
}

// Theorem 1 / Theorem 2 shape: ∏ (G, F_i) = Σ_X c(𝓕, X) (G, X).  The right
// side deliberately recomputes c(𝓕, X) per class instead of reusing the
// product structure, so the two sides stay independent checks.
template <class S>
KocayReport<typename S::Object> kocay_check_impl(const typename S::Object& g,
                                                 const std::vector<typename S::Object>& f) {
  if (f.empty()) throw input_error("cover sequence must have at least one member");
  KocayReport<typename S::Object> report;
  report.lhs = 1;
  int vertex_budget = 0, red_budget = 0, blue_budget = 0;
  for (const auto& member : f) {
    report.lhs *= S::host_count(g, member);
    vertex_budget += S::order(member);
    auto [r, b] = S::color_sizes(member);
    red_budget += r;
    blue_budget += b;
  }
  for (auto& [rep, copies] : S::subobject_classes(g)) {
    if (S::order(rep) > vertex_budget) continue;
    auto [r, b] = S::color_sizes(rep);
    if (r > red_budget || b > blue_budget) continue;
    Count covers = cover_count_impl<S>(f, rep);
    if (covers == 0) continue;
    report.rhs += covers * copies;
    report.terms.push_back({rep, std::move(covers), copies});
  }
  report.equal = report.lhs == report.rhs;
  return report;
}

// Lemma 3: ∏ (G, F_i) = Σ over classes X with |V(X)| ≤ n of c(𝓕, X) (G, X),
// rearranged so the only order-n unknowns stay on the left.
template <class S>
Count order_n_sum_impl(const typename S::DeckType& d, const std::vector<typename S::Object>& f) {
  if (f.empty()) throw input_error("cover sequence must have at least one member");
  const int n = d.order();
  for (const auto& member : f)
    if (S::order(member) >= n)
      throw input_error("order-n sum needs members on fewer than n vertices");
  Count total = 1;
  for (const auto& member : f) total *= S::deck_count(d, member);
  for (const auto& [rep, covers] : union_classes_impl<S>(f, 1, n - 1))
    total -= covers * S::deck_count(d, rep);
  return total;
}

// Lemma 4: the order-n sum over the components of a disconnected pattern,
// divided by the number of ways the components cover the pattern itself.
template <class S>
Count spanning_count_impl(const typename S::DeckType& d, const typename S::Object& target) {
  const int n = d.order();
  if (S::order(target) != n)
    throw input_error("spanning count needs a pattern on exactly the deck order");
  const auto comps = S::components(target);
  if (comps.size() < 2) throw input_error("spanning count needs a disconnected pattern");
  const Count numerator = order_n_sum_impl<S>(d, comps);
  const Count divisor = cover_count_impl<S>(comps, target);
  if (divisor == 0) throw consistency_error("components fail to cover their own union");
  if (numerator < 0 || numerator % divisor != 0)
    throw consistency_error("spanning sum not divisible: not the deck of any graph");
  return numerator / divisor;
}

// Σ over spanning disconnected classes X of c(𝓕, X) (G, X), deck-only.
template <class S>
Count spanning_disconnected_sum_impl(const typename S::DeckType& d,
                                     const std::vector<typename S::Object>& f) {
  if (f.empty()) throw input_error("cover sequence must have at least one member");
  const int n = d.order();
  for (const auto& member : f)
    if (S::order(member) >= n)
      throw input_error("spanning disconnected sum needs members on fewer than n vertices");
  Count total = 0;
  for (const auto& [rep, covers] : union_classes_impl<S>(f, n, n))
    if (!S::connected(rep)) total += covers * spanning_count_impl<S>(d, rep);
  return total;
}

}  // namespace detail

inline std::vector<LabeledCopy> enumerate_copies(const Graph& host, const Graph& pattern) {
  return detail::copies_in(host, pattern);
}
inline std::vector<LabeledCopy> enumerate_copies(const ColoredGraph& host,
                                                 const ColoredGraph& pattern) {
  return detail::copies_in(host, pattern);
}

inline Count cover_count(const CoverSequence& f, const Graph& x) {
  return detail::cover_count_impl<detail::PlainSystem>(f, x);
}
inline Count cover_count(const ColoredCoverSequence& f, const ColoredGraph& x) {
  return detail::cover_count_impl<detail::ColoredSystem>(f, x);
}

inline PlainKocayReport kocay_check(const Graph& g, const CoverSequence& f) {
  return detail::kocay_check_impl<detail::PlainSystem>(g, f);
}
inline ColoredKocayReport kocay_check(const ColoredGraph& g, const ColoredCoverSequence& f) {
  return detail::kocay_check_impl<detail::ColoredSystem>(g, f);
}

inline std::vector<std::pair<Graph, Count>> subgraph_class_counts(const Graph& host) {
  return detail::PlainSystem::subobject_classes(host);
}
inline std::vector<std::pair<ColoredGraph, Count>> subgraph_class_counts(const ColoredGraph& host) {
  return detail::ColoredSystem::subobject_classes(host);
}

inline Count order_n_sum(const Deck& d, const CoverSequence& f) {
  return detail::order_n_sum_impl<detail::PlainSystem>(d, f);
}
inline Count order_n_sum(const ColoredDeck& d, const ColoredCoverSequence& f) {
  return detail::order_n_sum_impl<detail::ColoredSystem>(d, f);
}

inline Count spanning_subgraph_count(const Deck& d, const Graph& target) {
  return detail::spanning_count_impl<detail::PlainSystem>(d, target);
}
inline Count spanning_subgraph_count(const ColoredDeck& d, const ColoredGraph& target) {
  return detail::spanning_count_impl<detail::ColoredSystem>(d, target);
}

inline Count spanning_disconnected_sum(const Deck& d, const CoverSequence& f) {
  return detail::spanning_disconnected_sum_impl<detail::PlainSystem>(d, f);
}
inline Count spanning_disconnected_sum(const ColoredDeck& d, const ColoredCoverSequence& f) {
  return detail::spanning_disconnected_sum_impl<detail::ColoredSystem>(d, f);
}

}  // namespace kocay
