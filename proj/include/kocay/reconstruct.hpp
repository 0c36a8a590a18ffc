#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "covering.hpp"
#include "graph6.hpp"

namespace kocay {

enum class ResolutionStatus { exact, sum_combo, difference_combo, combo_only };

inline std::string_view to_string(ResolutionStatus s) {
  switch (s) {
    case ResolutionStatus::exact: return "exact";
    case ResolutionStatus::sum_combo: return "sum_combo";
    case ResolutionStatus::difference_combo: return "difference_combo";
    case ResolutionStatus::combo_only: return "combo_only";
  }
  return "unknown";
}

/// Outcome of a deck-only pipeline.  status exact carries the reconstructed
/// integer(s); the combo statuses carry the single combination value together
/// with the coefficient pair (a, b) of a*(G,T) + b*(complement(G),T).
struct ReconstructionReport {
  std::string target;
  ResolutionStatus status = ResolutionStatus::exact;
  std::vector<Count> values;
  Rational coeff_a = 0;
  Rational coeff_b = 0;
  std::vector<std::pair<std::string, std::string>> ledger;
  std::vector<std::pair<int, int>> edge_ordering;
};

/// The n coloring stages of a tree: stage i has the first i edges of the
/// ordering blue and the rest red.
struct BlueDescentSequence {
  Graph tree;  // the labeling the ordering refers to
  std::vector<std::pair<int, int>> ordering;
  std::vector<ColoredGraph> stages;  // size |E(tree)| + 1
};

struct EdgeIdentityReport {
  Count lhs = 0;
  Count rhs = 0;
  bool equal = false;
  Count forest_count = 0;  // (gp, h - e)
  int orbit = 0;           // |orb_{h-e}(e)|
  Count blue_host = 0;     // (gp, h with e blue)
  Count blue_mult = 0;     // (h with e blue, h - e)
  Count red_host = 0;      // (gp, h with e red)
  Count red_mult = 0;      // (h with e red, h - e)
};

/// The per-edge incidence identity: deleting a colored pair e from h,
///   (gp, h-e) * |orb_{h-e}(e)| = (gp, h_be)*(h_be, h-e) + (gp, h_re)*(h_re, h-e)
/// where h_be / h_re recolor e blue / red.  Every copy of h-e extends over
/// its e-image, which is either blue or red in gp.
inline EdgeIdentityReport edge_identity_check(const ColoredGraph& gp, const ColoredGraph& h,
                                              std::pair<int, int> e) {
  const auto [a, b] = e;
  h.check_pair(a, b);
  if (!h.has_red(a, b) && !h.has_blue(a, b))
    throw input_error("the pair must be colored in the pattern");
  const ColoredGraph forest = delete_pair(h, a, b);
  const ColoredGraph h_be = recolor(forest, a, b, EdgeColor::blue);
  const ColoredGraph h_re = recolor(forest, a, b, EdgeColor::red);
  EdgeIdentityReport r;
  r.forest_count = count_colored_subgraph(gp, forest);
  r.orbit = colored_pair_orbit_size(forest, a, b);
  r.blue_host = count_colored_subgraph(gp, h_be);
  r.blue_mult = count_colored_subgraph(h_be, forest);
  r.red_host = count_colored_subgraph(gp, h_re);
  r.red_mult = count_colored_subgraph(h_re, forest);
  r.lhs = r.forest_count * r.orbit;
  r.rhs = r.blue_host * r.blue_mult + r.red_host * r.red_mult;
  r.equal = r.lhs == r.rhs;
  return r;
}

namespace detail {

inline std::string pair_text(std::pair<int, int> e) {
  return std::to_string(e.first) + "-" + std::to_string(e.second);
}

// Subtree hanging below `child` once the edge (parent, child) is cut:
// (order, canonical code) for deterministic child ordering.
inline std::pair<int, std::uint64_t> pending_subtree_key(const Graph& t, int parent, int child) {
  Graph cut = t;
  cut.remove_edge(parent, child);
  for (const auto& comp : connected_components(cut)) {
    if (std::find(comp.vertices.begin(), comp.vertices.end(), child) != comp.vertices.end())
      return {comp.graph.order(), canonical_code(comp.graph.order(), comp.graph.edge_bits())};
  }
  throw consistency_error("child vanished from its own subtree");
}

inline void default_ordering_dfs(const Graph& t, int u, int parent,
                                 std::vector<std::pair<int, int>>& out) {
  std::vector<std::tuple<int, std::uint64_t, int>> children;
  for_each_bit(t.neighbors(u), [&](int w) {
    if (w == parent) return;
    auto [size, code] = pending_subtree_key(t, u, w);
    children.emplace_back(size, code, w);
  });
  std::sort(children.begin(), children.end());
  for (auto& [size, code, w] : children) {
    out.emplace_back(u, w);
    default_ordering_dfs(t, w, u, out);
  }
}

}  // namespace detail

/// Stages of the red-to-blue descent.  Without an explicit ordering the tree
/// is canonicalized first and edges are emitted by a rooted preorder from
/// vertex 0, children ordered by (subtree order, subtree code, label); the
/// result then depends only on the isomorphism class of t.  An explicit
/// ordering refers to t's own labels and must list every edge exactly once.
inline BlueDescentSequence blue_descent_sequence(
    const Graph& t, std::optional<std::vector<std::pair<int, int>>> ordering = std::nullopt) {
  if (!is_tree(t)) throw input_error("blue descent needs a tree");
  BlueDescentSequence seq{Graph(1), {}, {}};
  if (ordering) {
    seq.tree = t;
    seq.ordering = *ordering;
    if (static_cast<int>(seq.ordering.size()) != t.edge_count())
      throw input_error("edge ordering must list every tree edge exactly once");
    std::uint64_t seen = 0;
    for (auto [a, b] : seq.ordering) {
      if (!t.has_edge(a, b)) throw input_error("edge ordering contains a non-edge");
      const std::uint64_t bit = detail::pair_bit(a, b);
      if (seen & bit) throw input_error("edge ordering repeats an edge");
      seen |= bit;
    }
  } else {
    seq.tree = canonical_form(t).representative();
    if (seq.tree.order() > 1) detail::default_ordering_dfs(seq.tree, 0, -1, seq.ordering);
  }
  ColoredGraph stage = all_red(seq.tree);
  seq.stages.push_back(stage);
  for (auto [a, b] : seq.ordering) {
    stage = recolor(delete_pair(stage, a, b), a, b, EdgeColor::blue);
    seq.stages.push_back(stage);
  }
  return seq;
}

namespace detail {

struct DescentChain {
  Rational a = 0;  // coefficient of x_0 = (G', all-red stage)
  Rational b = 0;  // coefficient of x_L = (G', all-blue stage)
  Rational known = 0;
  std::vector<std::pair<std::string, std::string>> ledger;
};

// Eliminates the intermediate stage counts: step i supplies
//   m_i * x_i + m'_i * x_{i+1} = k_i
// with m_i = (stage_i, forest_i), m'_i = (stage_{i+1}, forest_i) and k_i the
// deck-reconstructed forest count times the pair orbit.  Folding the steps
// together leaves a * x_0 + b * x_L = known.
inline DescentChain blue_descent_chain(const ColoredDeck& d, const BlueDescentSequence& seq) {
  DescentChain chain;
  Rational A = 0, B = 0, C = 0;
  for (std::size_t i = 0; i < seq.ordering.size(); ++i) {
    const auto e = seq.ordering[i];
    const ColoredGraph& stage = seq.stages[i];
    const ColoredGraph forest = delete_pair(stage, e.first, e.second);
    const int orb = colored_pair_orbit_size(forest, e.first, e.second);
    const Count m = count_colored_subgraph(stage, forest);
    const Count mp = count_colored_subgraph(seq.stages[i + 1], forest);
    const Count k = spanning_subgraph_count(d, forest) * orb;
    if (mp == 0) throw consistency_error("stage multiplicity vanished");
    if (i == 0) {
      A = Rational(m);
      B = Rational(mp);
      C = Rational(k);
    } else {
      // substitute x_i = (C - A*x_0) / B into m*x_i + mp*x_{i+1} = k
      const Rational mr(m);
      const Rational prevB = B;
      A = -(mr * A) / prevB;
      C = Rational(k) - (mr * C) / prevB;
      B = Rational(mp);
    }
    chain.ledger.emplace_back(
        "step " + std::to_string(i + 1) + " edge " + pair_text(e),
        "orb=" + std::to_string(orb) + " m=" + m.str() + " m'=" + mp.str() + " k=" + k.str());
  }
  chain.a = A;
  chain.b = B;
  chain.known = C;
  return chain;
}

inline Count rational_to_count(const Rational& r, const char* what) {
  if (boost::multiprecision::denominator(r) != 1)
    throw consistency_error(std::string(what) + " is not an integer: not the deck of any graph");
  return Count(boost::multiprecision::numerator(r));
}

}  // namespace detail

/// ((g,t), (complement(g),t)) by direct counting; the oracle the descent is
/// measured against.
inline std::pair<Count, Count> tree_combo_oracle(const Graph& g, const Graph& t) {
  if (!is_tree(t)) throw input_error("oracle needs a tree");
  return {count_subgraph(g, t), count_subgraph(complement(g), t)};
}

/// Theorem 3 trichotomy.  For |V(t)| < n both (G,T) and (complement(G),T)
/// fall to colored Kelly exactly.  For a spanning tree the red-to-blue
/// descent yields a*x_0 + b*x_L = K, the swapped-color deck yields
/// b*x_0 + a*x_L = K', and the system resolves exactly unless a = +-b, in
/// which case only the matching sum or difference is determined.
inline ReconstructionReport tree_descent(
    const ColoredDeck& d, const Graph& t,
    std::optional<std::vector<std::pair<int, int>>> ordering = std::nullopt) {
  if (!is_tree(t)) throw input_error("tree descent needs a tree");
  const int n = d.order();
  if (t.order() > n) throw input_error("tree order exceeds deck order");

  ReconstructionReport report;
  report.target = "(G,T) and (complement(G),T) for T=" + serialize_graph6(t);

  if (t.order() < n) {
    const Count gt = colored_kelly_count_from_deck(d, all_red(t));
    const Count gct = colored_kelly_count_from_deck(d, all_blue(t));
    report.status = ResolutionStatus::exact;
    report.values = {gt, gct};
    report.coeff_a = 1;
    report.coeff_b = 0;
    report.ledger.emplace_back("kelly all-red", gt.str());
    report.ledger.emplace_back("kelly all-blue", gct.str());
    return report;
  }

  const auto seq = blue_descent_sequence(t, std::move(ordering));
  report.edge_ordering = seq.ordering;
  auto chain = detail::blue_descent_chain(d, seq);
  auto swapped = detail::blue_descent_chain(swap_colors(d), seq);
  if (chain.a != swapped.a || chain.b != swapped.b)
    throw consistency_error("descent coefficients depend on the deck");

  // Scale to coprime integer coefficients with a > 0; purely cosmetic, the
  // solved values are scale-invariant.
  {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    Rational scale = Rational(lcm(denominator(chain.a), denominator(chain.b)));
    const Count g = gcd(numerator(Rational(chain.a * scale)), numerator(Rational(chain.b * scale)));
    if (g != 0) scale /= Rational(g);
    if (chain.a * scale < 0) scale = -scale;
    chain.a *= scale;
    chain.b *= scale;
    chain.known *= scale;
    swapped.known *= scale;
  }
  report.coeff_a = chain.a;
  report.coeff_b = chain.b;
  report.ledger = chain.ledger;
  report.ledger.emplace_back("chain", "a=" + chain.a.str() + " b=" + chain.b.str() +
                                          " K=" + chain.known.str());
  report.ledger.emplace_back("swapped chain", "K'=" + swapped.known.str());

  const Rational &a = chain.a, &b = chain.b;
  if (a != b && a != -b) {
    const Rational det = a * a - b * b;
    const Count x0 = detail::rational_to_count((a * chain.known - b * swapped.known) / det,
                                               "reconstructed (G,T)");
    const Count xl = detail::rational_to_count((a * swapped.known - b * chain.known) / det,
                                               "reconstructed (complement(G),T)");
    if (x0 < 0 || xl < 0)
      throw consistency_error("negative tree count: not the deck of any graph");
    report.status = ResolutionStatus::exact;
    report.values = {x0, xl};
  } else if (a == b) {
    if (chain.known != swapped.known)
      throw consistency_error("sum combination disagrees across the color swap");
    const Count s = detail::rational_to_count(chain.known / a, "reconstructed sum");
    if (s < 0) throw consistency_error("negative tree count sum: not the deck of any graph");
    report.status = ResolutionStatus::sum_combo;
    report.values = {s};
  } else {
    if (chain.known != -swapped.known)
      throw consistency_error("difference combination disagrees across the color swap");
    report.status = ResolutionStatus::difference_combo;
    report.values = {detail::rational_to_count(chain.known / a, "reconstructed difference")};
  }
  return report;
}

/// The path-count pipeline: with a = ceil((n-1)/2), b = floor((n-1)/2) and
/// the matchings F1 = aK_2, F2 = bK_2, every class covered by (F1, F2) is
/// known from the deck except the single connected spanning one, which is
/// P_n; the product minus the known terms, divided by c((F1,F2), P_n), is
/// (G, P_n).
inline ReconstructionReport reconstruct_path_count(const Deck& d, int n) {
  if (n != d.order()) throw input_error("n must equal the deck order");
  if (n <= 4) throw input_error("path reconstruction needs n > 4");
  const int a = n / 2;        // ceil((n-1)/2)
  const int b = (n - 1) / 2;  // floor((n-1)/2)
  const Graph f1 = matching_graph(a);
  const Graph f2 = matching_graph(b);
  const CoverSequence f{f1, f2};

  ReconstructionReport report;
  report.target = "(G,P_" + std::to_string(n) + ") from the deck alone";
  report.status = ResolutionStatus::exact;
  report.coeff_a = 1;
  report.coeff_b = 0;

  auto factor = [&](const Graph& m) {
    return m.order() < n ? kelly_count_from_deck(d, m) : spanning_subgraph_count(d, m);
  };
  const Count c1 = factor(f1);
  const Count c2 = factor(f2);
  Count total = c1 * c2;
  report.ledger.emplace_back("factor " + serialize_graph6(f1), c1.str());
  report.ledger.emplace_back("factor " + serialize_graph6(f2), c2.str());

  for (const auto& [rep, covers] : detail::union_classes_impl<detail::PlainSystem>(f, 1, n - 1)) {
    const Count term = covers * kelly_count_from_deck(d, rep);
    total -= term;
    report.ledger.emplace_back("kelly class " + serialize_graph6(rep) + " c=" + covers.str(),
                               term.str());
  }

  Count path_covers = 0;
  for (const auto& [rep, covers] : detail::union_classes_impl<detail::PlainSystem>(f, n, n)) {
    if (is_connected(rep)) {
      if (canonical_form(rep) != canonical_form(path_graph(n)))
        throw consistency_error("unexpected connected class covered by two matchings");
      path_covers = covers;
      continue;
    }
    const Count term = covers * spanning_subgraph_count(d, rep);
    total -= term;
    report.ledger.emplace_back("spanning class " + serialize_graph6(rep) + " c=" + covers.str(),
                               term.str());
  }
  if (path_covers == 0)
    throw consistency_error("the matchings fail to cover the path");
  report.ledger.emplace_back("divisor c(F,P_n)", path_covers.str());
  if (total < 0 || total % path_covers != 0)
    throw consistency_error("path sum not divisible: not the deck of any graph");
  report.values = {total / path_covers};
  return report;
}

}  // namespace kocay
