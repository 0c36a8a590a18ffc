#include <algorithm>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <kocay/covering.hpp>

using namespace kocay;

namespace {

// Direct tuple count on the host itself: choose one copy of each member,
// keep tuples whose union touches every vertex (and, optionally, is
// disconnected as a spanning subobject).  This is what the deck-only sums
// must reproduce without ever seeing the host.
template <class Host, class Seq>
Count tuple_support_sum(const Host& g, const Seq& f, bool need_disconnected) {
  std::vector<std::vector<LabeledCopy>> pools;
  for (const auto& fi : f) {
    pools.push_back(enumerate_copies(g, fi));
    if (pools.back().empty()) return 0;
  }
  const auto full = static_cast<std::uint16_t>((1u << g.order()) - 1);
  std::vector<std::size_t> idx(pools.size(), 0);
  Count total = 0;
  while (true) {
    std::uint16_t vmask = 0;
    std::uint64_t ebits = 0;
    for (std::size_t i = 0; i < pools.size(); ++i) {
      const auto& c = pools[i][idx[i]];
      vmask |= c.vertices;
      ebits |= c.red | c.blue;
    }
    if (vmask == full &&
        (!need_disconnected || detail::component_masks(g.order(), ebits).size() > 1))
      ++total;
    std::size_t i = 0;
    for (; i < pools.size(); ++i) {
      if (++idx[i] < pools[i].size()) break;
      idx[i] = 0;
    }
    if (i == pools.size()) break;
  }
  return total;
}

ColoredGraph red_edge() {
  ColoredGraph g(2);
  g.add_edge(0, 1, EdgeColor::red);
  return g;
}

ColoredGraph blue_edge() {
  ColoredGraph g(2);
  g.add_edge(0, 1, EdgeColor::blue);
  return g;
}

}  // namespace

TEST_CASE("copy enumeration") {
  const auto lone = enumerate_copies(path_graph(3), Graph(2));
  REQUIRE(lone.size() == 3);  // vertex pairs, no edges
  for (const auto& c : lone) {
    REQUIRE(c.red == 0);
    REQUIRE(std::popcount(c.vertices) == 2);
  }

  const auto edges = enumerate_copies(cycle_graph(4), complete_graph(2));
  REQUIRE(edges.size() == 4);
  for (const auto& c : edges) REQUIRE(std::popcount(c.red) == 1);

  // distinct, and the tally matches the copy count
  for (const auto& g : enumerate_graphs(4)) {
    for (int k = 1; k <= 3; ++k) {
      for (const auto& h : enumerate_graphs(k)) {
        auto copies = enumerate_copies(g, h);
        std::sort(copies.begin(), copies.end());
        REQUIRE(std::adjacent_find(copies.begin(), copies.end()) == copies.end());
        REQUIRE(Count(copies.size()) == count_subgraph(g, h));
      }
    }
  }
}

TEST_CASE("cover counts, spot values") {
  const Graph k2 = complete_graph(2);
  REQUIRE(cover_count({k2, k2}, path_graph(3)) == 2);
  REQUIRE(cover_count({k2, k2}, matching_graph(2)) == 2);
  REQUIRE(cover_count({k2, k2}, k2) == 1);
  REQUIRE(cover_count({matching_graph(2), matching_graph(2)}, path_graph(5)) == 2);
  REQUIRE(cover_count({matching_graph(2), k2}, path_graph(4)) == 1);
  REQUIRE(cover_count({Graph(1), k2}, path_graph(3)) == 0);
  REQUIRE(cover_count({k2}, k2) == 1);
  REQUIRE(cover_count({path_graph(3), path_graph(3)}, cycle_graph(4)) == 4);
  REQUIRE_THROWS_AS(cover_count(CoverSequence{}, k2), input_error);
}

TEST_CASE("cover counts are invariant under reorder and relabel") {
  const CoverSequence f{path_graph(3), complete_graph(2)};
  const CoverSequence rev{complete_graph(2), path_graph(3)};
  for (const auto& x : enumerate_graphs(4)) {
    const Count c = cover_count(f, x);
    REQUIRE(cover_count(rev, x) == c);
    REQUIRE(cover_count(f, permute(x, Permutation({2, 0, 3, 1}))) == c);
  }
}

TEST_CASE("colored cover counts") {
  ColoredGraph x(3);  // red 0-1, blue 1-2
  x.add_edge(0, 1, EdgeColor::red);
  x.add_edge(1, 2, EdgeColor::blue);
  REQUIRE(cover_count(ColoredCoverSequence{red_edge(), blue_edge()}, x) == 1);
  REQUIRE(cover_count(ColoredCoverSequence{red_edge(), red_edge()}, x) == 0);
  REQUIRE(cover_count(ColoredCoverSequence{red_edge()}, red_edge()) == 1);
}

TEST_CASE("product identity, worked example") {
  const auto rep = kocay_check(complete_graph(3), {complete_graph(2), complete_graph(2)});
  REQUIRE(rep.lhs == 9);
  REQUIRE(rep.rhs == 9);
  REQUIRE(rep.equal);
  REQUIRE(rep.terms.size() == 2);
  REQUIRE(canonical_form(rep.terms[0].cls) == canonical_form(complete_graph(2)));
  REQUIRE(rep.terms[0].covers == 1);
  REQUIRE(rep.terms[0].copies == 3);
  REQUIRE(canonical_form(rep.terms[1].cls) == canonical_form(path_graph(3)));
  REQUIRE(rep.terms[1].covers == 2);
  REQUIRE(rep.terms[1].copies == 3);
}

TEST_CASE("product identity, exhaustive small cases") {
  std::vector<Graph> pool;
  for (int k = 1; k <= 2; ++k)
    for (const auto& h : enumerate_graphs(k)) pool.push_back(h);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      for (const auto& a : pool)
        for (const auto& b : pool) REQUIRE(kocay_check(g, {a, b}).equal);
      REQUIRE(kocay_check(g, {path_graph(3), complete_graph(2), Graph(1)}).equal);
    }
  }
}

TEST_CASE("product identity, colored") {
  std::vector<ColoredGraph> pool;
  for (int k = 1; k <= 2; ++k)
    for (const auto& h : enumerate_colored_graphs(k)) pool.push_back(h);
  for (int n = 1; n <= 3; ++n)
    for (const auto& g : enumerate_graphs(n))
      for (const auto& a : pool)
        for (const auto& b : pool) REQUIRE(kocay_check(two_form(g), {a, b}).equal);
}

TEST_CASE("subobject class tallies") {
  const auto classes = subgraph_class_counts(complete_graph(3));
  Count total = 0;
  for (const auto& [cls, copies] : classes) total += copies;
  REQUIRE(total == 17);  // sum over subsets S of 2^{edges within S}
  const auto k2 = std::find_if(classes.begin(), classes.end(), [](const auto& e) {
    return canonical_form(e.first) == canonical_form(complete_graph(2));
  });
  REQUIRE(k2 != classes.end());
  REQUIRE(k2->second == 3);
  for (std::size_t i = 1; i < classes.size(); ++i)
    REQUIRE(canonical_form(classes[i - 1].first) < canonical_form(classes[i].first));
}

TEST_CASE("full-support sums from the deck alone") {
  REQUIRE(order_n_sum(deck(cycle_graph(4)), {complete_graph(2), complete_graph(2)}) == 4);

  std::vector<CoverSequence> families;
  const std::vector<Graph> pool{complete_graph(2), path_graph(3), complete_graph(3),
                                disjoint_union(complete_graph(2), Graph(1))};
  for (const auto& a : pool)
    for (const auto& b : pool) families.push_back({a, b});
  families.push_back({path_graph(3)});
  families.push_back({complete_graph(2), complete_graph(2), complete_graph(2)});

  for (const auto& g : enumerate_graphs(4)) {
    const Deck d = deck(g);
    for (const auto& f : families) {
      REQUIRE(order_n_sum(d, f) == tuple_support_sum(g, f, false));
      REQUIRE(spanning_disconnected_sum(d, f) == tuple_support_sum(g, f, true));
    }
  }

  REQUIRE_THROWS_AS(order_n_sum(deck(cycle_graph(4)), {cycle_graph(4)}), input_error);
  REQUIRE_THROWS_AS(order_n_sum(deck(cycle_graph(4)), CoverSequence{}), input_error);
}

TEST_CASE("spanning disconnected sums, worked examples") {
  const CoverSequence two_edges{complete_graph(2), complete_graph(2)};
  REQUIRE(spanning_disconnected_sum(deck(cycle_graph(4)), two_edges) == 4);
  REQUIRE(spanning_disconnected_sum(deck(path_graph(4)), two_edges) == 2);
  // vertex budget below n
  REQUIRE(spanning_disconnected_sum(deck(cycle_graph(4)), {complete_graph(2)}) == 0);
}

TEST_CASE("spanning counts of disconnected targets") {
  REQUIRE(spanning_subgraph_count(deck(cycle_graph(4)), matching_graph(2)) == 2);
  REQUIRE(spanning_subgraph_count(deck(path_graph(4)), matching_graph(2)) == 1);
  REQUIRE(spanning_subgraph_count(deck(cycle_graph(5)),
                                  disjoint_union(path_graph(3), complete_graph(2))) == 5);

  for (int n = 4; n <= 5; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      const Deck d = deck(g);
      for (const auto& t : enumerate_graphs(n)) {
        if (is_connected(t)) continue;
        REQUIRE(spanning_subgraph_count(d, t) == count_subgraph(g, t));
      }
    }
  }

  REQUIRE_THROWS_AS(spanning_subgraph_count(deck(cycle_graph(4)), cycle_graph(4)), input_error);
  REQUIRE_THROWS_AS(spanning_subgraph_count(deck(cycle_graph(4)), matching_graph(3)), input_error);
}

TEST_CASE("colored spanning counts of disconnected targets") {
  for (const auto& g : enumerate_graphs(4)) {
    const ColoredGraph t = two_form(g);
    const ColoredDeck d = colored_deck(t);
    for (const auto& [cls, copies] : subgraph_class_counts(t)) {
      if (cls.order() != 4 || is_connected(cls)) continue;
      REQUIRE(spanning_subgraph_count(d, cls) == copies);
      REQUIRE(count_colored_subgraph(t, cls) == copies);
    }
  }
}

TEST_CASE("colored full-support sums") {
  const ColoredCoverSequence f{red_edge(), blue_edge()};
  for (const auto& g : enumerate_graphs(4)) {
    const ColoredGraph t = two_form(g);
    const ColoredDeck d = colored_deck(t);
    REQUIRE(order_n_sum(d, f) == tuple_support_sum(t, f, false));
    REQUIRE(spanning_disconnected_sum(d, f) == tuple_support_sum(t, f, true));
  }
}
