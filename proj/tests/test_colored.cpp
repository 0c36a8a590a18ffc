#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <kocay/colored_graph.hpp>

using namespace kocay;

namespace {

std::vector<ColoredGraph> all_labeled_colored(int n) {
  std::vector<ColoredGraph> out;
  const int m = detail::pair_count(n);
  std::vector<int> state(m, 0);  // 0 none, 1 red, 2 blue
  while (true) {
    std::uint64_t red = 0, blue = 0;
    for (int k = 0; k < m; ++k) {
      if (state[k] == 1) red |= std::uint64_t{1} << k;
      if (state[k] == 2) blue |= std::uint64_t{1} << k;
    }
    out.push_back(ColoredGraph::from_bits(n, red, blue));
    int k = 0;
    while (k < m && state[k] == 2) state[k++] = 0;
    if (k == m) break;
    ++state[k];
  }
  return out;
}

std::vector<std::vector<ColoredGraph>> colored_iso_partition(const std::vector<ColoredGraph>& in) {
  std::vector<std::vector<ColoredGraph>> classes;
  for (const auto& g : in) {
    bool placed = false;
    for (auto& cls : classes) {
      if (colored_isomorphic(cls.front(), g)) {
        cls.push_back(g);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({g});
  }
  return classes;
}

}  // namespace

TEST_CASE("colored graph construction") {
  ColoredGraph g(3);
  g.add_edge(0, 1, EdgeColor::red);
  g.add_edge(1, 2, EdgeColor::blue);
  REQUIRE(g.red_count() == 1);
  REQUIRE(g.blue_count() == 1);
  REQUIRE(g.has_red(0, 1));
  REQUIRE(g.has_blue(2, 1));
  REQUIRE(!g.has_red(0, 2));
  REQUIRE(!g.is_complete());
  REQUIRE_THROWS_AS(g.add_edge(0, 1, EdgeColor::blue), input_error);
  REQUIRE_THROWS_AS(g.add_edge(1, 2, EdgeColor::red), input_error);
  REQUIRE_THROWS_AS(ColoredGraph::from_bits(2, 0b1, 0b1), input_error);
  REQUIRE(g.red_edges() == std::vector<std::pair<int, int>>{{0, 1}});
  REQUIRE(g.blue_edges() == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("two-coloring of a plain graph") {
  const ColoredGraph t = two_form(path_graph(3));
  REQUIRE(t.red_count() == 2);
  REQUIRE(t.blue_count() == 1);
  REQUIRE(t.is_complete());
  REQUIRE(t.has_red(0, 1));
  REQUIRE(t.has_red(1, 2));
  REQUIRE(t.has_blue(0, 2));

  REQUIRE(two_form(complete_graph(3)).blue_count() == 0);
  REQUIRE(two_form(Graph(3)).blue_count() == 3);

  for (const auto& g : enumerate_graphs(4)) {
    REQUIRE(colored_isomorphic(two_form(complement(g)), swap_colors(two_form(g))));
    REQUIRE(colored_isomorphic(all_red(g), swap_colors(all_blue(g))));
  }
}

TEST_CASE("swap, recolor, pair deletion") {
  const ColoredGraph t = two_form(path_graph(3));
  REQUIRE(swap_colors(swap_colors(t)) == t);
  const ColoredGraph d = delete_pair(t, 0, 1);
  REQUIRE(d.order() == 3);
  REQUIRE(d.red_count() == 1);
  REQUIRE(!d.has_red(0, 1));
  REQUIRE_THROWS_AS(delete_pair(d, 0, 1), input_error);
  // recolor only accepts an uncolored pair
  REQUIRE_THROWS_AS(recolor(t, 0, 1, EdgeColor::blue), input_error);
  const ColoredGraph r = recolor(d, 0, 1, EdgeColor::blue);
  REQUIRE(r.has_blue(0, 1));
  REQUIRE(r.red_count() == 1);
  REQUIRE(recolor(delete_pair(r, 0, 1), 0, 1, EdgeColor::red) == t);
  // the worked flip: lone red pair deleted then recolored blue
  ColoredGraph rk2(2);
  rk2.add_edge(0, 1, EdgeColor::red);
  ColoredGraph bk2(2);
  bk2.add_edge(0, 1, EdgeColor::blue);
  REQUIRE(recolor(delete_pair(rk2, 0, 1), 0, 1, EdgeColor::blue) == bk2);
}

TEST_CASE("colored canonical form agrees with explicit bijection search") {
  for (int n = 2; n <= 3; ++n) {
    const auto classes = colored_iso_partition(all_labeled_colored(n));
    std::vector<ColoredCanonicalForm> forms;
    for (const auto& cls : classes) {
      const auto cf = colored_canonical_form(cls.front());
      for (const auto& g : cls) REQUIRE(colored_canonical_form(g) == cf);
      forms.push_back(cf);
    }
    std::sort(forms.begin(), forms.end());
    REQUIRE(std::adjacent_find(forms.begin(), forms.end()) == forms.end());
    REQUIRE(classes.size() == enumerate_colored_graphs(n).size());
  }
}

TEST_CASE("colored enumeration counts") {
  const std::vector<std::size_t> expected{1, 3, 10, 66};
  for (int n = 1; n <= 4; ++n) {
    const auto& level = enumerate_colored_graphs(n);
    REQUIRE(level.size() == expected[n - 1]);
    for (std::size_t i = 0; i < level.size(); ++i) {
      REQUIRE(colored_canonical_form(level[i]).representative() == level[i]);
      if (i > 0) REQUIRE(colored_canonical_form(level[i - 1]) < colored_canonical_form(level[i]));
    }
  }
}

TEST_CASE("colored automorphisms and orbits") {
  REQUIRE(colored_automorphism_count(two_form(cycle_graph(5))) == 10);
  REQUIRE(colored_automorphism_count(all_red(complete_graph(3))) == 6);
  ColoredGraph g(3);
  g.add_edge(0, 1, EdgeColor::red);
  g.add_edge(1, 2, EdgeColor::blue);
  REQUIRE(colored_automorphism_count(g) == 1);

  const auto auts = colored_automorphisms(two_form(path_graph(3)));
  REQUIRE(auts.size() == 2);
  for (const auto& p : auts) REQUIRE(permute(two_form(path_graph(3)), p) == two_form(path_graph(3)));

  REQUIRE(colored_pair_orbit_size(two_form(cycle_graph(5)), 0, 1) == 5);
  REQUIRE(colored_pair_orbit_size(two_form(path_graph(3)), 0, 1) == 2);
  REQUIRE(colored_pair_orbit_size(two_form(path_graph(3)), 0, 2) == 1);
  REQUIRE(colored_pair_orbit_size(g, 0, 1) == 1);
}

TEST_CASE("colored isomorphism separates colors") {
  ColoredGraph a(2);
  a.add_edge(0, 1, EdgeColor::red);
  ColoredGraph b(2);
  b.add_edge(0, 1, EdgeColor::blue);
  REQUIRE(!colored_isomorphic(a, b));
  REQUIRE(colored_isomorphic(a, swap_colors(b)));
}

TEST_CASE("colored components") {
  ColoredGraph g(5);
  g.add_edge(0, 1, EdgeColor::red);
  g.add_edge(2, 3, EdgeColor::blue);
  const auto comps = colored_components(g);
  REQUIRE(comps.size() == 3);
  REQUIRE(comps[0].order() == 2);
  REQUIRE(comps[0].red_count() == 1);
  REQUIRE(comps[1].blue_count() == 1);
  REQUIRE(comps[2].order() == 1);
  REQUIRE(!is_connected(g));
  REQUIRE(is_connected(two_form(Graph(4))));
}

TEST_CASE("two-coloring reflects isomorphism exactly") {
  std::vector<Graph> all;
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : enumerate_graphs(n)) all.push_back(g);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i; j < all.size(); ++j) {
      REQUIRE(is_isomorphic(all[i], all[j]) ==
              colored_isomorphic(two_form(all[i]), two_form(all[j])));
    }
  }
  // relabeled positives, not just representative-vs-representative
  std::mt19937 rng(3);
  for (const auto& g : all) {
    std::vector<int> img(g.order());
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    REQUIRE(colored_isomorphic(two_form(g), two_form(permute(g, Permutation(img)))));
  }
}
