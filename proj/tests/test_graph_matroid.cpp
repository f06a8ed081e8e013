#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hlchow/graph_matroid.hpp"
#include "hlchow/weights.hpp"

using namespace hlchow;

namespace {

ReducedWeightGraph graph(int m, int n) {
  return reduced_weight_graph(profile_from_counts(m, n));
}

FlatLabel label(std::vector<int> v) { return FlatLabel{std::move(v)}; }

}  // namespace

TEST_CASE("reduced weight graph shapes") {
  // two heavies, three lights: the three-edge star at vertex 2
  const ReducedWeightGraph star = graph(2, 5);
  CHECK(star.edges == EdgeSet{{2, 3}, {2, 4}, {2, 5}});
  CHECK(star.has_edge({2, 4}));
  CHECK_FALSE(star.has_edge({3, 4}));

  // four heavies, two lights: K3 on {2,3,4} plus all heavy-light edges
  const ReducedWeightGraph g = graph(4, 6);
  CHECK(g.edges.size() == 9);
  for (const Edge& e : g.edges) CHECK(e.first <= 4);
  CHECK(g.has_edge({2, 3}));
  CHECK(g.has_edge({4, 6}));
  CHECK_FALSE(g.has_edge({5, 6}));

  // all heavy: complete graph on {2,...,n}
  CHECK(graph(4, 4).edges == EdgeSet{{2, 3}, {2, 4}, {3, 4}});

  CHECK(make_edge(5, 3) == Edge{3, 5});
  CHECK_THROWS_AS(make_edge(3, 3), ContractError);
}

TEST_CASE("matroid rank") {
  const ReducedWeightGraph star = graph(2, 5);
  CHECK(matroid_rank(star, {}) == 0);
  CHECK(matroid_rank(star, {{2, 3}, {2, 4}}) == 2);
  CHECK(matroid_rank(star, star.edges) == 3);

  const ReducedWeightGraph k3 = graph(4, 4);
  CHECK(matroid_rank(k3, k3.edges) == 2);  // spanning tree of a triangle

  CHECK_THROWS_AS(matroid_rank(star, {{3, 4}}), EdgeNotInGraph);
}

TEST_CASE("closure") {
  const ReducedWeightGraph star = graph(2, 5);
  CHECK(closure(star, {{2, 3}}) == EdgeSet{{2, 3}});
  CHECK(closure(star, {}) == EdgeSet{});

  const ReducedWeightGraph k3 = graph(4, 4);
  CHECK(closure(k3, {{2, 3}, {3, 4}}) == k3.edges);  // cycle completion

  // two components close independently
  const ReducedWeightGraph g = graph(4, 6);
  CHECK(closure(g, {{2, 3}, {4, 5}}) == EdgeSet{{2, 3}, {4, 5}});
  CHECK(closure(g, {{2, 3}, {2, 4}}) == EdgeSet{{2, 3}, {2, 4}, {3, 4}});
}

TEST_CASE("one_connected_flats golden lists") {
  const auto star_flats = one_connected_flats(graph(2, 5));
  const std::vector<FlatLabel> expected{label({2, 3}), label({2, 4}),
                                        label({2, 5}), label({2, 3, 4}),
                                        label({2, 3, 5}), label({2, 4, 5})};
  CHECK(star_flats == expected);

  CHECK(one_connected_flats(graph(2, 4)) ==
        std::vector<FlatLabel>{label({2, 3}), label({2, 4})});

  // subsets of {2..6} of size 2..4 whose induced subgraph is connected:
  // everything except the all-light {5,6} and its supersets of bad shape
  CHECK(one_connected_flats(graph(4, 6)).size() == 24);
}

TEST_CASE("flat_edges") {
  const ReducedWeightGraph star = graph(2, 5);
  CHECK(flat_edges(star, label({2, 3, 5})) == EdgeSet{{2, 3}, {2, 5}});
  CHECK(flat_edges(star, label({2, 3})) == EdgeSet{{2, 3}});

  const ReducedWeightGraph g = graph(4, 6);
  CHECK(flat_edges(g, label({2, 3, 5})) == EdgeSet{{2, 3}, {2, 5}, {3, 5}});

  // every flat label: spanning connected subgraph of rank |S|-1, closed
  for (int n = 4; n <= 6; ++n)
    for (int m = 2; m <= n; ++m) {
      if (m == n - 1) continue;
      const ReducedWeightGraph h = graph(m, n);
      for (const FlatLabel& s : one_connected_flats(h)) {
        const EdgeSet es = flat_edges(h, s);
        CHECK(matroid_rank(h, es) == s.size() - 1);
        CHECK(closure(h, es) == es);
        CHECK(is_valid_flat_label(h, s));
      }
    }
}

TEST_CASE("flat labels against exhaustive closure enumeration") {
  // closures of ALL edge subsets, keeping the connected ones of rank >= 1
  // that are not the whole ground set, named by their vertex support
  for (int n = 4; n <= 6; ++n)
    for (int m = 2; m <= n; ++m) {
      if (m == n - 1) continue;
      const ReducedWeightGraph g = graph(m, n);
      std::set<std::vector<int>> named;
      for (std::uint64_t mask = 1; mask < (1ULL << g.edges.size()); ++mask) {
        EdgeSet e;
        for (std::size_t i = 0; i < g.edges.size(); ++i)
          if (mask >> i & 1) e.push_back(g.edges[i]);
        const EdgeSet flat = closure(g, e);
        if (flat == g.edges && matroid_rank(g, flat) == n - 2) continue;
        // connected iff the component count is 1: rank = |support| - 1
        std::set<int> support;
        for (const Edge& ed : flat) {
          support.insert(ed.first);
          support.insert(ed.second);
        }
        if (matroid_rank(g, flat) != static_cast<int>(support.size()) - 1)
          continue;
        named.insert(std::vector<int>(support.begin(), support.end()));
      }
      std::set<std::vector<int>> listed;
      for (const FlatLabel& s : one_connected_flats(g)) listed.insert(s.vertices);
      CHECK(named == listed);
    }
}

TEST_CASE("closure axioms and rank submodularity") {
  SplitMix64 rng(99);
  for (int n = 4; n <= 7; ++n)
    for (int m = 2; m <= n; ++m) {
      if (m == n - 1) continue;
      const ReducedWeightGraph g = graph(m, n);
      for (int t = 0; t < 40; ++t) {
        EdgeSet a, b;
        for (const Edge& e : g.edges) {
          if (rng.below(2)) a.push_back(e);
          if (rng.below(2)) b.push_back(e);
        }
        const EdgeSet ca = closure(g, a);
        CHECK(std::includes(ca.begin(), ca.end(), a.begin(), a.end()));
        CHECK(closure(g, ca) == ca);
        CHECK(matroid_rank(g, ca) == matroid_rank(g, a));

        EdgeSet u, i;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                       std::back_inserter(u));
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(i));
        CHECK(matroid_rank(g, u) + matroid_rank(g, i) <=
              matroid_rank(g, a) + matroid_rank(g, b));
      }
    }
}

TEST_CASE("flat label ordering and predicates") {
  CHECK(flat_less(label({2, 3}), label({2, 4})));
  CHECK(flat_less(label({2, 5}), label({2, 3, 4})));  // cardinality first
  CHECK_FALSE(flat_less(label({2, 3}), label({2, 3})));

  CHECK(comparable_or_disjoint(label({2, 3}), label({2, 3, 5})));
  CHECK(comparable_or_disjoint(label({2, 3}), label({4, 5, 6})));
  CHECK_FALSE(comparable_or_disjoint(label({2, 3}), label({2, 4})));

  CHECK(label({2, 3, 5}).contains(5));
  CHECK_FALSE(label({2, 3, 5}).contains(4));
  CHECK(label({2, 3, 5}).contains_pair(2, 5));
  CHECK(flat_to_string(label({2, 3, 5})) == "{2,3,5}");

  const ReducedWeightGraph star = graph(2, 5);
  CHECK_FALSE(is_valid_flat_label(star, label({3, 4})));     // disconnected
  CHECK_FALSE(is_valid_flat_label(star, label({2})));        // too small
  CHECK_FALSE(is_valid_flat_label(star, label({2, 3, 4, 5})));  // full set
}
