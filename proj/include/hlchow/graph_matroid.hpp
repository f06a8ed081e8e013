#ifndef HLCHOW_GRAPH_MATROID_HPP
#define HLCHOW_GRAPH_MATROID_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "hlchow/weights.hpp"

namespace hlchow {

// Unordered pair {i,j} stored with i < j.
using Edge = std::pair<int, int>;

Edge make_edge(int a, int b);

// Edge subset, sorted lexicographically, no duplicates.
using EdgeSet = std::vector<Edge>;

EdgeSet make_edge_set(std::vector<Edge> edges);

// Graph on vertices {2,...,n}: i ~ j iff w_i + w_j > 1. In canonical form
// the heavy vertices {2..m} span a complete graph, every heavy vertex is
// adjacent to every light vertex, and no light-light edges exist.
struct ReducedWeightGraph {
  int m = 0;  // indices 2..m are heavy vertices
  int n = 0;  // vertex set is {2..n}
  EdgeSet edges;

  bool is_heavy_vertex(int v) const { return v >= 2 && v <= m; }
  bool has_edge(const Edge& e) const;
  std::vector<int> vertices() const;
};

// Vertex subset S naming the 1-connected flat F_S (the maximal subgraph on
// S) and the boundary divisor D^S. Sorted; valid labels satisfy
// S ⊊ {2..n}, |S| >= 2, S contains a heavy vertex.
struct FlatLabel {
  std::vector<int> vertices;

  bool contains(int v) const;
  bool contains_pair(int a, int b) const;
  std::size_t size() const { return vertices.size(); }

  bool operator==(const FlatLabel&) const = default;
};

// Canonical order: by cardinality, then lexicographic.
bool flat_less(const FlatLabel& a, const FlatLabel& b);

// S ⊆ T, T ⊆ S, or S ∩ T = ∅ — the pairwise nested-set condition.
bool comparable_or_disjoint(const FlatLabel& a, const FlatLabel& b);

std::string flat_to_string(const FlatLabel& s);

ReducedWeightGraph reduced_weight_graph(const HeavyLightProfile& p);

// Forest rank of e inside g: vertices touched minus connected components.
int matroid_rank(const ReducedWeightGraph& g, const EdgeSet& e);

// Matroid closure: every edge of g joining two vertices already connected
// through e. Idempotent; the output is a flat.
EdgeSet closure(const ReducedWeightGraph& g, const EdgeSet& e);

// All valid FlatLabels in canonical (cardinality, lex) order.
std::vector<FlatLabel> one_connected_flats(const ReducedWeightGraph& g);

// Edge set of F_S: all edges of G(w) inside S.
EdgeSet flat_edges(const ReducedWeightGraph& g, const FlatLabel& s);

bool is_valid_flat_label(const ReducedWeightGraph& g, const FlatLabel& s);

}  // namespace hlchow

#endif
