#include "hlchow/graph_matroid.hpp"

#include <algorithm>
#include <numeric>

namespace hlchow {

Edge make_edge(int a, int b) {
  if (a == b) throw ContractError("loop edge {" + std::to_string(a) + "}");
  return a < b ? Edge{a, b} : Edge{b, a};
}

EdgeSet make_edge_set(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

bool ReducedWeightGraph::has_edge(const Edge& e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

std::vector<int> ReducedWeightGraph::vertices() const {
  std::vector<int> v(n - 1);
  std::iota(v.begin(), v.end(), 2);
  return v;
}

bool FlatLabel::contains(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool FlatLabel::contains_pair(int a, int b) const {
  return contains(a) && contains(b);
}

bool flat_less(const FlatLabel& a, const FlatLabel& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.vertices < b.vertices;
}

bool comparable_or_disjoint(const FlatLabel& a, const FlatLabel& b) {
  std::size_t common = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a.vertices[i] < b.vertices[j])
      ++i;
    else if (b.vertices[j] < a.vertices[i])
      ++j;
    else {
      ++common;
      ++i;
      ++j;
    }
  }
  return common == 0 || common == a.size() || common == b.size();
}

std::string flat_to_string(const FlatLabel& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.vertices[i]);
  }
  return out + "}";
}

ReducedWeightGraph reduced_weight_graph(const HeavyLightProfile& p) {
  if (p.m() < 2) throw TooFewHeavy("need m >= 2");
  for (int i = 1; i <= p.m(); ++i)
    if (!p.is_heavy(i))
      throw ContractError("profile not in canonical order (heavy = {1..m})");
  const WeightVector w = canonical_form(p);
  ReducedWeightGraph g;
  g.m = p.m();
  g.n = p.n();
  for (int i = 2; i <= g.n; ++i)
    for (int j = i + 1; j <= g.n; ++j)
      if (w.weight(i) + w.weight(j) > 1) g.edges.push_back({i, j});
  return g;
}

namespace {

// union-find on vertex labels 2..n
class Dsu {
 public:
  explicit Dsu(int n) : parent_(n + 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

void check_edges(const ReducedWeightGraph& g, const EdgeSet& e) {
  for (const Edge& edge : e)
    if (!g.has_edge(edge))
      throw EdgeNotInGraph("{" + std::to_string(edge.first) + "," +
                           std::to_string(edge.second) + "} not in G(w)");
}

}  // namespace

int matroid_rank(const ReducedWeightGraph& g, const EdgeSet& e) {
  check_edges(g, e);
  Dsu dsu(g.n);
  int rank = 0;
  for (const Edge& edge : e)
    if (dsu.unite(edge.first, edge.second)) ++rank;
  return rank;
}

EdgeSet closure(const ReducedWeightGraph& g, const EdgeSet& e) {
  check_edges(g, e);
  Dsu dsu(g.n);
  for (const Edge& edge : e) dsu.unite(edge.first, edge.second);
  EdgeSet out;
  for (const Edge& edge : g.edges)
    if (dsu.find(edge.first) == dsu.find(edge.second)) out.push_back(edge);
  return out;
}

std::vector<FlatLabel> one_connected_flats(const ReducedWeightGraph& g) {
  std::vector<FlatLabel> out;
  const int count = g.n - 1;  // vertices 2..n
  for (int size = 2; size <= count - 1; ++size) {
    // subsets of {2..n} of the given size, lexicographic
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 2);
    while (true) {
      if (g.is_heavy_vertex(pick[0]))  // sorted, so heavy iff minimum is heavy
        out.push_back(FlatLabel{pick});
      int i = size - 1;
      while (i >= 0 && pick[i] == g.n - (size - 1 - i)) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

EdgeSet flat_edges(const ReducedWeightGraph& g, const FlatLabel& s) {
  EdgeSet out;
  for (const Edge& edge : g.edges)
    if (s.contains(edge.first) && s.contains(edge.second)) out.push_back(edge);
  return out;
}

bool is_valid_flat_label(const ReducedWeightGraph& g, const FlatLabel& s) {
  if (s.size() < 2 || s.size() > static_cast<std::size_t>(g.n - 2)) return false;
  if (!std::is_sorted(s.vertices.begin(), s.vertices.end())) return false;
  if (std::adjacent_find(s.vertices.begin(), s.vertices.end()) !=
      s.vertices.end())
    return false;
  if (s.vertices.front() < 2 || s.vertices.back() > g.n) return false;
  return g.is_heavy_vertex(s.vertices.front());
}

}  // namespace hlchow
