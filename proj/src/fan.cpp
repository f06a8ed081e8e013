#include "hlchow/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <json.hpp>

namespace hlchow {

RayCoordinateSystem coordinate_system(const HeavyLightProfile& p, Edge eliminated) {
  const ReducedWeightGraph g = reduced_weight_graph(p);
  if (!g.has_edge(eliminated))
    throw EdgeNotInGraph("eliminated pair {" + std::to_string(eliminated.first) +
                         "," + std::to_string(eliminated.second) +
                         "} is not a rank-1 flat of M(w)");
  RayCoordinateSystem sys;
  sys.m = p.m();
  sys.n = p.n();
  sys.eliminated = eliminated;
  for (const Edge& e : g.edges)
    if (e != eliminated) sys.basis.push_back(e);
  return sys;
}

namespace {

bool pair_inside(const FlatLabel& s, const Edge& e) {
  return s.contains_pair(e.first, e.second);
}

bool pair_inside(const std::vector<FlatLabel>& blocks, const Edge& e) {
  for (const FlatLabel& b : blocks)
    if (b.contains_pair(e.first, e.second)) return true;
  return false;
}

template <typename Support>
std::vector<Int> quotient_coordinates(const RayCoordinateSystem& sys,
                                      const Support& support) {
  // v = sum of e_{i,j} over pairs inside the support; substituting
  // e_elim = -sum(others) shifts every basis coordinate by -[elim inside]
  const Int shift = pair_inside(support, sys.eliminated) ? 1 : 0;
  std::vector<Int> out(sys.basis.size());
  for (std::size_t k = 0; k < sys.basis.size(); ++k)
    out[k] = Int(pair_inside(support, sys.basis[k]) ? 1 : 0) - shift;
  // already primitive (entries in {-1,0,1}, not all zero); normalize anyway
  Int g = 0;
  for (const Int& z : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (g > 1)
    for (Int& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
  return out;
}

}  // namespace

std::vector<Int> ray_coordinates(const RayCoordinateSystem& sys, const FlatLabel& s) {
  return quotient_coordinates(sys, s);
}

std::vector<Int> ray_coordinates(const RayCoordinateSystem& sys,
                                 const PartitionFlat& f) {
  return quotient_coordinates(sys, f.blocks);
}

bool is_nested(const std::vector<FlatLabel>& flats) {
  for (std::size_t i = 0; i < flats.size(); ++i)
    for (std::size_t j = i + 1; j < flats.size(); ++j)
      if (!comparable_or_disjoint(flats[i], flats[j])) return false;
  return true;
}

const std::vector<Int>& Fan::ray_vector(const FlatLabel& s) const {
  auto it = std::lower_bound(rays.begin(), rays.end(), s, flat_less);
  if (it == rays.end() || !(*it == s))
    throw ContractError("no ray " + flat_to_string(s));
  return ray_vectors[it - rays.begin()];
}

Fan build_fan(const HeavyLightProfile& p, Edge eliminated) {
  Fan f;
  f.profile = p;
  f.coords = coordinate_system(p, eliminated);
  const ReducedWeightGraph g = reduced_weight_graph(p);
  f.rays = one_connected_flats(g);
  f.ray_vectors.reserve(f.rays.size());
  for (const FlatLabel& s : f.rays) f.ray_vectors.push_back(ray_coordinates(f.coords, s));

  // depth-first in canonical order: cones of each dimension come out
  // lexicographically ordered by generator indices
  f.cones_by_dim.assign(1, {});  // index 0 unused
  std::vector<int> stack;
  auto record = [&]() {
    const int d = static_cast<int>(stack.size());
    if (d >= static_cast<int>(f.cones_by_dim.size())) f.cones_by_dim.resize(d + 1);
    Cone c;
    c.generators.reserve(stack.size());
    for (int idx : stack) c.generators.push_back(f.rays[idx]);
    f.cones_by_dim[d].push_back(std::move(c));
  };
  auto extend = [&](auto&& self, std::size_t start) -> void {
    for (std::size_t idx = start; idx < f.rays.size(); ++idx) {
      bool ok = true;
      for (int held : stack)
        if (!comparable_or_disjoint(f.rays[held], f.rays[idx])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      stack.push_back(static_cast<int>(idx));
      record();
      self(self, idx + 1);
      stack.pop_back();
    }
  };
  extend(extend, 0);

  for (std::size_t d = 1; d < f.cones_by_dim.size(); ++d)
    f.f_vector.push_back(f.cones_by_dim[d].size());
  return f;
}

bool unimodularity_check(const Fan& f) {
  for (std::size_t d = 1; d < f.cones_by_dim.size(); ++d) {
    for (const Cone& c : f.cones_by_dim[d]) {
      std::vector<std::vector<Rat>> columns;
      columns.reserve(c.generators.size());
      for (const FlatLabel& s : c.generators) {
        const std::vector<Int>& v = f.ray_vector(s);
        columns.emplace_back(v.begin(), v.end());
      }
      const auto invariants = ExactMatrix::from_columns(columns).smith_invariants();
      if (invariants.size() != c.generators.size()) return false;
      for (const Int& z : invariants)
        if (z != 1) return false;
    }
  }
  return true;
}

int PartitionFlat::rank() const {
  int r = 0;
  for (const FlatLabel& b : blocks) r += static_cast<int>(b.size()) - 1;
  return r;
}

namespace {

PartitionFlat canonical_partition(std::vector<FlatLabel> blocks) {
  // disjoint blocks: ordering by vertex lists is a total order
  std::sort(blocks.begin(), blocks.end(),
            [](const FlatLabel& a, const FlatLabel& b) {
              return a.vertices < b.vertices;
            });
  return PartitionFlat{std::move(blocks)};
}

bool partition_less(const PartitionFlat& a, const PartitionFlat& b) {
  return std::lexicographical_compare(
      a.blocks.begin(), a.blocks.end(), b.blocks.begin(), b.blocks.end(),
      [](const FlatLabel& x, const FlatLabel& y) { return x.vertices < y.vertices; });
}

std::vector<PartitionFlat> covers(const ReducedWeightGraph& g,
                                  const PartitionFlat& f) {
  std::vector<bool> used(g.n + 1, false);
  for (const FlatLabel& b : f.blocks)
    for (int v : b.vertices) used[v] = true;
  std::vector<int> free_vertices;
  for (int v = 2; v <= g.n; ++v)
    if (!used[v]) free_vertices.push_back(v);

  std::vector<PartitionFlat> out;
  // merge two blocks
  for (std::size_t i = 0; i < f.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < f.blocks.size(); ++j) {
      std::vector<FlatLabel> blocks;
      FlatLabel merged;
      std::merge(f.blocks[i].vertices.begin(), f.blocks[i].vertices.end(),
                 f.blocks[j].vertices.begin(), f.blocks[j].vertices.end(),
                 std::back_inserter(merged.vertices));
      for (std::size_t k = 0; k < f.blocks.size(); ++k)
        if (k != i && k != j) blocks.push_back(f.blocks[k]);
      blocks.push_back(std::move(merged));
      out.push_back(canonical_partition(std::move(blocks)));
    }
  // grow one block by a free vertex (the block's heavy vertex provides the edge)
  for (std::size_t i = 0; i < f.blocks.size(); ++i)
    for (int v : free_vertices) {
      std::vector<FlatLabel> blocks = f.blocks;
      blocks[i].vertices.insert(
          std::lower_bound(blocks[i].vertices.begin(), blocks[i].vertices.end(), v),
          v);
      out.push_back(canonical_partition(std::move(blocks)));
    }
  // open a new rank-1 block on an unused edge
  for (std::size_t a = 0; a < free_vertices.size(); ++a)
    for (std::size_t b = a + 1; b < free_vertices.size(); ++b) {
      if (!g.has_edge({free_vertices[a], free_vertices[b]})) continue;
      std::vector<FlatLabel> blocks = f.blocks;
      blocks.push_back(FlatLabel{{free_vertices[a], free_vertices[b]}});
      out.push_back(canonical_partition(std::move(blocks)));
    }

  std::sort(out.begin(), out.end(), partition_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

ChainFan chain_of_flats_cones(const HeavyLightProfile& p, Edge eliminated) {
  ChainFan cf;
  cf.coords = coordinate_system(p, eliminated);
  const ReducedWeightGraph g = reduced_weight_graph(p);
  const int top_rank = p.n() - 3;

  std::vector<PartitionFlat> level;
  for (const Edge& e : g.edges)
    level.push_back(PartitionFlat{{FlatLabel{{e.first, e.second}}}});

  // breadth-first through covers collects every proper flat, rank by rank
  for (int r = 1; r <= top_rank; ++r) {
    cf.proper_flats.insert(cf.proper_flats.end(), level.begin(), level.end());
    if (r == top_rank) break;
    std::vector<PartitionFlat> next;
    for (const PartitionFlat& f : level) {
      auto ups = covers(g, f);
      next.insert(next.end(), ups.begin(), ups.end());
    }
    std::sort(next.begin(), next.end(), partition_less);
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }

  std::vector<PartitionFlat> chain;
  auto dfs = [&](auto&& self, const PartitionFlat& f) -> void {
    chain.push_back(f);
    if (static_cast<int>(chain.size()) == top_rank) {
      cf.maximal_chains.push_back(ChainOfFlats{chain});
    } else {
      for (const PartitionFlat& up : covers(g, f)) self(self, up);
    }
    chain.pop_back();
  };
  for (const Edge& e : g.edges)
    dfs(dfs, PartitionFlat{{FlatLabel{{e.first, e.second}}}});
  return cf;
}

namespace {

ExactMatrix rays_as_columns(const std::vector<std::vector<Int>>& vectors) {
  std::vector<std::vector<Rat>> columns;
  columns.reserve(vectors.size());
  for (const auto& v : vectors) columns.emplace_back(v.begin(), v.end());
  return ExactMatrix::from_columns(columns);
}

}  // namespace

std::vector<ExactMatrix> maximal_cone_matrices(const Fan& f) {
  std::vector<ExactMatrix> out;
  for (std::size_t d = 1; d < f.cones_by_dim.size(); ++d) {
    for (const Cone& c : f.cones_by_dim[d]) {
      // inclusion-maximal: no further ray is compatible with every generator
      bool extendable = false;
      for (const FlatLabel& r : f.rays) {
        bool member = false, fits = true;
        for (const FlatLabel& s : c.generators) {
          if (r == s) {
            member = true;
            break;
          }
          if (!comparable_or_disjoint(r, s)) {
            fits = false;
            break;
          }
        }
        if (!member && fits) {
          extendable = true;
          break;
        }
      }
      if (extendable) continue;
      std::vector<std::vector<Int>> vectors;
      for (const FlatLabel& s : c.generators) vectors.push_back(f.ray_vector(s));
      out.push_back(rays_as_columns(vectors));
    }
  }
  return out;
}

std::vector<ExactMatrix> maximal_cone_matrices(const ChainFan& f) {
  std::vector<ExactMatrix> out;
  out.reserve(f.maximal_chains.size());
  for (const ChainOfFlats& chain : f.maximal_chains) {
    std::vector<std::vector<Int>> vectors;
    vectors.reserve(chain.flats.size());
    for (const PartitionFlat& flat : chain.flats)
      vectors.push_back(ray_coordinates(f.coords, flat));
    out.push_back(rays_as_columns(vectors));
  }
  return out;
}

bool support_membership(const std::vector<ExactMatrix>& maximal_cones,
                        const std::vector<Rat>& point) {
  for (const ExactMatrix& cone : maximal_cones)
    if (solve_nonnegative(cone, point)) return true;
  return false;
}

bool support_membership(const Fan& f, const std::vector<Rat>& point) {
  if (point.size() != static_cast<std::size_t>(f.coords.dim()))
    throw DimensionMismatch("point has " + std::to_string(point.size()) +
                            " coordinates, fan lives in dimension " +
                            std::to_string(f.coords.dim()));
  return support_membership(maximal_cone_matrices(f), point);
}

std::vector<Int> project_pr_w(const FlatLabel& source,
                              const HeavyLightProfile& target, Edge eliminated) {
  const int n = target.n();
  bool ok = source.size() >= 2 &&
            source.size() <= static_cast<std::size_t>(n - 2) &&
            std::is_sorted(source.vertices.begin(), source.vertices.end()) &&
            std::adjacent_find(source.vertices.begin(), source.vertices.end()) ==
                source.vertices.end() &&
            source.vertices.front() >= 2 && source.vertices.back() <= n;
  if (!ok)
    throw InvalidSourceLabel("not a ray label of the all-ones fan: " +
                             flat_to_string(source));

  const RayCoordinateSystem source_sys =
      coordinate_system(profile_from_counts(n, n), eliminated);
  const RayCoordinateSystem target_sys = coordinate_system(target, eliminated);
  const std::vector<Int> v = ray_coordinates(source_sys, source);

  std::map<Edge, std::size_t> source_index;
  for (std::size_t k = 0; k < source_sys.basis.size(); ++k)
    source_index[source_sys.basis[k]] = k;

  // keep the coordinates of pairs that stay edges in the target graph
  std::vector<Int> out;
  out.reserve(target_sys.basis.size());
  for (const Edge& e : target_sys.basis) out.push_back(v[source_index.at(e)]);
  return out;
}

std::string fan_to_json(const Fan& f) {
  nlohmann::ordered_json j;
  j["rays"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    nlohmann::ordered_json ray;
    ray["flat"] = f.rays[i].vertices;
    std::vector<long> coords;
    coords.reserve(f.ray_vectors[i].size());
    for (const Int& z : f.ray_vectors[i]) coords.push_back(z.get_si());
    ray["coords"] = coords;
    j["rays"].push_back(std::move(ray));
  }
  j["cones"] = nlohmann::ordered_json::object();
  for (std::size_t d = 2; d < f.cones_by_dim.size(); ++d) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const Cone& c : f.cones_by_dim[d]) {
      nlohmann::ordered_json cone = nlohmann::ordered_json::array();
      for (const FlatLabel& s : c.generators) cone.push_back(s.vertices);
      list.push_back(std::move(cone));
    }
    j["cones"][std::to_string(d)] = std::move(list);
  }
  j["f_vector"] = f.f_vector;
  return j.dump(2) + "\n";
}

std::string fan_to_text(const Fan& f) {
  std::string out;
  out += "eliminated pair: {" + std::to_string(f.coords.eliminated.first) + "," +
         std::to_string(f.coords.eliminated.second) + "}\n";
  out += "ambient dimension: " + std::to_string(f.coords.dim()) + "\n";
  out += "f-vector:";
  for (std::size_t c : f.f_vector) out += " " + std::to_string(c);
  out += "\nrays:\n";
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    out += "  " + flat_to_string(f.rays[i]) + " -> (";
    for (std::size_t k = 0; k < f.ray_vectors[i].size(); ++k) {
      if (k) out += ",";
      out += to_string(f.ray_vectors[i][k]);
    }
    out += ")\n";
  }
  for (std::size_t d = 2; d < f.cones_by_dim.size(); ++d) {
    out += "cones of dimension " + std::to_string(d) + ":\n";
    for (const Cone& c : f.cones_by_dim[d]) {
      out += " ";
      for (const FlatLabel& s : c.generators) out += " " + flat_to_string(s);
      out += "\n";
    }
  }
  return out;
}

}  // namespace hlchow
