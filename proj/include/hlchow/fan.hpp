#ifndef HLCHOW_FAN_HPP
#define HLCHOW_FAN_HPP

#include <string>
#include <vector>

#include "hlchow/exact_linalg.hpp"
#include "hlchow/graph_matroid.hpp"

namespace hlchow {

// Coordinates for the lineality quotient. Rank-one flats are the pairs
// {i,j} with i < j, i <= m (the edges of G(w)); one basis vector v_{i,j}
// per pair, modulo the relation sum v_{i,j} = 0. Eliminating one
// distinguished pair leaves an integer basis of the quotient.
struct RayCoordinateSystem {
  int m = 0;
  int n = 0;
  Edge eliminated{2, 3};
  std::vector<Edge> basis;  // all pairs except `eliminated`, lex order

  int dim() const { return static_cast<int>(basis.size()); }
};

RayCoordinateSystem coordinate_system(const HeavyLightProfile& p,
                                      Edge eliminated = {2, 3});

// v_{F_S} = sum of v_{i,j} over pairs {i,j} ⊆ S, expressed in the basis and
// reduced to a primitive vector.
std::vector<Int> ray_coordinates(const RayCoordinateSystem& sys, const FlatLabel& s);

// Pairwise comparable-or-disjoint.
bool is_nested(const std::vector<FlatLabel>& flats);

// A cone of the nested-sets subdivision, named by its generating nested set.
struct Cone {
  std::vector<FlatLabel> generators;  // canonical order, pairwise nested

  int dim() const { return static_cast<int>(generators.size()); }
};

struct Fan {
  HeavyLightProfile profile;
  RayCoordinateSystem coords;
  std::vector<FlatLabel> rays;               // canonical order
  std::vector<std::vector<Int>> ray_vectors;  // parallel to rays
  std::vector<std::vector<Cone>> cones_by_dim;  // [d] = cones of dimension d, d >= 1
  std::vector<std::size_t> f_vector;            // counts for dimensions 1..n-3

  int max_dim() const { return static_cast<int>(cones_by_dim.size()) - 1; }
  const std::vector<Int>& ray_vector(const FlatLabel& s) const;
};

// Nested-sets subdivision of the reduced Bergman fan of M(w): one cone per
// nested subset of the 1-connected flats, enumerated depth-first in
// canonical label order.
Fan build_fan(const HeavyLightProfile& p, Edge eliminated = {2, 3});

// Smoothness witness: the rays of every cone extend to a basis of the
// lattice (all Smith invariant factors 1; for square ray matrices this is
// determinant ±1).
bool unimodularity_check(const Fan& f);

// A flat of M(w) that need not be connected: disjoint blocks of vertices,
// one per connected component with at least one edge. Rank is
// sum(|B| - 1).
struct PartitionFlat {
  std::vector<FlatLabel> blocks;  // pairwise disjoint, canonical order

  int rank() const;
  bool operator==(const PartitionFlat&) const = default;
};

std::vector<Int> ray_coordinates(const RayCoordinateSystem& sys,
                                 const PartitionFlat& f);

// One maximal chain ∅ ⊊ F_1 ⊊ ... ⊊ F_{r-1} of proper flats (F_i of rank
// i); the chains are the maximal cones of the chain-of-flats subdivision.
struct ChainOfFlats {
  std::vector<PartitionFlat> flats;
};

struct ChainFan {
  RayCoordinateSystem coords;
  std::vector<PartitionFlat> proper_flats;  // every proper flat of rank >= 1
  std::vector<ChainOfFlats> maximal_chains;
};

// All maximal chains of the lattice of flats of M(w), with ray vectors in
// the same quotient coordinates as build_fan (positive sign convention).
ChainFan chain_of_flats_cones(const HeavyLightProfile& p, Edge eliminated = {2, 3});

// Ray matrices (columns = rays) of the inclusion-maximal cones; membership
// in the fan support reduces to an exact nonnegative solve against these.
std::vector<ExactMatrix> maximal_cone_matrices(const Fan& f);
std::vector<ExactMatrix> maximal_cone_matrices(const ChainFan& f);

bool support_membership(const std::vector<ExactMatrix>& maximal_cones,
                        const std::vector<Rat>& point);
// Convenience overload; throws DimensionMismatch if point has wrong length.
bool support_membership(const Fan& f, const std::vector<Rat>& point);

// pr_w: drop every coordinate v_{i,j} with both i,j light in the target.
// The ray of a Keel label S ⊆ {2..n} (2 <= |S| <= n-2) maps to the target
// ray of S when S is w-stable and to zero when S is all-light. Both
// coordinate systems eliminate the same pair, which must contain a heavy
// target vertex.
std::vector<Int> project_pr_w(const FlatLabel& source,
                              const HeavyLightProfile& target,
                              Edge eliminated = {2, 3});

std::string fan_to_json(const Fan& f);
std::string fan_to_text(const Fan& f);

}  // namespace hlchow

#endif
