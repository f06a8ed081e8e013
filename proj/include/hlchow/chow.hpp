#ifndef HLCHOW_CHOW_HPP
#define HLCHOW_CHOW_HPP

#include <string>
#include <utility>
#include <vector>

#include "hlchow/fan.hpp"
#include "hlchow/graph_matroid.hpp"
#include "hlchow/weights.hpp"

namespace hlchow {

// Generators-and-relations data for a Chow ring presented by boundary
// divisors: Stanley-Reisner pairs (products forced to zero) plus integer
// linear relations in degree one. Used both for the heavy/light
// presentation and for the Keel presentation of the all-ones space (whose
// generators are stored by the representative subset not containing 1).
struct Presentation {
  std::string weights;                 // canonical weight string
  int n = 0;                           // marked points
  std::vector<FlatLabel> generators;   // canonical (cardinality, lex) order
  std::vector<std::pair<int, int>> sr_pairs;       // generator index pairs, i < j
  std::vector<std::vector<Int>> linear_relations;  // rows over generators

  int grading_dimension() const { return n - 3; }
  int generator_index(const FlatLabel& s) const;  // -1 if absent
  bool is_sr_pair(int a, int b) const;
};

using KeelPresentation = Presentation;

// Theorem-style presentation from the nested-set fan: generators are the
// 1-connected flats, sr_pairs the non-nested pairs, and one linear relation
// per basis pair {i,j} != eliminated:
//   sum_{S ⊇ {i,j}, S ⊉ elim} D^S  -  sum_{S ⊇ elim, S ⊉ {i,j}} D^S  =  0.
Presentation heavy_light_presentation(const HeavyLightProfile& p,
                                      Edge eliminated = {2, 3});

// The full set of pair-vs-pair linear relations (every {i,j},{k,l} with
// i,k <= m), duplicates and zero rows dropped. Spans the same lattice as
// the fixed-basis rows above; the verify suite asserts that.
std::vector<std::vector<Int>> all_pair_relations(const HeavyLightProfile& p);

// Keel's presentation of the all-ones space on n markings: generators are
// subsets T ⊆ {2..n} with 2 <= |T| <= n-2; products vanish unless the two
// subsets are nested or disjoint (covering is impossible for
// representatives omitting 1); linear relations come from the four-index
// sums, deduplicated.
KeelPresentation keel_presentation(int num_markings);

// ---- graded pieces -------------------------------------------------------

// Exponents over generator indices, sorted, exponents >= 1.
struct Monomial {
  std::vector<std::pair<int, int>> factors;  // (generator index, exponent)

  int degree() const;
  bool operator==(const Monomial&) const = default;
};

// Canonical monomial order: higher exponent on an earlier generator first,
// so for degree 1 it matches generator order and g_0^k precedes everything
// else in degree k.
bool monomial_less(const Monomial& a, const Monomial& b);

Monomial monomial_product(const Monomial& a, const Monomial& b);
std::string monomial_to_string(const Presentation& pres, const Monomial& mono);

// All degree-k monomials whose support is nested (everything else lies in
// the Stanley-Reisner ideal), canonical order. DegreeOutOfRange unless
// 0 <= k <= n-3.
std::vector<Monomial> nested_monomials(const Presentation& pres, int degree);

// Ranks h_0..h_{n-3} of the graded pieces: h_k = (#nested monomials of
// degree k) minus the rank of the linear-multiple rows projected to nested
// monomial coordinates.
std::vector<long> hilbert_function(const Presentation& pres);

// Quotient coordinates for one degree: `basis` lists the indices (into
// `monomials`) of the greedily chosen lexicographically least independent
// monomial classes; `reduce_monomial[i]` gives monomial i in those
// coordinates.
struct GradedPiece {
  int degree = 0;
  std::vector<Monomial> monomials;
  std::vector<int> basis;
  std::vector<std::vector<Rat>> reduce_monomial;

  long rank() const { return static_cast<long>(basis.size()); }
};

struct GradedBasis {
  std::vector<GradedPiece> pieces;  // degrees 0..n-3

  const GradedPiece& piece(int degree) const;
  std::vector<long> ranks() const;
};

GradedBasis graded_basis(const Presentation& pres);

// Element of one graded piece, in the coordinates of its GradedPiece.
struct ChowClass {
  int degree = 0;
  std::vector<Rat> coords;

  bool is_zero() const;
  bool operator==(const ChowClass&) const = default;
};

using Polynomial = std::vector<std::pair<Monomial, Rat>>;

// Reduce a homogeneous polynomial in the generators to coordinates.
// InhomogeneousInput if mixed degrees appear among nonzero terms,
// DegreeOutOfRange above the top degree.
ChowClass reduce(const Presentation& pres, const GradedBasis& basis,
                 const Polynomial& poly);

ChowClass zero_class(const GradedBasis& basis, int degree);
ChowClass unit_class(const GradedBasis& basis);
ChowClass generator_class(const Presentation& pres, const GradedBasis& basis,
                          int generator);

ChowClass add(const ChowClass& a, const ChowClass& b);
ChowClass scale(const Rat& c, const ChowClass& a);

// Ring product. Products landing above the top degree are zero in the
// graded ring and come back as the zero class of that degree.
ChowClass multiply(const Presentation& pres, const GradedBasis& basis,
                   const ChowClass& a, const ChowClass& b);

// Rank of the h_k x h_{n-3-k} matrix of products into the top degree.
long pairing_rank(const Presentation& pres, const GradedBasis& basis, int degree);

// True iff the degree-k integer relation lattice has all Smith invariant
// factors 1, i.e. the graded piece is torsion-free over Z.
bool torsion_check(const Presentation& pres, int degree);

// ---- pullback to the all-ones space --------------------------------------

// D^S (heavy/light) -> D^S (Keel, same representative). `image_ranks[k]` is
// the rank of the images of the degree-k basis monomials inside the Keel
// graded piece; injectivity holds when it equals h_k(w) for all k.
struct PullbackReport {
  Presentation source;       // heavy/light presentation
  Presentation target;       // Keel presentation on the same n
  std::vector<int> generator_map;  // source generator -> target generator index
  std::vector<long> source_hilbert;
  std::vector<long> image_ranks;
  bool relations_preserved = false;
  bool injective = false;
};

// Verifies the generator map is a ring homomorphism (every defining
// relation of the source maps into the target ideal; RelationNotPreserved
// signals an internal inconsistency) and measures per-degree image ranks.
PullbackReport pullback(const HeavyLightProfile& p);

// Equal Hilbert functions plus mutual degreewise ideal membership between
// keel_presentation(n) and the heavy/light presentation at m = n.
bool keel_iso_check(int num_markings);

// ---- dual graphs ----------------------------------------------------------

// Combinatorial type of the generic curve in D^S: two components joined at
// one node, legs S on one side and S^c ∪ {1} on the other.
struct DualGraph {
  std::vector<int> side_s;      // legs on the S component
  std::vector<int> side_rest;   // legs on the other component

  bool operator==(const DualGraph&) const = default;
};

DualGraph dual_graph(const HeavyLightProfile& p, const FlatLabel& s);

// Dual graph from the two-sided parameterization by T ⊆ {1..n}; T and its
// complement determine the same graph.
DualGraph dual_graph_two_sided(const HeavyLightProfile& p,
                               const std::vector<int>& t);

std::string dual_graph_to_string(const DualGraph& g);

// ---- serialization ---------------------------------------------------------

std::string presentation_to_json(const Presentation& pres,
                                 const std::vector<long>& hilbert);
std::string presentation_to_text(const Presentation& pres,
                                 const std::vector<long>& hilbert);
std::string linear_relation_to_string(const Presentation& pres,
                                      const std::vector<Int>& row);

}  // namespace hlchow

#endif
