#include "hlchow/chow.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "hlchow/exact_linalg.hpp"

namespace hlchow {

int Presentation::generator_index(const FlatLabel& s) const {
  auto it = std::lower_bound(generators.begin(), generators.end(), s, flat_less);
  if (it == generators.end() || !(*it == s)) return -1;
  return static_cast<int>(it - generators.begin());
}

bool Presentation::is_sr_pair(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(sr_pairs.begin(), sr_pairs.end(),
                            std::pair<int, int>{a, b});
}

namespace {

// first nonzero coefficient positive; the relation is unchanged
void sign_normalize(std::vector<Int>& row) {
  for (const Int& z : row) {
    if (z == 0) continue;
    if (z < 0)
      for (Int& v : row) v = -v;
    return;
  }
}

std::vector<Int> pair_difference_row(const std::vector<FlatLabel>& generators,
                                     const Edge& a, const Edge& b) {
  std::vector<Int> row(generators.size());
  for (std::size_t s = 0; s < generators.size(); ++s) {
    const FlatLabel& g = generators[s];
    row[s] = Int(g.contains_pair(a.first, a.second) ? 1 : 0) -
             Int(g.contains_pair(b.first, b.second) ? 1 : 0);
  }
  sign_normalize(row);
  return row;
}

std::vector<std::pair<int, int>> non_nested_pairs(
    const std::vector<FlatLabel>& generators) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (!comparable_or_disjoint(generators[i], generators[j]))
        out.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return out;
}

}  // namespace

Presentation heavy_light_presentation(const HeavyLightProfile& p, Edge eliminated) {
  const ReducedWeightGraph g = reduced_weight_graph(p);
  const RayCoordinateSystem sys = coordinate_system(p, eliminated);

  Presentation pres;
  pres.weights = weight_string(canonical_form(p));
  pres.n = p.n();
  pres.generators = one_connected_flats(g);
  pres.sr_pairs = non_nested_pairs(pres.generators);

  std::set<std::vector<Int>> seen;
  for (const Edge& pair : sys.basis) {
    auto row = pair_difference_row(pres.generators, pair, eliminated);
    if (std::all_of(row.begin(), row.end(), [](const Int& z) { return z == 0; }))
      continue;
    if (seen.insert(row).second) pres.linear_relations.push_back(std::move(row));
  }
  return pres;
}

std::vector<std::vector<Int>> all_pair_relations(const HeavyLightProfile& p) {
  const ReducedWeightGraph g = reduced_weight_graph(p);
  const auto generators = one_connected_flats(g);
  std::vector<std::vector<Int>> out;
  std::set<std::vector<Int>> seen;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
      auto row = pair_difference_row(generators, g.edges[i], g.edges[j]);
      if (std::all_of(row.begin(), row.end(),
                      [](const Int& z) { return z == 0; }))
        continue;
      if (seen.insert(row).second) out.push_back(std::move(row));
    }
  return out;
}

KeelPresentation keel_presentation(int num_markings) {
  const int n = num_markings;
  const HeavyLightProfile p = profile_from_counts(n, n);
  const ReducedWeightGraph g = reduced_weight_graph(p);

  KeelPresentation pres;
  pres.weights = weight_string(canonical_form(p));
  pres.n = n;
  pres.generators = one_connected_flats(g);
  pres.sr_pairs = non_nested_pairs(pres.generators);

  // representative T omits marking 1, so the partition {T, T^c} separates
  // {x,y} from {z,t} iff T contains one of the pairs and misses the other
  auto separates = [](const FlatLabel& t, int x, int y, int z, int w) {
    const bool xin = x == 1 ? false : t.contains(x);
    const bool yin = y == 1 ? false : t.contains(y);
    const bool zin = z == 1 ? false : t.contains(z);
    const bool win = w == 1 ? false : t.contains(w);
    return (xin && yin && !zin && !win) || (!xin && !yin && zin && win);
  };
  auto sum_row = [&](int x, int y, int z, int w) {
    std::vector<Int> row(pres.generators.size());
    for (std::size_t s = 0; s < pres.generators.size(); ++s)
      row[s] = separates(pres.generators[s], x, y, z, w) ? 1 : 0;
    return row;
  };

  std::set<std::vector<Int>> seen;
  auto emit = [&](std::vector<Int> lhs, const std::vector<Int>& rhs) {
    for (std::size_t s = 0; s < lhs.size(); ++s) lhs[s] -= rhs[s];
    if (std::all_of(lhs.begin(), lhs.end(), [](const Int& z) { return z == 0; }))
      return;
    sign_normalize(lhs);
    if (seen.insert(lhs).second) pres.linear_relations.push_back(std::move(lhs));
  };
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          const auto ab_cd = sum_row(a, b, c, d);
          const auto ac_bd = sum_row(a, c, b, d);
          const auto ad_bc = sum_row(a, d, b, c);
          emit(ab_cd, ac_bd);
          emit(ab_cd, ad_bc);
          emit(ac_bd, ad_bc);
        }
  return pres;
}

// ---- monomials -------------------------------------------------------------

int Monomial::degree() const {
  int d = 0;
  for (const auto& [gen, exp] : factors) d += exp;
  return d;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
  // at the first generator where the exponents differ, the larger exponent
  // comes first; so degree-1 monomials follow generator order
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() && j < b.factors.size()) {
    if (a.factors[i].first != b.factors[j].first)
      return a.factors[i].first < b.factors[j].first;
    if (a.factors[i].second != b.factors[j].second)
      return a.factors[i].second > b.factors[j].second;
    ++i;
    ++j;
  }
  return i < a.factors.size();
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() || j < b.factors.size()) {
    if (j == b.factors.size() ||
        (i < a.factors.size() && a.factors[i].first < b.factors[j].first))
      out.factors.push_back(a.factors[i++]);
    else if (i == a.factors.size() || b.factors[j].first < a.factors[i].first)
      out.factors.push_back(b.factors[j++]);
    else {
      out.factors.emplace_back(a.factors[i].first,
                               a.factors[i].second + b.factors[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::string monomial_to_string(const Presentation& pres, const Monomial& mono) {
  if (mono.factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < mono.factors.size(); ++i) {
    if (i) out += "*";
    const auto& [gen, exp] = mono.factors[i];
    out += "D^";
    std::string flat = flat_to_string(pres.generators[gen]);
    out += flat;
    if (exp > 1) out += "^" + std::to_string(exp);
  }
  return out;
}

namespace {

int monomial_index(const std::vector<Monomial>& list, const Monomial& m) {
  auto it = std::lower_bound(list.begin(), list.end(), m, monomial_less);
  if (it == list.end() || !(*it == m)) return -1;
  return static_cast<int>(it - list.begin());
}

}  // namespace

std::vector<Monomial> nested_monomials(const Presentation& pres, int degree) {
  if (degree < 0 || degree > pres.grading_dimension())
    throw DegreeOutOfRange("degree " + std::to_string(degree) +
                           " outside 0.." +
                           std::to_string(pres.grading_dimension()));
  std::vector<Monomial> out;
  if (degree == 0) {
    out.push_back(Monomial{});
    return out;
  }
  const int count = static_cast<int>(pres.generators.size());
  Monomial current;
  auto extend = [&](auto&& self, int start, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int g = start; g < count; ++g) {
      bool nested = true;
      for (const auto& [held, exp] : current.factors)
        if (pres.is_sr_pair(held, g)) {
          nested = false;
          break;
        }
      if (!nested) continue;
      for (int e = remaining; e >= 1; --e) {
        current.factors.emplace_back(g, e);
        self(self, g + 1, remaining - e);
        current.factors.pop_back();
      }
    }
  };
  extend(extend, 0, degree);
  return out;
}

namespace {

// linear relations as sparse rows over generator indices
std::vector<SparseRow> sparse_relations(const Presentation& pres) {
  std::vector<SparseRow> out;
  out.reserve(pres.linear_relations.size());
  for (const auto& row : pres.linear_relations) out.push_back(sparse_from_dense(row));
  return out;
}

// Rows { l * mu : mu nested of degree k-1 } in the coordinates of the
// degree-k nested monomial list. Non-nested products vanish modulo the
// Stanley-Reisner span, which is exactly the projection.
template <typename Sink>
void degree_rows(const std::vector<SparseRow>& relations,
                 const std::vector<Monomial>& lower,
                 const std::vector<Monomial>& current, Sink&& sink) {
  for (const SparseRow& rel : relations) {
    for (const Monomial& mu : lower) {
      SparseRow row;
      for (const auto& [gen, coef] : rel) {
        Monomial single;
        single.factors.emplace_back(gen, 1);
        const int idx = monomial_index(current, monomial_product(mu, single));
        if (idx >= 0) row.emplace_back(idx, coef);
      }
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      if (!row.empty()) sink(std::move(row));
    }
  }
}

// independent rows spanning the same rational row space as the emitted
// relations; fewer multiples to generate in high degrees
std::vector<SparseRow> relation_row_basis(const Presentation& pres) {
  RowEchelon ech;
  for (const auto& row : pres.linear_relations) ech.insert(sparse_from_dense(row));
  return ech.rows();
}

}  // namespace

std::vector<long> hilbert_function(const Presentation& pres) {
  const int top = pres.grading_dimension();
  std::vector<long> h(top + 1);
  h[0] = 1;
  const auto relations = relation_row_basis(pres);
  std::vector<Monomial> lower = nested_monomials(pres, 0);
  for (int k = 1; k <= top; ++k) {
    std::vector<Monomial> current = nested_monomials(pres, k);
    RowEchelon ech;
    degree_rows(relations, lower, current,
                [&](SparseRow row) { ech.insert(std::move(row)); });
    h[k] = static_cast<long>(current.size()) - static_cast<long>(ech.rank());
    lower = std::move(current);
  }
  return h;
}

const GradedPiece& GradedBasis::piece(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(pieces.size()))
    throw DegreeOutOfRange("no graded piece of degree " + std::to_string(degree));
  return pieces[degree];
}

std::vector<long> GradedBasis::ranks() const {
  std::vector<long> out;
  out.reserve(pieces.size());
  for (const GradedPiece& p : pieces) out.push_back(p.rank());
  return out;
}

GradedBasis graded_basis(const Presentation& pres) {
  const int top = pres.grading_dimension();
  GradedBasis basis;
  basis.pieces.resize(top + 1);

  GradedPiece& unit = basis.pieces[0];
  unit.degree = 0;
  unit.monomials = nested_monomials(pres, 0);
  unit.basis = {0};
  unit.reduce_monomial = {{Rat(1)}};

  const auto relations = relation_row_basis(pres);
  std::vector<Monomial> lower = unit.monomials;
  for (int k = 1; k <= top; ++k) {
    GradedPiece& piece = basis.pieces[k];
    piece.degree = k;
    piece.monomials = nested_monomials(pres, k);

    RowEchelon ech;
    degree_rows(relations, lower, piece.monomials,
                [&](SparseRow row) { ech.insert(std::move(row)); });
    ech.reduce_fully();

    const int cols = static_cast<int>(piece.monomials.size());
    std::vector<int> row_of_pivot(cols, -1);
    for (std::size_t r = 0; r < ech.rows().size(); ++r)
      row_of_pivot[ech.rows()[r].back().first] = static_cast<int>(r);

    std::vector<int> basis_pos(cols, -1);
    for (int c = 0; c < cols; ++c)
      if (row_of_pivot[c] < 0) {
        basis_pos[c] = static_cast<int>(piece.basis.size());
        piece.basis.push_back(c);
      }

    piece.reduce_monomial.assign(cols, std::vector<Rat>(piece.basis.size()));
    for (int c = 0; c < cols; ++c) {
      if (row_of_pivot[c] < 0) {
        piece.reduce_monomial[c][basis_pos[c]] = 1;
        continue;
      }
      // pivot column: row reads sum(val * e_col) + piv * e_c = 0 with every
      // other col a basis column after full reduction
      const SparseRow& row = ech.rows()[row_of_pivot[c]];
      const Int& piv = row.back().second;
      for (std::size_t t = 0; t + 1 < row.size(); ++t) {
        Rat coef(-row[t].second, piv);
        coef.canonicalize();
        piece.reduce_monomial[c][basis_pos[row[t].first]] = coef;
      }
    }
    lower = piece.monomials;
  }
  return basis;
}

// ---- classes ---------------------------------------------------------------

bool ChowClass::is_zero() const {
  for (const Rat& c : coords)
    if (c != 0) return false;
  return true;
}

ChowClass zero_class(const GradedBasis& basis, int degree) {
  if (degree < 0) throw DegreeOutOfRange("negative degree");
  ChowClass out;
  out.degree = degree;
  if (degree < static_cast<int>(basis.pieces.size()))
    out.coords.assign(basis.pieces[degree].rank(), Rat(0));
  return out;  // above the top degree the graded piece is zero
}

ChowClass unit_class(const GradedBasis& basis) {
  ChowClass out;
  out.degree = 0;
  out.coords = {Rat(1)};
  (void)basis;
  return out;
}

ChowClass generator_class(const Presentation& pres, const GradedBasis& basis,
                          int generator) {
  if (generator < 0 || generator >= static_cast<int>(pres.generators.size()))
    throw ContractError("generator index out of range");
  // degree-1 nested monomials are exactly the generators, in order
  ChowClass out;
  out.degree = 1;
  out.coords = basis.piece(1).reduce_monomial[generator];
  return out;
}

ChowClass reduce(const Presentation& pres, const GradedBasis& basis,
                 const Polynomial& poly) {
  int degree = -1;
  for (const auto& [mono, coef] : poly) {
    if (coef == 0) continue;
    if (degree < 0)
      degree = mono.degree();
    else if (mono.degree() != degree)
      throw InhomogeneousInput("mixed degrees " + std::to_string(degree) +
                               " and " + std::to_string(mono.degree()));
  }
  if (degree < 0) return zero_class(basis, 0);
  if (degree > pres.grading_dimension())
    throw DegreeOutOfRange("degree " + std::to_string(degree) + " above top " +
                           std::to_string(pres.grading_dimension()));

  const GradedPiece& piece = basis.piece(degree);
  ChowClass out = zero_class(basis, degree);
  for (const auto& [mono, coef] : poly) {
    if (coef == 0) continue;
    const int idx = monomial_index(piece.monomials, mono);
    if (idx < 0) continue;  // support not nested: zero modulo the SR ideal
    for (std::size_t t = 0; t < out.coords.size(); ++t)
      out.coords[t] += coef * piece.reduce_monomial[idx][t];
  }
  return out;
}

ChowClass add(const ChowClass& a, const ChowClass& b) {
  if (a.degree != b.degree || a.coords.size() != b.coords.size())
    throw DimensionMismatch("adding classes of different degrees");
  ChowClass out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

ChowClass scale(const Rat& c, const ChowClass& a) {
  ChowClass out = a;
  for (Rat& x : out.coords) x *= c;
  return out;
}

ChowClass multiply(const Presentation& pres, const GradedBasis& basis,
                   const ChowClass& a, const ChowClass& b) {
  const int degree = a.degree + b.degree;
  if (degree > pres.grading_dimension())
    return zero_class(basis, degree);  // the graded piece vanishes up there
  const GradedPiece& pa = basis.piece(a.degree);
  const GradedPiece& pb = basis.piece(b.degree);
  if (a.coords.size() != static_cast<std::size_t>(pa.rank()) ||
      b.coords.size() != static_cast<std::size_t>(pb.rank()))
    throw DimensionMismatch("class coordinates do not match the graded basis");

  Polynomial product;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < b.coords.size(); ++j) {
      if (b.coords[j] == 0) continue;
      product.emplace_back(monomial_product(pa.monomials[pa.basis[i]],
                                            pb.monomials[pb.basis[j]]),
                           a.coords[i] * b.coords[j]);
    }
  }
  if (product.empty()) return zero_class(basis, degree);  // a factor was zero
  return reduce(pres, basis, product);
}

long pairing_rank(const Presentation& pres, const GradedBasis& basis, int degree) {
  const int top = pres.grading_dimension();
  if (degree < 0 || degree > top)
    throw DegreeOutOfRange("degree " + std::to_string(degree));
  const long hk = basis.piece(degree).rank();
  const long hc = basis.piece(top - degree).rank();
  const long ht = basis.piece(top).rank();
  std::vector<std::vector<Rat>> rows(hk, std::vector<Rat>(hc * ht));
  for (long i = 0; i < hk; ++i) {
    ChowClass a = zero_class(basis, degree);
    a.coords[i] = 1;
    for (long j = 0; j < hc; ++j) {
      ChowClass b = zero_class(basis, top - degree);
      b.coords[j] = 1;
      const ChowClass prod = multiply(pres, basis, a, b);
      for (long t = 0; t < ht; ++t) rows[i][j * ht + t] = prod.coords[t];
    }
  }
  return static_cast<long>(ExactMatrix::from_rows(std::move(rows)).rank());
}

bool torsion_check(const Presentation& pres, int degree) {
  const int top = pres.grading_dimension();
  if (degree < 0 || degree > top)
    throw DegreeOutOfRange("degree " + std::to_string(degree));
  if (degree == 0) return true;

  // a lattice basis of the degree-1 relations generates the same degree-k
  // relation lattice as the emitted rows (integer coefficients both ways)
  LatticeEchelon degree_one;
  for (const auto& row : pres.linear_relations)
    degree_one.insert(sparse_from_dense(row));

  const auto lower = nested_monomials(pres, degree - 1);
  const auto current = nested_monomials(pres, degree);
  LatticeEchelon lattice;
  degree_rows(degree_one.rows(), lower, current,
              [&](SparseRow row) { lattice.insert(std::move(row)); });
  return lattice.saturated();
}

// ---- pullback --------------------------------------------------------------

PullbackReport pullback(const HeavyLightProfile& p) {
  PullbackReport report;
  report.source = heavy_light_presentation(p);
  report.target = keel_presentation(p.n());
  const GradedBasis source_basis = graded_basis(report.source);
  const GradedBasis target_basis = graded_basis(report.target);
  const int top = report.source.grading_dimension();

  report.generator_map.reserve(report.source.generators.size());
  for (const FlatLabel& s : report.source.generators) {
    const int idx = report.target.generator_index(s);
    if (idx < 0)
      throw ContractError("w-stable label " + flat_to_string(s) +
                          " is not a Keel generator");
    report.generator_map.push_back(idx);
  }

  auto mapped = [&](const Monomial& mono) {
    Monomial out = mono;
    for (auto& [gen, exp] : out.factors) gen = report.generator_map[gen];
    std::sort(out.factors.begin(), out.factors.end());
    return out;
  };

  // every defining relation of the source must die in the Keel quotient
  for (const auto& row : report.source.linear_relations) {
    Polynomial image;
    for (std::size_t s = 0; s < row.size(); ++s) {
      if (row[s] == 0) continue;
      Monomial mono;
      mono.factors.emplace_back(report.generator_map[s], 1);
      image.emplace_back(std::move(mono), Rat(row[s]));
    }
    if (!reduce(report.target, target_basis, image).is_zero())
      throw RelationNotPreserved("image of a linear relation is nonzero");
  }
  for (const auto& [i, j] : report.source.sr_pairs) {
    if (top < 2) break;  // degree-2 piece of the target is zero through top 1
    Monomial mono;
    mono.factors.emplace_back(report.generator_map[i], 1);
    Monomial other;
    other.factors.emplace_back(report.generator_map[j], 1);
    Polynomial image{{monomial_product(mono, other), Rat(1)}};
    if (!reduce(report.target, target_basis, image).is_zero())
      throw RelationNotPreserved("image of a Stanley-Reisner product is nonzero");
  }
  report.relations_preserved = true;

  report.source_hilbert = source_basis.ranks();
  report.image_ranks.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    const GradedPiece& piece = source_basis.piece(k);
    std::vector<std::vector<Rat>> rows;
    rows.reserve(piece.basis.size());
    for (int mono_idx : piece.basis) {
      Polynomial image{{mapped(piece.monomials[mono_idx]), Rat(1)}};
      rows.push_back(reduce(report.target, target_basis, image).coords);
    }
    report.image_ranks[k] =
        static_cast<long>(ExactMatrix::from_rows(std::move(rows)).rank());
  }
  report.injective = true;
  for (int k = 0; k <= top; ++k)
    if (report.image_ranks[k] != report.source_hilbert[k]) report.injective = false;
  return report;
}

bool keel_iso_check(int num_markings) {
  const Presentation hl =
      heavy_light_presentation(profile_from_counts(num_markings, num_markings));
  const KeelPresentation kp = keel_presentation(num_markings);
  if (!(hl.generators == kp.generators)) return false;
  if (hl.sr_pairs != kp.sr_pairs) return false;
  if (hilbert_function(hl) != hilbert_function(kp)) return false;

  RowEchelon hl_span, kp_span;
  for (const auto& row : hl.linear_relations) hl_span.insert(sparse_from_dense(row));
  for (const auto& row : kp.linear_relations) kp_span.insert(sparse_from_dense(row));
  for (const auto& row : kp.linear_relations)
    if (!hl_span.in_span(sparse_from_dense(row))) return false;
  for (const auto& row : hl.linear_relations)
    if (!kp_span.in_span(sparse_from_dense(row))) return false;
  return true;
}

// ---- dual graphs -----------------------------------------------------------

DualGraph dual_graph(const HeavyLightProfile& p, const FlatLabel& s) {
  const ReducedWeightGraph g = reduced_weight_graph(p);
  if (!is_valid_flat_label(g, s))
    throw InvalidSourceLabel("not a boundary divisor label: " + flat_to_string(s));
  DualGraph out;
  out.side_s = s.vertices;
  out.side_rest.push_back(1);
  for (int v = 2; v <= p.n(); ++v)
    if (!s.contains(v)) out.side_rest.push_back(v);
  return out;
}

DualGraph dual_graph_two_sided(const HeavyLightProfile& p,
                               const std::vector<int>& t) {
  std::vector<int> side = t;
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());
  if (side.size() != t.size() || side.empty() || side.front() < 1 ||
      side.back() > p.n())
    throw InvalidSourceLabel("not a subset of the marking set");
  if (std::binary_search(side.begin(), side.end(), 1)) {
    std::vector<int> complement;
    for (int v = 1; v <= p.n(); ++v)
      if (!std::binary_search(side.begin(), side.end(), v))
        complement.push_back(v);
    side = std::move(complement);
  }
  return dual_graph(p, FlatLabel{side});
}

std::string dual_graph_to_string(const DualGraph& g) {
  auto legs = [](const std::vector<int>& side) {
    std::string out = "{";
    for (std::size_t i = 0; i < side.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(side[i]);
    }
    return out + "}";
  };
  return "two rational components joined at one node\n  legs " + legs(g.side_s) +
         "\n  legs " + legs(g.side_rest) + "\n";
}

// ---- serialization ---------------------------------------------------------

std::string linear_relation_to_string(const Presentation& pres,
                                      const std::vector<Int>& row) {
  std::string out;
  bool first = true;
  for (std::size_t s = 0; s < row.size(); ++s) {
    if (row[s] == 0) continue;
    const Int& c = row[s];
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Int mag = abs(c);
    if (mag != 1) out += to_string(mag) + "*";
    out += "D^" + flat_to_string(pres.generators[s]);
  }
  if (first) return "0 = 0";
  return out + " = 0";
}

std::string presentation_to_text(const Presentation& pres,
                                 const std::vector<long>& hilbert) {
  std::string out;
  out += "weights: " + pres.weights + "\n";
  out += "generators (" + std::to_string(pres.generators.size()) + "):";
  for (const FlatLabel& s : pres.generators) out += " D^" + flat_to_string(s);
  out += "\nstanley-reisner pairs (" + std::to_string(pres.sr_pairs.size()) + "):\n";
  for (const auto& [i, j] : pres.sr_pairs)
    out += "  D^" + flat_to_string(pres.generators[i]) + " * D^" +
           flat_to_string(pres.generators[j]) + " = 0\n";
  out += "linear relations (" + std::to_string(pres.linear_relations.size()) +
         "):\n";
  for (const auto& row : pres.linear_relations)
    out += "  " + linear_relation_to_string(pres, row) + "\n";
  out += "hilbert function:";
  for (long h : hilbert) out += " " + std::to_string(h);
  out += "\n";
  return out;
}

std::string presentation_to_json(const Presentation& pres,
                                 const std::vector<long>& hilbert) {
  nlohmann::ordered_json j;
  j["weights"] = pres.weights;
  j["generators"] = nlohmann::ordered_json::array();
  for (const FlatLabel& s : pres.generators) j["generators"].push_back(s.vertices);
  j["sr_pairs"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : pres.sr_pairs) {
    nlohmann::ordered_json pair = nlohmann::ordered_json::array();
    pair.push_back(pres.generators[a].vertices);
    pair.push_back(pres.generators[b].vertices);
    j["sr_pairs"].push_back(std::move(pair));
  }
  j["linear_relations"] = nlohmann::ordered_json::array();
  for (const auto& row : pres.linear_relations) {
    nlohmann::json coeffs = nlohmann::json::object();  // key-sorted
    for (std::size_t s = 0; s < row.size(); ++s) {
      if (row[s] == 0) continue;
      coeffs[nlohmann::json(pres.generators[s].vertices).dump()] =
          static_cast<long>(row[s].get_si());
    }
    nlohmann::ordered_json rel;
    rel["coeffs"] = coeffs;
    j["linear_relations"].push_back(std::move(rel));
  }
  j["hilbert"] = hilbert;
  return j.dump(2) + "\n";
}

}  // namespace hlchow
