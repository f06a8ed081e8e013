// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Wall-clock budgets are part of the criteria and are pinned here.
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "hlchow/chow.hpp"
#include "hlchow/exact_linalg.hpp"
#include "hlchow/fan.hpp"
#include "hlchow/verify.hpp"
#include "hlchow/weights.hpp"

using namespace hlchow;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

template <typename Body>
bool criterion(int id, const std::string& what, double budget_seconds,
               Body&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string why;
  bool ok = false;
  try {
    ok = body(why);
  } catch (const std::exception& e) {
    ok = false;
    why = std::string("exception: ") + e.what();
  }
  const double elapsed = seconds_since(t0);
  if (ok && elapsed > budget_seconds) {
    ok = false;
    why = "over budget";
  }
  std::printf("criterion %d: %s  %s (%.2fs, budget %.0fs)%s%s\n", id,
              ok ? "PASS" : "FAIL", what.c_str(), elapsed, budget_seconds,
              why.empty() ? "" : " - ", why.c_str());
  std::fflush(stdout);
  return ok;
}

FlatLabel label(std::vector<int> v) { return FlatLabel{std::move(v)}; }

bool golden_presentation(std::string& why) {
  const HeavyLightProfile p = profile_from_counts(2, 5);
  const Presentation pres = heavy_light_presentation(p);

  const std::vector<FlatLabel> gens = {
      label({2, 3}), label({2, 4}), label({2, 5}),
      label({2, 3, 4}), label({2, 3, 5}), label({2, 4, 5})};
  if (pres.generators != gens) {
    why = "generator list mismatch";
    return false;
  }

  const std::set<std::pair<int, int>> sr(pres.sr_pairs.begin(),
                                         pres.sr_pairs.end());
  const std::set<std::pair<int, int>> want = {{0, 1}, {0, 2}, {0, 5},
                                              {1, 2}, {1, 4}, {2, 3},
                                              {3, 4}, {3, 5}, {4, 5}};
  if (sr != want) {
    why = "Stanley-Reisner pairs mismatch";
    return false;
  }

  RowEchelon span;
  for (const auto& r : pres.linear_relations) span.insert(sparse_from_dense(r));
  for (const auto& r : all_pair_relations(p))
    if (!span.in_span(sparse_from_dense(r))) {
      why = "a pairwise relation is outside the emitted relation span";
      return false;
    }

  const Fan fan = build_fan(p);
  if (fan.f_vector != std::vector<std::size_t>{6, 6}) {
    why = "f-vector mismatch";
    return false;
  }
  return true;
}

bool hilbert_goldens(std::string& why) {
  const struct {
    int m, n;
    std::vector<long> expected;
  } cases[] = {
      {2, 5, {1, 4, 1}},
      {5, 5, {1, 5, 1}},
      {6, 6, {1, 16, 16, 1}},
      {2, 6, {1, 11, 11, 1}},
  };
  for (const auto& c : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto h =
        hilbert_function(heavy_light_presentation(profile_from_counts(c.m, c.n)));
    const double secs = seconds_since(t0);
    if (h != c.expected) {
      why = "wrong Hilbert function at m=" + std::to_string(c.m) +
            " n=" + std::to_string(c.n);
      return false;
    }
    if (secs > 10.0) {
      why = "instance m=" + std::to_string(c.m) + " n=" + std::to_string(c.n) +
            " over its 10s budget";
      return false;
    }
  }
  return true;
}

bool keel_consistency(std::string& why) {
  for (int n : {4, 5, 6})
    if (!keel_iso_check(n)) {
      why = "mismatch at n=" + std::to_string(n);
      return false;
    }
  return true;
}

bool pullback_all(std::string& why) {
  for (const HeavyLightProfile& p : all_profiles(6)) {
    const PullbackReport rep = pullback(p);
    if (!rep.relations_preserved || !rep.injective ||
        rep.image_ranks != rep.source_hilbert) {
      why = "failure for " + weight_string(canonical_form(p));
      return false;
    }
  }
  return true;
}

bool fans_unimodular(std::string& why) {
  for (const HeavyLightProfile& p : all_profiles(6))
    if (!unimodularity_check(build_fan(p))) {
      why = "non-unimodular cone for " + weight_string(canonical_form(p));
      return false;
    }
  return true;
}

bool projection_exhaustive(std::string& why) {
  for (const HeavyLightProfile& p : all_profiles(6)) {
    const int n = p.n();
    const int m = p.m();
    const RayCoordinateSystem target_sys = coordinate_system(p);

    std::set<std::vector<Int>> images;
    std::size_t survivors = 0;
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
      std::vector<int> vertices;
      for (int v = 2; v <= n; ++v)
        if (mask & (1u << (v - 2))) vertices.push_back(v);
      const int size = static_cast<int>(vertices.size());
      if (size < 2 || size > n - 2) continue;

      const FlatLabel s = label(vertices);
      const std::vector<Int> image = project_pr_w(s, p);
      const bool all_light = s.vertices.front() > m;
      bool zero = true;
      for (const Int& x : image) zero = zero && x == 0;
      if (zero != all_light) {
        why = "kill set is not exactly the all-light rays for " +
              weight_string(canonical_form(p));
        return false;
      }
      if (zero) continue;
      if (image != ray_coordinates(target_sys, s)) {
        why = "surviving ray does not land on its own target ray";
        return false;
      }
      ++survivors;
      images.insert(image);
    }
    if (images.size() != survivors) {
      why = "not injective on surviving rays for " +
            weight_string(canonical_form(p));
      return false;
    }

    // every cone of the all-ones fan maps into a cone of the target fan
    const Fan keel_fan = build_fan(profile_from_counts(n, n));
    const Presentation target = heavy_light_presentation(p);
    for (int d = 1; d <= keel_fan.max_dim(); ++d)
      for (const Cone& cone : keel_fan.cones_by_dim[d]) {
        std::vector<FlatLabel> stable;
        for (const FlatLabel& s : cone.generators)
          if (s.vertices.front() <= m) stable.push_back(s);
        for (const FlatLabel& s : stable)
          if (target.generator_index(s) < 0) {
            why = "image cone uses a non-generator label";
            return false;
          }
        if (!is_nested(stable)) {
          why = "image of a cone is not contained in a target cone";
          return false;
        }
      }
  }
  return true;
}

bool support_equality(std::string& why) {
  for (const HeavyLightProfile& p : all_profiles(5)) {
    const Fan fan = build_fan(p);
    const ChainFan chain = chain_of_flats_cones(p);
    const auto nested_cones = maximal_cone_matrices(fan);
    const auto chain_cones = maximal_cone_matrices(chain);
    const int dim = fan.coords.dim();

    std::vector<std::vector<Rat>> points;
    auto to_rat = [](const std::vector<Int>& v) {
      return std::vector<Rat>(v.begin(), v.end());
    };

    for (const auto& v : fan.ray_vectors) points.push_back(to_rat(v));
    for (const PartitionFlat& f : chain.proper_flats)
      points.push_back(to_rat(ray_coordinates(chain.coords, f)));

    for (const Cone& cone : fan.cones_by_dim[fan.max_dim()]) {
      std::vector<Rat> bary(dim, Rat(0));
      for (const FlatLabel& s : cone.generators) {
        const auto& v = fan.ray_vector(s);
        for (int i = 0; i < dim; ++i) bary[i] += Rat(v[i]);
      }
      points.push_back(std::move(bary));
    }
    for (const ChainOfFlats& c : chain.maximal_chains) {
      std::vector<Rat> bary(dim, Rat(0));
      for (const PartitionFlat& f : c.flats) {
        const auto v = ray_coordinates(chain.coords, f);
        for (int i = 0; i < dim; ++i) bary[i] += Rat(v[i]);
      }
      points.push_back(std::move(bary));
    }

    SplitMix64 rng(0xACCE5500ULL + 64ULL * p.n() + p.m());
    for (int k = 0; k < 200; ++k) {
      std::vector<Rat> pt(dim);
      for (int i = 0; i < dim; ++i) {
        const long num = static_cast<long>(rng.next() % 17) - 8;
        const long den = 1 + static_cast<long>(rng.next() % 5);
        pt[i] = Rat(num, den);
        pt[i].canonicalize();
      }
      points.push_back(std::move(pt));
    }

    for (const auto& pt : points)
      if (support_membership(nested_cones, pt) !=
          support_membership(chain_cones, pt)) {
        why = "membership verdicts differ for " +
              weight_string(canonical_form(p));
        return false;
      }
  }
  return true;
}

bool structural_suite(std::string& why) {
  const VerifyReport report = verify_all(7, /*full=*/true);
  if (!report.all_passed()) {
    for (const CheckResult& c : report.checks)
      if (!c.passed) {
        why = "first failing check: " + c.name;
        break;
      }
    return false;
  }
  return true;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= criterion(1,
                  "golden presentation and fan for w = (1,1,1/4,1/4,1/4): "
                  "generators, Stanley-Reisner pairs, relation span, f-vector",
                  1.0, golden_presentation);
  ok &= criterion(2,
                  "Hilbert functions (1,4,1), (1,5,1), (1,16,16,1), "
                  "(1,11,11,1) by exact elimination, each instance under 10s",
                  40.0, hilbert_goldens);
  ok &= criterion(3, "all-heavy presentation matches the Keel presentation "
                     "for n = 4, 5, 6",
                  60.0, keel_consistency);
  ok &= criterion(4, "pullback to the all-ones space preserves relations and "
                     "is injective for every profile with n <= 6",
                  120.0, pullback_all);
  ok &= criterion(5, "all nested-set fans with n <= 6 are unimodular", 30.0,
                  fans_unimodular);
  ok &= criterion(6,
                  "projection kills exactly the all-light rays, is injective "
                  "on the rest, and maps cones into cones for n <= 6",
                  60.0, projection_exhaustive);
  ok &= criterion(7,
                  "nested-set and chain-of-flats subdivisions have equal "
                  "support on rays, barycenters and 200 sampled points, n <= 5",
                  30.0, support_equality);
  ok &= criterion(8, "structural property suite at full level for n <= 7",
                  300.0, structural_suite);

  std::printf("%s\n", ok ? "acceptance: all criteria passed"
                         : "acceptance: FAILURES present");
  return ok ? 0 : 1;
}
