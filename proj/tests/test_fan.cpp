#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hlchow/fan.hpp"
#include "hlchow/weights.hpp"

using namespace hlchow;

namespace {

FlatLabel label(std::vector<int> v) { return FlatLabel{std::move(v)}; }

std::vector<Int> ints(std::vector<long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

std::vector<Rat> rats(const std::vector<Int>& v) {
  return std::vector<Rat>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("ray coordinates in an eliminated-pair basis") {
  const HeavyLightProfile p = profile_from_counts(2, 5);

  // eliminating {2,5} leaves the basis (v_23, v_24)
  const RayCoordinateSystem sys = coordinate_system(p, {2, 5});
  CHECK(sys.basis == std::vector<Edge>{{2, 3}, {2, 4}});
  CHECK(sys.dim() == 2);
  CHECK(ray_coordinates(sys, label({2, 3})) == ints({1, 0}));
  CHECK(ray_coordinates(sys, label({2, 3, 5})) == ints({0, -1}));
  CHECK(ray_coordinates(sys, label({2, 3, 4})) == ints({1, 1}));

  // with the default {2,3} eliminated, v_23 = -v_24 - v_25
  const RayCoordinateSystem def = coordinate_system(p);
  CHECK(def.eliminated == Edge{2, 3});
  CHECK(ray_coordinates(def, label({2, 3})) == ints({-1, -1}));
  CHECK(ray_coordinates(def, label({2, 4})) == ints({1, 0}));

  CHECK_THROWS_AS(coordinate_system(p, {3, 4}), EdgeNotInGraph);
}

TEST_CASE("is_nested") {
  CHECK(is_nested({label({2, 3}), label({2, 3, 5})}));
  CHECK_FALSE(is_nested({label({2, 3}), label({2, 4})}));
  CHECK(is_nested({label({2, 3}), label({4, 5, 6})}));
  CHECK(is_nested({}));
  CHECK(is_nested({label({2, 4})}));
  CHECK_FALSE(is_nested({label({2, 3}), label({4, 5, 6}), label({2, 4})}));
}

TEST_CASE("nested-sets fan golden shapes") {
  const Fan lm = build_fan(profile_from_counts(2, 5));
  CHECK(lm.f_vector == std::vector<std::size_t>{6, 6});
  CHECK(lm.max_dim() == 2);
  CHECK(lm.rays.size() == 6);
  for (const Cone& c : lm.cones_by_dim[2]) CHECK(is_nested(c.generators));

  const Fan tiny = build_fan(profile_from_counts(2, 4));
  CHECK(tiny.f_vector == std::vector<std::size_t>{2});
  CHECK(tiny.max_dim() == 1);

  const Fan keel5 = build_fan(profile_from_counts(5, 5));
  CHECK(keel5.rays.size() == 10);
  CHECK(keel5.cones_by_dim[2].size() == 15);  // trivalent 5-leaf trees
}

TEST_CASE("ray vectors are primitive and distinct") {
  for (int n = 4; n <= 6; ++n)
    for (int m = 2; m <= n; ++m) {
      if (m == n - 1) continue;
      const Fan fan = build_fan(profile_from_counts(m, n));
      std::set<std::vector<Int>> seen;
      for (const auto& v : fan.ray_vectors) {
        Int g = 0;
        for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        CHECK(g == 1);
        seen.insert(v);
      }
      CHECK(seen.size() == fan.rays.size());
    }
}

TEST_CASE("unimodularity") {
  CHECK(unimodularity_check(build_fan(profile_from_counts(2, 5))));
  CHECK(unimodularity_check(build_fan(profile_from_counts(5, 5))));
  CHECK(unimodularity_check(build_fan(profile_from_counts(2, 6))));
}

TEST_CASE("chain-of-flats subdivision") {
  const ChainFan star = chain_of_flats_cones(profile_from_counts(2, 5));
  CHECK(star.maximal_chains.size() == 6);
  // all flats of a star graph are connected: 3 of rank 1, 3 of rank 2
  CHECK(star.proper_flats.size() == 6);
  for (const ChainOfFlats& chain : star.maximal_chains) {
    CHECK(chain.flats.size() == 2);
    CHECK(chain.flats[0].rank() == 1);
    CHECK(chain.flats[1].rank() == 2);
  }

  CHECK(chain_of_flats_cones(profile_from_counts(2, 4)).maximal_chains.size() == 2);

  // first disconnected flats appear for the all-heavy six-marking space:
  // two disjoint edges of K5
  const ChainFan keel6 = chain_of_flats_cones(profile_from_counts(6, 6));
  bool has_disconnected = false;
  for (const PartitionFlat& f : keel6.proper_flats)
    has_disconnected = has_disconnected || f.blocks.size() > 1;
  CHECK(has_disconnected);
}

TEST_CASE("support membership") {
  const HeavyLightProfile p = profile_from_counts(2, 5);
  const Fan fan = build_fan(p);

  for (const auto& v : fan.ray_vectors) CHECK(support_membership(fan, rats(v)));

  // v_23 + v_24 = v_{F_{2,3,4}} lands back in the support
  const auto v234 = fan.ray_vector(label({2, 3, 4}));
  CHECK(support_membership(fan, rats(v234)));

  // -v_{F_{2,3,4}} = v_25 is again a ray of the star fan
  std::vector<Rat> neg = rats(v234);
  for (Rat& x : neg) x = -x;
  CHECK(support_membership(fan, neg));
  CHECK(neg == rats(fan.ray_vector(label({2, 5}))));

  // the support of a 2-dimensional fan with 6 maximal cones is not all of
  // the plane unless the cones close up; here they do (complete fan), so
  // probe a point strictly between two rays instead
  CHECK(support_membership(fan, {Rat(1), Rat(2)}));

  CHECK_THROWS_AS(support_membership(fan, {Rat(1)}), DimensionMismatch);
}

TEST_CASE("projection to a smaller weight") {
  const HeavyLightProfile p = profile_from_counts(2, 5);
  const RayCoordinateSystem sys = coordinate_system(p);

  // all-light labels are crushed
  CHECK(project_pr_w(label({3, 4}), p) == ints({0, 0}));
  CHECK(project_pr_w(label({4, 5}), p) == ints({0, 0}));
  CHECK(project_pr_w(label({3, 4, 5}), p) == ints({0, 0}));

  // w-stable labels map to their own target rays
  CHECK(project_pr_w(label({2, 3}), p) == ray_coordinates(sys, label({2, 3})));
  CHECK(project_pr_w(label({2, 4, 5}), p) ==
        ray_coordinates(sys, label({2, 4, 5})));

  // identity on the all-heavy space
  const HeavyLightProfile keel = profile_from_counts(5, 5);
  const RayCoordinateSystem keel_sys = coordinate_system(keel);
  CHECK(project_pr_w(label({3, 4}), keel) ==
        ray_coordinates(keel_sys, label({3, 4})));

  CHECK_THROWS_AS(project_pr_w(label({2}), p), InvalidSourceLabel);
  CHECK_THROWS_AS(project_pr_w(label({2, 3, 4, 5}), p), InvalidSourceLabel);
}

TEST_CASE("fan serialization shape") {
  const Fan fan = build_fan(profile_from_counts(2, 5));
  const std::string json = fan_to_json(fan);
  CHECK(json.find("\"rays\"") != std::string::npos);
  CHECK(json.find("\"f_vector\"") != std::string::npos);
  CHECK(json.find("\"cones\"") != std::string::npos);

  const std::string text = fan_to_text(fan);
  CHECK(text.find("f-vector") != std::string::npos);
}
