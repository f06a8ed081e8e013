#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hlchow/weights.hpp"

using namespace hlchow;

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("1") == 1);
  CHECK(parse_rational("-2/6") == Rat(-1, 3));
  CHECK(parse_rational(" 1/10 ") == Rat(1, 10));
  CHECK_THROWS_AS(parse_rational("1/0"), MalformedRational);
  CHECK_THROWS_AS(parse_rational("x"), MalformedRational);
  CHECK_THROWS_AS(parse_rational("1/2/3"), MalformedRational);
  CHECK_THROWS_AS(parse_rational(""), MalformedRational);
}

TEST_CASE("weight vector validation") {
  CHECK(parse_weights("1,1,1/10,1/10,1/10").n() == 5);
  CHECK(parse_weights("1,1,1,1").weight(4) == 1);
  CHECK_THROWS_AS(parse_weights("1,1,1"), TooFewEntries);
  CHECK_THROWS_AS(parse_weights("1,1,0,1"), WeightOutOfRange);
  CHECK_THROWS_AS(parse_weights("1,1,3/2,1"), WeightOutOfRange);
  CHECK_THROWS_AS(parse_weights("1/2,1/2,1/2,1/2"), TotalWeightTooSmall);
  CHECK_THROWS_AS(parse_weights("1,1,1,"), MalformedRational);
}

TEST_CASE("classification") {
  const HeavyLightProfile p = classify(parse_weights("1,1,1/10,1/10,1/10"));
  CHECK(p.heavy == std::vector<int>{1, 2});
  CHECK(p.light == std::vector<int>{3, 4, 5});
  CHECK(p.m() == 2);
  CHECK(p.n() == 5);
  CHECK(p.is_heavy(1));
  CHECK_FALSE(p.is_heavy(3));

  const HeavyLightProfile all = classify(parse_weights("1,1,1,1"));
  CHECK(all.m() == 4);
  CHECK(all.light.empty());

  // order does not matter for the classification itself
  const HeavyLightProfile mixed = classify(parse_weights("1/10,1,1,1/10,1/10"));
  CHECK(mixed.heavy == std::vector<int>{2, 3});
  CHECK(mixed.light == std::vector<int>{1, 4, 5});

  // 3/5+3/10 = 9/10: index 1 is not heavy; its above-1 partner 2 is not
  // heavy either, so index 1 is not light
  CHECK_THROWS_AS(classify(parse_weights("3/5,3/5,3/5,3/10,3/10")),
                  NotHeavyLight);

  // 3/4+1/4 = 1 stops the 3/4 entries from being heavy, yet they pair
  // above 1 with each other, so nothing is light either
  CHECK_THROWS_AS(classify(parse_weights("3/4,3/4,3/4,1/4")), NotHeavyLight);
}

TEST_CASE("canonical form") {
  const HeavyLightProfile p = classify(parse_weights("1,1,1/10,1/10,1/10"));
  const WeightVector canonical = canonical_form(p);
  CHECK(weight_string(canonical) == "1,1,1/4,1/4,1/4");
  CHECK(canonical.weight(3) == Rat(1, 4));  // eps = 1/(lights + 1)

  // canonical form classifies back to the same split
  const HeavyLightProfile q = classify(canonical);
  CHECK(q.heavy == std::vector<int>{1, 2});
  CHECK(q.light == std::vector<int>{3, 4, 5});

  CHECK(weight_string(canonical_form(classify(parse_weights("1,1,1,1")))) ==
        "1,1,1,1");
  CHECK(weight_string(canonical_form(profile_from_counts(2, 6))) ==
        "1,1,1/5,1/5,1/5,1/5");
}

TEST_CASE("profile_from_counts") {
  const HeavyLightProfile p = profile_from_counts(2, 5);
  CHECK(p.heavy == std::vector<int>{1, 2});
  CHECK(p.light == std::vector<int>{3, 4, 5});

  CHECK_THROWS_AS(profile_from_counts(1, 5), TooFewHeavy);
  // a single light index cannot occur: it would pair above 1 with every
  // heavy, making it heavy
  CHECK_THROWS_AS(profile_from_counts(4, 5), NotHeavyLight);
  CHECK_THROWS_AS(profile_from_counts(3, 4), NotHeavyLight);
  CHECK(profile_from_counts(4, 4).light_count() == 0);
}

TEST_CASE("all_profiles") {
  const auto profiles = all_profiles(5);
  // n=4: m in {2,4}; n=5: m in {2,3,5}
  CHECK(profiles.size() == 5);
  for (const auto& p : profiles) {
    CHECK(p.n() <= 5);
    CHECK(p.m() >= 2);
    CHECK(p.m() != p.n() - 1);
  }
  CHECK(all_profiles(7).size() == 5 + 4 + 5);
}
