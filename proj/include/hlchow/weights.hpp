#ifndef HLCHOW_WEIGHTS_HPP
#define HLCHOW_WEIGHTS_HPP

#include <string>
#include <vector>

#include "hlchow/basics.hpp"

namespace hlchow {

// A validated weight vector: n >= 4 exact rationals in (0,1] with total > 2.
// Indices are 1-based throughout, matching the marked points they weight.
struct WeightVector {
  std::vector<Rat> entries;

  int n() const { return static_cast<int>(entries.size()); }
  const Rat& weight(int index) const { return entries[index - 1]; }

  // validates the invariants above
  static WeightVector make(std::vector<Rat> entries);
};

// Partition of {1,...,n} into heavy and light indices.
struct HeavyLightProfile {
  std::vector<int> heavy;  // sorted, size m >= 2
  std::vector<int> light;  // sorted

  int m() const { return static_cast<int>(heavy.size()); }
  int n() const { return static_cast<int>(heavy.size() + light.size()); }
  int light_count() const { return static_cast<int>(light.size()); }

  bool is_heavy(int index) const;
};

// "1,1,1/10,1/10,1/10" -> exact weight vector.
WeightVector parse_weights(const std::string& text);

// Heavy/light classification: w_i is heavy when w_i + w_j > 1 for every
// j != i, and light when its only above-1 partners are heavy. Throws
// NotHeavyLight when some index is neither, TooFewHeavy when m < 2.
HeavyLightProfile classify(const WeightVector& w);

// The canonical representative (1^m, eps^(n-m)) with eps = 1/(n-m+1),
// heavy indices first. All reduced-weight-graph and Chow computations run
// on this form; any weight vector with the same profile gives an isomorphic
// space.
WeightVector canonical_form(const HeavyLightProfile& p);

// Profile with heavy = {1..m}, light = {m+1..n}. A profile with exactly one
// light index is rejected: its light weight would pair above 1 with every
// partner, forcing it heavy, so no weight vector classifies that way.
HeavyLightProfile profile_from_counts(int m, int n);

// Canonical profiles with 4 <= n <= max_n, in (n, m) order.
std::vector<HeavyLightProfile> all_profiles(int max_n);

// Comma-separated exact entries, e.g. "1,1,1/4,1/4,1/4".
std::string weight_string(const WeightVector& w);

}  // namespace hlchow

#endif
