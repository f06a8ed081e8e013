#include "hlchow/weights.hpp"

#include <algorithm>
#include <sstream>

namespace hlchow {

WeightVector WeightVector::make(std::vector<Rat> entries) {
  if (entries.size() < 4)
    throw TooFewEntries("need at least 4 weights, got " +
                        std::to_string(entries.size()));
  Rat total = 0;
  for (const Rat& w : entries) {
    if (w <= 0 || w > 1)
      throw WeightOutOfRange("weight " + to_string(w) + " outside (0,1]");
    total += w;
  }
  if (total <= 2)
    throw TotalWeightTooSmall("total weight " + to_string(total) + " <= 2");
  return WeightVector{std::move(entries)};
}

bool HeavyLightProfile::is_heavy(int index) const {
  return std::binary_search(heavy.begin(), heavy.end(), index);
}

WeightVector parse_weights(const std::string& text) {
  std::vector<Rat> entries;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, ',')) entries.push_back(parse_rational(piece));
  if (!text.empty() && text.back() == ',')
    throw MalformedRational("trailing comma in weight list");
  return WeightVector::make(std::move(entries));
}

HeavyLightProfile classify(const WeightVector& w) {
  const int n = w.n();
  std::vector<bool> heavy(n + 1, false);
  for (int i = 1; i <= n; ++i) {
    bool all_above = true;
    for (int j = 1; j <= n && all_above; ++j)
      if (j != i && w.weight(i) + w.weight(j) <= 1) all_above = false;
    heavy[i] = all_above;
  }
  HeavyLightProfile p;
  for (int i = 1; i <= n; ++i) {
    if (heavy[i]) {
      p.heavy.push_back(i);
      continue;
    }
    for (int j = 1; j <= n; ++j)
      if (j != i && w.weight(i) + w.weight(j) > 1 && !heavy[j])
        throw NotHeavyLight("index " + std::to_string(i) +
                            " is neither heavy nor light (partner " +
                            std::to_string(j) + " is not heavy)");
    p.light.push_back(i);
  }
  if (p.m() < 2)
    throw TooFewHeavy("need at least 2 heavy weights, got " +
                      std::to_string(p.m()));
  return p;
}

WeightVector canonical_form(const HeavyLightProfile& p) {
  if (p.m() < 2)
    throw TooFewHeavy("need at least 2 heavy weights, got " +
                      std::to_string(p.m()));
  std::vector<Rat> entries(p.m(), Rat(1));
  const int lights = p.light_count();
  if (lights > 0) {
    Rat eps(1, lights + 1);
    entries.insert(entries.end(), lights, eps);
  }
  return WeightVector::make(std::move(entries));
}

HeavyLightProfile profile_from_counts(int m, int n) {
  if (n < 4) throw TooFewEntries("need n >= 4, got " + std::to_string(n));
  if (m < 2) throw TooFewHeavy("need m >= 2, got " + std::to_string(m));
  if (m > n)
    throw NotHeavyLight("heavy count " + std::to_string(m) + " exceeds n");
  if (m == n - 1)
    throw NotHeavyLight(
        "no vector has exactly one light weight: a lone light index pairs "
        "above 1 only with heavies, i.e. with everything, making it heavy");
  HeavyLightProfile p;
  for (int i = 1; i <= m; ++i) p.heavy.push_back(i);
  for (int i = m + 1; i <= n; ++i) p.light.push_back(i);
  return p;
}

std::vector<HeavyLightProfile> all_profiles(int max_n) {
  std::vector<HeavyLightProfile> out;
  for (int n = 4; n <= max_n; ++n)
    for (int m = 2; m <= n; ++m) {
      if (m == n - 1) continue;
      out.push_back(profile_from_counts(m, n));
    }
  return out;
}

std::string weight_string(const WeightVector& w) {
  std::string out;
  for (int i = 1; i <= w.n(); ++i) {
    if (i > 1) out += ',';
    out += to_string(w.weight(i));
  }
  return out;
}

}  // namespace hlchow
