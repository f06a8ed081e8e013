#ifndef HLCHOW_VERIFY_HPP
#define HLCHOW_VERIFY_HPP

#include <string>
#include <vector>

#include "hlchow/weights.hpp"

namespace hlchow {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // short diagnostic, filled on failure or when informative
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::string to_text() const;
};

// Structural checks for one weight vector. `full` adds the expensive
// degreewise checks (pairing ranks, torsion, pullback injectivity,
// support equality of the two fan structures on sampled points).
VerifyReport verify_profile(const HeavyLightProfile& p, bool full);

// Sweep over every canonical profile with at most max_n markings.
VerifyReport verify_all(int max_n, bool full);

}  // namespace hlchow

#endif
