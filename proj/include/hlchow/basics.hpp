#ifndef HLCHOW_BASICS_HPP
#define HLCHOW_BASICS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hlchow {

using Int = mpz_class;
using Rat = mpq_class;

// ---- error types -------------------------------------------------------

// User-facing validation failures (CLI exit code 1).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedRational : ValidationError {
  using ValidationError::ValidationError;
};
struct WeightOutOfRange : ValidationError {
  using ValidationError::ValidationError;
};
struct TotalWeightTooSmall : ValidationError {
  using ValidationError::ValidationError;
};
struct TooFewEntries : ValidationError {
  using ValidationError::ValidationError;
};
struct NotHeavyLight : ValidationError {
  using ValidationError::ValidationError;
};
struct TooFewHeavy : ValidationError {
  using ValidationError::ValidationError;
};

// Programming-contract violations (bad arguments to library calls).
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

struct EdgeNotInGraph : ContractError {
  using ContractError::ContractError;
};
struct DimensionMismatch : ContractError {
  using ContractError::ContractError;
};
struct DegreeOutOfRange : ContractError {
  using ContractError::ContractError;
};
struct InhomogeneousInput : ContractError {
  using ContractError::ContractError;
};
struct InvalidSourceLabel : ContractError {
  using ContractError::ContractError;
};
struct NonIntegerEntry : ContractError {
  using ContractError::ContractError;
};
struct RelationNotPreserved : ContractError {
  using ContractError::ContractError;
};

// ---- exact scalar helpers ----------------------------------------------

// Parses "p/q" or "p" with optional sign. Throws MalformedRational.
Rat parse_rational(const std::string& text);

std::string to_string(const Rat& q);
std::string to_string(const Int& z);

// ---- deterministic PRNG --------------------------------------------------

// splitmix64; used by the property suites so runs are reproducible.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // uniform integer in [lo, hi]
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // random rational with numerator in [-num, num], denominator in [1, den]
  Rat rational(long num, long den) {
    Rat q(range(-num, num), range(1, den));
    q.canonicalize();
    return q;
  }

 private:
  std::uint64_t state_;
};

}  // namespace hlchow

#endif
