#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "postft/semiring.hpp"

namespace postft {

struct LawCheck {
  std::string law;
  long cases = 0;
  long failures = 0;
  std::string first_counterexample;
};

struct LawReport {
  std::string subject;
  std::vector<LawCheck> checks;

  bool all_pass() const;
  long total_failures() const;
  LawCheck& open(const std::string& law);
  void record(const std::string& law, bool ok, std::function<std::string()> witness);
  nlohmann::json to_json() const;
};

// Operation table the harness checks; tests substitute corrupted entries as
// negative controls, so the harness must never call back into sr:: directly.
struct SemiringOps {
  SemiringDescriptor desc;
  SemiringElement zero, one;
  std::function<SemiringElement(const SemiringElement&, const SemiringElement&)> add;
  std::function<SemiringElement(const SemiringElement&, const SemiringElement&)> mul;
  std::function<SemiringElement(std::span<const SemiringElement>)> sum;
  std::function<SemiringElement(const Count&, const SemiringElement&)> repeat;
  std::function<SemiringElement(std::mt19937_64&)> sample;
};

SemiringOps standard_ops(const SemiringDescriptor& d);

// Randomized verification of the semiring + complete-monoid axioms:
// +/* monoid laws, distributivity, absorbing zero, summation-law base cases,
// the partition law on families of size <= 16, infinite distributivity over
// finite families, Fubini on rectangular families, zerosumfreeness, and the
// repeat-sum additivity.
LawReport check_semiring_laws(const SemiringOps& ops, int sample_count,
                              std::uint64_t seed);

inline LawReport check_semiring_laws(const SemiringDescriptor& d, int sample_count,
                                     std::uint64_t seed) {
  return check_semiring_laws(standard_ops(d), sample_count, seed);
}

}  // namespace postft
