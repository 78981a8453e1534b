#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nullkit::acceptance {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string detail;
};

CriterionResult coefficient_formula_oracle(std::uint64_t seed);
CriterionResult general_formula(std::uint64_t seed);
CriterionResult interpolation_round_trips(std::uint64_t seed);
CriterionResult nullstellensatz_certificates(std::uint64_t seed);
CriterionResult permanent_suite(std::uint64_t seed);
CriterionResult alon_tarsi_exhaustive();
CriterionResult z4_exceptions();
CriterionResult padic_lemma();
CriterionResult application_checkers(std::uint64_t seed);

/// Criteria 1 to 9 in order.
std::vector<CriterionResult> run_all(std::uint64_t seed = kDefaultSeed);

}  // namespace nullkit::acceptance
