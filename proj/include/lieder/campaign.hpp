#pragma once

// Seeded randomized campaigns that check the derived-length theorems and the
// D-power inclusions on random solvable instances.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieder/bounds.hpp"
#include "lieder/constructions.hpp"

namespace lieder {

enum class Suite {
  Solvability,  ///< s(I + D(I)) <= 2n
  Degree,       ///< s(J_k) <= f_n(k), and <= k + 1 for abelian I
  PowerImage,   ///< D^m(I^(s)) <= I for m <= 2^s - 1
  Key,          ///< [D^h(I^(k-1)), D^h(I^(k-1))] <= D^(2h)(I^(k)) + I, h = 2^(k-1)
};

std::string to_string(Suite s);
/// "solvability", "degree", "power", "key"; InvalidParameter otherwise.
Suite parse_suite(std::string_view name);

struct CampaignOptions {
  Suite suite = Suite::Solvability;
  std::uint64_t seed = 0;
  std::size_t count = 100;
  FieldSpec field = FieldSpec::rationals();
  std::size_t k_max = 4;  ///< degree suite only
  InstanceOptions instance;
};

/// One inclusion or inequality evaluated on one instance.
struct Observation {
  std::string label;
  bool applicable;  ///< hypotheses of the statement hold
  bool holds;
  std::string detail;
};

struct InstanceRecord {
  std::size_t index;
  std::uint64_t seed;
  std::string description;
  std::size_t algebra_dim;
  std::size_t ideal_dim;
  std::size_t ideal_length;
  std::vector<Observation> observations;
};

struct CampaignResult {
  CampaignOptions options;
  std::vector<InstanceRecord> records;
  std::size_t checks = 0;
  std::size_t applicable = 0;
  std::size_t violations = 0;

  bool ok() const noexcept { return violations == 0; }
};

/// Per-instance seed, a splitmix64 step away from the campaign seed.
std::uint64_t instance_seed(std::uint64_t campaign_seed, std::size_t index);

/// Over GF(p) the solvability suite caps s(I) at the admissible depth of p
/// unless the caller already set a cap, so that n < log2 p holds. The degree
/// suite refuses GF(p) (WrongCharacteristic).
CampaignResult run_campaign(const CampaignOptions& options);

}  // namespace lieder
