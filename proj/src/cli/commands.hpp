#pragma once

// Command implementations behind the `lieder` executable. Each command
// returns both an aligned text rendering and a structured report document
// (schema 1); `run` parses argv and picks one of them.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "lieder/campaign.hpp"
#include "lieder/radical.hpp"

namespace lieder::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitViolation = 3;
inline constexpr int kExitBudget = 4;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kBudgetEnv = "LIEDER_BUDGET";

struct Output {
  int exit_code = kExitOk;
  Json document;
  std::string text;
};

/// A file path, or a catalog name when no such file exists.
struct AlgebraSource {
  std::string spec;
  std::optional<std::string> field;  ///< catalog names only
};

struct LoadedAlgebra {
  LieAlgebra algebra;
  std::string digest;  ///< of the canonical text form
};

/// Loads and validates; an invalid algebra is a ParseError.
LoadedAlgebra load_algebra(const AlgebraSource& source, bool require_valid = true);

/// Budget from LIEDER_BUDGET, else the library default.
std::uint64_t default_budget();

/// full | derived:k | span:i,j,... | closure:i,j,... | center | radical
IdealHandle resolve_ideal(const LieAlgebra& algebra, std::string_view selector, std::uint64_t budget);
/// ad:i | der:i | dt (jacobson:p only) | path to a derivation file
DerivationMap resolve_derivation(const LieAlgebra& algebra, std::string_view selector);

Json vector_to_json(std::span<const Scalar> v);
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, std::size_t n, FieldSpec field);
Json matrix_to_json(const Matrix& m);

Output cmd_validate(const AlgebraSource& source);
Output cmd_series(const AlgebraSource& source, const std::string& ideal, std::uint64_t budget);
Output cmd_der(const AlgebraSource& source);
Output cmd_radical(const AlgebraSource& source, std::uint64_t budget, bool exhaustive);
Output cmd_characteristic(const AlgebraSource& source, std::uint64_t budget, bool exhaustive);
Output cmd_dclosure(const AlgebraSource& source, const std::string& derivation,
                    const std::string& ideal, std::size_t k, std::uint64_t budget);
Output cmd_bounds(std::size_t n, std::size_t k_max);
Output cmd_counterexample(std::uint64_t p, bool bruteforce, std::uint64_t budget);
Output cmd_check(const CampaignOptions& options);

Json campaign_to_json(const CampaignResult& result);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lieder::cli
