#pragma once

// Binomial divisibility thresholds, the derived-length bounds for D-closures
// of solvable ideals, and checkers comparing observed lengths to them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lieder/derivation.hpp"

namespace lieder {

/// Number of carries when adding a and b in base p, i.e. the p-adic
/// valuation of C(a+b, a).
std::size_t kummer_carries(std::uint64_t p, std::uint64_t a, std::uint64_t b);

/// p | C(2^k, 2^(k-1)), decided by carry counting. Requires k >= 1, k <= 63.
bool central_binomial_divisible(std::uint64_t p, std::size_t k);

/// n < log2(p), evaluated exactly as 2^n < p.
bool below_log2(std::size_t n, std::uint64_t p);

/// Largest n with p dividing none of C(2,1), C(4,2), ..., C(2^n, 2^(n-1)).
/// p must be an odd prime (InvalidPrime otherwise).
std::size_t admissible_depth(std::uint64_t p);

/// f_n(k): f_1(k) = k + 1, f_n(0) = n, f_n(k) = f_n(k-1) + f_{n-1}(2k) + 1.
std::uint64_t bound_f(std::size_t n, std::size_t k);

struct BoundTable {
  std::size_t n;
  std::vector<std::uint64_t> values;  ///< values[k] = f_n(k), k = 0..k_max
  std::string base_rule;
};

BoundTable bound_table(std::size_t n, std::size_t k_max);

/// Ascending coefficients of the degree-n polynomial through f_n(0..n).
/// Throws std::logic_error if it misses any of f_n(n+1..2n).
std::vector<mpq_class> bound_polynomial(std::size_t n);

mpq_class evaluate_polynomial(const std::vector<mpq_class>& coefficients, const mpq_class& x);

/// Least k0 <= k_max with f_n(k) < 2^k n for every k in [k0, k_max], taking
/// the doubling estimate 2^(k-1) n instead when `halved` is set. nullopt when
/// the bound is still not below the estimate at k_max. k_max <= 56.
std::optional<std::size_t> doubling_crossover(std::size_t n, std::size_t k_max, bool halved = false);

enum class Theorem { Solvability, Degree, Estimation };

std::string to_string(Theorem t);

struct CheckContext {
  std::string algebra;
  std::size_t algebra_dim = 0;
  std::size_t ideal_dim = 0;
  std::size_t closure_dim = 0;
  std::string derivation;
  std::size_t k = 0;
};

struct TheoremCheckReport {
  Theorem theorem;
  bool hypotheses_met;
  std::optional<std::size_t> observed;  ///< nullopt when the closure is not solvable
  std::uint64_t bound;
  bool holds;                           ///< observed exists and observed <= bound
  CheckContext context;
};

/// Derived length of I + D(I) against 2n, n = s(I). Hypotheses: char 0, or
/// n < log2 p.
TheoremCheckReport check_solvability_theorem(const LieAlgebra& algebra, const IdealHandle& ideal,
                                             const DerivationMap& d,
                                             const std::string& derivation_label = "D");

/// Derived length of J_k against f_n(k) for k = 0..k_max. Characteristic 0
/// only (WrongCharacteristic otherwise); I must be solvable and nonzero.
std::vector<TheoremCheckReport> check_degree_theorem(const LieAlgebra& algebra,
                                                     const IdealHandle& ideal,
                                                     const DerivationMap& d, std::size_t k_max,
                                                     const std::string& derivation_label = "D");

}  // namespace lieder
