#pragma once

// The solvable radical S(L) (sum of all solvable ideals) and characteristic
// ideals.

#include <cstdint>
#include <optional>

#include "lieder/derivation.hpp"

namespace lieder {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// x lies in S(L) iff the ideal generated by x is solvable.
bool generates_solvable_ideal(const LieAlgebra& algebra, std::span<const Scalar> x);

/// Orthogonal complement of [L, L] under the Killing form. Q only
/// (WrongCharacteristic otherwise).
IdealHandle radical_char0(const LieAlgebra& algebra);

struct RadicalSearch {
  enum class Strategy {
    /// Test one representative of every projective point of F^n.
    Exhaustive,
    /// Test only representatives of F^n / R for the radical-so-far R,
    /// restarting whenever R grows. Same answer: x + r with r in S(L) lies in
    /// S(L) iff x does.
    Pruned,
  };

  std::uint64_t budget = kDefaultBudget;
  Strategy strategy = Strategy::Pruned;
  /// A solvable ideal known to lie in S(L); the search starts from it and the
  /// budget is charged for p^(n - dim seed) points instead of p^n.
  std::optional<Subspace> seed;
};

/// S(L) over GF(p) by membership tests on projective points. Throws
/// BudgetExceeded when p^(n - dim seed) exceeds the budget, and
/// WrongCharacteristic over Q.
IdealHandle radical_bruteforce(const LieAlgebra& algebra, const RadicalSearch& search = {});
IdealHandle radical_bruteforce(const LieAlgebra& algebra, std::uint64_t budget);

/// Q: Killing criterion. GF(p): pruned brute force.
IdealHandle solvable_radical(const LieAlgebra& algebra, std::uint64_t budget = kDefaultBudget);

struct CharacteristicWitness {
  Matrix derivation;
  Vector vector;  ///< in the ideal, with derivation * vector outside it
  Vector image;
};

struct CharacteristicResult {
  bool characteristic;
  std::optional<CharacteristicWitness> witness;
};

/// Tests D(a) <= a for every basis derivation of Der(L). The witness is the
/// first basis derivation and first ideal basis vector (canonical order)
/// whose image escapes.
CharacteristicResult is_characteristic(const LieAlgebra& algebra, const IdealHandle& ideal);
/// Same, against a precomputed Der(L) basis.
CharacteristicResult is_characteristic(const IdealHandle& ideal,
                                       const std::vector<Matrix>& derivations);

struct RadicalReport {
  enum class Method { KillingChar0, BruteForceMembership };

  IdealHandle radical;
  Method method;
  std::size_t derived_len;
  bool characteristic;
  std::optional<CharacteristicWitness> witness;
};

std::string to_string(RadicalReport::Method m);

/// Radical, its derived length, and whether it is characteristic.
RadicalReport analyze_radical(const LieAlgebra& algebra, const RadicalSearch& search = {});

}  // namespace lieder
