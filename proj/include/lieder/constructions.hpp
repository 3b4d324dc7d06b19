#pragma once

// Catalog of Lie algebras with exactly known structure, and seeded random
// solvable instances.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lieder/derivation.hpp"

namespace lieder {

LieAlgebra abelian(std::size_t n, FieldSpec field);
/// Basis x, y, z with [x, y] = z.
LieAlgebra heisenberg(FieldSpec field);
/// Basis x, y with [x, y] = y.
LieAlgebra affine_line(FieldSpec field);
/// Basis e, f, h with [e, f] = h, [h, e] = 2e, [h, f] = -2f. In
/// characteristic 2 the table is still returned (it is a Lie algebra, just
/// not simple) and the name carries a "(char 2, not simple)" suffix.
LieAlgebra sl2(FieldSpec field);
/// Upper triangular n x n matrices under the commutator, basis E_ij (i <= j)
/// in row-major order.
LieAlgebra borel_upper(std::size_t n, FieldSpec field);

struct DirectSum {
  LieAlgebra algebra;  ///< basis of the first summand, then the second
  IdealHandle first;
  IdealHandle second;
};

DirectSum direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// The same algebra written in the basis f_j = column j of `change` (old
/// coordinates). Throws InvalidParameter when `change` is singular.
LieAlgebra change_basis(const LieAlgebra& algebra, const Matrix& change);

struct CurrentAlgebra {
  LieAlgebra algebra;    ///< S (x) F[t]/(t^p), basis e_i (x) t^a at a * dim S + i
  IdealHandle radical;   ///< S (x) t F[t]/(t^p)
  DerivationMap d_dt;    ///< e_i (x) t^a -> a e_i (x) t^(a-1)
};

/// Requires S over GF(p) with [S, S] = S; InvalidParameter otherwise (this
/// rejects sl2 in characteristic 2).
CurrentAlgebra truncated_current_algebra(const LieAlgebra& s, std::uint32_t p);

/// sl2 (x) F[t]/(t^p) over GF(p).
CurrentAlgebra jacobson(std::uint32_t p);

/// Names such as "sl2", "abelian:3", "heisenberg", "affine", "borel:4",
/// "jacobson:5", joined by '+' for direct sums ("sl2+heisenberg"). Without an
/// explicit field, jacobson:p selects GF(p) and everything else Q.
LieAlgebra catalog_algebra(std::string_view name, std::optional<FieldSpec> field = std::nullopt);

struct InstanceOptions {
  std::size_t min_dim = 1;
  std::size_t max_dim = 8;
  /// Replace I by deeper derived terms until s(I) is at most this.
  std::optional<std::size_t> max_ideal_length;
  /// Largest |coefficient| used when combining Der(L) basis elements.
  std::int64_t derivation_coefficient_range = 2;
};

struct SolvableInstance {
  LieAlgebra algebra;
  IdealHandle ideal;
  DerivationMap derivation;
  std::string description;
};

/// borel_upper(m) + abelian(r) under a random unimodular change of basis,
/// with I drawn from derived terms, ideal closures of random vectors and the
/// center, and D a random integer combination of the Der(L) basis.
/// Deterministic in (seed, options, field).
SolvableInstance random_solvable_instance(std::uint64_t seed, const InstanceOptions& options,
                                          FieldSpec field);

}  // namespace lieder
