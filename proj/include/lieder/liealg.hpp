#pragma once

// Lie algebras given by structure constants, and the ideal machinery built on
// brackets of subspaces.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lieder/linalg.hpp"

namespace lieder {

/// Finite-dimensional algebra with basis e_0..e_{n-1} (printed 1-based) and
/// [e_i, e_j] = sum_k c[i][j][k] e_k. Construction does not check the Lie
/// axioms; call validate() or build through the catalog.
class LieAlgebra {
 public:
  LieAlgebra(FieldSpec field, std::size_t dim, std::string name = "");

  FieldSpec field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Sets [e_i, e_j] only (0-based); the table is not symmetrized.
  void set_structure(std::size_t i, std::size_t j, const Vector& value);
  /// Sets [e_i, e_j] = value and [e_j, e_i] = -value.
  void set_bracket(std::size_t i, std::size_t j, const Vector& value);

  /// Coordinates of [e_i, e_j].
  const Vector& structure(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[i * dim_ + j][k];
  }

  Vector zero() const { return zero_vector(dim_, field_); }
  Vector basis_vector(std::size_t i) const { return unit_vector(dim_, i, field_); }

 private:
  struct Term {
    std::size_t k;
    Scalar c;
  };

  void refresh_sparse(std::size_t i, std::size_t j);

  friend Vector bracket(const LieAlgebra& algebra, std::span<const Scalar> x,
                        std::span<const Scalar> y);

  FieldSpec field_;
  std::size_t dim_;
  std::string name_;
  std::vector<Vector> table_;
  std::vector<std::vector<Term>> sparse_;
};

struct ValidationReport {
  enum class Violation { None, Antisymmetry, Jacobi };

  Violation violation = Violation::None;
  /// 1-based basis indices of the offending pair or triple.
  std::vector<std::size_t> indices;
  std::string message;

  bool ok() const noexcept { return violation == Violation::None; }
};

/// Checks c[i][i] = 0, c[j][i] = -c[i][j] and Jacobi on basis triples;
/// reports the first violation in index order.
ValidationReport validate(const LieAlgebra& algebra);

Vector bracket(const LieAlgebra& algebra, std::span<const Scalar> x, std::span<const Scalar> y);

/// span{[u, v] : u in a, v in b}.
Subspace bracket_spaces(const LieAlgebra& algebra, const Subspace& a, const Subspace& b);

bool is_ideal(const LieAlgebra& algebra, const Subspace& a);

/// A subspace already verified to be an ideal of the algebra it was built for.
class IdealHandle {
 public:
  /// Throws NotAnIdeal when [space, L] is not contained in space.
  IdealHandle(const LieAlgebra& algebra, Subspace space);

  const Subspace& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }

  bool operator==(const IdealHandle& rhs) const { return space_ == rhs.space_; }

 private:
  struct Trusted {};
  IdealHandle(Trusted, Subspace space) : space_(std::move(space)) {}

  friend IdealHandle ideal_closure(const LieAlgebra&, const Subspace&);

  Subspace space_;
};

/// Smallest ideal containing s.
IdealHandle ideal_closure(const LieAlgebra& algebra, const Subspace& s);

/// a, [a,a], [[a,a],[a,a]], ... ending at the zero subspace or at the first
/// term equal to its predecessor. The input should be an ideal or subalgebra.
std::vector<Subspace> derived_series(const LieAlgebra& algebra, const Subspace& a);

/// Least k with a^(k) = 0, or nullopt when the series stalls at a nonzero term.
std::optional<std::size_t> derived_length(const LieAlgebra& algebra, const Subspace& a);

/// Matrix of y -> [x, y].
Matrix adjoint(const LieAlgebra& algebra, std::span<const Scalar> x);

Subspace center(const LieAlgebra& algebra);

/// kappa(e_i, e_j) = tr(ad e_i ad e_j).
Matrix killing_form(const LieAlgebra& algebra);

}  // namespace lieder
