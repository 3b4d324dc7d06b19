#pragma once

// Derivations of a Lie algebra as n x n matrices (column j = image of e_j).

#include <cstddef>
#include <optional>
#include <vector>

#include "lieder/liealg.hpp"

namespace lieder {

/// Leibniz rule D[x,y] = [Dx,y] + [x,Dy] on basis pairs.
bool is_derivation(const LieAlgebra& algebra, const Matrix& m);

/// A matrix verified to be a derivation of the algebra it was built for.
class DerivationMap {
 public:
  /// Throws NotADerivation when the Leibniz rule fails on some basis pair.
  DerivationMap(const LieAlgebra& algebra, Matrix matrix);

  const Matrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }

  Vector apply(std::span<const Scalar> v) const { return matrix_.apply(v); }

 private:
  struct Trusted {};
  DerivationMap(Trusted, Matrix matrix) : matrix_(std::move(matrix)) {}

  friend DerivationMap ad(const LieAlgebra&, std::span<const Scalar>);

  Matrix matrix_;
};

/// Inner derivation y -> [x, y].
DerivationMap ad(const LieAlgebra& algebra, std::span<const Scalar> x);

/// Basis of Der(L) as the null space of the Leibniz conditions. Unknown
/// D(r, c) (coordinate r of the image of e_c) sits at position c * n + r, so
/// the returned basis is the canonical kernel basis in that ordering.
std::vector<Matrix> derivation_algebra(const LieAlgebra& algebra);

/// D^m(a); m = 0 returns a.
Subspace power_image(const Matrix& d, const Subspace& a, std::size_t m);
inline Subspace power_image(const DerivationMap& d, const Subspace& a, std::size_t m) {
  return power_image(d.matrix(), a, m);
}

struct DClosure {
  IdealHandle ideal;                       ///< J_k, or J_m when it stabilized at m < k
  std::optional<std::size_t> stabilized_at;
  std::vector<Subspace> terms;             ///< J_0, J_1, ... as computed
};

/// J_k = I + D(I) + ... + D^k(I). Each J_m is checked to be an ideal; a
/// failure there throws NotAnIdeal (it would contradict the Leibniz rule).
DClosure d_closure(const LieAlgebra& algebra, const IdealHandle& ideal, const DerivationMap& d,
                   std::size_t k);

/// D^k[x,y] == sum_s C(k,s) [D^s x, D^{k-s} y], with binomials formed over the
/// integers and then mapped into the field. Accepts any matrix so callers can
/// probe non-derivations.
bool leibniz_expand_check(const LieAlgebra& algebra, const Matrix& d, std::span<const Scalar> x,
                          std::span<const Scalar> y, std::size_t k);

}  // namespace lieder
