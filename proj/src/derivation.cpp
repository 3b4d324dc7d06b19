#include "lieder/derivation.hpp"

#include <string>

namespace lieder {

namespace {

void require_square(const LieAlgebra& algebra, const Matrix& m) {
  if (m.rows() != algebra.dim() || m.cols() != algebra.dim()) {
    throw AmbientMismatch("derivation must be " + std::to_string(algebra.dim()) + "x" +
                          std::to_string(algebra.dim()) + ", got " + std::to_string(m.rows()) +
                          "x" + std::to_string(m.cols()));
  }
  if (m.field() != algebra.field()) throw FieldMismatch("derivation over a different field");
}

}  // namespace

bool is_derivation(const LieAlgebra& algebra, const Matrix& m) {
  require_square(algebra, m);
  const std::size_t n = algebra.dim();
  std::vector<Vector> images;
  images.reserve(n);
  for (std::size_t j = 0; j < n; ++j) images.push_back(m.column(j));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = m.apply(algebra.structure(i, j));
      Vector rhs = bracket(algebra, images[i], algebra.basis_vector(j));
      rhs = add(rhs, bracket(algebra, algebra.basis_vector(i), images[j]));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

DerivationMap::DerivationMap(const LieAlgebra& algebra, Matrix matrix) : matrix_(std::move(matrix)) {
  if (!is_derivation(algebra, matrix_)) throw NotADerivation("matrix violates the Leibniz rule");
}

DerivationMap ad(const LieAlgebra& algebra, std::span<const Scalar> x) {
  return DerivationMap(DerivationMap::Trusted{}, adjoint(algebra, x));
}

std::vector<Matrix> derivation_algebra(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  const FieldSpec f = algebra.field();
  const auto unknown = [n](std::size_t r, std::size_t c) { return c * n + r; };

  // For i < j and each coordinate k:
  //   sum_l c_ij^l D(k,l) - sum_l c_lj^k D(l,i) - sum_l c_il^k D(l,j) = 0
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vector row = zero_vector(n * n, f);
        for (std::size_t l = 0; l < n; ++l) {
          row[unknown(k, l)] += algebra.constant(i, j, l);
          row[unknown(l, i)] -= algebra.constant(l, j, k);
          row[unknown(l, j)] -= algebra.constant(i, l, k);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  const Subspace solutions = kernel(Matrix::from_rows(rows, n * n, f));

  std::vector<Matrix> basis;
  basis.reserve(solutions.dim());
  for (std::size_t b = 0; b < solutions.dim(); ++b) {
    Matrix d(n, n, f);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t r = 0; r < n; ++r) d.at(r, c) = solutions.basis().at(b, unknown(r, c));
    }
    basis.push_back(std::move(d));
  }
  return basis;
}

Subspace power_image(const Matrix& d, const Subspace& a, std::size_t m) {
  Subspace image = a;
  for (std::size_t step = 0; step < m && !image.is_zero(); ++step) image = apply_map(d, image);
  return image;
}

DClosure d_closure(const LieAlgebra& algebra, const IdealHandle& ideal, const DerivationMap& d,
                   std::size_t k) {
  Subspace current = ideal.space();
  Subspace power = ideal.space();
  std::vector<Subspace> terms{current};
  std::optional<std::size_t> stabilized;
  for (std::size_t m = 1; m <= k; ++m) {
    power = apply_map(d.matrix(), power);
    Subspace next = subspace_sum(current, power);
    if (next == current) {
      stabilized = m - 1;
      break;
    }
    current = std::move(next);
    terms.push_back(current);
  }
  // Constructing the handle re-verifies the ideal property of the result.
  return DClosure{IdealHandle(algebra, current), stabilized, std::move(terms)};
}

bool leibniz_expand_check(const LieAlgebra& algebra, const Matrix& d, std::span<const Scalar> x,
                          std::span<const Scalar> y, std::size_t k) {
  require_square(algebra, d);
  const FieldSpec f = algebra.field();
  std::vector<Vector> dx{Vector(x.begin(), x.end())};
  std::vector<Vector> dy{Vector(y.begin(), y.end())};
  for (std::size_t s = 1; s <= k; ++s) {
    dx.push_back(d.apply(dx.back()));
    dy.push_back(d.apply(dy.back()));
  }
  Vector lhs = bracket(algebra, x, y);
  for (std::size_t s = 0; s < k; ++s) lhs = d.apply(lhs);

  Vector rhs = algebra.zero();
  mpz_class binom = 1;  // C(k, s)
  for (std::size_t s = 0; s <= k; ++s) {
    axpy(Scalar::from_integer(binom, f), bracket(algebra, dx[s], dy[k - s]), rhs);
    binom = binom * static_cast<unsigned long>(k - s) / static_cast<unsigned long>(s + 1);
  }
  return lhs == rhs;
}

}  // namespace lieder
