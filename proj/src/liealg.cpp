#include "lieder/liealg.hpp"

#include <sstream>

namespace lieder {

namespace {

void require_ambient(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw AmbientMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                          std::to_string(b));
  }
}

}  // namespace

LieAlgebra::LieAlgebra(FieldSpec field, std::size_t dim, std::string name)
    : field_(field),
      dim_(dim),
      name_(std::move(name)),
      table_(dim * dim, zero_vector(dim, field)),
      sparse_(dim * dim) {}

void LieAlgebra::set_structure(std::size_t i, std::size_t j, const Vector& value) {
  if (i >= dim_ || j >= dim_) throw InvalidParameter("basis index out of range");
  require_ambient(value.size(), dim_, "structure constants");
  for (const auto& s : value) {
    if (s.field() != field_) throw FieldMismatch("structure constant over wrong field");
  }
  table_[i * dim_ + j] = value;
  refresh_sparse(i, j);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  set_structure(i, j, value);
  Vector negated = value;
  for (auto& s : negated) s = -s;
  set_structure(j, i, negated);
}

void LieAlgebra::refresh_sparse(std::size_t i, std::size_t j) {
  auto& terms = sparse_[i * dim_ + j];
  terms.clear();
  const auto& v = table_[i * dim_ + j];
  for (std::size_t k = 0; k < dim_; ++k) {
    if (!v[k].is_zero()) terms.push_back(Term{k, v[k]});
  }
}

ValidationReport validate(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  ValidationReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto& cij = algebra.structure(i, j);
      const auto& cji = algebra.structure(j, i);
      for (std::size_t k = 0; k < n; ++k) {
        // c[i][i] must vanish outright: 2 c[i][i] = 0 says nothing in char 2.
        const bool bad = i == j ? !cij[k].is_zero() : !(cij[k] + cji[k]).is_zero();
        if (bad) {
          report.violation = ValidationReport::Violation::Antisymmetry;
          report.indices = {i + 1, j + 1};
          std::ostringstream msg;
          msg << "antisymmetry fails at (" << i + 1 << "," << j + 1 << "): coefficient of e_"
              << k + 1 << " is " << cij[k] << " in [e_" << i + 1 << ",e_" << j + 1 << "] and "
              << cji[k] << " in [e_" << j + 1 << ",e_" << i + 1 << "]";
          report.message = msg.str();
          return report;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t l = j + 1; l < n; ++l) {
        const Vector ei = algebra.basis_vector(i);
        const Vector ej = algebra.basis_vector(j);
        const Vector el = algebra.basis_vector(l);
        Vector sum = bracket(algebra, algebra.structure(i, j), el);
        sum = add(sum, bracket(algebra, algebra.structure(j, l), ei));
        sum = add(sum, bracket(algebra, algebra.structure(l, i), ej));
        if (!is_zero(sum)) {
          report.violation = ValidationReport::Violation::Jacobi;
          report.indices = {i + 1, j + 1, l + 1};
          std::ostringstream msg;
          msg << "Jacobi identity fails on (" << i + 1 << "," << j + 1 << "," << l + 1 << ")";
          report.message = msg.str();
          return report;
        }
      }
    }
  }
  return report;
}

Vector bracket(const LieAlgebra& algebra, std::span<const Scalar> x, std::span<const Scalar> y) {
  const std::size_t n = algebra.dim();
  require_ambient(x.size(), n, "bracket (left)");
  require_ambient(y.size(), n, "bracket (right)");
  Vector out = algebra.zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const auto& terms = algebra.sparse_[i * n + j];
      if (terms.empty()) continue;
      const Scalar xy = x[i] * y[j];
      for (const auto& t : terms) out[t.k] += xy * t.c;
    }
  }
  return out;
}

Subspace bracket_spaces(const LieAlgebra& algebra, const Subspace& a, const Subspace& b) {
  require_ambient(a.ambient_dim(), algebra.dim(), "bracket_spaces");
  require_ambient(b.ambient_dim(), algebra.dim(), "bracket_spaces");
  std::vector<Vector> products;
  products.reserve(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      Vector v = bracket(algebra, a.basis_vector(i), b.basis_vector(j));
      if (!is_zero(v)) products.push_back(std::move(v));
    }
  }
  return Subspace::span(products, algebra.dim(), algebra.field());
}

bool is_ideal(const LieAlgebra& algebra, const Subspace& a) {
  require_ambient(a.ambient_dim(), algebra.dim(), "is_ideal");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < algebra.dim(); ++j) {
      if (!a.contains(bracket(algebra, a.basis_vector(i), algebra.basis_vector(j)))) return false;
    }
  }
  return true;
}

IdealHandle::IdealHandle(const LieAlgebra& algebra, Subspace space) : space_(std::move(space)) {
  if (!is_ideal(algebra, space_)) {
    throw NotAnIdeal("subspace of dimension " + std::to_string(space_.dim()) +
                     " is not an ideal of " + (algebra.name().empty() ? "L" : algebra.name()));
  }
}

IdealHandle ideal_closure(const LieAlgebra& algebra, const Subspace& s) {
  require_ambient(s.ambient_dim(), algebra.dim(), "ideal_closure");
  const Subspace full = Subspace::full(algebra.dim(), algebra.field());
  Subspace current = s;
  // Each pass either stops or raises the dimension, so n passes suffice.
  for (std::size_t step = 0; step <= algebra.dim(); ++step) {
    Subspace next = subspace_sum(current, bracket_spaces(algebra, current, full));
    if (next == current) break;
    current = std::move(next);
  }
  return IdealHandle(IdealHandle::Trusted{}, std::move(current));
}

std::vector<Subspace> derived_series(const LieAlgebra& algebra, const Subspace& a) {
  require_ambient(a.ambient_dim(), algebra.dim(), "derived_series");
  std::vector<Subspace> series{a};
  for (std::size_t step = 0; step <= algebra.dim() && !series.back().is_zero(); ++step) {
    Subspace next = bracket_spaces(algebra, series.back(), series.back());
    const bool stable = next == series.back();
    series.push_back(std::move(next));
    if (stable) break;
  }
  return series;
}

std::optional<std::size_t> derived_length(const LieAlgebra& algebra, const Subspace& a) {
  const auto series = derived_series(algebra, a);
  if (!series.back().is_zero()) return std::nullopt;
  return series.size() - 1;
}

Matrix adjoint(const LieAlgebra& algebra, std::span<const Scalar> x) {
  const std::size_t n = algebra.dim();
  require_ambient(x.size(), n, "adjoint");
  Matrix m(n, n, algebra.field());
  for (std::size_t j = 0; j < n; ++j) {
    const Vector image = bracket(algebra, x, algebra.basis_vector(j));
    for (std::size_t r = 0; r < n; ++r) m.at(r, j) = image[r];
  }
  return m;
}

Subspace center(const LieAlgebra& algebra) {
  // x in Z(L) iff [x, e_j] = 0 for all j: stack -ad(e_j) restricted to x.
  const std::size_t n = algebra.dim();
  Matrix stacked(n * n, n, algebra.field());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& cij = algebra.structure(i, j);
      for (std::size_t k = 0; k < n; ++k) stacked.at(j * n + k, i) = cij[k];
    }
  }
  return kernel(stacked);
}

Matrix killing_form(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  std::vector<Matrix> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(adjoint(algebra, algebra.basis_vector(i)));
  Matrix kappa(n, n, algebra.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      kappa.at(i, j) = trace(ads[i] * ads[j]);
      kappa.at(j, i) = kappa.at(i, j);
    }
  }
  return kappa;
}

}  // namespace lieder
