#include "lieder/linalg.hpp"

#include <string>
#include <utility>

namespace lieder {

namespace {

void require_same(FieldSpec a, FieldSpec b) {
  if (a != b) throw FieldMismatch("operands over " + a.to_string() + " and " + b.to_string());
}

void require_ambient(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw AmbientMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                          std::to_string(b));
  }
}

// Elimination kernels work on raw element arrays; converting once per call
// keeps the inner loops free of variant dispatch.

struct ModArith {
  using Elem = std::uint32_t;
  std::uint32_t p;

  bool zero(Elem a) const { return a == 0; }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t{a} * b % p); }
  Elem inv(Elem a) const {
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e > 0) {
      if (e & 1U) result = result * base % p;
      base = base * base % p;
      e >>= 1U;
    }
    return static_cast<Elem>(result);
  }
  // a -= f * b
  void submul(Elem& a, Elem f, Elem b) const {
    const Elem t = mul(f, b);
    a = a >= t ? a - t : a + (p - t);
  }
  Elem from(const Scalar& s) const { return s.residue(); }
  Scalar to(Elem e, FieldSpec field) const {
    return Scalar::from_integer(static_cast<std::int64_t>(e), field);
  }
};

struct RatArith {
  using Elem = mpq_class;

  bool zero(const Elem& a) const { return sgn(a) == 0; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return 1 / a; }
  void submul(Elem& a, const Elem& f, const Elem& b) const { a -= f * b; }
  Elem from(const Scalar& s) const { return s.rational(); }
  Scalar to(const Elem& e, FieldSpec field) const {
    return Scalar::from_fraction(e.get_num(), e.get_den(), field);
  }
};

template <class Arith>
std::vector<std::size_t> rref_in_place(std::vector<typename Arith::Elem>& a, std::size_t rows,
                                       std::size_t cols, const Arith& ar) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!ar.zero(a[i * cols + c])) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[pivot * cols + j], a[r * cols + j]);
    }
    const auto scale = ar.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = ar.mul(a[r * cols + j], scale);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || ar.zero(a[i * cols + c])) continue;
      const auto f = a[i * cols + c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!ar.zero(a[r * cols + j])) ar.submul(a[i * cols + j], f, a[r * cols + j]);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class Arith>
RrefResult rref_with(const Matrix& m, const Arith& ar) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<typename Arith::Elem> a;
  a.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (const auto& s : m.row(i)) a.push_back(ar.from(s));
  }
  auto pivots = rref_in_place(a, rows, cols, ar);
  Matrix out(rows, cols, m.field());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!ar.zero(a[i * cols + j])) out.at(i, j) = ar.to(a[i * cols + j], m.field());
    }
  }
  const std::size_t rank = pivots.size();
  return RrefResult{std::move(out), rank, std::move(pivots)};
}

}  // namespace

Vector zero_vector(std::size_t n, FieldSpec field) { return Vector(n, Scalar(field)); }

Vector unit_vector(std::size_t n, std::size_t i, FieldSpec field) {
  Vector v = zero_vector(n, field);
  v.at(i) = Scalar::one(field);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

void axpy(const Scalar& a, std::span<const Scalar> x, std::span<Scalar> y) {
  require_ambient(x.size(), y.size(), "axpy");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
}

Vector add(std::span<const Scalar> x, std::span<const Scalar> y) {
  require_ambient(x.size(), y.size(), "add");
  Vector out(x.begin(), x.end());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  return out;
}

Vector scale(const Scalar& a, std::span<const Scalar> x) {
  Vector out(x.begin(), x.end());
  for (auto& s : out) s *= a;
  return out;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar(field)) {}

Matrix Matrix::identity(std::size_t n, FieldSpec field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols, FieldSpec field) {
  Matrix m(rows.size(), cols, field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_ambient(rows[i].size(), cols, "matrix row");
    for (std::size_t j = 0; j < cols; ++j) {
      require_same(rows[i][j].field(), field);
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows, FieldSpec field) {
  return from_rows(columns, rows, field).transpose();
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

bool Matrix::is_zero() const { return lieder::is_zero(data_); }

Vector Matrix::apply(std::span<const Scalar> v) const {
  require_ambient(cols_, v.size(), "matrix-vector product");
  Vector out = zero_vector(rows_, field_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    }
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_ambient(rows_, rhs.rows_, "matrix sum rows");
  require_ambient(cols_, rhs.cols_, "matrix sum cols");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_ambient(rows_, rhs.rows_, "matrix difference rows");
  require_ambient(cols_, rhs.cols_, "matrix difference cols");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_ambient(a.cols_, b.rows_, "matrix product");
  require_same(a.field_, b.field_);
  Matrix out(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b.at(k, j).is_zero()) out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix out(m);
  for (auto& e : out.data_) e *= s;
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && field_ == rhs.field_ && data_ == rhs.data_;
}

Matrix power(const Matrix& m, std::size_t k) {
  require_ambient(m.rows(), m.cols(), "matrix power");
  Matrix result = Matrix::identity(m.rows(), m.field());
  Matrix base = m;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Scalar trace(const Matrix& m) {
  require_ambient(m.rows(), m.cols(), "trace");
  Scalar t(m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

Scalar determinant(const Matrix& m) {
  require_ambient(m.rows(), m.cols(), "determinant");
  const std::size_t n = m.rows();
  Matrix a = m;
  Scalar det = Scalar::one(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = n;
    for (std::size_t r = c; r < n; ++r) {
      if (!a.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) return Scalar(m.field());
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(c, j));
      det = -det;
    }
    det *= a.at(c, c);
    const Scalar inv = a.at(c, c).inv();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a.at(r, c).is_zero()) continue;
      const Scalar f = a.at(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) a.at(r, j) -= f * a.at(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  require_ambient(m.rows(), m.cols(), "inverse");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(m.field());
  }
  auto reduced = rref(aug);
  if (reduced.rank < n || reduced.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = reduced.form.at(i, n + j);
  }
  return inv;
}

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
  require_ambient(m.rows(), b.size(), "solve");
  Matrix aug(m.rows(), m.cols() + 1, m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  auto reduced = rref(aug);
  if (!reduced.pivots.empty() && reduced.pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.cols(), m.field());
  for (std::size_t i = 0; i < reduced.rank; ++i) x[reduced.pivots[i]] = reduced.form.at(i, m.cols());
  return x;
}

RrefResult rref(const Matrix& m) {
  if (m.field().is_prime_field()) return rref_with(m, ModArith{m.field().characteristic()});
  return rref_with(m, RatArith{});
}

Subspace Subspace::zero(std::size_t n, FieldSpec field) { return Subspace(Matrix(0, n, field), {}); }

Subspace Subspace::full(std::size_t n, FieldSpec field) {
  std::vector<std::size_t> pivots(n);
  for (std::size_t i = 0; i < n; ++i) pivots[i] = i;
  return Subspace(Matrix::identity(n, field), std::move(pivots));
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t n, FieldSpec field) {
  return row_space(Matrix::from_rows(vectors, n, field));
}

Subspace Subspace::row_space(const Matrix& m) {
  auto reduced = rref(m);
  Matrix basis(reduced.rank, m.cols(), m.field());
  for (std::size_t i = 0; i < reduced.rank; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) basis.at(i, j) = reduced.form.at(i, j);
  }
  return Subspace(std::move(basis), std::move(reduced.pivots));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.emplace_back(basis_.row(i).begin(), basis_.row(i).end());
  return out;
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
  require_ambient(ambient_dim(), v.size(), "subspace membership");
  Vector out(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar coeff = out[pivots_[i]];
    if (!coeff.is_zero()) axpy(-coeff, basis_.row(i), out);
  }
  return out;
}

bool Subspace::contains(std::span<const Scalar> v) const { return lieder::is_zero(reduce(v)); }

bool Subspace::operator==(const Subspace& rhs) const { return basis_ == rhs.basis_; }

Subspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  auto reduced = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : reduced.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(n, free, m.field());
    for (std::size_t i = 0; i < reduced.rank; ++i) v[reduced.pivots[i]] = -reduced.form.at(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, n, m.field());
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_ambient(a.ambient_dim(), b.ambient_dim(), "subspace sum");
  require_same(a.field(), b.field());
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const std::size_t n = a.ambient_dim();
  Matrix stacked(a.dim() + b.dim(), n, a.field());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) stacked.at(i, j) = a.basis().at(i, j);
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) stacked.at(a.dim() + i, j) = b.basis().at(i, j);
  }
  return Subspace::row_space(stacked);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  require_ambient(a.ambient_dim(), b.ambient_dim(), "subspace intersection");
  require_same(a.field(), b.field());
  const std::size_t n = a.ambient_dim();
  // x = A^T alpha = B^T beta  <=>  [A^T | -B^T] (alpha, beta) = 0
  Matrix system(n, a.dim() + b.dim(), a.field());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < a.dim(); ++i) system.at(j, i) = a.basis().at(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i) system.at(j, a.dim() + i) = -b.basis().at(i, j);
  }
  const Subspace coeffs = kernel(system);
  std::vector<Vector> vectors;
  for (std::size_t r = 0; r < coeffs.dim(); ++r) {
    Vector x = zero_vector(n, a.field());
    for (std::size_t i = 0; i < a.dim(); ++i) axpy(coeffs.basis().at(r, i), a.basis_vector(i), x);
    vectors.push_back(std::move(x));
  }
  return Subspace::span(vectors, n, a.field());
}

bool subspace_contains(const Subspace& a, std::span<const Scalar> v) { return a.contains(v); }

bool subspace_leq(const Subspace& a, const Subspace& b) {
  require_ambient(a.ambient_dim(), b.ambient_dim(), "subspace inclusion");
  require_same(a.field(), b.field());
  if (a.dim() > b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!b.contains(a.basis_vector(i))) return false;
  }
  return true;
}

bool subspace_eq(const Subspace& a, const Subspace& b) {
  require_ambient(a.ambient_dim(), b.ambient_dim(), "subspace equality");
  return a == b;
}

Subspace apply_map(const Matrix& m, const Subspace& a) {
  require_ambient(m.rows(), m.cols(), "apply_map (square matrix)");
  require_ambient(m.cols(), a.ambient_dim(), "apply_map");
  std::vector<Vector> images;
  images.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) images.push_back(m.apply(a.basis_vector(i)));
  return Subspace::span(images, a.ambient_dim(), a.field());
}

}  // namespace lieder
