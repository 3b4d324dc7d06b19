#include "lieder/constructions.hpp"

#include <random>

namespace lieder {

namespace {

Scalar integer(std::int64_t n, FieldSpec f) { return Scalar::from_integer(n, f); }

Vector combination(std::size_t n, FieldSpec f,
                   std::initializer_list<std::pair<std::size_t, std::int64_t>> terms) {
  Vector v = zero_vector(n, f);
  for (const auto& [k, c] : terms) v[k] += integer(c, f);
  return v;
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng() % span);
}

// Unit lower times unit upper triangular with entries in {-1, 0, 1}: always
// invertible, with an integer inverse.
Matrix random_unimodular(std::size_t n, FieldSpec f, std::mt19937_64& rng) {
  Matrix lower = Matrix::identity(n, f), upper = Matrix::identity(n, f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      lower.at(i, j) = integer(uniform(rng, -1, 1), f);
      upper.at(j, i) = integer(uniform(rng, -1, 1), f);
    }
  }
  return lower * upper;
}

}  // namespace

LieAlgebra abelian(std::size_t n, FieldSpec field) {
  return LieAlgebra(field, n, "abelian:" + std::to_string(n));
}

LieAlgebra heisenberg(FieldSpec field) {
  LieAlgebra l(field, 3, "heisenberg");
  l.set_bracket(0, 1, combination(3, field, {{2, 1}}));
  return l;
}

LieAlgebra affine_line(FieldSpec field) {
  LieAlgebra l(field, 2, "affine");
  l.set_bracket(0, 1, combination(2, field, {{1, 1}}));
  return l;
}

LieAlgebra sl2(FieldSpec field) {
  const bool char2 = field.characteristic() == 2;
  LieAlgebra l(field, 3, char2 ? "sl2 (char 2, not simple)" : "sl2");
  constexpr std::size_t e = 0, f = 1, h = 2;
  l.set_bracket(e, f, combination(3, field, {{h, 1}}));
  l.set_bracket(h, e, combination(3, field, {{e, 2}}));
  l.set_bracket(h, f, combination(3, field, {{f, -2}}));
  return l;
}

LieAlgebra borel_upper(std::size_t n, FieldSpec field) {
  if (n == 0) throw InvalidParameter("borel_upper needs n >= 1");
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n, 0));
  std::size_t dim = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) index[i][j] = dim++;
  }
  LieAlgebra l(field, dim, "borel:" + std::to_string(n));
  // [E_ij, E_kl] = d_jk E_il - d_li E_kj
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t m = k; m < n; ++m) {
          Vector v = zero_vector(dim, field);
          if (j == k) v[index[i][m]] += Scalar::one(field);
          if (m == i) v[index[k][j]] -= Scalar::one(field);
          l.set_structure(index[i][j], index[k][m], v);
        }
      }
    }
  }
  return l;
}

DirectSum direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.field() != b.field()) {
    throw FieldMismatch("direct sum of algebras over " + a.field().to_string() + " and " +
                        b.field().to_string());
  }
  const FieldSpec f = a.field();
  const std::size_t n = a.dim() + b.dim();
  LieAlgebra sum(f, n, a.name() + "+" + b.name());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vector v = zero_vector(n, f);
      for (std::size_t k = 0; k < a.dim(); ++k) v[k] = a.constant(i, j, k);
      sum.set_structure(i, j, v);
    }
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      Vector v = zero_vector(n, f);
      for (std::size_t k = 0; k < b.dim(); ++k) v[a.dim() + k] = b.constant(i, j, k);
      sum.set_structure(a.dim() + i, a.dim() + j, v);
    }
  }
  std::vector<Vector> first, second;
  for (std::size_t i = 0; i < a.dim(); ++i) first.push_back(unit_vector(n, i, f));
  for (std::size_t i = 0; i < b.dim(); ++i) second.push_back(unit_vector(n, a.dim() + i, f));
  IdealHandle first_ideal(sum, Subspace::span(first, n, f));
  IdealHandle second_ideal(sum, Subspace::span(second, n, f));
  return DirectSum{std::move(sum), std::move(first_ideal), std::move(second_ideal)};
}

LieAlgebra change_basis(const LieAlgebra& algebra, const Matrix& change) {
  const std::size_t n = algebra.dim();
  if (change.rows() != n || change.cols() != n) throw AmbientMismatch("basis change has wrong size");
  const auto inv = inverse(change);
  if (!inv) throw InvalidParameter("basis change is singular");
  std::vector<Vector> columns;
  for (std::size_t j = 0; j < n; ++j) columns.push_back(change.column(j));
  LieAlgebra out(algebra.field(), n, algebra.name());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      out.set_bracket(a, b, inv->apply(bracket(algebra, columns[a], columns[b])));
    }
  }
  return out;
}

CurrentAlgebra truncated_current_algebra(const LieAlgebra& s, std::uint32_t p) {
  const FieldSpec f = s.field();
  if (!f.is_prime_field() || f.characteristic() != p) {
    throw InvalidParameter("truncated current algebra needs S over GF(" + std::to_string(p) + ")");
  }
  const std::size_t m = s.dim();
  const Subspace full_s = Subspace::full(m, f);
  if (m == 0 || !(bracket_spaces(s, full_s, full_s) == full_s)) {
    throw InvalidParameter("simple factor must be perfect ([S,S] = S); " + s.name() + " is not");
  }
  const std::size_t n = m * p;
  const auto idx = [m](std::size_t power, std::size_t i) { return power * m + i; };

  LieAlgebra l(f, n, "jacobson:" + std::to_string(p));
  if (s.name() != "sl2") l.set_name(s.name() + "(x)F[t]/(t^" + std::to_string(p) + ")");
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = 0; b < p; ++b) {
      if (a + b >= p) continue;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          Vector v = zero_vector(n, f);
          for (std::size_t k = 0; k < m; ++k) v[idx(a + b, k)] = s.constant(i, j, k);
          l.set_structure(idx(a, i), idx(b, j), v);
        }
      }
    }
  }

  std::vector<Vector> radical_basis;
  for (std::size_t a = 1; a < p; ++a) {
    for (std::size_t i = 0; i < m; ++i) radical_basis.push_back(unit_vector(n, idx(a, i), f));
  }
  Matrix d(n, n, f);
  for (std::size_t a = 1; a < p; ++a) {
    for (std::size_t i = 0; i < m; ++i) d.at(idx(a - 1, i), idx(a, i)) = integer(static_cast<std::int64_t>(a), f);
  }
  IdealHandle radical(l, Subspace::span(radical_basis, n, f));
  DerivationMap d_dt(l, std::move(d));
  return CurrentAlgebra{std::move(l), std::move(radical), std::move(d_dt)};
}

CurrentAlgebra jacobson(std::uint32_t p) { return truncated_current_algebra(sl2(FieldSpec::prime(p)), p); }

namespace {

LieAlgebra catalog_term(std::string_view term, FieldSpec field) {
  const auto colon = term.find(':');
  const std::string_view head = term.substr(0, colon);
  std::optional<std::uint64_t> arg;
  if (colon != std::string_view::npos) {
    const std::string digits(term.substr(colon + 1));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw InvalidParameter("bad catalog parameter in '" + std::string(term) + "'");
    }
    arg = std::stoull(digits);
  }
  const auto need_arg = [&]() {
    if (!arg) throw InvalidParameter("'" + std::string(head) + "' needs a parameter, e.g. " + std::string(head) + ":3");
    return *arg;
  };
  const auto no_arg = [&]() {
    if (arg) throw InvalidParameter("'" + std::string(head) + "' takes no parameter");
  };
  if (head == "abelian") return abelian(need_arg(), field);
  if (head == "borel") return borel_upper(need_arg(), field);
  if (head == "jacobson") {
    const auto p = need_arg();
    if (field != FieldSpec::prime(p)) {
      throw FieldMismatch("jacobson:" + std::to_string(p) + " lives over GF(" + std::to_string(p) +
                          "), not " + field.to_string());
    }
    return jacobson(static_cast<std::uint32_t>(p)).algebra;
  }
  no_arg();
  if (head == "heisenberg") return heisenberg(field);
  if (head == "affine") return affine_line(field);
  if (head == "sl2") return sl2(field);
  throw InvalidParameter("unknown catalog algebra '" + std::string(term) + "'");
}

}  // namespace

LieAlgebra catalog_algebra(std::string_view name, std::optional<FieldSpec> field) {
  std::vector<std::string_view> terms;
  std::size_t start = 0;
  while (true) {
    const auto plus = name.find('+', start);
    terms.push_back(name.substr(start, plus == std::string_view::npos ? plus : plus - start));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  if (!field) {
    field = FieldSpec::rationals();
    for (auto t : terms) {
      if (t.substr(0, 9) == "jacobson:") {
        const std::string digits(t.substr(9));
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
          throw InvalidParameter("bad catalog parameter in '" + std::string(t) + "'");
        }
        field = FieldSpec::prime(std::stoull(digits));
        break;
      }
    }
  }
  LieAlgebra result = catalog_term(terms.front(), *field);
  for (std::size_t i = 1; i < terms.size(); ++i) {
    result = direct_sum(result, catalog_term(terms[i], *field)).algebra;
  }
  result.set_name(std::string(name));
  return result;
}

SolvableInstance random_solvable_instance(std::uint64_t seed, const InstanceOptions& options,
                                          FieldSpec field) {
  std::mt19937_64 rng(seed);
  // (m, dim borel_upper(m)); shapes that fit in [min_dim, max_dim].
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  for (std::size_t m = 1; m <= 4; ++m) {
    const std::size_t bdim = m * (m + 1) / 2;
    for (std::size_t r = 0; bdim + r <= options.max_dim; ++r) {
      if (bdim + r >= options.min_dim) shapes.emplace_back(m, r);
    }
  }
  if (shapes.empty()) throw InvalidParameter("no instance shape fits the requested dimensions");
  const auto [m, r] = shapes[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(shapes.size()) - 1))];

  LieAlgebra base = r == 0 ? borel_upper(m, field) : direct_sum(borel_upper(m, field), abelian(r, field)).algebra;
  const std::size_t n = base.dim();
  LieAlgebra algebra = change_basis(base, random_unimodular(n, field, rng));
  algebra.set_name("borel:" + std::to_string(m) + "+abelian:" + std::to_string(r) + "@" +
                   std::to_string(seed));

  const Subspace full = Subspace::full(n, field);
  const auto series = derived_series(algebra, full);
  std::string ideal_kind;
  Subspace ideal = full;
  for (int attempt = 0; attempt < 8; ++attempt) {
    switch (uniform(rng, 0, 4)) {
      case 0:
        ideal = full;
        ideal_kind = "full";
        break;
      case 1: {
        const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(series.size()) - 2));
        ideal = series[j];
        ideal_kind = "derived:" + std::to_string(j);
        break;
      }
      case 2:
      case 3: {
        Vector x = zero_vector(n, field);
        for (auto& c : x) c = integer(uniform(rng, -1, 1), field);
        ideal = ideal_closure(algebra, Subspace::span({x}, n, field)).space();
        ideal_kind = "closure";
        const auto closure_series = derived_series(algebra, ideal);
        if (closure_series.size() > 2 && uniform(rng, 0, 1) == 1) {
          ideal = closure_series[1];
          ideal_kind = "closure-derived:1";
        }
        break;
      }
      default:
        ideal = center(algebra);
        ideal_kind = "center";
        break;
    }
    if (!ideal.is_zero()) break;
  }
  if (ideal.is_zero()) {
    ideal = series[series.size() - 2];
    ideal_kind = "derived:last";
  }
  if (options.max_ideal_length) {
    auto len = *derived_length(algebra, ideal);
    while (len > *options.max_ideal_length) {
      ideal = bracket_spaces(algebra, ideal, ideal);
      ideal_kind += "'";
      --len;
    }
  }

  const auto der = derivation_algebra(algebra);
  Matrix d(n, n, field);
  const std::int64_t range = options.derivation_coefficient_range;
  for (const auto& b : der) d += integer(uniform(rng, -range, range), field) * b;

  IdealHandle handle(algebra, ideal);
  DerivationMap derivation(algebra, std::move(d));
  std::string description = algebra.name() + " over " + field.to_string() + ", I=" + ideal_kind +
                            " (dim " + std::to_string(handle.dim()) + "), D in span of " +
                            std::to_string(der.size()) + " derivations";
  return SolvableInstance{std::move(algebra), std::move(handle), std::move(derivation),
                          std::move(description)};
}

}  // namespace lieder
