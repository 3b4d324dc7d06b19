#include "lieder/bounds.hpp"

#include <stdexcept>

namespace lieder {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw InvalidParameter("bound value overflows 64 bits");
  return out;
}

// f_n(0..k_max); the previous row is needed up to 2 k_max.
std::vector<std::uint64_t> bound_row(std::size_t n, std::size_t k_max) {
  std::vector<std::uint64_t> row(k_max + 1);
  if (n == 1) {
    for (std::size_t k = 0; k <= k_max; ++k) row[k] = k + 1;
    return row;
  }
  const auto lower = bound_row(n - 1, 2 * k_max);
  row[0] = n;
  for (std::size_t k = 1; k <= k_max; ++k) row[k] = checked_add(checked_add(row[k - 1], lower[2 * k]), 1);
  return row;
}

std::string label_of(const LieAlgebra& algebra) {
  return algebra.name().empty() ? "dim " + std::to_string(algebra.dim()) : algebra.name();
}

}  // namespace

std::size_t kummer_carries(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  if (p < 2) throw InvalidParameter("base must be at least 2");
  std::size_t carries = 0;
  std::uint64_t carry = 0;
  while (a > 0 || b > 0 || carry > 0) {
    const std::uint64_t digit_sum = a % p + b % p + carry;
    carry = digit_sum >= p ? 1 : 0;
    carries += carry;
    a /= p;
    b /= p;
  }
  return carries;
}

bool central_binomial_divisible(std::uint64_t p, std::size_t k) {
  if (k < 1 || k > 63) throw InvalidParameter("k must lie in [1, 63]");
  const std::uint64_t half = std::uint64_t{1} << (k - 1);
  return kummer_carries(p, half, half) > 0;
}

bool below_log2(std::size_t n, std::uint64_t p) {
  if (n >= 64) return false;
  return (std::uint64_t{1} << n) < p;
}

std::size_t admissible_depth(std::uint64_t p) {
  if (p == 2 || !is_prime(p)) throw InvalidPrime(std::to_string(p) + " is not an odd prime");
  std::size_t n = 0;
  while (below_log2(n + 1, p)) ++n;
  return n;
}

std::uint64_t bound_f(std::size_t n, std::size_t k) {
  if (n == 0) throw InvalidParameter("bound_f needs derived length n >= 1");
  return bound_row(n, k).back();
}

BoundTable bound_table(std::size_t n, std::size_t k_max) {
  if (n == 0) throw InvalidParameter("bound_table needs derived length n >= 1");
  return BoundTable{n, bound_row(n, k_max),
                    n == 1 ? "f_1(k) = k + 1"
                           : "f_" + std::to_string(n) + "(0) = " + std::to_string(n) + ", f_" +
                                 std::to_string(n) + "(k) = f_" + std::to_string(n) + "(k-1) + f_" +
                                 std::to_string(n - 1) + "(2k) + 1"};
}

std::vector<mpq_class> bound_polynomial(std::size_t n) {
  if (n == 0) throw InvalidParameter("bound_polynomial needs n >= 1");
  const auto values = bound_row(n, 2 * n);
  const FieldSpec q = FieldSpec::rationals();
  Matrix vandermonde(n + 1, n + 1, q);
  Vector rhs;
  for (std::size_t k = 0; k <= n; ++k) {
    mpz_class power = 1;
    for (std::size_t d = 0; d <= n; ++d) {
      vandermonde.at(k, d) = Scalar::from_integer(power, q);
      power *= static_cast<unsigned long>(k);
    }
    rhs.push_back(Scalar::from_integer(mpz_class(std::to_string(values[k])), q));
  }
  const auto solution = solve(vandermonde, rhs);
  if (!solution) throw std::logic_error("Vandermonde system is singular");
  std::vector<mpq_class> coefficients;
  for (const auto& s : *solution) coefficients.push_back(s.rational());
  for (std::size_t k = n + 1; k <= 2 * n; ++k) {
    const mpq_class expected(mpz_class(std::to_string(values[k])));
    if (evaluate_polynomial(coefficients, k) != expected) {
      throw std::logic_error("f_" + std::to_string(n) + " leaves its interpolant at k = " +
                             std::to_string(k));
    }
  }
  return coefficients;
}

std::optional<std::size_t> doubling_crossover(std::size_t n, std::size_t k_max, bool halved) {
  if (k_max > 56) throw InvalidParameter("k_max must be at most 56");
  const auto row = bound_row(n, k_max);
  std::optional<std::size_t> start;
  for (std::size_t k = 0; k <= k_max; ++k) {
    // f < 2^(k-1) n  <=>  2 f < 2^k n
    const mpz_class lhs = mpz_class(std::to_string(row[k])) * (halved ? 2 : 1);
    const mpz_class rhs = mpz_class(static_cast<unsigned long>(n)) << static_cast<mp_bitcnt_t>(k);
    if (lhs < rhs) {
      if (!start) start = k;
    } else {
      start.reset();
    }
  }
  return start;
}

mpq_class evaluate_polynomial(const std::vector<mpq_class>& coefficients, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::Solvability: return "solvability";
    case Theorem::Degree: return "degree";
    case Theorem::Estimation: return "estimation";
  }
  return "unknown";
}

TheoremCheckReport check_solvability_theorem(const LieAlgebra& algebra, const IdealHandle& ideal,
                                             const DerivationMap& d,
                                             const std::string& derivation_label) {
  const auto n = derived_length(algebra, ideal.space());
  if (!n) throw InvalidParameter("ideal is not solvable");
  const FieldSpec f = algebra.field();
  const bool hypotheses = !f.is_prime_field() || below_log2(*n, f.characteristic());
  const auto closure = d_closure(algebra, ideal, d, 1);
  const auto observed = derived_length(algebra, closure.ideal.space());
  const std::uint64_t bound = 2 * static_cast<std::uint64_t>(*n);
  return TheoremCheckReport{
      Theorem::Solvability, hypotheses, observed, bound, observed && *observed <= bound,
      CheckContext{label_of(algebra), algebra.dim(), ideal.dim(), closure.ideal.dim(),
                   derivation_label, 1}};
}

std::vector<TheoremCheckReport> check_degree_theorem(const LieAlgebra& algebra,
                                                     const IdealHandle& ideal,
                                                     const DerivationMap& d, std::size_t k_max,
                                                     const std::string& derivation_label) {
  if (algebra.field().is_prime_field()) {
    throw WrongCharacteristic("the polynomial bound is only established in characteristic 0");
  }
  const auto n = derived_length(algebra, ideal.space());
  if (!n) throw InvalidParameter("ideal is not solvable");
  if (*n == 0) throw InvalidParameter("ideal is zero; the bound needs derived length >= 1");
  const auto table = bound_table(*n, k_max);
  const auto closure = d_closure(algebra, ideal, d, k_max);

  std::vector<TheoremCheckReport> reports;
  for (std::size_t k = 0; k <= k_max; ++k) {
    // J_j = J_m for j past the stabilization point.
    const Subspace& jk = closure.terms[std::min(k, closure.terms.size() - 1)];
    const auto observed = derived_length(algebra, jk);
    const std::uint64_t bound = table.values[k];
    reports.push_back(TheoremCheckReport{
        *n == 1 ? Theorem::Estimation : Theorem::Degree, true, observed, bound,
        observed && *observed <= bound,
        CheckContext{label_of(algebra), algebra.dim(), ideal.dim(), jk.dim(), derivation_label, k}});
  }
  return reports;
}

}  // namespace lieder
