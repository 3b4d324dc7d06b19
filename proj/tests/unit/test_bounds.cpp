#include <gtest/gtest.h>

#include "lieder/bounds.hpp"
#include "lieder/constructions.hpp"
#include "oracles.hpp"

using namespace lieder;

namespace {

const FieldSpec Q = FieldSpec::rationals();

TEST(CentralBinomial, Examples) {
  EXPECT_FALSE(central_binomial_divisible(5, 2));  // C(4,2) = 6
  EXPECT_TRUE(central_binomial_divisible(5, 3));   // C(8,4) = 70
  EXPECT_FALSE(central_binomial_divisible(3, 1));  // C(2,1) = 2
  EXPECT_TRUE(central_binomial_divisible(3, 2));   // C(4,2) = 6
  EXPECT_TRUE(central_binomial_divisible(2, 1));
  EXPECT_THROW(central_binomial_divisible(5, 0), InvalidParameter);
}

TEST(CentralBinomial, MatchesFactorialOracle) {
  for (std::uint64_t p = 2; p <= 100; ++p) {
    if (!is_prime(p)) continue;
    for (std::size_t k = 1; k <= 12; ++k) {
      const unsigned long top = 1ul << k;
      EXPECT_EQ(central_binomial_divisible(p, k), oracle::divides(p, oracle::binomial(top, top / 2)))
          << "p=" << p << " k=" << k;
    }
  }
}

TEST(Kummer, CarriesEqualValuation) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u}) {
    for (std::uint64_t a = 0; a <= 40; ++a) {
      for (std::uint64_t b = 0; b <= 40; ++b) {
        mpz_class c = oracle::binomial(a + b, a);
        std::size_t v = 0;
        while (oracle::divides(p, c)) {
          c /= static_cast<unsigned long>(p);
          ++v;
        }
        EXPECT_EQ(kummer_carries(p, a, b), v) << p << " " << a << " " << b;
      }
    }
  }
}

TEST(AdmissibleDepth, Examples) {
  EXPECT_EQ(admissible_depth(3), 1u);
  EXPECT_EQ(admissible_depth(5), 2u);
  EXPECT_EQ(admissible_depth(17), 4u);
  EXPECT_EQ(admissible_depth(7), 2u);
  EXPECT_THROW(admissible_depth(2), InvalidPrime);
  EXPECT_THROW(admissible_depth(9), InvalidPrime);
}

TEST(AdmissibleDepth, EqualsLogThresholdAndScan) {
  for (std::uint64_t p = 3; p < 1000; p += 2) {
    if (!is_prime(p)) continue;
    std::size_t by_log = 0;
    while ((std::uint64_t{1} << (by_log + 1)) < p) ++by_log;
    std::size_t by_scan = 0;
    while (by_scan + 1 <= 63 && !central_binomial_divisible(p, by_scan + 1)) ++by_scan;
    EXPECT_EQ(admissible_depth(p), by_log) << p;
    EXPECT_EQ(admissible_depth(p), by_scan) << p;
    for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(below_log2(n, p), n <= by_log) << p << " " << n;
  }
}

TEST(BelowLog2, EdgeCases) {
  EXPECT_TRUE(below_log2(0, 2));
  EXPECT_FALSE(below_log2(1, 2));
  EXPECT_TRUE(below_log2(2, 5));
  EXPECT_FALSE(below_log2(2, 4));
  EXPECT_FALSE(below_log2(64, ~std::uint64_t{0}));
  EXPECT_TRUE(below_log2(63, ~std::uint64_t{0}));
}

TEST(BoundF, FirstRowsAndOracle) {
  for (std::size_t k = 0; k <= 20; ++k) EXPECT_EQ(bound_f(1, k), k + 1);
  EXPECT_EQ(bound_f(2, 1), 6u);
  EXPECT_EQ(bound_f(2, 2), 12u);
  EXPECT_EQ(bound_f(2, 3), 20u);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 0; k <= 14; ++k) {
      EXPECT_EQ(bound_f(n, k), oracle::bound_f(n, k)) << n << " " << k;
      if (n == 2) EXPECT_EQ(bound_f(n, k), (k + 1) * (k + 2));
    }
  }
}

TEST(BoundF, FrozenValues) {
  const std::vector<std::uint64_t> f3{3, 16, 47, 104, 195, 328, 511};
  for (std::size_t k = 0; k < f3.size(); ++k) EXPECT_EQ(bound_f(3, k), f3[k]);
  EXPECT_EQ(bound_f(3, 12), 3107u);
  EXPECT_EQ(bound_f(4, 12), 78988u);
  EXPECT_EQ(bound_f(5, 12), 3226873u);
}

TEST(BoundTable, IncreasingWithRecordedRule) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto t = bound_table(n, 12);
    EXPECT_EQ(t.n, n);
    ASSERT_EQ(t.values.size(), 13u);
    EXPECT_EQ(t.values.front(), n);
    for (std::size_t k = 1; k < t.values.size(); ++k) EXPECT_LT(t.values[k - 1], t.values[k]);
    EXPECT_FALSE(t.base_rule.empty());
  }
}

TEST(BoundPolynomial, Examples) {
  const auto p1 = bound_polynomial(1);
  EXPECT_EQ(p1, (std::vector<mpq_class>{1, 1}));
  const auto p2 = bound_polynomial(2);
  EXPECT_EQ(p2, (std::vector<mpq_class>{2, 3, 1}));
}

TEST(BoundPolynomial, ReproducesTableBeyondInterpolationPoints) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto poly = bound_polynomial(n);
    ASSERT_EQ(poly.size(), n + 1);
    EXPECT_NE(poly.back(), 0);
    for (std::size_t k = 0; k <= 2 * n + 6; ++k) {
      EXPECT_EQ(evaluate_polynomial(poly, mpq_class(static_cast<unsigned long>(k))),
                mpq_class(static_cast<unsigned long>(oracle::bound_f(n, k))))
          << n << " " << k;
    }
  }
}

// f_n is polynomial of degree n, so it falls below 2^k n eventually, but for
// n = 4, 5 not before k = 12.
TEST(DoublingCrossover, FrozenThresholds) {
  const std::vector<std::size_t> full{2, 4, 9, 16, 25};
  const std::vector<std::size_t> halved{4, 6, 11, 18, 26};
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(doubling_crossover(n, 56), full[n - 1]) << n;
    EXPECT_EQ(doubling_crossover(n, 56, true), halved[n - 1]) << n;
  }
  EXPECT_EQ(doubling_crossover(3, 12), 9u);
  EXPECT_FALSE(doubling_crossover(4, 12).has_value());
  EXPECT_FALSE(doubling_crossover(5, 12).has_value());
  EXPECT_THROW(doubling_crossover(2, 57), InvalidParameter);
}

TEST(DoublingCrossover, MatchesDirectComparison) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto k0 = *doubling_crossover(n, 40);
    for (std::size_t k = k0; k <= 40; ++k) EXPECT_LT(oracle::bound_f(n, k), (std::uint64_t{1} << k) * n);
    if (k0 > 0) EXPECT_GE(oracle::bound_f(n, k0 - 1), (std::uint64_t{1} << (k0 - 1)) * n);
  }
}

TEST(SolvabilityCheck, InnerDerivationHolds) {
  const auto L = borel_upper(3, Q);
  const IdealHandle I(L, Subspace::full(6, Q));
  const auto r = check_solvability_theorem(L, I, ad(L, L.basis_vector(1)), "ad:2");
  EXPECT_EQ(r.theorem, Theorem::Solvability);
  EXPECT_TRUE(r.hypotheses_met);
  EXPECT_EQ(r.observed, 3u);
  EXPECT_EQ(r.bound, 6u);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.context.derivation, "ad:2");
}

TEST(SolvabilityCheck, JacobsonRadicalMissesHypotheses) {
  const auto J = jacobson(5);
  const auto r = check_solvability_theorem(J.algebra, J.radical, J.d_dt);
  EXPECT_FALSE(r.hypotheses_met);
  EXPECT_FALSE(r.observed.has_value());  // S + D(S) is the whole algebra
  EXPECT_EQ(r.bound, 6u);
  EXPECT_FALSE(r.holds);
}

TEST(DegreeCheck, AbelianIdealWithinKPlusOne) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = random_solvable_instance(seed, {.max_ideal_length = 1}, Q);
    if (inst.ideal.space().is_zero()) continue;
    const auto reports = check_degree_theorem(inst.algebra, inst.ideal, inst.derivation, 3);
    ASSERT_EQ(reports.size(), 4u);
    for (std::size_t k = 0; k <= 3; ++k) {
      EXPECT_EQ(reports[k].theorem, Theorem::Estimation);
      EXPECT_EQ(reports[k].bound, k + 1);
      EXPECT_TRUE(reports[k].holds) << inst.description;
    }
  }
}

TEST(DegreeCheck, KZeroIsTheIdealLength) {
  const auto L = borel_upper(3, Q);
  const IdealHandle I(L, Subspace::full(6, Q));
  const auto reports = check_degree_theorem(L, I, DerivationMap(L, derivation_algebra(L).back()), 0);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].observed, 3u);
  EXPECT_EQ(reports[0].bound, 3u);
}

TEST(DegreeCheck, RejectsBadInputs) {
  const auto J = jacobson(3);
  EXPECT_THROW(check_degree_theorem(J.algebra, J.radical, J.d_dt, 2), WrongCharacteristic);
  const auto L = sl2(Q);
  EXPECT_THROW(check_degree_theorem(L, IdealHandle(L, Subspace::full(3, Q)), ad(L, L.zero()), 2),
               InvalidParameter);
  EXPECT_THROW(check_degree_theorem(L, IdealHandle(L, Subspace::zero(3, Q)), ad(L, L.zero()), 2),
               InvalidParameter);
}

}  // namespace
