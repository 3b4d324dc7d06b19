#include "lieder/radical.hpp"

#include <limits>
#include <stdexcept>

namespace lieder {

namespace {

std::uint64_t saturating_power(std::uint64_t base, std::size_t exponent) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

// Remembers the verdict for ideals already tested; during enumeration most
// rejected points generate one of a handful of ideals.
class SolvabilityCache {
 public:
  explicit SolvabilityCache(const LieAlgebra& algebra) : algebra_(algebra) {}

  bool solvable(const Subspace& ideal) {
    for (const auto& [space, verdict] : seen_) {
      if (space == ideal) return verdict;
    }
    const bool verdict = derived_length(algebra_, ideal).has_value();
    seen_.emplace_back(ideal, verdict);
    return verdict;
  }

 private:
  const LieAlgebra& algebra_;
  std::vector<std::pair<Subspace, bool>> seen_;
};

// Calls visit(x) for one representative (first nonzero coordinate 1) of each
// projective point of the span of e_c, c in `coords`. Representatives are
// visited in increasing order of their last nonzero coordinate position, so
// vectors supported near the end of the basis come first. Stops early when
// visit returns true.
template <class Visit>
bool for_each_projective_point(std::size_t n, FieldSpec field, const std::vector<std::size_t>& coords,
                               Visit&& visit) {
  const std::uint32_t p = field.characteristic();
  const std::size_t m = coords.size();
  for (std::size_t lead = m; lead-- > 0;) {
    // Leading coordinate coords[lead] is 1; coords after it range over F.
    const std::size_t tail = m - lead - 1;
    std::vector<std::uint32_t> digits(tail, 0);
    while (true) {
      Vector x = zero_vector(n, field);
      x[coords[lead]] = Scalar::one(field);
      for (std::size_t t = 0; t < tail; ++t) {
        x[coords[lead + 1 + t]] = Scalar::from_integer(static_cast<std::int64_t>(digits[t]), field);
      }
      if (visit(x)) return true;
      // Base-p counter over the tail, last digit fastest.
      bool wrapped = true;
      for (std::size_t pos = tail; pos-- > 0;) {
        if (++digits[pos] < p) {
          wrapped = false;
          break;
        }
        digits[pos] = 0;
      }
      if (wrapped) break;
    }
  }
  return false;
}

std::vector<std::size_t> free_coordinates(const Subspace& r) {
  std::vector<bool> pivot(r.ambient_dim(), false);
  for (auto c : r.pivots()) pivot[c] = true;
  std::vector<std::size_t> coords;
  for (std::size_t c = 0; c < r.ambient_dim(); ++c) {
    if (!pivot[c]) coords.push_back(c);
  }
  return coords;
}

}  // namespace

bool generates_solvable_ideal(const LieAlgebra& algebra, std::span<const Scalar> x) {
  const auto closure =
      ideal_closure(algebra, Subspace::span({Vector(x.begin(), x.end())}, algebra.dim(), algebra.field()));
  return derived_length(algebra, closure.space()).has_value();
}

IdealHandle radical_char0(const LieAlgebra& algebra) {
  if (algebra.field().is_prime_field()) {
    throw WrongCharacteristic("Killing-form radical requires characteristic 0, got " +
                              algebra.field().to_string());
  }
  const std::size_t n = algebra.dim();
  const Subspace full = Subspace::full(n, algebra.field());
  const Subspace derived = bracket_spaces(algebra, full, full);
  const Matrix kappa = killing_form(algebra);
  Matrix system(derived.dim(), n, algebra.field());
  for (std::size_t j = 0; j < derived.dim(); ++j) {
    const Vector row = kappa.apply(derived.basis_vector(j));
    for (std::size_t c = 0; c < n; ++c) system.at(j, c) = row[c];
  }
  return IdealHandle(algebra, kernel(system));
}

IdealHandle radical_bruteforce(const LieAlgebra& algebra, const RadicalSearch& search) {
  const FieldSpec field = algebra.field();
  if (!field.is_prime_field()) {
    throw WrongCharacteristic("enumeration needs a finite field; use radical_char0 over Q");
  }
  const std::size_t n = algebra.dim();
  Subspace radical = search.seed ? *search.seed : Subspace::zero(n, field);
  if (search.seed) {
    if (radical.ambient_dim() != n) throw AmbientMismatch("seed ideal has the wrong ambient dimension");
    if (!is_ideal(algebra, radical) || !derived_length(algebra, radical)) {
      throw InvalidParameter("seed must be a solvable ideal");
    }
  }
  const std::uint64_t required = saturating_power(field.characteristic(), n - radical.dim());
  if (required > search.budget) throw BudgetExceeded(required, search.budget);

  SolvabilityCache cache(algebra);
  const auto absorb = [&](const Vector& x) {
    const Subspace closure =
        ideal_closure(algebra, Subspace::span({x}, n, field)).space();
    if (!cache.solvable(closure)) return false;
    radical = subspace_sum(radical, closure);
    return true;
  };

  if (search.strategy == RadicalSearch::Strategy::Exhaustive) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    for_each_projective_point(n, field, all, [&](const Vector& x) {
      if (!radical.contains(x)) absorb(x);
      return false;
    });
  } else {
    bool grew = true;
    while (grew) {
      grew = for_each_projective_point(n, field, free_coordinates(radical), absorb);
    }
  }
  return IdealHandle(algebra, radical);
}

IdealHandle radical_bruteforce(const LieAlgebra& algebra, std::uint64_t budget) {
  RadicalSearch search;
  search.budget = budget;
  return radical_bruteforce(algebra, search);
}

IdealHandle solvable_radical(const LieAlgebra& algebra, std::uint64_t budget) {
  if (!algebra.field().is_prime_field()) return radical_char0(algebra);
  return radical_bruteforce(algebra, budget);
}

CharacteristicResult is_characteristic(const IdealHandle& ideal,
                                       const std::vector<Matrix>& derivations) {
  const Subspace& space = ideal.space();
  for (const auto& d : derivations) {
    for (std::size_t i = 0; i < space.dim(); ++i) {
      Vector image = d.apply(space.basis_vector(i));
      if (!space.contains(image)) {
        const auto v = space.basis_vector(i);
        return CharacteristicResult{
            false, CharacteristicWitness{d, Vector(v.begin(), v.end()), std::move(image)}};
      }
    }
  }
  return CharacteristicResult{true, std::nullopt};
}

CharacteristicResult is_characteristic(const LieAlgebra& algebra, const IdealHandle& ideal) {
  return is_characteristic(ideal, derivation_algebra(algebra));
}

std::string to_string(RadicalReport::Method m) {
  return m == RadicalReport::Method::KillingChar0 ? "killing-char0" : "bruteforce-membership";
}

RadicalReport analyze_radical(const LieAlgebra& algebra, const RadicalSearch& search) {
  const bool char0 = !algebra.field().is_prime_field();
  IdealHandle radical = char0 ? radical_char0(algebra) : radical_bruteforce(algebra, search);
  const auto length = derived_length(algebra, radical.space());
  if (!length) throw std::logic_error("computed radical is not solvable");
  auto verdict = is_characteristic(algebra, radical);
  return RadicalReport{std::move(radical),
                       char0 ? RadicalReport::Method::KillingChar0
                             : RadicalReport::Method::BruteForceMembership,
                       *length, verdict.characteristic, std::move(verdict.witness)};
}

}  // namespace lieder
