#pragma once

// Exact field elements over Q (GMP rationals) and GF(p).

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "lieder/errors.hpp"

namespace lieder {

/// Q or GF(p). Two specs compare equal iff they describe the same field.
class FieldSpec {
 public:
  enum class Kind : std::uint8_t { Rationals, PrimeField };

  static FieldSpec rationals() noexcept { return FieldSpec(Kind::Rationals, 0); }
  /// Throws InvalidPrime unless p is prime (trial division).
  static FieldSpec prime(std::uint64_t p);
  /// Parses "Q" or "GF(p)".
  static FieldSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
  /// 0 for Q.
  std::uint32_t characteristic() const noexcept { return p_; }

  std::string to_string() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) noexcept : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// An element of a FieldSpec, always held canonically: rationals in lowest
/// terms with positive denominator, residues in [0, p).
class Scalar {
 public:
  /// Zero of `field`.
  explicit Scalar(FieldSpec field = FieldSpec::rationals());

  static Scalar zero(FieldSpec field) { return Scalar(field); }
  static Scalar one(FieldSpec field) { return from_integer(1, field); }
  static Scalar from_integer(std::int64_t n, FieldSpec field);
  static Scalar from_integer(const mpz_class& n, FieldSpec field);
  /// num/den embedded in the field; DivisionByZero when den is zero in it.
  static Scalar from_fraction(const mpz_class& num, const mpz_class& den, FieldSpec field);
  /// Integers ("-3") or fractions ("2/7"); GF(p) accepts integers only.
  static Scalar parse(std::string_view text, FieldSpec field);

  FieldSpec field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  Scalar inv() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Throws FieldMismatch when the fields differ.
  bool operator==(const Scalar& rhs) const;

  /// Re-normalizes the stored value; identity on every reachable Scalar.
  Scalar canonical() const;

  /// Least nonnegative residue; only valid over GF(p).
  std::uint32_t residue() const;
  /// Only valid over Q.
  const mpq_class& rational() const;

  /// "-3", "2/7"; residues print as integers in [0, p).
  std::string to_string() const;

 private:
  void require_same_field(const Scalar& rhs) const;

  FieldSpec field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace lieder
