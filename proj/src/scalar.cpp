#include "lieder/scalar.hpp"

#include <charconv>
#include <ostream>

namespace lieder {

namespace {

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  // Residue products must fit in 64 bits.
  if (p > 0x7fffffffULL) throw InvalidPrime("modulus too large: " + std::to_string(p));
  if (!is_prime(p)) throw InvalidPrime(std::to_string(p) + " is not prime");
  return FieldSpec(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  text = trim(text);
  if (text == "Q") return rationals();
  if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
    auto digits = text.substr(3, text.size() - 4);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(p);
  }
  throw ParseError(0, "unknown field '" + std::string(text) + "' (expected Q or GF(p))");
}

std::string FieldSpec::to_string() const {
  if (kind_ == Kind::Rationals) return "Q";
  return "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(FieldSpec field) : field_(field) {
  if (field.kind() == FieldSpec::Kind::Rationals) value_.emplace<mpq_class>(0);
}

Scalar Scalar::from_integer(std::int64_t n, FieldSpec field) {
  Scalar s(field);
  if (field.is_prime_field()) {
    const auto p = static_cast<std::int64_t>(field.characteristic());
    std::int64_t r = n % p;
    if (r < 0) r += p;
    s.value_ = static_cast<std::uint32_t>(r);
  } else {
    s.value_ = mpq_class(mpz_class(static_cast<long>(n)));
  }
  return s;
}

Scalar Scalar::from_integer(const mpz_class& n, FieldSpec field) {
  Scalar s(field);
  if (field.is_prime_field()) {
    s.value_ = static_cast<std::uint32_t>(mpz_fdiv_ui(n.get_mpz_t(), field.characteristic()));
  } else {
    s.value_ = mpq_class(n);
  }
  return s;
}

Scalar Scalar::from_fraction(const mpz_class& num, const mpz_class& den, FieldSpec field) {
  if (field.is_prime_field()) return from_integer(num, field) / from_integer(den, field);
  if (den == 0) throw DivisionByZero();
  Scalar s(field);
  mpq_class q(num, den);
  q.canonicalize();
  s.value_ = std::move(q);
  return s;
}

Scalar Scalar::parse(std::string_view text, FieldSpec field) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) throw ParseError(0, "bad scalar '" + std::string(text) + "'");
    return from_integer(parse_integer(text), field);
  }
  if (field.is_prime_field()) {
    throw ParseError(0, "fractions are not allowed over " + field.to_string() + ": '" +
                            std::string(text) + "'");
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw ParseError(0, "bad scalar '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
  return from_fraction(parse_integer(num), d, field);
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (field_ != rhs.field_) {
    throw FieldMismatch("scalars from " + field_.to_string() + " and " + rhs.field_.to_string());
  }
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  Scalar out(*this);
  if (auto* r = std::get_if<std::uint32_t>(&out.value_)) {
    const std::uint32_t p = field_.characteristic();
    *r = pow_mod(*r, p - 2, p);
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    mpq_inv(q.get_mpq_t(), q.get_mpq_t());
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out(*this);
  if (auto* r = std::get_if<std::uint32_t>(&out.value_)) {
    if (*r != 0) *r = field_.characteristic() - *r;
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = -q;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<std::uint32_t>(&value_)) {
    const std::uint64_t sum = std::uint64_t{*r} + std::get<std::uint32_t>(rhs.value_);
    const std::uint32_t p = field_.characteristic();
    *r = static_cast<std::uint32_t>(sum >= p ? sum - p : sum);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<std::uint32_t>(&value_)) {
    const std::uint32_t b = std::get<std::uint32_t>(rhs.value_);
    *r = *r >= b ? *r - b : static_cast<std::uint32_t>(std::uint64_t{*r} + field_.characteristic() - b);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<std::uint32_t>(&value_)) {
    *r = static_cast<std::uint32_t>(std::uint64_t{*r} * std::get<std::uint32_t>(rhs.value_) %
                                    field_.characteristic());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inv();
}

bool Scalar::operator==(const Scalar& rhs) const {
  require_same_field(rhs);
  return value_ == rhs.value_;
}

Scalar Scalar::canonical() const {
  Scalar out(*this);
  if (auto* r = std::get_if<std::uint32_t>(&out.value_)) {
    *r %= field_.characteristic();
  } else {
    std::get<mpq_class>(out.value_).canonicalize();
  }
  return out;
}

std::uint32_t Scalar::residue() const {
  if (!field_.is_prime_field()) throw FieldMismatch("residue() requested over Q");
  return std::get<std::uint32_t>(value_);
}

const mpq_class& Scalar::rational() const {
  if (field_.is_prime_field()) throw FieldMismatch("rational() requested over " + field_.to_string());
  return std::get<mpq_class>(value_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace lieder
