#include "h14/scalar.hpp"

#include <charconv>
#include <ostream>

#include "h14/errors.hpp"

namespace h14 {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw ValidationError("field modulus " + std::to_string(p) + " is not prime");
  }
  // Residue products go through 128-bit intermediates.
  if (p >= (std::uint64_t{1} << 62)) {
    throw ValidationError("field modulus too large");
  }
  return Field{p};
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  std::string_view digits;
  if (text.starts_with("Fp:")) {
    digits = text.substr(3);
  } else if (text.starts_with("F")) {
    digits = text.substr(1);
  } else {
    throw ValidationError("unknown field tag '" + std::string(text) + "' (expected Q or Fp:<p>)");
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    throw ValidationError("malformed field tag '" + std::string(text) + "'");
  }
  return prime(p);
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(modulus_);
}

Scalar::Scalar(mpq_class q) : value_(std::move(q)) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar::Scalar(const Field& field, long value) : Scalar(field, mpq_class(value)) {}

Scalar::Scalar(const Field& field, const mpq_class& value) {
  if (field.is_rational()) {
    mpq_class q(value);
    q.canonicalize();
    value_ = std::move(q);
    return;
  }
  const std::uint64_t p = field.characteristic();
  const std::uint64_t den = reduce_mpz(value.get_den(), p);
  if (den == 0) {
    throw FieldMismatchError("denominator of " + value.get_str() + " vanishes in " + field.to_string());
  }
  const std::uint64_t num = reduce_mpz(value.get_num(), p);
  value_ = Residue{mulmod(num, powmod(den, p - 2, p), p), p};
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field{r->modulus};
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldMismatchError("scalar is not rational");
}

std::uint64_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw FieldMismatchError("scalar is not a prime-field residue");
}

void Scalar::check_same(const Scalar& o) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&o.value_);
  if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->modulus != b->modulus)) {
    throw FieldMismatchError("mixed-field arithmetic: " + field().to_string() + " vs " +
                             o.field().to_string());
  }
}

Scalar Scalar::operator-() const {
  Scalar out(*this);
  if (auto* r = std::get_if<Residue>(&out.value_)) {
    r->value = r->value == 0 ? 0 : r->modulus - r->value;
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = -q;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto s = std::get<Residue>(o.value_).value;
    r->value = (r->value + s) % r->modulus;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = mulmod(r->value, std::get<Residue>(o.value_).value, r->modulus);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw UsageError("division by zero scalar");
  Scalar out(*this);
  if (auto* r = std::get_if<Residue>(&out.value_)) {
    r->value = powmod(r->value, r->modulus - 2, r->modulus);
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = 1 / q;
  }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  const auto* ra = std::get_if<Scalar::Residue>(&a.value_);
  const auto* rb = std::get_if<Scalar::Residue>(&b.value_);
  if (ra != nullptr && rb != nullptr) return ra->modulus == rb->modulus && ra->value == rb->value;
  if (ra == nullptr && rb == nullptr) {
    return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  }
  return false;
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace h14
