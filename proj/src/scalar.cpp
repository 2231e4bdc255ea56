#include "axial/scalar.hpp"

#include <charconv>
#include <limits>

#include "axial/error.hpp"

namespace axial {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

std::uint32_t reduce(const mpz_class& value, std::uint32_t p) {
  mpz_class r = value % p;
  if (r < 0)
    r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U)
      result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

} // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1U << 31) || !is_prime(p))
    throw InvalidParameter("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long value) const {
  if (is_rational())
    return Scalar::rational(mpq_class(mpz_class(std::to_string(value))));
  long long r = value % static_cast<long long>(p_);
  if (r < 0)
    r += p_;
  return Scalar::residue(static_cast<std::uint64_t>(r), p_);
}

Scalar Field::from_rational(const mpq_class& value) const {
  if (is_rational())
    return Scalar::rational(value);
  std::uint32_t den = reduce(value.get_den(), p_);
  if (den == 0)
    throw InvalidParameter("rational " + value.get_str() + " is undefined in GF(" + std::to_string(p_) + ")");
  Scalar num = Scalar::residue(reduce(value.get_num(), p_), p_);
  return num / Scalar::residue(den, p_);
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  auto bad = [&] { return ParseError("malformed scalar \"" + s + "\" for field " + name()); };
  if (s.empty())
    throw bad();
  auto valid_integer = [](std::string_view part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (start == part.size())
      return false;
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw bad();
  if (num[0] == '+')
    num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0)
    throw bad();
  mpq_class q(n, d);
  q.canonicalize();
  return from_rational(q);
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::rational(mpq_class value) {
  Scalar s;
  value.canonicalize();
  s.q_ = std::move(value);
  return s;
}

Scalar Scalar::residue(std::uint64_t value, std::uint32_t p) {
  Scalar s;
  s.p_ = p;
  s.r_ = static_cast<std::uint32_t>(value % p);
  return s;
}

bool Scalar::is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

void Scalar::check_same_field(const Scalar& rhs) const {
  if (p_ != rhs.p_)
    throw FieldMismatch("mixed-field arithmetic: " + field().name() + " and " + rhs.field().name());
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero())
    throw InvalidParameter("division by zero");
  if (p_ == 0)
    return rational(1 / q_);
  return residue(pow_mod(r_, p_ - 2, p_), p_);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (p_ == 0)
    q_ += rhs.q_;
  else
    r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + rhs.r_) % p_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (p_ == 0)
    q_ -= rhs.q_;
  else
    r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + p_ - rhs.r_) % p_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (p_ == 0)
    q_ *= rhs.q_;
  else
    r_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r_) * rhs.r_ % p_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

bool Scalar::operator==(const Scalar& rhs) const {
  if (p_ != rhs.p_)
    return false;
  return p_ == 0 ? q_ == rhs.q_ : r_ == rhs.r_;
}

std::strong_ordering Scalar::operator<=>(const Scalar& rhs) const {
  if (p_ != rhs.p_)
    return p_ <=> rhs.p_;
  if (p_ != 0)
    return r_ <=> rhs.r_;
  int c = cmp(q_, rhs.q_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (p_ != 0)
    return std::to_string(r_);
  if (q_.get_den() == 1)
    return q_.get_num().get_str();
  return q_.get_str();
}

} // namespace axial
