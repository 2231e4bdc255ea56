#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace axial {

class Scalar;

/// Ground field: the rationals, or GF(p) for a prime p < 2^31.
class Field {
public:
  Field() = default;

  static Field rationals() { return Field{}; }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long value) const;
  /// Maps a rational into the field; throws InvalidParameter when the
  /// denominator vanishes modulo p.
  Scalar from_rational(const mpq_class& value) const;
  /// Accepts "n", "-n", "p/q"; in GF(p) the result is reduced.
  Scalar parse(std::string_view text) const;

  std::string name() const;

  bool operator==(const Field&) const = default;

private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator (gmp canonical form); residues are kept in [0, p).
class Scalar {
public:
  Scalar() = default;

  static Scalar rational(mpq_class value);
  static Scalar residue(std::uint64_t value, std::uint32_t p);

  Field field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }
  std::uint32_t characteristic() const { return p_; }

  bool is_zero() const;
  bool is_one() const;

  const mpq_class& as_rational() const { return q_; }
  std::uint32_t as_residue() const { return r_; }

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  bool operator==(const Scalar& rhs) const;
  /// Total order used for deterministic output; numeric for rationals,
  /// by residue for GF(p).
  std::strong_ordering operator<=>(const Scalar& rhs) const;

  /// "p/q" (q omitted when 1) for rationals, decimal residue for GF(p).
  std::string to_string() const;

private:
  void check_same_field(const Scalar& rhs) const;

  std::uint32_t p_ = 0;
  mpq_class q_;
  std::uint32_t r_ = 0;
};

} // namespace axial
