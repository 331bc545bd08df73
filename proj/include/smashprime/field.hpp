#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "smashprime/error.hpp"

namespace smashprime {

/// Names an exact coefficient field: the rationals or a prime field F_p.
struct FieldSpec {
  enum class Kind { rational, prime };

  Kind kind = Kind::rational;
  std::uint32_t p = 0;  // modulus, meaningful only for Kind::prime

  static FieldSpec rationals() { return FieldSpec{Kind::rational, 0}; }
  static FieldSpec prime(std::uint32_t p);

  std::uint32_t characteristic() const { return kind == Kind::prime ? p : 0; }
  bool operator==(const FieldSpec&) const = default;
  std::string str() const;
};

bool is_prime_u32(std::uint32_t n);

/// An exact field element in canonical form: a reduced fraction with positive
/// denominator over the rationals, or a residue in [0, p) over F_p. There is
/// no floating-point representation anywhere in the system.
class Scalar {
public:
  Scalar() = default;  // zero of Q; reassigned freely
  explicit Scalar(FieldSpec f) : field_(f) {}

  static Scalar zero(FieldSpec f) { return Scalar(f); }
  static Scalar one(FieldSpec f) { return from_int(f, 1); }
  static Scalar from_int(FieldSpec f, long v);
  static Scalar from_mpq(FieldSpec f, const mpq_class& q);

  /// Parses the serialized form: "num/den" or "num" over Q, decimal residue over F_p.
  static Scalar parse(FieldSpec f, const std::string& s);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical serialization, shared by every file format.
  std::string str() const;

  /// Rational value; requires a rational field.
  const mpq_class& rat() const;
  /// Residue in [0, p); requires a prime field.
  std::uint64_t residue() const;

private:
  FieldSpec field_ = FieldSpec::rationals();
  mpq_class q_ = 0;       // value when rational
  std::uint64_t r_ = 0;   // value when prime

  void check_same(const Scalar& o) const;
};

}  // namespace smashprime
