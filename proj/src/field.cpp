#include "smashprime/field.hpp"

#include <cctype>

namespace smashprime {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime_u32(p)) throw_input("field modulus " + std::to_string(p) + " is not prime");
  return FieldSpec{Kind::prime, p};
}

std::string FieldSpec::str() const {
  return kind == Kind::rational ? "Q" : "F" + std::to_string(p);
}

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid; a in [1, p)
  std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw_internal("non-invertible residue in prime field");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Scalar Scalar::from_int(FieldSpec f, long v) {
  Scalar s(f);
  if (f.kind == FieldSpec::Kind::rational) {
    s.q_ = v;
  } else {
    std::int64_t m = v % static_cast<std::int64_t>(f.p);
    if (m < 0) m += f.p;
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::from_mpq(FieldSpec f, const mpq_class& q) {
  Scalar s(f);
  if (f.kind == FieldSpec::Kind::rational) {
    s.q_ = q;
    s.q_.canonicalize();
  } else {
    // reduce num/den mod p; den must be a unit
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class pz(static_cast<unsigned long>(f.p));
    mpz_class nr = num % pz, dr = den % pz;
    if (nr < 0) nr += pz;
    if (dr < 0) dr += pz;
    if (dr == 0) throw_input("denominator not invertible mod " + std::to_string(f.p));
    std::uint64_t n = nr.get_ui(), d = dr.get_ui();
    s.r_ = (n * mod_inverse(d, f.p)) % f.p;
  }
  return s;
}

Scalar Scalar::parse(FieldSpec f, const std::string& s) {
  if (s.empty()) throw_input("empty scalar literal");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw_input("invalid scalar literal '" + s + "'");
  try {
    mpq_class q(s);
    q.canonicalize();
    if (f.kind == FieldSpec::Kind::prime && q.get_den() != 1)
      throw_input("prime-field scalar must be an integer residue, got '" + s + "'");
    return from_mpq(f, q);
  } catch (const std::invalid_argument&) {
    throw_input("invalid scalar literal '" + s + "'");
  }
}

bool Scalar::is_zero() const {
  return field_.kind == FieldSpec::Kind::rational ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind == FieldSpec::Kind::rational ? q_ == 1 : r_ == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) throw_input("scalar field mismatch: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s(field_);
  if (field_.kind == FieldSpec::Kind::rational)
    s.q_ = q_ + o.q_;
  else
    s.r_ = (r_ + o.r_) % field_.p;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s(field_);
  if (field_.kind == FieldSpec::Kind::rational)
    s.q_ = q_ - o.q_;
  else
    s.r_ = (r_ + field_.p - o.r_) % field_.p;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s(field_);
  if (field_.kind == FieldSpec::Kind::rational)
    s.q_ = q_ * o.q_;
  else
    s.r_ = (r_ * o.r_) % field_.p;
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.kind == FieldSpec::Kind::rational)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.p - r_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw_input("division by zero");
  Scalar s(field_);
  if (field_.kind == FieldSpec::Kind::rational)
    s.q_ = 1 / q_;
  else
    s.r_ = mod_inverse(r_, field_.p);
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.kind == FieldSpec::Kind::rational ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (field_.kind == FieldSpec::Kind::rational) return q_.get_str();
  return std::to_string(r_);
}

const mpq_class& Scalar::rat() const {
  if (field_.kind != FieldSpec::Kind::rational) throw_internal("rat() on prime-field scalar");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (field_.kind != FieldSpec::Kind::prime) throw_internal("residue() on rational scalar");
  return r_;
}

}  // namespace smashprime
