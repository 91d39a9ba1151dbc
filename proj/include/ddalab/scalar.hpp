#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ddalab {

class Scalar;

// Ground field: either Q (characteristic 0) or F_p for a prime p < 2^32.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  // Throws std::domain_error when the denominator vanishes mod p.
  Scalar from_rational(const mpq_class& q) const;
  // Accepts "a", "a/b" (and "-a/b"); throws std::invalid_argument.
  Scalar parse(const std::string& text) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

class field_mismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Element of a Field. Arithmetic between different fields throws field_mismatch.
class Scalar {
 public:
  Scalar() = default;

  Field field() const;
  bool is_zero() const { return p_ ? r_ == 0 : mpq_sgn(q_.get_mpq_t()) == 0; }
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  // this += a * b, without temporaries in the rational case.
  void add_mul(const Scalar& a, const Scalar& b);
  void sub_mul(const Scalar& a, const Scalar& b);
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // "a/b" for Q (always with an explicit denominator), decimal residue for F_p.
  std::string to_string() const;
  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }

 private:
  friend class Field;
  void check(const Scalar& o) const {
    if (p_ != o.p_) throw field_mismatch("scalar arithmetic across different fields");
  }
  std::uint64_t p_ = 0;
  std::uint64_t r_ = 0;
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace ddalab
