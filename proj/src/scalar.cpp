#include "ddalab/scalar.hpp"

#include <ostream>

namespace ddalab {

namespace {

using u128 = unsigned __int128;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class m = z % static_cast<unsigned long>(p);
  if (m < 0) m += static_cast<unsigned long>(p);
  return m.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
    throw std::invalid_argument("F_p requires a prime p < 2^32, got " + std::to_string(p));
  return Field(p);
}

std::string Field::name() const { return p_ ? "F_" + std::to_string(p_) : "Q"; }

Scalar Field::zero() const {
  Scalar s;
  s.p_ = p_;
  return s;
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  Scalar s;
  s.p_ = p_;
  if (p_) {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    s.r_ = static_cast<std::uint64_t>(m);
  } else {
    s.q_ = mpq_class(mpz_class(static_cast<long>(v)));
  }
  return s;
}

Scalar Field::from_rational(const mpq_class& q) const {
  Scalar s;
  s.p_ = p_;
  if (!p_) {
    s.q_ = q;
    s.q_.canonicalize();
    return s;
  }
  std::uint64_t den = reduce(q.get_den(), p_);
  if (den == 0)
    throw std::domain_error("denominator " + q.get_den().get_str() + " vanishes in " + name());
  s.r_ = mulmod(reduce(q.get_num(), p_), powmod(den, p_ - 2, p_), p_);
  return s;
}

Scalar Field::parse(const std::string& text) const {
  mpq_class q;
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
      q = mpq_class(mpz_class(text));
    } else {
      mpz_class num(text.substr(0, slash));
      mpz_class den(text.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      q = mpq_class(num, den);
      q.canonicalize();
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  return from_rational(q);
}

Field Scalar::field() const { return p_ ? Field::prime(p_) : Field::rationals(); }

bool Scalar::is_one() const { return p_ ? r_ == 1 : q_ == 1; }

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar s = *this;
  s += o;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar s = *this;
  s -= o;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar s = *this;
  s *= o;
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_)
    s.r_ = r_ ? p_ - r_ : 0;
  else
    s.q_ = -q_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  if (p_) {
    r_ += o.r_;
    if (r_ >= p_) r_ -= p_;
  } else {
    q_ += o.q_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check(o);
  if (p_)
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
  else
    q_ -= o.q_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  if (p_)
    r_ = mulmod(r_, o.r_, p_);
  else
    q_ *= o.q_;
  return *this;
}

void Scalar::add_mul(const Scalar& a, const Scalar& b) {
  check(a);
  check(b);
  if (p_) {
    r_ = static_cast<std::uint64_t>((static_cast<u128>(a.r_) * b.r_ + r_) % p_);
  } else {
    if (a.is_zero() || b.is_zero()) return;
    thread_local mpq_class t;
    mpq_mul(t.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), t.get_mpq_t());
  }
}

void Scalar::sub_mul(const Scalar& a, const Scalar& b) {
  check(a);
  check(b);
  if (p_) {
    std::uint64_t m = mulmod(a.r_, b.r_, p_);
    r_ = r_ >= m ? r_ - m : r_ + p_ - m;
  } else {
    if (a.is_zero() || b.is_zero()) return;
    thread_local mpq_class t;
    mpq_mul(t.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), t.get_mpq_t());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in " + field().name());
  Scalar s = *this;
  if (p_)
    s.r_ = powmod(r_, p_ - 2, p_);
  else
    s.q_ = 1 / q_;
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  check(o);
  return p_ ? r_ == o.r_ : q_ == o.q_;
}

std::string Scalar::to_string() const {
  if (p_) return std::to_string(r_);
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace ddalab
