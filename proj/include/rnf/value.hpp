#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

#include "rnf/errors.hpp"

namespace rnf {

using Integer = mpz_class;
using Rational = mpq_class;

enum class ResidueConvention { balanced, nonneg };

inline std::string convention_name(ResidueConvention c) {
  return c == ResidueConvention::balanced ? "balanced" : "nonneg";
}

inline ResidueConvention parse_convention(const std::string& s) {
  if (s == "balanced") return ResidueConvention::balanced;
  if (s == "nonneg") return ResidueConvention::nonneg;
  fail(ErrorCode::InvalidInput, "unknown residue convention '" + s + "'");
}

inline Integer ipow(const Integer& base, unsigned long k) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
  return r;
}

// v_p(a) for a != 0.
inline long vp(const Integer& a, const Integer& p) {
  if (a == 0) fail(ErrorCode::ZeroElement, "valuation of zero");
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()));
}

inline long vp(const Rational& a, const Integer& p) {
  return vp(Integer(a.get_num()), p) - vp(Integer(a.get_den()), p);
}

inline bool divisible_by_power(const Integer& a, const Integer& p, long k) {
  if (k <= 0 || a == 0) return true;
  return vp(a, p) >= k;
}

inline Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorCode::InvalidInput, "element is not invertible modulo " + m.get_str());
  return r;
}

// Representative of a modulo p^d in R_d.
inline Integer represent(const Integer& a, const Integer& p, long d, ResidueConvention conv) {
  if (d <= 0) return 0;
  Integer m = ipow(p, static_cast<unsigned long>(d));
  Integer r = mod_nonneg(a, m);
  if (conv == ResidueConvention::balanced && 2 * r > m) r -= m;
  return r;
}

// Same for an element of A written as a rational with p-unit denominator.
inline Integer represent(const Rational& a, const Integer& p, long d, ResidueConvention conv) {
  if (d <= 0) return 0;
  Integer m = ipow(p, static_cast<unsigned long>(d));
  Integer den(a.get_den());
  if (gcd(den, p) != 1) fail(ErrorCode::InvalidInput, "denominator divisible by p");
  Integer num(a.get_num());
  return represent(Integer(num * inverse_mod(den, m)), p, d, conv);
}

inline bool in_residue_set(const Integer& t, const Integer& p, long d, ResidueConvention conv) {
  if (d <= 0) return t == 0;
  Integer m = ipow(p, static_cast<unsigned long>(d));
  if (conv == ResidueConvention::nonneg) return t >= 0 && t < m;
  return 2 * t > -m && 2 * t <= m;
}

// An element of Q or +infinity; w-values and Gauss valuations live here.
class Value {
 public:
  Value() = default;
  Value(long v) : q_(v) {}
  Value(const Rational& q) : q_(q) { q_.canonicalize(); }
  Value(long num, long den) : q_(num, den) { q_.canonicalize(); }

  static Value infinity() {
    Value v;
    v.inf_ = true;
    return v;
  }

  bool is_infinite() const { return inf_; }
  const Rational& rational() const {
    if (inf_) fail(ErrorCode::InvalidInput, "infinite value has no rational form");
    return q_;
  }

  Integer floor() const {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), rational().get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }
  Integer ceil() const {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), rational().get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }
  long floor_long() const { return floor().get_si(); }
  long ceil_long() const { return ceil().get_si(); }
  Value frac() const { return Value(Rational(rational() - Rational(floor()))); }
  bool is_integer() const { return !inf_ && q_.get_den() == 1; }
  Integer denominator() const { return Integer(rational().get_den()); }

  friend Value operator+(const Value& a, const Value& b) {
    if (a.inf_ || b.inf_) return infinity();
    return Value(Rational(a.q_ + b.q_));
  }
  friend Value operator-(const Value& a, const Value& b) {
    if (b.inf_) fail(ErrorCode::InvalidInput, "subtracting infinity");
    if (a.inf_) return infinity();
    return Value(Rational(a.q_ - b.q_));
  }
  friend Value operator*(long k, const Value& a) {
    if (a.inf_) return k == 0 ? Value(0) : infinity();
    return Value(Rational(a.q_ * k));
  }
  friend Value operator/(const Value& a, long k) {
    if (a.inf_) return infinity();
    return Value(Rational(a.q_ / k));
  }
  Value& operator+=(const Value& b) { return *this = *this + b; }
  Value& operator-=(const Value& b) { return *this = *this - b; }

  friend bool operator==(const Value& a, const Value& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Value& a, const Value& b) {
    if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string str() const {
    if (inf_) return "inf";
    return q_.get_den() == 1 ? q_.get_num().get_str() : q_.get_str();
  }

  static Value parse(const std::string& s) {
    if (s == "inf") return infinity();
    Rational q;
    if (q.set_str(s, 10) != 0) fail(ErrorCode::InvalidInput, "bad rational '" + s + "'");
    if (q.get_den() == 0) fail(ErrorCode::InvalidInput, "zero denominator in '" + s + "'");
    q.canonicalize();
    return Value(q);
  }

  friend std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

 private:
  Rational q_{0};
  bool inf_ = false;
};

inline Value min(const Value& a, const Value& b) { return b < a ? b : a; }
inline Value max(const Value& a, const Value& b) { return a < b ? b : a; }

inline Integer parse_integer(const std::string& s) {
  Integer z;
  if (s.empty() || z.set_str(s, 10) != 0) fail(ErrorCode::InvalidInput, "bad integer '" + s + "'");
  return z;
}

inline bool is_probable_prime(const Integer& p) {
  return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 30) > 0;
}

}  // namespace rnf
