#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rnf/value.hpp"

namespace rnf {

// Integer polynomial; coefficients stored in ascending degree, exposed in decreasing degree
// for serialization and matrix rows.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Integer& c) {
    if (c != 0) c_.push_back(c);
  }

  static Polynomial from_ascending(std::vector<Integer> c) {
    Polynomial g;
    g.c_ = std::move(c);
    g.trim();
    return g;
  }
  static Polynomial from_decreasing(std::vector<Integer> c) {
    std::reverse(c.begin(), c.end());
    return from_ascending(std::move(c));
  }
  static Polynomial monomial(const Integer& c, std::size_t k) {
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return from_ascending(std::move(v));
  }
  static Polynomial x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const Integer& lead() const { return c_.back(); }
  Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
  const std::vector<Integer>& ascending() const { return c_; }

  std::vector<Integer> decreasing() const { return {c_.rbegin(), c_.rend()}; }

  // Row of width d encoding this polynomial against (x^{d-1}, ..., 1).
  std::vector<Integer> row(std::size_t d) const {
    if (static_cast<int>(d) <= degree()) fail(ErrorCode::ShapeMismatch, "polynomial too long for row");
    std::vector<Integer> r(d);
    for (std::size_t k = 0; k < c_.size(); ++k) r[d - 1 - k] = c_[k];
    return r;
  }
  static Polynomial from_row(const std::vector<Integer>& r) { return from_decreasing(r); }

  Polynomial operator-() const {
    Polynomial g = *this;
    for (auto& a : g.c_) a = -a;
    return g;
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
    return from_ascending(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return from_ascending(std::move(r));
  }
  friend Polynomial operator*(const Integer& k, const Polynomial& a) {
    std::vector<Integer> r = a.c_;
    for (auto& x : r) x *= k;
    return from_ascending(std::move(r));
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial pow(unsigned k) const {
    Polynomial r(Integer(1)), b = *this;
    while (k) {
      if (k & 1) r *= b;
      b *= b;
      k >>= 1;
    }
    return r;
  }

  Polynomial shift(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Integer> r(k, Integer(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return from_ascending(std::move(r));
  }

  Integer evaluate(const Integer& x) const {
    Integer r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  // Coefficientwise representatives modulo p^d.
  Polynomial reduce(const Integer& p, long d, ResidueConvention conv) const {
    std::vector<Integer> r(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) r[k] = represent(c_[k], p, d, conv);
    return from_ascending(std::move(r));
  }

  Polynomial divide_exact(const Integer& k) const {
    std::vector<Integer> r = c_;
    for (auto& a : r) {
      if (!mpz_divisible_p(a.get_mpz_t(), k.get_mpz_t()))
        fail(ErrorCode::InvalidInput, "inexact coefficient division");
      mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), k.get_mpz_t());
    }
    return from_ascending(std::move(r));
  }

  Integer content() const {
    Integer g = 0;
    for (const auto& a : c_) g = gcd(g, a);
    return g;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      const Integer& a = c_[k];
      if (a == 0) continue;
      Integer m = abs(a);
      if (!s.empty()) s += a < 0 ? " - " : " + ";
      else if (a < 0) s += "-";
      if (m != 1 || k == 0) s += m.get_str();
      if (k >= 1) s += "x";
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

inline Value gauss_valuation(const Polynomial& g, const Integer& p) {
  if (g.is_zero()) return Value::infinity();
  long v = -1;
  for (const auto& a : g.ascending()) {
    if (a == 0) continue;
    long k = vp(a, p);
    if (v < 0 || k < v) v = k;
  }
  return Value(v);
}

inline std::pair<Polynomial, long> normalize_content(const Polynomial& g, const Integer& p) {
  if (g.is_zero()) fail(ErrorCode::ZeroPolynomial, "normalize_content of zero");
  long v = gauss_valuation(g, p).floor_long();
  return {g.divide_exact(ipow(p, static_cast<unsigned long>(v))), v};
}

// a = q*b + r with deg r < deg b, b monic.
inline std::pair<Polynomial, Polynomial> divmod_monic(const Polynomial& a, const Polynomial& b) {
  if (!b.is_monic()) fail(ErrorCode::InvalidInput, "division by a non-monic polynomial");
  std::vector<Integer> r = a.ascending();
  int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Integer> q(a.degree() - db + 1);
  const auto& bc = b.ascending();
  for (int k = a.degree(); k >= db; --k) {
    Integer c = r[k];
    if (c == 0) continue;
    q[k - db] = c;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= c * bc[i];
  }
  r.resize(db);
  return {Polynomial::from_ascending(std::move(q)), Polynomial::from_ascending(std::move(r))};
}

inline Polynomial rem_monic(const Polynomial& a, const Polynomial& b) { return divmod_monic(a, b).second; }

inline Polynomial product(const std::vector<Polynomial>& factors) {
  Polynomial r(Integer(1));
  for (const auto& g : factors) r *= g;
  return r;
}

}  // namespace rnf
