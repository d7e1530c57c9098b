#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "rnf/polynomial.hpp"

namespace rnf {

// Polynomials over F_p, ascending coefficients in [0, p), no trailing zeros.
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(const Integer& p, std::vector<Integer> c) : p_(p), c_(std::move(c)) { normalize(); }
  FpPoly(const Integer& p, const Polynomial& g) : FpPoly(p, g.ascending()) {}

  static FpPoly zero(const Integer& p) { return FpPoly(p, std::vector<Integer>{}); }
  static FpPoly constant(const Integer& p, const Integer& a) { return FpPoly(p, std::vector<Integer>{a}); }
  static FpPoly monomial(const Integer& p, const Integer& a, std::size_t k) {
    std::vector<Integer> c(k + 1);
    c[k] = a;
    return FpPoly(p, std::move(c));
  }

  const Integer& prime() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
  const Integer& lead() const { return c_.back(); }

  Polynomial lift() const { return Polynomial::from_ascending(c_); }

  FpPoly monic() const {
    if (is_zero()) return *this;
    return inverse_mod(lead(), p_) * *this;
  }

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
    return FpPoly(a.p_, std::move(r));
  }
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b) {
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] -= b.c_[k];
    return FpPoly(a.p_, std::move(r));
  }
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return zero(a.p_);
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return FpPoly(a.p_, std::move(r));
  }
  friend FpPoly operator*(const Integer& k, const FpPoly& a) {
    std::vector<Integer> r = a.c_;
    for (auto& x : r) x *= k;
    return FpPoly(a.p_, std::move(r));
  }
  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.c_ == b.c_; }

  friend std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) fail(ErrorCode::ZeroPolynomial, "division by zero over F_p");
    const Integer& p = b.p_;
    std::vector<Integer> r = a.c_;
    if (a.degree() < b.degree()) return {zero(p), a};
    Integer inv = inverse_mod(b.lead(), p);
    int db = b.degree();
    std::vector<Integer> q(a.degree() - db + 1);
    for (int k = a.degree(); k >= db; --k) {
      Integer c = mod_nonneg(Integer(r[k] * inv), p);
      if (c == 0) continue;
      q[k - db] = c;
      for (int i = 0; i <= db; ++i) r[k - db + i] = mod_nonneg(Integer(r[k - db + i] - c * b.c_[i]), p);
    }
    r.resize(db);
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
  }
  friend FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }
  friend FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }

  FpPoly derivative() const {
    std::vector<Integer> r;
    for (std::size_t k = 1; k < c_.size(); ++k) r.push_back(c_[k] * static_cast<unsigned long>(k));
    return FpPoly(p_, std::move(r));
  }

 private:
  void normalize() {
    for (auto& a : c_) a = mod_nonneg(a, p_);
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  Integer p_{2};
  std::vector<Integer> c_;
};

inline FpPoly fp_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Extended gcd: returns (g, s) with s*a == g mod m.
inline FpPoly fp_inverse_mod(const FpPoly& a, const FpPoly& m) {
  const Integer& p = m.prime();
  FpPoly r0 = m, r1 = a % m, s0 = FpPoly::zero(p), s1 = FpPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    FpPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) fail(ErrorCode::InvalidInput, "element not invertible modulo polynomial");
  return (inverse_mod(r0.lead(), p) * s0) % m;
}

inline FpPoly fp_powmod(FpPoly base, Integer e, const FpPoly& m) {
  FpPoly r = FpPoly::constant(m.prime(), 1) % m;
  base = base % m;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = (r * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return r;
}

namespace detail {

// Basis of the null space of a square matrix over F_p (rows are equations).
inline std::vector<std::vector<Integer>> nullspace_modp(std::vector<std::vector<Integer>> a, const Integer& p) {
  std::size_t n = a.size();
  std::vector<int> pivot_of_col(n, -1);
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < n; ++c) {
    std::size_t r = row;
    while (r < n && mod_nonneg(a[r][c], p) == 0) ++r;
    if (r == n) continue;
    std::swap(a[r], a[row]);
    Integer inv = inverse_mod(a[row][c], p);
    for (auto& x : a[row]) x = mod_nonneg(Integer(x * inv), p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || mod_nonneg(a[i][c], p) == 0) continue;
      Integer f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] = mod_nonneg(Integer(a[i][j] - f * a[row][j]), p);
    }
    pivot_of_col[c] = static_cast<int>(row);
    ++row;
  }
  std::vector<std::vector<Integer>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<Integer> v(n);
    v[free] = 1;
    for (std::size_t c = 0; c < n; ++c)
      if (pivot_of_col[c] >= 0) v[c] = mod_nonneg(Integer(-a[pivot_of_col[c]][free]), p);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

// Irreducible factors of a squarefree monic polynomial (Berlekamp).
inline std::vector<FpPoly> berlekamp(const FpPoly& f) {
  const Integer& p = f.prime();
  int n = f.degree();
  if (n <= 1) return {f.monic()};
  // rows of Q - I: x^{ip} mod f
  std::vector<std::vector<Integer>> q(n, std::vector<Integer>(n));
  FpPoly xp = fp_powmod(FpPoly::monomial(p, 1, 1), p, f);
  FpPoly cur = FpPoly::constant(p, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) q[j][i] = cur.coeff(j);
    q[i][i] -= 1;
    cur = (cur * xp) % f;
  }
  auto basis = detail::nullspace_modp(q, p);
  std::size_t k = basis.size();
  std::vector<FpPoly> factors{f.monic()};
  if (k == 1) return factors;
  if (p > Integer(1) << 20) fail(ErrorCode::InvalidInput, "Berlekamp splitting needs p < 2^20");
  for (const auto& v : basis) {
    FpPoly vp(p, v);
    if (vp.degree() <= 0) continue;
    std::vector<FpPoly> next;
    for (const auto& u : factors) {
      if (u.degree() <= 1) {
        next.push_back(u);
        continue;
      }
      int found = 0;
      for (Integer s = 0; s < p && found < u.degree(); ++s) {
        FpPoly g = fp_gcd(u, vp - FpPoly::constant(p, s));
        if (g.degree() > 0) {
          next.push_back(g);
          found += g.degree();
        }
      }
    }
    factors = std::move(next);
    if (factors.size() == k) break;
  }
  std::sort(factors.begin(), factors.end(), [](const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(),
                                        b.coeffs().rend());
  });
  return factors;
}

// Monic irreducible factors with multiplicities.
inline std::vector<std::pair<FpPoly, int>> factor_modp(const FpPoly& f0) {
  if (f0.degree() < 1) return {};
  const Integer& p = f0.prime();
  std::vector<std::pair<FpPoly, int>> out;
  // recursive squarefree split: f = prod over i of a_i^i, with p-th roots for derivative zero parts
  struct Item {
    FpPoly poly;
    int mult;
  };
  std::vector<Item> stack{{f0.monic(), 1}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    FpPoly f = it.poly;
    if (f.degree() < 1) continue;
    FpPoly d = f.derivative();
    if (d.is_zero()) {
      // f(x) = g(x^p)
      std::size_t pp = p.get_ui();
      std::vector<Integer> g;
      for (std::size_t k = 0; k < f.coeffs().size(); k += pp) g.push_back(f.coeffs()[k]);
      stack.push_back({FpPoly(p, g), it.mult * static_cast<int>(pp)});
      continue;
    }
    FpPoly c = fp_gcd(f, d);
    FpPoly w = (f / c).monic();
    int i = 1;
    while (w.degree() > 0) {
      FpPoly y = fp_gcd(w, c);
      FpPoly z = (w / y).monic();
      for (auto& g : berlekamp(z))
        if (g.degree() > 0) out.emplace_back(g, it.mult * i);
      ++i;
      w = y;
      c = (c / y).monic();
    }
    if (c.degree() > 0) stack.push_back({c, it.mult});
  }
  // merge equal factors
  std::vector<std::pair<FpPoly, int>> merged;
  for (auto& [g, m] : out) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& e) { return e.first == g; });
    if (it == merged.end()) merged.emplace_back(g, m);
    else it->second += m;
  }
  std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return std::lexicographical_compare(a.first.coeffs().rbegin(), a.first.coeffs().rend(),
                                        b.first.coeffs().rbegin(), b.first.coeffs().rend());
  });
  return merged;
}

inline bool irreducible_modp(const Polynomial& g, const Integer& p) {
  FpPoly f(p, g);
  if (f.degree() != g.degree() || f.degree() < 1) return false;
  auto fs = factor_modp(f);
  return fs.size() == 1 && fs[0].second == 1;
}

}  // namespace rnf
