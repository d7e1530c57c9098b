#pragma once

#include <cmath>
#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "rnf/pipeline.hpp"

namespace rnf::test {

inline Polynomial P(std::initializer_list<long> decreasing) {
  std::vector<Integer> c;
  for (long x : decreasing) c.emplace_back(x);
  return Polynomial::from_decreasing(std::move(c));
}

inline IntMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Integer>> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (long x : r) out.back().emplace_back(x);
  }
  return IntMatrix(out);
}

inline Value V(long a, long b = 1) { return Value(a, b); }

inline std::vector<Value> Vs(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<Value> out;
  for (const auto& [a, b] : xs) out.emplace_back(a, b);
  return out;
}

// Octic worked example at p = 2.
namespace octic {

inline Polynomial f() { return P({1, -1, 21, -20, -368, 388, -516, 128, 128}); }
inline ProblemContext ctx() { return {Integer(2), f()}; }
inline Polynomial phi1() { return P({1, 4, 8, 16, 4}); }
inline Polynomial phi2() { return P({1, 0, 32}); }
inline Polynomial phi3() { return P({1, 1, 1}); }
inline std::vector<LocalFactorCertificate> certificates() {
  return {{phi1(), 1, 4, 1}, {phi2(), 1, 2, 1}, {phi3(), 1, 1, 2}};
}

inline IntMatrix quotients() {
  return M({{1, 31, 21, 12, 16, 4, 28, 0},
            {9, 7, 11, 2, 14, 4, 0, 0},
            {0, 1, 5, 1, 0, 6, 0, 0},
            {0, 1, 7, 5, 4, 0, 4, 4},
            {1, 2, 3, 2, 1, 0, 0, 0},
            {0, 0, 0, 1, 3, 1, 0, 0},
            {0, 1, 0, 0, 0, 0, 0, 0},
            {1, 0, 0, 0, 0, 0, 0, 0}});
}
inline std::vector<Value> quotient_values() {
  return Vs({{9, 2}, {13, 4}, {11, 4}, {2, 1}, {3, 2}, {1, 1}, {0, 1}, {0, 1}});
}
inline EncodedFamily quotient_family() { return {quotients(), quotient_values()}; }

inline IntMatrix with_identity_tail(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Integer>> out;
  for (std::size_t i = 0; i < 8; ++i) {
    out.emplace_back(8, Integer(0));
    if (i < rows.size())
      for (std::size_t k = 0; k < 8; ++k) out[i][k] = rows[i][k];
    else
      out[i][i] = 1;
  }
  return IntMatrix(out);
}

inline IntMatrix triangular() {
  return with_identity_tail({{1, -1, -11, 12, 16, 4, -4, 0},
                             {0, 1, -3, 1, 0, -2, 0, 0},
                             {0, 0, 1, -3, 1, 0, -2, 0},
                             {0, 0, 0, 1, 1, 1, 0, 0},
                             {0, 0, 0, 0, 1, 1, 1, 0}});
}
inline IntMatrix rnf() {
  return with_identity_tail({{1, -1, -3, 4, 8, -12, 12, 0},
                             {0, 1, 1, 1, 0, 2, 0, 0},
                             {0, 0, 1, 1, 1, 0, 2, 0},
                             {0, 0, 0, 1, 1, 1, 0, 0},
                             {0, 0, 0, 0, 1, 1, 1, 0}});
}
inline IntMatrix hnf() {
  return with_identity_tail({{1, 3, 1, 0, 0, 4, 12, 0},
                             {0, 1, 0, 0, 3, 2, 2, 0},
                             {0, 0, 1, 1, 1, 0, 2, 0},
                             {0, 0, 0, 1, 1, 1, 0, 0},
                             {0, 0, 0, 0, 1, 0, 0, 0}});
}
inline std::vector<Value> hnf_values() { return Vs({{4, 1}, {2, 1}, {9, 4}, {1, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}}); }
inline IntMatrix maxmin() {
  return with_identity_tail({{1, 31, 21, 28, 32, 20, 28, 0},
                             {0, 1, 1, 1, 0, 2, 0, 0},
                             {0, 0, 1, 1, 1, 0, 2, 0},
                             {0, 0, 0, 1, 1, 1, 0, 2},
                             {0, 0, 0, 0, 1, -1, 1, 0}});
}
inline std::vector<Value> deltas_top_down() {
  return Vs({{9, 2}, {11, 4}, {9, 4}, {1, 1}, {1, 2}, {0, 1}, {0, 1}, {0, 1}});
}
inline DeltaProfile profile() { return DeltaProfile::from_top_down(deltas_top_down()); }

inline std::vector<OkutsuFrameCertificate> frames() {
  Value adj = Value::infinity();
  return {{0, {P({1, 0}), P({1, 2, 2})}, phi1(), {{V(1, 2), V(5, 2), V(0)}, {V(7, 4), V(1), V(0)}, {adj, V(2), V(0)}}},
          {1, {P({1, 0})}, phi2(), {{V(1, 2), V(5, 2), V(0)}, {V(1), adj, V(0)}}},
          {2, {}, phi3(), {{V(0), V(0), adj}}}};
}
inline Polynomial improved1() { return P({1, 32, 52, 48, 28}); }
inline Polynomial improved3() { return P({1, -1, 1}); }
inline std::vector<OkutsuFrameCertificate> improved_frames() {
  auto fr = frames();
  fr[0].approximation = improved1();
  fr[2].approximation = improved3();
  return fr;
}

}  // namespace octic

// Independent reference computations. These use only GMP types and plain coefficient vectors.
namespace oracle {

using Coeffs = std::vector<Integer>;  // ascending

inline Coeffs coeffs(const Polynomial& g) {
  Coeffs c;
  for (int k = 0; k <= g.degree(); ++k) c.push_back(g.coeff(k));
  return c;
}

inline void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

inline std::optional<long> vp(Integer z, const Integer& p) {
  if (z == 0) return std::nullopt;
  long k = 0;
  while (z % p == 0) {
    z /= p;
    ++k;
  }
  return k;
}

inline Integer det(std::vector<std::vector<Integer>> a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline std::vector<std::vector<Integer>> sylvester(const Coeffs& a, const Coeffs& b) {
  std::size_t m = a.size() - 1, k = b.size() - 1, s = m + k;
  std::vector<std::vector<Integer>> S(s, std::vector<Integer>(s, Integer(0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= m; ++j) S[i][i + j] = a[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= k; ++j) S[k + i][i + j] = b[k - j];
  return S;
}

inline Integer resultant(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  return det(sylvester(coeffs(a), coeffs(b)));
}

// g mod F for monic F
inline Coeffs rem(Coeffs g, const Coeffs& F) {
  std::size_t d = F.size() - 1;
  trim(g);
  while (g.size() > d) {
    Integer c = g.back();
    std::size_t s = g.size() - 1 - d;
    for (std::size_t k = 0; k <= d; ++k) g[s + k] -= c * F[k];
    trim(g);
  }
  return g;
}

// Res(F, g) for monic F as the determinant of multiplication by g on Z[x]/F.
inline Integer norm(const Coeffs& F, const Coeffs& g) {
  std::size_t d = F.size() - 1;
  std::vector<std::vector<Integer>> m(d, std::vector<Integer>(d, Integer(0)));
  Coeffs col = rem(g, F);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < col.size(); ++i) m[i][k] = col[i];
    Coeffs sh(col.size() + 1, Integer(0));
    for (std::size_t i = 0; i < col.size(); ++i) sh[i + 1] = col[i];
    col = rem(sh, F);
  }
  return det(m);
}

// w on Q_p[x]/(F_1 ... F_t) from an exact factorization into irreducible F_i over Q_p.
struct ExactField {
  Integer p;
  std::vector<Coeffs> factors;

  std::optional<Rational> wi(std::size_t i, const Coeffs& g, long exponent = 0) const {
    auto v = vp(norm(factors[i], g), p);
    if (!v) return std::nullopt;
    Rational r(*v, static_cast<long>(factors[i].size() - 1));
    r.canonicalize();
    return r - exponent;
  }
  std::vector<std::optional<Rational>> wvec(const Coeffs& g, long exponent = 0) const {
    std::vector<std::optional<Rational>> out;
    for (std::size_t i = 0; i < factors.size(); ++i) out.push_back(wi(i, g, exponent));
    return out;
  }
  std::optional<Rational> w(const Coeffs& g, long exponent = 0) const {
    std::optional<Rational> best;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      auto v = wi(i, g, exponent);
      if (v && (!best || *v < *best)) best = v;
    }
    return best;
  }
  std::optional<Rational> w(const Polynomial& g, long exponent = 0) const { return w(coeffs(g), exponent); }
};

struct DeltaSearch {
  std::vector<Rational> deltas;  // by degree
  std::vector<Coeffs> best;      // monic g_j attaining delta_j
  long modulus_exponent = 0;
  bool complete = false;
};

// Exhaustive maximum of w over monic g of each degree with coefficients in [0, p^K), K raised until
// every maximum lies below K (then reduction mod p^K cannot hide a larger value).
inline DeltaSearch delta_bruteforce(const ExactField& fld, int n, double budget = 1e6) {
  DeltaSearch out;
  for (long K = 1;; ++K) {
    Integer q = 1;
    for (long i = 0; i < K; ++i) q *= fld.p;
    double total = 0;
    for (int j = 0; j < n; ++j) total += std::pow(q.get_d(), j);
    if (total > budget) return out;
    out.deltas.assign(n, Rational(0));
    out.best.assign(n, Coeffs{});
    bool below = true;
    for (int j = 0; j < n; ++j) {
      Coeffs g(j + 1, Integer(0));
      g[j] = 1;
      std::optional<Rational> top;
      while (true) {
        auto v = fld.w(g);
        if (v && (!top || *v > *top)) {
          top = v;
          out.best[j] = g;
        }
        int k = 0;
        while (k < j) {
          g[k] += 1;
          if (g[k] < q) break;
          g[k] = 0;
          ++k;
        }
        if (k == j) break;
      }
      out.deltas[j] = *top;
      if (*top >= K) below = false;
    }
    out.modulus_exponent = K;
    if (below) {
      out.complete = true;
      return out;
    }
  }
}

// Monic irreducibility mod p by trial division over all monic candidates of degree <= deg/2.
inline bool irreducible_mod(const Coeffs& g, long p) {
  int d = static_cast<int>(g.size()) - 1;
  for (int k = 1; 2 * k <= d; ++k) {
    Coeffs h(k + 1, Integer(0));
    h[k] = 1;
    while (true) {
      Coeffs r = rem(g, h);
      bool zero = true;
      for (auto& c : r)
        if (c % p != 0) zero = false;
      if (zero) return false;
      int i = 0;
      while (i < k) {
        h[i] += 1;
        if (h[i] < p) break;
        h[i] = 0;
        ++i;
      }
      if (i == k) break;
    }
  }
  return true;
}

// Min-equality w(sum a_i alpha_i) = min(v(a_i) + w(alpha_i)) over every a_i = u_i p^{k_i}, u_i in [0, p),
// 0 <= k_i <= span of the integer parts. Empty when that set exceeds max_vectors.
inline std::optional<bool> definitional_reduced(const ExactField& fld, const std::vector<LocalElement>& elems,
                                                double max_vectors = 2e5) {
  std::size_t m = elems.size();
  std::vector<Rational> w;
  long lo = 0, hi = 0, E = 0;
  for (std::size_t i = 0; i < m; ++i) {
    auto v = fld.w(coeffs(elems[i].numerator), elems[i].exponent);
    if (!v) return false;
    w.push_back(*v);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), v->get_num_mpz_t(), v->get_den_mpz_t());
    long f = fl.get_si();
    if (i == 0 || f < lo) lo = f;
    if (i == 0 || f > hi) hi = f;
    E = std::max(E, elems[i].exponent);
  }
  long span = hi - lo, choices = 1 + (fld.p.get_si() - 1) * (span + 1);
  if (std::pow(double(choices), double(m)) > max_vectors) return std::nullopt;
  std::vector<long> idx(m, 0);
  while (true) {
    std::size_t k = 0;
    while (k < m && ++idx[k] == choices) idx[k++] = 0;
    if (k == m) return true;
    Coeffs num;
    std::optional<Rational> expect;
    for (std::size_t i = 0; i < m; ++i) {
      if (idx[i] == 0) continue;
      long u = 1 + (idx[i] - 1) % (fld.p.get_si() - 1), sh = (idx[i] - 1) / (fld.p.get_si() - 1);
      Integer c = u;
      for (long t = 0; t < sh + E - elems[i].exponent; ++t) c *= fld.p;
      Coeffs g = coeffs(elems[i].numerator);
      if (num.size() < g.size()) num.resize(g.size(), Integer(0));
      for (std::size_t t = 0; t < g.size(); ++t) num[t] += c * g[t];
      Rational e = w[i] + sh;
      if (!expect || e < *expect) expect = e;
    }
    trim(num);
    auto got = num.empty() ? std::nullopt : fld.w(num, E);
    if (!got || *got != *expect) return false;
  }
}

}  // namespace oracle

// Random local instances with a known exact factorization f = F_1 ... F_t + p^N h.
struct Instance {
  Integer p;
  Polynomial f;
  std::vector<Polynomial> factors;
  std::vector<int> e, fdeg;
  oracle::ExactField field;
};

inline Polynomial random_poly(std::mt19937_64& rng, int deg, long lo, long hi, bool monic) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<Integer> c(deg + 1);
  for (int k = 0; k <= deg; ++k) c[k] = d(rng);
  if (monic) c[deg] = 1;
  return Polynomial::from_ascending(std::move(c));
}

inline Polynomial compose_shift(const Polynomial& g, const Integer& a) {
  Polynomial r;
  Polynomial xa = Polynomial::from_ascending({-a, Integer(1)});
  for (int k = g.degree(); k >= 0; --k) r = r * xa + Polynomial(g.coeff(k));
  return r;
}

// Irreducible factors over Q_p: (x - a)^e - p^k u with gcd(k, e) = 1, lifts of irreducibles mod p, and
// psi^2 + p for psi irreducible of degree 2.
inline Polynomial random_local_factor(std::mt19937_64& rng, long p, int deg, int& e, int& fd) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<long> res(0, p - 1), unit(1, p - 1);
  int kind = pick(rng);
  if (deg == 1) kind = 0;
  if (kind == 2 && deg != 4) kind = 0;
  Integer P(p);
  if (kind == 0) {
    std::vector<int> ks;
    for (int k = 1; k <= 3; ++k)
      if (std::gcd(k, deg) == 1) ks.push_back(k);
    int k = ks[std::uniform_int_distribution<std::size_t>(0, ks.size() - 1)(rng)];
    Polynomial g = Polynomial::monomial(Integer(1), deg) - Polynomial(ipow(P, k) * unit(rng));
    e = deg;
    fd = 1;
    return compose_shift(g, Integer(res(rng)));
  }
  if (kind == 1) {
    while (true) {
      Polynomial g = random_poly(rng, deg, 0, p - 1, true);
      if (!oracle::irreducible_mod(oracle::coeffs(g), p)) continue;
      Polynomial noise = random_poly(rng, deg - 1, -2, 2, false);
      e = 1;
      fd = deg;
      return g + Polynomial(P) * noise;
    }
  }
  while (true) {
    Polynomial psi = random_poly(rng, 2, 0, p - 1, true);
    if (!oracle::irreducible_mod(oracle::coeffs(psi), p)) continue;
    e = 2;
    fd = 2;
    return psi * psi + Polynomial(P * unit(rng));
  }
}

inline std::optional<Instance> random_instance(std::mt19937_64& rng, long p, int n) {
  Instance in;
  in.p = p;
  int left = n;
  while (left > 0) {
    int d = std::uniform_int_distribution<int>(1, left)(rng);
    int e = 1, fd = 1;
    in.factors.push_back(random_local_factor(rng, p, d, e, fd));
    in.e.push_back(e);
    in.fdeg.push_back(fd);
    left -= d;
  }
  for (std::size_t i = 0; i < in.factors.size(); ++i)
    for (std::size_t j = i + 1; j < in.factors.size(); ++j)
      if (oracle::resultant(in.factors[i], in.factors[j]) == 0) return std::nullopt;
  Polynomial prod(Integer(1));
  for (const auto& g : in.factors) prod *= g;
  Polynomial h = random_poly(rng, n - 1, 1, p - 1, false);
  in.f = prod + Polynomial(ipow(Integer(p), 60)) * h;
  in.field.p = p;
  for (const auto& g : in.factors) in.field.factors.push_back(oracle::coeffs(g));
  return in;
}

inline std::vector<LocalFactorCertificate> exact_certificates(const Instance& in) {
  std::vector<LocalFactorCertificate> c;
  for (std::size_t i = 0; i < in.factors.size(); ++i) c.push_back({in.factors[i], 20, in.e[i], in.fdeg[i]});
  return c;
}

struct SolvedInstance {
  Instance in;
  oracle::DeltaSearch search;

  ProblemContext ctx() const { return {in.p, in.f}; }
  int n() const { return in.f.degree(); }
  DeltaProfile profile() const {
    std::vector<Value> d;
    for (const auto& x : search.deltas) d.emplace_back(x);
    return DeltaProfile::from_deltas(d);
  }
  // Rows g_{n-1}, ..., g_0 of the brute-force maximizers.
  IntMatrix basis() const {
    int n = this->n();
    IntMatrix T(n, n);
    for (int i = 0; i < n; ++i) {
      const auto& g = search.best[n - 1 - i];
      for (std::size_t k = 0; k < g.size(); ++k) T(i, n - 1 - k) = g[k];
    }
    return T;
  }
};

inline std::optional<SolvedInstance> solved_instance(std::mt19937_64& rng, long p, int n, double budget = 3e4) {
  auto in = random_instance(rng, p, n);
  if (!in) return std::nullopt;
  auto ds = oracle::delta_bruteforce(in->field, n, budget);
  if (!ds.complete) return std::nullopt;
  return SolvedInstance{std::move(*in), std::move(ds)};
}

inline long floor_of(const Rational& r) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return f.get_si();
}

inline Integer random_int(std::mt19937_64& rng, long lo, long hi) {
  return Integer(std::uniform_int_distribution<long>(lo, hi)(rng));
}

// Square integer matrix whose determinant is a p-unit.
inline IntMatrix random_unit_matrix(std::mt19937_64& rng, std::size_t m, long p) {
  while (true) {
    IntMatrix a(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) a(i, j) = random_int(rng, -p * p, p * p);
    Integer d = oracle::det(a.to_rows());
    if (d % p != 0) return a;
  }
}

// Random element of the orthonormal group for the given block partition.
inline IntMatrix random_orthonormal(std::mt19937_64& rng, const std::vector<std::size_t>& partition, long p) {
  std::size_t n = 0;
  for (auto m : partition) n += m;
  IntMatrix t(n, n);
  std::size_t r0 = 0;
  for (std::size_t bi = 0; bi < partition.size(); ++bi) {
    std::size_t c0 = 0;
    for (std::size_t bj = 0; bj < partition.size(); ++bj) {
      if (bi == bj) {
        IntMatrix u = random_unit_matrix(rng, partition[bi], p);
        for (std::size_t i = 0; i < partition[bi]; ++i)
          for (std::size_t j = 0; j < partition[bj]; ++j) t(r0 + i, c0 + j) = u(i, j);
      } else {
        for (std::size_t i = 0; i < partition[bi]; ++i)
          for (std::size_t j = 0; j < partition[bj]; ++j)
            t(r0 + i, c0 + j) = random_int(rng, -p * p, p * p) * (bj < bi ? Integer(p) : Integer(1));
      }
      c0 += partition[bj];
    }
    r0 += partition[bi];
  }
  return t;
}

// Brute-force basis scaled into [0,1) and ordered by fractional value, with its block partition.
struct ScaledBasis {
  std::vector<LocalElement> elements;
  std::vector<Rational> values;
  std::vector<std::size_t> partition;
};

inline ScaledBasis scaled_oracle_basis(const SolvedInstance& s) {
  std::vector<std::pair<Rational, LocalElement>> items;
  for (int j = 0; j < s.n(); ++j) {
    long fl = floor_of(s.search.deltas[j]);
    Polynomial g = Polynomial::from_ascending(s.search.best[j]);
    items.push_back({s.search.deltas[j] - fl, {g, fl}});
  }
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  ScaledBasis out;
  for (const auto& [v, e] : items) {
    if (!out.values.empty() && out.values.back() == v) ++out.partition.back();
    else out.partition.push_back(1);
    out.values.push_back(v);
    out.elements.push_back(e);
  }
  return out;
}

// Integral combination of elements with a common exponent.
inline LocalElement combine_rows(const IntMatrix& t, std::size_t i, const std::vector<LocalElement>& elems,
                                 const Integer& p) {
  long E = 0;
  for (const auto& e : elems) E = std::max(E, e.exponent);
  Polynomial num;
  for (std::size_t j = 0; j < elems.size(); ++j)
    if (t(i, j) != 0) num += (t(i, j) * ipow(p, E - elems[j].exponent)) * elems[j].numerator;
  return {num, E};
}

// A reduced family of n polynomials of content 1 obtained from an orthonormal transform of the
// brute-force basis, in random row order, with w-values from the oracle.
inline EncodedFamily random_reduced_family(std::mt19937_64& rng, const SolvedInstance& s) {
  ScaledBasis b = scaled_oracle_basis(s);
  IntMatrix t = random_orthonormal(rng, b.partition, s.in.p.get_si());
  int n = s.n();
  std::vector<std::pair<Polynomial, Value>> rows;
  for (int i = 0; i < n; ++i) {
    LocalElement e = combine_rows(t, i, b.elements, s.in.p);
    auto [g, c] = normalize_content(e.numerator, s.in.p);
    rows.push_back({g, Value(*s.in.field.w(g))});
  }
  std::shuffle(rows.begin(), rows.end(), rng);
  EncodedFamily fam{IntMatrix(n, n), {}};
  for (int i = 0; i < n; ++i) {
    fam.matrix.set_row(i, rows[i].first.row(n));
    fam.wvalues.push_back(rows[i].second);
  }
  return fam;
}

// Other triangular bases of the same lattice: add multiples of lower rows that keep w >= delta_i.
inline IntMatrix perturb(std::mt19937_64& rng, IntMatrix T, const DeltaProfile& prof, long p) {
  std::size_t n = T.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      long c = (prof.of_row(i) - prof.of_row(j)).ceil_long();
      Integer a = random_int(rng, -3, 3) * ipow(Integer(p), c);
      for (std::size_t k = j; k < n; ++k) T(i, k) += a * T(j, k);
    }
  return T;
}

inline Value to_value(const std::optional<Rational>& r) { return r ? Value(*r) : Value::infinity(); }

}  // namespace rnf::test
