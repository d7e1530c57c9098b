#pragma once

#include <utility>

#include "rnf/matrix.hpp"
#include "rnf/polynomial.hpp"

namespace rnf {

// lc(b)^{deg a - deg b + 1} a = q b + r
inline Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  int e = a.degree() - b.degree() + 1;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Polynomial s = Polynomial::monomial(r.lead(), static_cast<std::size_t>(r.degree() - b.degree()));
    r = b.lead() * r - s * b;
    --e;
  }
  return ipow(b.lead(), static_cast<unsigned long>(e)) * r;
}

inline IntMatrix sylvester_matrix(const Polynomial& g, const Polynomial& h) {
  int m = g.degree(), n = h.degree();
  std::size_t size = static_cast<std::size_t>(m + n);
  IntMatrix s(size, size);
  auto gd = g.decreasing(), hd = h.decreasing();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s(i, i + k) = gd[k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s(n + i, i + k) = hd[k];
  return s;
}

inline Integer resultant_sylvester(const Polynomial& g, const Polynomial& h) {
  if (g.is_zero() || h.is_zero()) fail(ErrorCode::ZeroPolynomial, "resultant of zero polynomial");
  if (g.degree() == 0) return ipow(g.lead(), h.degree());
  if (h.degree() == 0) return ipow(h.lead(), g.degree());
  return determinant(sylvester_matrix(g, h));
}

// Subresultant pseudo-remainder sequence.
inline Integer resultant(const Polynomial& g, const Polynomial& h) {
  if (g.is_zero() || h.is_zero()) fail(ErrorCode::ZeroPolynomial, "resultant of zero polynomial");
  if (g.degree() == 0) return ipow(g.lead(), h.degree());
  if (h.degree() == 0) return ipow(h.lead(), g.degree());

  Polynomial a = g, b = h;
  Integer s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() * b.degree()) % 2 == 1) s = -s;
  }
  Integer ca = a.content(), cb = b.content();
  a = a.divide_exact(ca);
  b = b.divide_exact(cb);
  Integer t = ipow(ca, b.degree()) * ipow(cb, a.degree());
  Integer gg = 1, hh = 1;
  while (true) {
    int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    Polynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) return 0;
    a = b;
    b = r.divide_exact(gg * ipow(hh, delta));
    gg = a.lead();
    if (delta > 0) {
      Integer num = ipow(gg, delta), den = ipow(hh, delta - 1);
      mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      hh = num;
    }
    if (b.degree() == 0) break;
  }
  int da = a.degree();
  Integer num = ipow(b.lead(), da), den = ipow(hh, da - 1);
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return s * t * num;
}

}  // namespace rnf
