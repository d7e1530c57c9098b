#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "rnf/factor_modp.hpp"
#include "rnf/local_valuations.hpp"

namespace rnf {

struct DissectedFactor {
  LocalFactorCertificate cert;
  Polynomial psi;              // irreducible factor of f mod p this factor lies over (lifted)
  bool frame_has_psi = false;  // psi is the single Okutsu frame polynomial
};

namespace detail {

struct HullPoint {
  long x;
  long y;
};

inline std::vector<HullPoint> lower_hull(const std::vector<HullPoint>& pts) {
  std::vector<HullPoint> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      if ((b.y - a.y) * (pt.x - a.x) >= (pt.y - a.y) * (b.x - a.x)) hull.pop_back();
      else break;
    }
    hull.push_back(pt);
  }
  return hull;
}

inline std::string part_name(const FpPoly& psi, int mult) {
  return "(" + psi.lift().str() + ")^" + std::to_string(mult);
}

// Certificates for one part G = psi^a mod p, given G modulo p^N. Returns false when N is too small.
inline bool dissect_part(const Polynomial& G, const FpPoly& psi_bar, int a, const Integer& p, long N,
                         std::vector<DissectedFactor>& out) {
  Polynomial psi = psi_bar.lift();
  int dpsi = psi.degree();
  std::vector<Polynomial> coef;
  Polynomial rest = G;
  for (int i = 0; i <= a; ++i) {
    auto [q, r] = divmod_monic(rest, psi);
    coef.push_back(r.reduce(p, N, ResidueConvention::nonneg));
    rest = q;
  }
  std::vector<long> v(a + 1);
  for (int i = 0; i <= a; ++i) {
    Value g = gauss_valuation(coef[i], p);
    v[i] = g.is_infinite() ? N : std::min(N, g.floor_long());
  }
  if (v[0] >= N) return false;
  std::vector<HullPoint> pts;
  for (int i = 0; i <= a; ++i)
    if (v[i] < N) pts.push_back({i, v[i]});
  auto hull = lower_hull(pts);
  for (std::size_t s = 1; s < hull.size(); ++s) {
    long x0 = hull[s - 1].x, y0 = hull[s - 1].y, x1 = hull[s].x, y1 = hull[s].y;
    long g = std::gcd(y0 - y1, x1 - x0);
    long h = (y0 - y1) / g, e = (x1 - x0) / g, d = g;
    // residual coefficients in F_p[x]/(psi)
    std::vector<FpPoly> res;
    for (long k = 0; k <= d; ++k) {
      long i = x0 + k * e, y = y0 - k * h;
      if (v[i] == y) res.push_back(FpPoly(p, coef[i].divide_exact(ipow(p, y))) % psi_bar);
      else res.push_back(FpPoly::zero(p));
    }
    if (dpsi == 1) {
      std::vector<Integer> rc;
      for (const auto& c : res) rc.push_back(c.coeff(0));
      FpPoly R(p, rc);
      for (const auto& [Rk, mult] : factor_modp(R)) {
        if (mult > 1)
          fail(ErrorCode::RequiresCertificate, "part " + part_name(psi_bar, a) +
                                                   " has a non-squarefree residual polynomial");
        int dk = Rk.degree();
        Polynomial phi;
        Polynomial psie = psi.pow(static_cast<unsigned>(e));
        Polynomial pw(Integer(1));
        for (int t = 0; t <= dk; ++t) {
          phi += (Rk.coeff(t) * ipow(p, static_cast<unsigned long>(h * (dk - t)))) * pw;
          pw *= psie;
        }
        bool in_frame = e * dk > 1;
        out.push_back({{phi, 1, static_cast<int>(e), dk}, psi, in_frame});
      }
    } else {
      if (d != 1)
        fail(ErrorCode::RequiresCertificate, "part " + part_name(psi_bar, a) +
                                                 " has a residual polynomial of degree > 1 over a nonlinear psi");
      FpPoly c = (res[0] * fp_inverse_mod(res[1], psi_bar)) % psi_bar;
      Polynomial phi = psi.pow(static_cast<unsigned>(e)) + ipow(p, static_cast<unsigned long>(h)) * c.lift();
      out.push_back({{phi, 1, static_cast<int>(e), dpsi}, psi, e > 1});
    }
  }
  return true;
}

}  // namespace detail

struct DissectOutcome {
  std::vector<DissectedFactor> factors;
  std::vector<std::string> unresolved;  // parts needing supplied certificates
};

// One Newton-polygon level over each irreducible factor of f mod p; parts that are not regular
// are listed instead of certified.
inline DissectOutcome auto_dissect_partial(const ProblemContext& ctx) {
  ctx.validate();
  const Integer& p = ctx.p;
  auto parts = factor_modp(FpPoly(p, ctx.f));
  std::vector<LocalFactorCertificate> pseudo;
  for (const auto& [psi, a] : parts)
    pseudo.push_back({psi.lift().pow(static_cast<unsigned>(a)), 1, 1, psi.degree() * a});
  for (long N = 32;; N *= 2) {
    if (N > ctx.precision_cap) fail(ErrorCode::PrecisionExhausted, "auto_dissect exceeded the precision cap");
    std::vector<Polynomial> G;
    if (parts.size() == 1) G.push_back(ctx.f);
    else
      for (const auto& c : lift_certificates(ctx, pseudo, N)) G.push_back(c.approx);
    DissectOutcome out;
    bool ok = true;
    for (std::size_t k = 0; k < parts.size() && ok; ++k) {
      const auto& [psi, a] = parts[k];
      if (a == 1) {
        out.factors.push_back({{psi.lift(), 1, 1, psi.degree()}, psi.lift(), false});
        continue;
      }
      try {
        ok = detail::dissect_part(G[k], psi, a, p, N, out.factors);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::RequiresCertificate) throw;
        out.unresolved.push_back(e.detail());
      }
    }
    if (!ok) continue;
    return out;
  }
}

inline std::vector<DissectedFactor> auto_dissect_factors(const ProblemContext& ctx) {
  auto out = auto_dissect_partial(ctx);
  if (!out.unresolved.empty()) throw Error(ErrorCode::RequiresCertificate, out.unresolved.front());
  std::vector<LocalFactorCertificate> certs;
  for (const auto& d : out.factors) certs.push_back(d.cert);
  check_certificates(ctx, certs);
  return out.factors;
}

inline std::vector<LocalFactorCertificate> auto_dissect(const ProblemContext& ctx) {
  std::vector<LocalFactorCertificate> certs;
  for (const auto& d : auto_dissect_factors(ctx)) certs.push_back(d.cert);
  return certs;
}

}  // namespace rnf
