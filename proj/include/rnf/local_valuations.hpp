#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rnf/matrix.hpp"
#include "rnf/polynomial.hpp"
#include "rnf/resultant.hpp"

namespace rnf {

struct ProblemContext {
  Integer p;
  Polynomial f;
  ResidueConvention residues = ResidueConvention::balanced;
  long precision_cap = 4096;

  int n() const { return f.degree(); }

  void validate() const {
    if (!is_probable_prime(p)) fail(ErrorCode::InvalidInput, "p = " + p.get_str() + " is not prime");
    if (!f.is_monic() || f.degree() < 2) fail(ErrorCode::InvalidInput, "f must be monic of degree > 1");
    if (precision_cap < 1) fail(ErrorCode::InvalidInput, "precision cap must be positive");
  }
};

struct LocalFactorCertificate {
  Polynomial approx;
  long precision = 1;
  int ram_index = 1;
  int res_degree = 1;

  int degree() const { return ram_index * res_degree; }
  friend bool operator==(const LocalFactorCertificate&, const LocalFactorCertificate&) = default;
};

// numerator(theta) / p^exponent
struct LocalElement {
  Polynomial numerator;
  long exponent = 0;
};

inline LocalElement element_of(const Polynomial& g, const Polynomial& f, long exponent = 0) {
  return {g.degree() >= f.degree() ? rem_monic(g, f) : g, exponent};
}

inline LocalElement multiply(const LocalElement& a, const LocalElement& b, const Polynomial& f) {
  return {rem_monic(a.numerator * b.numerator, f), a.exponent + b.exponent};
}

inline Polynomial product_except(const std::vector<Polynomial>& phis, std::size_t skip) {
  Polynomial r(Integer(1));
  for (std::size_t j = 0; j < phis.size(); ++j)
    if (j != skip) r *= phis[j];
  return r;
}

inline void check_certificates(const ProblemContext& ctx, const std::vector<LocalFactorCertificate>& certs) {
  if (certs.empty()) fail(ErrorCode::InvalidInput, "no certificates");
  int total = 0;
  long n0 = certs[0].precision;
  std::vector<Polynomial> phis;
  for (const auto& c : certs) {
    if (c.ram_index < 1 || c.res_degree < 1 || c.precision < 1)
      fail(ErrorCode::InvalidInput, "certificate invariants must be positive");
    if (!c.approx.is_monic() || c.approx.degree() != c.degree())
      fail(ErrorCode::InvalidInput, "certificate approximation must be monic of degree e*f");
    total += c.degree();
    n0 = std::min(n0, c.precision);
    phis.push_back(c.approx);
  }
  if (total != ctx.n()) fail(ErrorCode::InvalidInput, "sum of e_i*f_i differs from deg f");
  Value k = gauss_valuation(ctx.f - product(phis), ctx.p);
  if (k < Value(n0))
    fail(ErrorCode::CertificateTooWeak, "f is not congruent to the product of approximations mod p^" +
                                            std::to_string(n0));
}

namespace detail {

// One Newton correction of phi towards the factor of f it approximates, modulo p^W.
inline Polynomial newton_correct(const Polynomial& f, const Polynomial& phi, const Integer& p, long W) {
  auto [q, r] = divmod_monic(f, phi);
  if (r.is_zero()) return phi;
  int D = phi.degree();
  Polynomial qm = rem_monic(q.reduce(p, W, ResidueConvention::nonneg), phi);
  RatMatrix m(D, D);
  Polynomial col = qm;
  for (int k = 0; k < D; ++k) {
    for (int i = 0; i < D; ++i) m(i, k) = Rational(col.coeff(i));
    if (k + 1 < D) col = rem_monic(col.shift(1), phi);
  }
  Polynomial rr = r.reduce(p, W, ResidueConvention::nonneg);
  RatMatrix b(D, 1);
  for (int i = 0; i < D; ++i) b(i, 0) = Rational(rr.coeff(i));
  RatMatrix eps;
  try {
    eps = solve(m, b);
  } catch (const Error&) {
    fail(ErrorCode::CertificateTooWeak, "approximation shares a factor with its cofactor");
  }
  std::vector<Integer> c(D + 1);
  for (int i = 0; i < D; ++i) {
    if (eps(i, 0) != 0 && vp(eps(i, 0), p) < 0)
      fail(ErrorCode::CertificateTooWeak, "Newton correction is not p-integral");
    c[i] = represent(Rational(Rational(phi.coeff(i)) + eps(i, 0)), p, W, ResidueConvention::nonneg);
  }
  c[D] = 1;
  return Polynomial::from_ascending(std::move(c));
}

inline long resultant_valuation(const Polynomial& a, const Polynomial& b, const Integer& p) {
  Integer r = resultant(a, b);
  if (r == 0) fail(ErrorCode::CertificateTooWeak, "approximations share a common factor");
  return vp(r, p);
}

}  // namespace detail

inline std::vector<LocalFactorCertificate> lift_certificates(const ProblemContext& ctx,
                                                             const std::vector<LocalFactorCertificate>& certs,
                                                             long target) {
  check_certificates(ctx, certs);
  bool done = std::all_of(certs.begin(), certs.end(), [&](const auto& c) { return c.precision >= target; });
  if (done) return certs;
  if (target > ctx.precision_cap)
    fail(ErrorCode::PrecisionExhausted, "target precision " + std::to_string(target) + " exceeds cap");
  const Integer& p = ctx.p;
  std::vector<LocalFactorCertificate> out = certs;
  if (certs.size() == 1) {
    out[0].approx = ctx.f.reduce(p, target, ResidueConvention::nonneg);
    out[0].precision = target;
    return out;
  }
  std::vector<Polynomial> phis;
  for (const auto& c : certs) phis.push_back(c.approx);
  std::size_t t = phis.size();
  long prev_k = -1;
  while (true) {
    std::vector<long> r(t);
    long rmax = 0;
    for (std::size_t i = 0; i < t; ++i) {
      r[i] = detail::resultant_valuation(phis[i], product_except(phis, i), p);
      rmax = std::max(rmax, r[i]);
    }
    long W = target + 2 * rmax + 8;
    Value gap = gauss_valuation(ctx.f - product(phis), p);
    long k = gap.is_infinite() ? W : std::min(W, gap.floor_long());
    bool certified = true;
    for (std::size_t i = 0; i < t; ++i)
      if (!(k > 2 * r[i] && k - r[i] >= target)) certified = false;
    if (certified) break;
    if (k <= prev_k) fail(ErrorCode::CertificateTooWeak, "Newton iteration stopped improving at precision " +
                                                             std::to_string(k));
    prev_k = k;
    for (std::size_t i = 0; i < t; ++i) phis[i] = detail::newton_correct(ctx.f, phis[i], p, W);
  }
  for (std::size_t i = 0; i < t; ++i) {
    if (gauss_valuation(phis[i] - certs[i].approx, p) < Value(certs[i].precision))
      fail(ErrorCode::CertificateTooWeak, "lifted factor " + std::to_string(i) +
                                              " is not congruent to its input approximation");
    out[i].approx = phis[i].reduce(p, target, ResidueConvention::nonneg);
    out[i].precision = target;
  }
  return out;
}

// Evaluates w_i by resultants against lifted factors, escalating precision on demand. Holds a
// private cache of lifted certificates; one instance must not be shared between threads.
class Valuator {
 public:
  Valuator(ProblemContext ctx, std::vector<LocalFactorCertificate> certs)
      : ctx_(std::move(ctx)), certs_(std::move(certs)) {
    ctx_.validate();
    check_certificates(ctx_, certs_);
    long rmax = 0;
    std::vector<Polynomial> phis;
    for (const auto& c : certs_) phis.push_back(c.approx);
    for (std::size_t i = 0; i < phis.size() && phis.size() > 1; ++i) {
      Integer r = resultant(phis[i], product_except(phis, i));
      if (r != 0) rmax = std::max(rmax, vp(r, ctx_.p));
    }
    start_ = std::min(ctx_.precision_cap, std::max<long>(16, 2 * rmax + 4));
  }

  const ProblemContext& context() const { return ctx_; }
  const std::vector<LocalFactorCertificate>& certificates() const { return certs_; }
  std::size_t size() const { return certs_.size(); }
  long precision() const { return lifted_ ? certs_[0].precision : 0; }

  void ensure_precision(long target) {
    if (lifted_ && certs_[0].precision >= target) return;
    certs_ = lift_certificates(ctx_, certs_, target);
    for (auto& c : certs_) c.precision = std::max(c.precision, target);
    lifted_ = true;
  }

  // Entry `skip` is left infinite without being evaluated.
  std::vector<Value> w_vector(const LocalElement& a, std::size_t skip = static_cast<std::size_t>(-1)) {
    Polynomial g = a.numerator;
    if (g.degree() >= ctx_.n()) g = rem_monic(g, ctx_.f);
    if (g.is_zero()) fail(ErrorCode::ZeroElement, "w of the zero element");
    long N = std::max(start_, precision());
    while (true) {
      ensure_precision(N);
      std::vector<Value> w;
      bool ok = true;
      for (std::size_t i = 0; i < certs_.size(); ++i) {
        const auto& c = certs_[i];
        if (i == skip) {
          w.push_back(Value::infinity());
          continue;
        }
        Integer r = resultant(c.approx, g);
        long v = r == 0 ? N : vp(r, ctx_.p);
        if (v >= N) {
          ok = false;
          break;
        }
        Value wi = Value(v, c.degree()) - Value(a.exponent);
        if (!(c.ram_index * wi).is_integer())
          fail(ErrorCode::CertificateTooWeak, "w-value " + wi.str() + " outside the value group of e = " +
                                                  std::to_string(c.ram_index));
        w.push_back(wi);
      }
      if (ok) return w;
      if (N >= ctx_.precision_cap)
        fail(ErrorCode::PrecisionExhausted, "w evaluation did not stabilize below the precision cap");
      N = std::min(2 * N, ctx_.precision_cap);
    }
  }

  Value w(const LocalElement& a) {
    auto v = w_vector(a);
    return *std::min_element(v.begin(), v.end());
  }
  Value w(const Polynomial& g) { return w(LocalElement{g, 0}); }

 private:
  ProblemContext ctx_;
  std::vector<LocalFactorCertificate> certs_;
  long start_ = 16;
  bool lifted_ = false;
};

inline std::vector<Value> w_vector(const LocalElement& g, const std::vector<LocalFactorCertificate>& certs,
                                   const ProblemContext& ctx) {
  Valuator val(ctx, certs);
  return val.w_vector(g);
}

inline Value w_min(const LocalElement& g, const std::vector<LocalFactorCertificate>& certs,
                   const ProblemContext& ctx) {
  Valuator val(ctx, certs);
  return val.w(g);
}

// Sides of the lower convex hull of {(i, v(a_i))}, as (root valuation, length), steepest first.
inline std::vector<std::pair<Value, long>> newton_polygon(const Polynomial& g, const Integer& p) {
  if (g.is_zero()) fail(ErrorCode::ZeroPolynomial, "Newton polygon of zero");
  std::vector<std::pair<Value, long>> sides;
  long k0 = 0;
  while (g.coeff(k0) == 0) ++k0;
  if (k0 > 0) sides.emplace_back(Value::infinity(), k0);
  std::vector<std::pair<long, long>> hull;
  for (long i = k0; i <= g.degree(); ++i) {
    if (g.coeff(i) == 0) continue;
    std::pair<long, long> pt{i, vp(g.coeff(i), p)};
    while (hull.size() >= 2) {
      auto [x1, y1] = hull[hull.size() - 2];
      auto [x2, y2] = hull.back();
      // drop the middle point unless it lies strictly below the chord
      if ((y2 - y1) * (pt.first - x1) >= (pt.second - y1) * (x2 - x1)) hull.pop_back();
      else break;
    }
    hull.push_back(pt);
  }
  for (std::size_t s = 1; s < hull.size(); ++s) {
    long dx = hull[s].first - hull[s - 1].first;
    sides.emplace_back(Value(hull[s - 1].second - hull[s].second, dx), dx);
  }
  return sides;
}

}  // namespace rnf
