#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rnf/dissect.hpp"
#include "rnf/reduced.hpp"

namespace rnf {

struct OkutsuFrameCertificate {
  std::size_t factor = 0;
  std::vector<Polynomial> phis;
  Polynomial approximation;
  // one vector per phi, then one for the approximation; Value::infinity() marks the adjustable entry
  std::vector<std::vector<Value>> wvectors;
};

struct ProductSlot {
  std::size_t frame = 0;  // npos for the x filler
  std::size_t level = 0;  // index into phis; phis.size() is the approximation
  Polynomial poly;
  std::vector<Value> w;
  unsigned max_exponent = 0;
  bool approximation = false;
  bool filler = false;
};

struct FormalProduct {
  std::vector<unsigned> exponents;  // per slot
  std::size_t degree = 0;
  Value value;
};

struct MaxMinResult {
  std::vector<ProductSlot> slots;
  std::vector<FormalProduct> products;      // degree 0 .. n-1
  DeltaProfile deltas;
  std::vector<std::optional<Value>> bounds;  // per factor, required w_i of its approximation
};

namespace detail {

inline void check_frames(const std::vector<OkutsuFrameCertificate>& frames, int n) {
  std::size_t t = frames.size();
  if (t == 0) fail(ErrorCode::InconsistentFrames, "no frames");
  std::vector<bool> seen(t, false);
  int total = 0;
  for (const auto& fr : frames) {
    if (fr.factor >= t || seen[fr.factor]) fail(ErrorCode::InconsistentFrames, "factor indices must be 0..t-1, once each");
    seen[fr.factor] = true;
    if (!fr.approximation.is_monic()) fail(ErrorCode::InconsistentFrames, "approximation must be monic");
    if (fr.wvectors.size() != fr.phis.size() + 1)
      fail(ErrorCode::InconsistentFrames, "one w-vector per phi plus one for the approximation");
    int prev = 0;
    for (const auto& phi : fr.phis) {
      if (!phi.is_monic() || phi.degree() <= prev || (prev > 0 && phi.degree() % prev != 0))
        fail(ErrorCode::InconsistentFrames, "frame degrees must form a strict divisibility chain");
      prev = phi.degree();
    }
    int da = fr.approximation.degree();
    if (da <= prev || (prev > 0 && da % prev != 0))
      fail(ErrorCode::InconsistentFrames, "approximation degree must extend the divisibility chain");
    total += da;
    for (std::size_t k = 0; k < fr.wvectors.size(); ++k) {
      if (fr.wvectors[k].size() != t) fail(ErrorCode::InconsistentFrames, "w-vectors must have length t");
      for (std::size_t i = 0; i < t; ++i) {
        bool own_adjustable = k == fr.phis.size() && i == fr.factor;
        if (fr.wvectors[k][i].is_infinite() != own_adjustable)
          fail(ErrorCode::InconsistentFrames, "only the approximation's own entry may be adjustable");
      }
    }
  }
  if (total != n) fail(ErrorCode::InconsistentFrames, "approximation degrees do not sum to n");
}

inline Value product_value(const std::vector<ProductSlot>& slots, const std::vector<unsigned>& e, std::size_t t) {
  std::vector<Value> v(t, Value(0));
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (e[s] == 0) continue;
    for (std::size_t i = 0; i < t; ++i) v[i] += static_cast<long>(e[s]) * slots[s].w[i];
  }
  Value m = Value::infinity();
  for (const auto& x : v) m = min(m, x);
  return m;
}

}  // namespace detail

inline MaxMinResult maxmin_search(const std::vector<OkutsuFrameCertificate>& frames, int n) {
  detail::check_frames(frames, n);
  std::size_t t = frames.size();
  MaxMinResult res;
  std::optional<std::vector<Value>> wx;
  for (std::size_t fi = 0; fi < frames.size(); ++fi) {
    const auto& fr = frames[fi];
    int da = fr.approximation.degree();
    for (std::size_t l = 0; l <= fr.phis.size(); ++l) {
      ProductSlot s;
      s.frame = fi;
      s.level = l;
      s.approximation = l == fr.phis.size();
      s.poly = s.approximation ? fr.approximation : fr.phis[l];
      s.w = fr.wvectors[l];
      int next = l + 1 < fr.phis.size() ? fr.phis[l + 1].degree() : da;
      s.max_exponent = s.approximation ? static_cast<unsigned>((n - 1) / da) : static_cast<unsigned>(next / s.poly.degree() - 1);
      if (s.poly == Polynomial::x()) wx = s.w;
      res.slots.push_back(s);
    }
  }
  ProductSlot filler;
  filler.frame = static_cast<std::size_t>(-1);
  filler.poly = Polynomial::x();
  filler.w = wx ? *wx : std::vector<Value>(t, Value(0));
  filler.max_exponent = static_cast<unsigned>(n - 1);
  filler.filler = true;
  res.slots.push_back(filler);
  std::size_t S = res.slots.size();

  auto better = [&](const FormalProduct& a, const FormalProduct& b) {
    if (a.value != b.value) return b.value < a.value;
    auto count = [&](const FormalProduct& p, bool approx_only) {
      unsigned c = 0;
      for (std::size_t s = 0; s < S; ++s)
        if (!approx_only || res.slots[s].approximation) c += p.exponents[s];
      return c;
    };
    if (count(a, true) != count(b, true)) return count(a, true) < count(b, true);
    if (count(a, false) != count(b, false)) return count(a, false) < count(b, false);
    return a.exponents < b.exponents;
  };

  std::vector<std::optional<FormalProduct>> best(n);
  auto search = [&](bool use_filler) {
    std::vector<unsigned> e(S, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t s, std::size_t deg) {
      if (s == S) {
        FormalProduct fp{e, deg, detail::product_value(res.slots, e, t)};
        if (!best[deg] || better(fp, *best[deg])) best[deg] = fp;
        return;
      }
      unsigned cap = res.slots[s].filler && !use_filler ? 0 : res.slots[s].max_exponent;
      std::size_t d = static_cast<std::size_t>(res.slots[s].poly.degree());
      for (unsigned k = 0; k <= cap && deg + k * d < static_cast<std::size_t>(n); ++k) {
        e[s] = k;
        rec(s + 1, deg + k * d);
      }
      e[s] = 0;
    };
    rec(0, 0);
  };
  search(false);
  if (std::any_of(best.begin(), best.end(), [](const auto& b) { return !b.has_value(); })) {
    auto keep = best;
    search(true);
    for (int j = 0; j < n; ++j)
      if (keep[j]) best[j] = keep[j];
  }
  std::vector<Value> deltas;
  for (int j = 0; j < n; ++j) {
    if (!best[j]) fail(ErrorCode::InconsistentFrames, "no product of degree " + std::to_string(j));
    FormalProduct fp = *best[j];
    if (fp.value.is_infinite()) fail(ErrorCode::InconsistentFrames, "unbounded value in degree " + std::to_string(j));
    if (fp.value == Value(0)) {
      fp.exponents.assign(S, 0);
      fp.exponents[S - 1] = static_cast<unsigned>(j);
    }
    deltas.push_back(fp.value);
    res.products.push_back(fp);
  }
  for (int j = 1; j < n; ++j)
    if (deltas[j] < deltas[j - 1]) fail(ErrorCode::InconsistentFrames, "maximal values are not monotone");
  res.deltas = DeltaProfile::from_deltas(deltas);

  res.bounds.assign(t, std::nullopt);
  for (std::size_t s = 0; s < S; ++s) {
    if (!res.slots[s].approximation) continue;
    std::size_t i = frames[res.slots[s].frame].factor;
    for (const auto& fp : res.products) {
      unsigned c = fp.exponents[s];
      if (c == 0) continue;
      Value need = fp.value;
      for (std::size_t o = 0; o < S; ++o)
        if (o != s && fp.exponents[o] > 0) need -= static_cast<long>(fp.exponents[o]) * res.slots[o].w[i];
      need = need / static_cast<long>(c);
      if (!res.bounds[i] || *res.bounds[i] < need) res.bounds[i] = need;
    }
  }
  return res;
}

inline Polynomial expand(const FormalProduct& fp, const std::vector<ProductSlot>& slots) {
  Polynomial g(Integer(1));
  for (std::size_t s = 0; s < slots.size(); ++s)
    if (fp.exponents[s] > 0) g *= slots[s].poly.pow(fp.exponents[s]);
  return g;
}

inline std::string describe(const FormalProduct& fp, const std::vector<ProductSlot>& slots) {
  std::vector<std::pair<Polynomial, unsigned>> merged;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (fp.exponents[s] == 0) continue;
    auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& m) { return m.first == slots[s].poly; });
    if (it == merged.end()) merged.emplace_back(slots[s].poly, fp.exponents[s]);
    else it->second += fp.exponents[s];
  }
  std::string out;
  for (const auto& [g, k] : merged) {
    if (!out.empty()) out += " * ";
    out += "(" + g.str() + ")";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "1" : out;
}

struct AssembledMaxMin {
  EncodedFamily family;                   // triangular, rows top-to-bottom
  std::vector<Polynomial> approximations;  // per frame, after lifting
};

// Executes the products, first lifting approximations that fall short of their bounds.
inline AssembledMaxMin assemble_maxmin(const MaxMinResult& mm, const std::vector<OkutsuFrameCertificate>& frames,
                                       Valuator& val) {
  const ProblemContext& ctx = val.context();
  int n = ctx.n();
  if (mm.products.size() != static_cast<std::size_t>(n)) fail(ErrorCode::ShapeMismatch, "one product per degree");
  if (val.size() != frames.size()) fail(ErrorCode::InconsistentFrames, "one frame per certificate required");
  std::vector<ProductSlot> slots = mm.slots;
  AssembledMaxMin out;
  for (const auto& fr : frames) out.approximations.push_back(fr.approximation);
  for (std::size_t fi = 0; fi < frames.size(); ++fi) {
    std::size_t i = frames[fi].factor;
    if (!mm.bounds[i]) continue;
    const Value& need = *mm.bounds[i];
    Polynomial phi = frames[fi].approximation;
    auto own = [&](const Polynomial& g) { return val.w_vector(element_of(g, ctx.f))[i]; };
    if (own(phi) < need) {
      long N = std::max(1L, need.ceil_long());
      while (true) {
        if (N > ctx.precision_cap)
          fail(ErrorCode::BoundUnmet, "approximation " + std::to_string(i) + " cannot reach w = " + need.str());
        auto lifted = lift_certificates(ctx, val.certificates(), N);
        phi = lifted[i].approx.reduce(ctx.p, N, ctx.residues);
        if (phi.degree() < n && !(own(phi) < need)) break;
        N *= 2;
      }
    }
    out.approximations[fi] = phi;
    for (auto& s : slots)
      if (s.approximation && s.frame == fi) s.poly = phi;
  }
  out.family.matrix = IntMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    Polynomial g = expand(mm.products[j], slots);
    if (!g.is_monic() || g.degree() != j) fail(ErrorCode::InconsistentFrames, "product is not monic of degree j");
    std::size_t row = static_cast<std::size_t>(n - 1 - j);
    out.family.matrix.set_row(row, g.row(n));
  }
  for (int r = 0; r < n; ++r) {
    Value nu = val.w(out.family.polynomial(r));
    if (nu != mm.deltas.of_row(r))
      fail(ErrorCode::VerificationFailed, "assembled row " + std::to_string(r) + " has w = " + nu.str() +
                                              " instead of " + mm.deltas.of_row(r).str());
    out.family.wvalues.push_back(nu);
  }
  return out;
}

// Frames for regular inputs: [psi] when the factor is ramified or has larger residue degree, else empty.
inline std::vector<OkutsuFrameCertificate> frames_from_dissection(const std::vector<DissectedFactor>& factors,
                                                                  Valuator& val) {
  const ProblemContext& ctx = val.context();
  std::size_t t = factors.size();
  std::vector<OkutsuFrameCertificate> frames;
  for (std::size_t i = 0; i < t; ++i) {
    OkutsuFrameCertificate fr;
    fr.factor = i;
    fr.approximation = factors[i].cert.approx;
    if (factors[i].frame_has_psi) {
      fr.phis.push_back(factors[i].psi);
      fr.wvectors.push_back(val.w_vector(element_of(factors[i].psi, ctx.f)));
    }
    std::vector<Value> wa(t, Value::infinity());
    if (t > 1) {
      wa = val.w_vector(element_of(fr.approximation, ctx.f), i);
    }
    fr.wvectors.push_back(wa);
    frames.push_back(std::move(fr));
  }
  return frames;
}

// Samples monic g and checks w_i(g)/deg g <= w_i(phi_l)/m_l for m_l <= deg g < m_{l+1}.
inline bool frame_optimality_sample(const OkutsuFrameCertificate& fr, Valuator& val, std::size_t samples,
                                    std::uint64_t seed) {
  const ProblemContext& ctx = val.context();
  std::mt19937_64 rng(seed);
  std::size_t i = fr.factor;
  int top = fr.approximation.degree();
  for (std::size_t l = 0; l < fr.phis.size(); ++l) {
    int m = fr.phis[l].degree();
    int next = l + 1 < fr.phis.size() ? fr.phis[l + 1].degree() : top;
    const Value& wl = fr.wvectors[l][i];
    for (std::size_t s = 0; s < samples; ++s) {
      int deg = m + static_cast<int>(rng() % static_cast<std::uint64_t>(next - m));
      if (deg >= ctx.n()) continue;
      long k = Value(Rational(wl.rational() * deg / m)).ceil_long() + 2;
      Integer mod = ipow(ctx.p, k);
      std::vector<Integer> c(deg + 1);
      c[deg] = 1;
      for (int a = 0; a < deg; ++a) c[a] = Integer(static_cast<unsigned long>(rng() % (1u << 30))) % mod;
      Polynomial g = Polynomial::from_ascending(c);
      Value w = val.w_vector({g, 0})[i];
      if (Value(Rational(w.rational() * m)) > Value(Rational(wl.rational() * deg))) return false;
    }
  }
  return true;
}

}  // namespace rnf
