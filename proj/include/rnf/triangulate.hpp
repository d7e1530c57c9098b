#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "rnf/hnf_local.hpp"
#include "rnf/reduced.hpp"

namespace rnf {

struct StepOutput {
  Value delta;
  std::size_t multiplicity = 0;
  IntMatrix monic_rows;  // m x d, (I_m | C)
  EncodedFamily next;
};

inline StepOutput triangulation_step(const EncodedFamily& fam, Valuator& val) {
  const ProblemContext& ctx = val.context();
  const Integer& p = ctx.p;
  std::size_t d = fam.size();
  if (d == 0 || fam.matrix.cols() != d || fam.wvalues.size() != d)
    fail(ErrorCode::ShapeMismatch, "a d-reduced family needs d rows of width d with d w-values");
  std::vector<LocalElement> elems;
  for (std::size_t i = 0; i < d; ++i) {
    Polynomial q = fam.polynomial(i);
    if (q.is_zero() || gauss_valuation(q, p) != Value(0))
      fail(ErrorCode::NotReducedInput, "row " + std::to_string(i) + " does not have Gauss valuation 0");
    Value nu = val.w(q);
    if (nu != fam.wvalues[i])
      fail(ErrorCode::NotReducedInput,
           "row " + std::to_string(i) + " has w = " + nu.str() + ", stated " + fam.wvalues[i].str());
    elems.push_back({q, 0});
  }
  if (!is_reduced_elements(elems, val).reduced) fail(ErrorCode::NotReducedInput, "family is not reduced");

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return fam.wvalues[b] < fam.wvalues[a]; });
  const Value delta = fam.wvalues[order[0]];
  std::size_t l = 0;
  while (l < d && fam.wvalues[order[l]] == delta) ++l;

  RatMatrix up(l, d);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < d; ++j) up(i, j) = Rational(fam.matrix(order[i], j));
  LocalHnf hnf = hnf_local(up, p, ctx.residues);
  const RatMatrix& H = hnf.H;
  std::size_t m = hnf.unit_prefix();
  if (m == 0) fail(ErrorCode::NotReducedInput, "top block has no unit pivot");
  for (std::size_t i = m; i < l; ++i)
    for (std::size_t j = m; j < d; ++j)
      if (H(i, j) != 0 && vp(H(i, j), p) <= 0)
        fail(ErrorCode::VerificationFailed, "D block has an entry outside the maximal ideal");

  StepOutput out;
  out.delta = delta;
  out.multiplicity = m;
  long cdelta = delta.ceil_long();
  out.monic_rows = IntMatrix(m, d);
  for (std::size_t k = 0; k < m; ++k) {
    out.monic_rows(k, k) = 1;
    for (std::size_t j = m; j < d; ++j) out.monic_rows(k, j) = represent(H(k, j), p, cdelta, ctx.residues);
  }
  for (std::size_t k = 0; k < m; ++k) {
    Value w = val.w(Polynomial::from_row(out.monic_rows.row(k)));
    if (w != delta)
      fail(ErrorCode::VerificationFailed, "extracted row has w = " + w.str() + " instead of " + delta.str());
  }

  // T' = (D ; F - E*C), rows content-normalized
  std::size_t dn = d - m;
  std::vector<std::vector<Rational>> hrows;
  std::vector<Value> hnu;
  for (std::size_t i = m; i < l; ++i) {
    std::vector<Rational> h(dn);
    for (std::size_t j = 0; j < dn; ++j) h[j] = H(i, m + j);
    hrows.push_back(std::move(h));
    hnu.push_back(delta);
  }
  for (std::size_t i = l; i < d; ++i) {
    std::vector<Rational> h(dn);
    for (std::size_t j = 0; j < dn; ++j) {
      Rational s(fam.matrix(order[i], m + j));
      for (std::size_t k = 0; k < m; ++k) s -= Rational(fam.matrix(order[i], k)) * H(k, m + j);
      h[j] = s;
    }
    hrows.push_back(std::move(h));
    hnu.push_back(fam.wvalues[order[i]]);
  }
  Value numax(0);
  for (const auto& v : hnu) numax = max(numax, v);
  long M = 2 * numax.ceil_long() + 8;
  out.next.matrix = IntMatrix(dn, dn);
  for (std::size_t r = 0; r < dn; ++r) {
    long v = -1;
    for (const auto& a : hrows[r])
      if (a != 0) v = v < 0 ? vp(a, p) : std::min(v, vp(a, p));
    if (v < 0) fail(ErrorCode::RankDeficient, "surviving row vanished");
    Rational scale(ipow(p, static_cast<unsigned long>(v)));
    for (std::size_t j = 0; j < dn; ++j)
      out.next.matrix(r, j) = represent(Rational(hrows[r][j] / scale), p, M, ctx.residues);
    out.next.wvalues.push_back(hnu[r] - Value(v));
  }
  return out;
}

struct TriangulationResult {
  IntMatrix T;
  DeltaProfile profile;
  std::vector<std::vector<Value>> trace;  // value multisets after each step, descending
  std::vector<std::pair<Value, std::size_t>> steps;
};

inline TriangulationResult triangulate(const EncodedFamily& fam, Valuator& val) {
  std::size_t n = fam.size();
  if (n != static_cast<std::size_t>(val.context().n())) fail(ErrorCode::ShapeMismatch, "family size differs from deg f");
  TriangulationResult res;
  res.T = IntMatrix(n, n);
  std::vector<Value> top_down;
  EncodedFamily cur = fam;
  std::size_t offset = 0;
  while (cur.size() > 0) {
    StepOutput step = triangulation_step(cur, val);
    std::size_t d = cur.size();
    for (std::size_t k = 0; k < step.multiplicity; ++k) {
      for (std::size_t j = 0; j < d; ++j) res.T(offset + k, offset + j) = step.monic_rows(k, j);
      top_down.push_back(step.delta);
    }
    offset += step.multiplicity;
    res.steps.emplace_back(step.delta, step.multiplicity);
    cur = std::move(step.next);
    std::vector<Value> ms = top_down;
    ms.insert(ms.end(), cur.wvalues.begin(), cur.wvalues.end());
    std::sort(ms.rbegin(), ms.rend());
    res.trace.push_back(std::move(ms));
  }
  res.profile = DeltaProfile::from_top_down(top_down);
  std::vector<Value> nu;
  for (std::size_t i = 0; i < n; ++i) nu.push_back(val.w(Polynomial::from_row(res.T.row(i))));
  auto check = check_reduced_triangular(res.T, nu, res.profile);
  if (!check.reduced) fail(ErrorCode::VerificationFailed, "triangulated basis does not attain the maximal values");
  return res;
}

}  // namespace rnf
