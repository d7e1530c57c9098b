#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rnf/dissect.hpp"
#include "rnf/maxmin.hpp"
#include "rnf/reduced.hpp"
#include "rnf/rnf.hpp"
#include "rnf/triangulate.hpp"

namespace rnf {

struct ProblemFile {
  ProblemContext ctx;
  std::optional<std::vector<LocalFactorCertificate>> certificates;
  std::optional<EncodedFamily> family;
  std::optional<std::vector<OkutsuFrameCertificate>> frames;
  std::optional<DeltaProfile> deltas;
  std::vector<LocalElement> elements;
};

struct MaxMinRun {
  MaxMinResult search;
  AssembledMaxMin assembled;
};

struct Report {
  ProblemContext ctx;
  std::string route;
  std::vector<LocalFactorCertificate> certificates;
  DeltaProfile profile;
  ValueMultiset invariant;
  IntMatrix T_tri;
  std::vector<Value> nu_tri;
  IntMatrix T_RNF;
  std::vector<Value> nu_RNF;
  bool rnf_form = false;
  std::vector<std::vector<Value>> trace;
  std::optional<MaxMinRun> maxmin;
  std::optional<ReducednessReport> input_reducedness;
  std::optional<ReducednessReport> rnf_reducedness;
  TriangularCheck check;
  bool fractional_parts_match = false;
  double elapsed_ms = 0;
};

struct Certified {
  std::vector<LocalFactorCertificate> certs;
  std::optional<std::vector<DissectedFactor>> dissected;
};

inline Certified certify(const ProblemFile& pb) {
  if (pb.certificates) return {*pb.certificates, std::nullopt};
  auto d = auto_dissect_factors(pb.ctx);
  Certified c;
  for (const auto& x : d) c.certs.push_back(x.cert);
  c.dissected = std::move(d);
  return c;
}

inline std::vector<Value> row_values(const IntMatrix& T, Valuator& val) {
  std::vector<Value> nu;
  for (std::size_t i = 0; i < T.rows(); ++i) nu.push_back(val.w(Polynomial::from_row(T.row(i))));
  return nu;
}

inline MaxMinRun run_maxmin(const std::vector<OkutsuFrameCertificate>& frames, Valuator& val) {
  MaxMinResult mm = maxmin_search(frames, val.context().n());
  AssembledMaxMin as = assemble_maxmin(mm, frames, val);
  return {std::move(mm), std::move(as)};
}

inline Report run_pipeline(const ProblemFile& pb) {
  auto start = std::chrono::steady_clock::now();
  pb.ctx.validate();
  Certified cert = certify(pb);
  Valuator val(pb.ctx, cert.certs);
  Report rep;
  rep.ctx = pb.ctx;
  rep.certificates = cert.certs;
  rep.invariant = invariant_multiset(cert.certs);

  std::optional<IntMatrix> rnf_q, rnf_m;
  if (pb.family) {
    rep.input_reducedness = is_reduced(*pb.family, val);
    if (!rep.input_reducedness->reduced) fail(ErrorCode::NotReducedInput, "input family is not reduced");
    TriangulationResult tri = triangulate(*pb.family, val);
    rep.T_tri = tri.T;
    rep.profile = tri.profile;
    rep.trace = tri.trace;
    rnf_q = rnf_reduce(tri.T, tri.profile, val);
  }
  std::optional<std::vector<OkutsuFrameCertificate>> frames = pb.frames;
  if (!pb.family && !frames) {
    if (!cert.dissected)
      fail(ErrorCode::InvalidInput, "supplied certificates need a family or frames to run a pipeline");
    frames = frames_from_dissection(*cert.dissected, val);
  }
  if (frames) {
    MaxMinRun run = run_maxmin(*frames, val);
    rnf_m = rnf_reduce(run.assembled.family.matrix, run.search.deltas, val);
    if (pb.family) {
      if (!(run.search.deltas == rep.profile)) fail(ErrorCode::VerificationFailed, "routes disagree on maximal values");
      if (!(*rnf_m == *rnf_q)) fail(ErrorCode::VerificationFailed, "routes disagree on the reduced normal form");
    } else {
      rep.T_tri = run.assembled.family.matrix;
      rep.profile = run.search.deltas;
    }
    rep.maxmin = std::move(run);
  }
  rep.route = pb.family ? (pb.frames ? "both" : "quotients") : (pb.frames ? "maxmin" : "auto-maxmin");
  rep.T_RNF = rnf_q ? *rnf_q : *rnf_m;
  rep.nu_tri = row_values(rep.T_tri, val);
  rep.nu_RNF = row_values(rep.T_RNF, val);
  rep.rnf_form = is_rnf(rep.T_RNF, rep.profile, pb.ctx.p, pb.ctx.residues);
  rep.check = check_reduced_triangular(rep.T_RNF, rep.nu_RNF, rep.profile);
  rep.fractional_parts_match = rep.profile.fractional_multiset() == rep.invariant;
  if (!rep.check.reduced || !rep.rnf_form || !rep.fractional_parts_match)
    fail(ErrorCode::VerificationFailed, "final basis failed re-verification");
  try {
    rep.rnf_reducedness = is_reduced_elements(lattice_elements(rep.T_RNF, rep.profile), val);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ClassTooLarge) throw;
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

struct VerifyResult {
  std::vector<Value> nu;
  ReducednessReport reducedness;
  std::optional<DeltaProfile> profile;
  std::optional<TriangularCheck> triangular;
  std::optional<bool> rnf_form;
};

inline bool is_unitriangular(const IntMatrix& T) {
  try {
    check_unitriangular(T);
    return true;
  } catch (const Error&) {
    return false;
  }
}

inline VerifyResult verify(const ProblemFile& pb) {
  if (!pb.family) fail(ErrorCode::InvalidInput, "verify needs a family");
  pb.ctx.validate();
  Certified cert = certify(pb);
  Valuator val(pb.ctx, cert.certs);
  const EncodedFamily& fam = *pb.family;
  VerifyResult out;
  out.nu = recompute_wvalues(fam, val);
  std::vector<LocalElement> elems;
  for (std::size_t i = 0; i < fam.size(); ++i) elems.push_back({fam.polynomial(i), 0});
  out.reducedness = is_reduced_elements(elems, val);
  if (is_unitriangular(fam.matrix) && fam.size() == static_cast<std::size_t>(pb.ctx.n())) {
    if (pb.deltas) out.profile = pb.deltas;
    else if (pb.frames) out.profile = maxmin_search(*pb.frames, pb.ctx.n()).deltas;
    else if (out.reducedness.reduced) out.profile = DeltaProfile::from_top_down(out.nu);
    else if (cert.dissected) out.profile = run_maxmin(frames_from_dissection(*cert.dissected, val), val).search.deltas;
    if (out.profile) {
      out.triangular = check_reduced_triangular(fam.matrix, out.nu, *out.profile);
      out.rnf_form = is_rnf(fam.matrix, *out.profile, pb.ctx.p, pb.ctx.residues);
    }
  }
  return out;
}

struct LocalBasis {
  ProblemContext ctx;
  std::vector<LocalFactorCertificate> certs;
  IntMatrix T;  // local RNF numerators, rows top-to-bottom
  DeltaProfile profile;
};

struct GlobalBasis {
  IntMatrix numerators;               // monic rows of degrees n-1, ..., 0
  std::vector<Integer> denominators;  // per row
  std::vector<Integer> primes;
};

inline GlobalBasis crt_patch(const std::vector<LocalBasis>& locals) {
  if (locals.empty()) fail(ErrorCode::InvalidInput, "no local bases");
  const Polynomial& f = locals[0].ctx.f;
  std::size_t n = static_cast<std::size_t>(f.degree());
  GlobalBasis g;
  for (const auto& lb : locals) {
    if (!(lb.ctx.f == f)) fail(ErrorCode::InvalidInput, "local bases belong to different f");
    for (const auto& q : g.primes)
      if (q == lb.ctx.p) fail(ErrorCode::PrimeCollision, "prime " + q.get_str() + " appears twice");
    if (lb.T.rows() != n || lb.profile.n() != n) fail(ErrorCode::ShapeMismatch, "local basis size differs from deg f");
    check_unitriangular(lb.T);
    g.primes.push_back(lb.ctx.p);
  }
  ResidueConvention conv = locals[0].ctx.residues;
  g.numerators = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer den = 1;
    for (const auto& lb : locals) den *= ipow(lb.ctx.p, lb.profile.of_row(i).floor_long());
    g.denominators.push_back(den);
    g.numerators(i, i) = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      Integer x = 0, mod = 1;
      for (const auto& lb : locals) {
        Integer mk = ipow(lb.ctx.p, lb.profile.of_row(i).ceil_long());
        if (mk == 1) continue;
        // x + mod * t = lb.T(i, j) (mod mk)
        Integer t = mod_nonneg((lb.T(i, j) - x) * inverse_mod(mod, mk), mk);
        x += mod * t;
        mod *= mk;
      }
      x = mod_nonneg(x, mod);
      if (conv == ResidueConvention::balanced && 2 * x > mod) x -= mod;
      g.numerators(i, j) = x;
    }
  }
  for (const auto& lb : locals) {
    Valuator val(lb.ctx, lb.certs);
    for (std::size_t i = 0; i < n; ++i) {
      Value w = val.w(Polynomial::from_row(g.numerators.row(i)));
      if (w != lb.profile.of_row(i))
        fail(ErrorCode::VerificationFailed, "row " + std::to_string(i) + " at p = " + lb.ctx.p.get_str() +
                                                " has w = " + w.str() + " instead of " + lb.profile.of_row(i).str());
    }
  }
  return g;
}

}  // namespace rnf
