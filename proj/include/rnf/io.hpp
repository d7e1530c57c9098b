#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "rnf/pipeline.hpp"

namespace rnf::io {

using nlohmann::json;

inline Integer to_integer(const json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<long>());
  fail(ErrorCode::InvalidInput, "expected an integer, got " + j.dump());
}

inline json from_integer(const Integer& z) { return z.get_str(); }

inline long to_long(const json& j) {
  Integer z = to_integer(j);
  if (!z.fits_slong_p()) fail(ErrorCode::InvalidInput, "integer out of range: " + z.get_str());
  return z.get_si();
}

inline Polynomial to_polynomial(const json& j) {
  if (!j.is_array()) fail(ErrorCode::InvalidInput, "polynomial must be an array of coefficients");
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(to_integer(x));
  return Polynomial::from_decreasing(std::move(c));
}

inline json from_polynomial(const Polynomial& g) {
  json a = json::array();
  if (g.is_zero()) a.push_back("0");
  for (const auto& c : g.decreasing()) a.push_back(from_integer(c));
  return a;
}

inline Value to_value(const json& j) {
  if (j.is_number_integer()) return Value(j.get<long>());
  if (!j.is_string()) fail(ErrorCode::InvalidInput, "expected a rational string, got " + j.dump());
  std::string s = j.get<std::string>();
  if (s == "adjustable") return Value::infinity();
  return Value::parse(s);
}

inline json from_value(const Value& v) { return v.str(); }

inline json from_values(const std::vector<Value>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(from_value(v));
  return a;
}

inline std::vector<Value> to_values(const json& j) {
  std::vector<Value> out;
  for (const auto& x : j) out.push_back(to_value(x));
  return out;
}

inline IntMatrix to_matrix(const json& j) {
  if (!j.is_array() || j.empty()) fail(ErrorCode::InvalidInput, "matrix must be a non-empty array of rows");
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : j) {
    rows.emplace_back();
    for (const auto& x : r) rows.back().push_back(to_integer(x));
  }
  return IntMatrix(rows);
}

inline json from_matrix(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(from_integer(m(i, k)));
    a.push_back(r);
  }
  return a;
}

inline json from_multiset(const ValueMultiset& ms) {
  json a = json::array();
  for (const auto& [v, k] : ms) a.push_back({{"value", from_value(v)}, {"multiplicity", k}});
  return a;
}

inline LocalFactorCertificate to_certificate(const json& j) {
  return {to_polynomial(j.at("approx")), to_long(j.at("precision")), static_cast<int>(to_long(j.at("e"))),
          static_cast<int>(to_long(j.at("f")))};
}

inline json from_certificate(const LocalFactorCertificate& c) {
  return {{"approx", from_polynomial(c.approx)}, {"precision", c.precision}, {"e", c.ram_index}, {"f", c.res_degree}};
}

inline OkutsuFrameCertificate to_frame(const json& j) {
  OkutsuFrameCertificate fr;
  fr.factor = static_cast<std::size_t>(to_long(j.at("factor")));
  for (const auto& g : j.at("phis")) fr.phis.push_back(to_polynomial(g));
  fr.approximation = to_polynomial(j.at("approximation"));
  for (const auto& v : j.at("wvectors")) fr.wvectors.push_back(to_values(v));
  return fr;
}

inline json from_frame(const OkutsuFrameCertificate& fr) {
  json phis = json::array(), wv = json::array();
  for (const auto& g : fr.phis) phis.push_back(from_polynomial(g));
  for (const auto& v : fr.wvectors) {
    json row = json::array();
    for (const auto& x : v) row.push_back(x.is_infinite() ? "adjustable" : x.str());
    wv.push_back(row);
  }
  return {{"factor", fr.factor}, {"phis", phis}, {"approximation", from_polynomial(fr.approximation)}, {"wvectors", wv}};
}

struct Overrides {
  std::optional<ResidueConvention> residues;
  std::optional<long> precision_cap;
};

inline ProblemFile to_problem(const json& j, const Overrides& ov = {}) {
  try {
    ProblemFile pb;
    pb.ctx.p = to_integer(j.at("p"));
    pb.ctx.f = to_polynomial(j.at("f"));
    if (j.contains("options")) {
      const auto& o = j.at("options");
      if (o.contains("residues")) pb.ctx.residues = parse_convention(o.at("residues").get<std::string>());
      if (o.contains("precision_cap")) pb.ctx.precision_cap = to_long(o.at("precision_cap"));
    }
    if (ov.residues) pb.ctx.residues = *ov.residues;
    if (ov.precision_cap) pb.ctx.precision_cap = *ov.precision_cap;
    if (j.contains("certificates")) {
      std::vector<LocalFactorCertificate> cs;
      for (const auto& c : j.at("certificates")) cs.push_back(to_certificate(c));
      pb.certificates = std::move(cs);
    }
    if (j.contains("family")) {
      const auto& fj = j.at("family");
      EncodedFamily fam{to_matrix(fj.at("matrix")), {}};
      if (fj.contains("wvalues")) fam.wvalues = to_values(fj.at("wvalues"));
      pb.family = std::move(fam);
    }
    if (j.contains("frames")) {
      std::vector<OkutsuFrameCertificate> fs;
      for (const auto& f : j.at("frames")) fs.push_back(to_frame(f));
      pb.frames = std::move(fs);
    }
    if (j.contains("deltas")) pb.deltas = DeltaProfile::from_deltas(to_values(j.at("deltas")));
    if (j.contains("elements"))
      for (const auto& e : j.at("elements"))
        pb.elements.push_back({to_polynomial(e.at("numerator")), e.contains("exponent") ? to_long(e.at("exponent")) : 0});
    return pb;
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidInput, std::string("malformed problem file: ") + e.what());
  }
}

inline json from_problem(const ProblemFile& pb) {
  json j;
  j["p"] = from_integer(pb.ctx.p);
  j["f"] = from_polynomial(pb.ctx.f);
  j["options"] = {{"residues", convention_name(pb.ctx.residues)}, {"precision_cap", pb.ctx.precision_cap}};
  if (pb.certificates) {
    json a = json::array();
    for (const auto& c : *pb.certificates) a.push_back(from_certificate(c));
    j["certificates"] = a;
  }
  if (pb.family) j["family"] = {{"matrix", from_matrix(pb.family->matrix)}, {"wvalues", from_values(pb.family->wvalues)}};
  if (pb.frames) {
    json a = json::array();
    for (const auto& f : *pb.frames) a.push_back(from_frame(f));
    j["frames"] = a;
  }
  if (pb.deltas) j["deltas"] = from_values(pb.deltas->deltas);
  if (!pb.elements.empty()) {
    json a = json::array();
    for (const auto& e : pb.elements) a.push_back({{"numerator", from_polynomial(e.numerator)}, {"exponent", e.exponent}});
    j["elements"] = a;
  }
  return j;
}

inline json from_reducedness(const ReducednessReport& r) {
  json classes = json::array();
  for (const auto& c : r.classes) classes.push_back({{"delta", from_value(c.delta)}, {"members", c.members}});
  json j = {{"reduced", r.reduced}, {"classes", classes}};
  if (r.witness) {
    json coeffs = json::array();
    for (const auto& c : r.witness->coefficients) coeffs.push_back(from_integer(c));
    j["witness"] = {{"delta", from_value(r.witness->delta)},
                    {"members", r.witness->members},
                    {"coefficients", coeffs},
                    {"value", from_value(r.witness->value)}};
  }
  return j;
}

inline json convention_metadata(const ProblemContext& ctx) {
  bool generalized = ctx.residues == ResidueConvention::balanced && ctx.p != 2;
  return {{"convention", convention_name(ctx.residues)}, {"odd_prime_generalization", generalized}};
}

inline json from_report(const Report& r, bool with_timing = false) {
  json j;
  j["p"] = from_integer(r.ctx.p);
  j["f"] = from_polynomial(r.ctx.f);
  j["route"] = r.route;
  j["residues"] = convention_metadata(r.ctx);
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back(from_certificate(c));
  j["certificates"] = certs;
  j["deltas"] = from_values(r.profile.deltas);
  j["invariant_multiset"] = from_multiset(r.invariant);
  j["T_tri"] = from_matrix(r.T_tri);
  j["nu_tri"] = from_values(r.nu_tri);
  j["T_RNF"] = from_matrix(r.T_RNF);
  j["nu_RNF"] = from_values(r.nu_RNF);
  json trace = json::array();
  for (const auto& t : r.trace) trace.push_back(from_values(t));
  j["trace"] = trace;
  if (r.maxmin) {
    const auto& mm = *r.maxmin;
    json products = json::array(), bounds = json::array(), approx = json::array();
    for (const auto& p : mm.search.products) products.push_back(describe(p, mm.search.slots));
    for (const auto& b : mm.search.bounds) bounds.push_back(b ? json(b->str()) : json(nullptr));
    for (const auto& a : mm.assembled.approximations) approx.push_back(from_polynomial(a));
    j["maxmin"] = {{"products", products},
                   {"bounds", bounds},
                   {"approximations", approx},
                   {"T_MaxMin", from_matrix(mm.assembled.family.matrix)}};
  }
  json red;
  if (r.input_reducedness) red["input"] = from_reducedness(*r.input_reducedness);
  if (r.rnf_reducedness) red["T_RNF"] = from_reducedness(*r.rnf_reducedness);
  j["reducedness"] = red;
  j["verification"] = {{"integral", r.check.integral},
                       {"reduced", r.check.reduced},
                       {"is_rnf", r.rnf_form},
                       {"fractional_parts_match", r.fractional_parts_match}};
  if (with_timing) j["timing_ms"] = r.elapsed_ms;
  return j;
}

inline json from_verify(const VerifyResult& v, const ProblemContext& ctx) {
  json j;
  j["nu"] = from_values(v.nu);
  j["reducedness"] = from_reducedness(v.reducedness);
  if (v.profile) j["deltas"] = from_values(v.profile->deltas);
  if (v.triangular) j["triangular"] = {{"integral", v.triangular->integral}, {"reduced", v.triangular->reduced}};
  if (v.rnf_form) j["is_rnf"] = *v.rnf_form;
  j["residues"] = convention_metadata(ctx);
  return j;
}

inline json from_global(const GlobalBasis& g) {
  json dens = json::array(), primes = json::array();
  for (const auto& d : g.denominators) dens.push_back(from_integer(d));
  for (const auto& p : g.primes) primes.push_back(from_integer(p));
  return {{"primes", primes}, {"numerators", from_matrix(g.numerators)}, {"denominators", dens}};
}

}  // namespace rnf::io
