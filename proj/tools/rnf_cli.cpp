#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rnf/io.hpp"

using nlohmann::json;
using namespace rnf;

namespace {

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::VerificationFailed:
    case ErrorCode::NotReducedInput:
    case ErrorCode::NotMaximal:
      return 2;
    case ErrorCode::CertificateTooWeak:
    case ErrorCode::PrecisionExhausted:
    case ErrorCode::RequiresCertificate:
    case ErrorCode::BoundUnmet:
      return 3;
    default:
      return 4;
  }
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidInput, std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

void write_json(const json& j, const std::string& path) {
  std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(ErrorCode::InvalidInput, "cannot write " + path);
  out << text;
}

struct Options {
  std::string input;
  std::string output;
  std::string residues;
  long precision_cap = 0;
  bool timing = false;

  io::Overrides overrides() const {
    io::Overrides ov;
    if (!residues.empty()) ov.residues = parse_convention(residues);
    if (precision_cap > 0) ov.precision_cap = precision_cap;
    return ov;
  }
  ProblemFile problem() const { return io::to_problem(read_json(input), overrides()); }
};

int cmd_pipeline(const Options& o) {
  Report r = run_pipeline(o.problem());
  write_json(io::from_report(r, o.timing), o.output);
  return 0;
}

int cmd_maxmin(const Options& o) {
  ProblemFile pb = o.problem();
  if (!pb.frames) fail(ErrorCode::InvalidInput, "maxmin needs frames");
  pb.family.reset();
  Report r = run_pipeline(pb);
  write_json(io::from_report(r, o.timing), o.output);
  return 0;
}

int cmd_verify(const Options& o) {
  ProblemFile pb = o.problem();
  VerifyResult v = verify(pb);
  write_json(io::from_verify(v, pb.ctx), o.output);
  bool ok = v.reducedness.reduced && (!v.triangular || v.triangular->reduced);
  return ok ? 0 : 2;
}

// Triangular reduced family in, profile read off its own values.
struct TriangularInput {
  ProblemFile pb;
  Certified cert;
  DeltaProfile profile;
};

TriangularInput triangular_input(const Options& o, Valuator*& val_out, std::unique_ptr<Valuator>& holder) {
  TriangularInput in{o.problem(), {}, {}};
  if (!in.pb.family) fail(ErrorCode::InvalidInput, "a triangular family is required");
  check_unitriangular(in.pb.family->matrix);
  in.cert = certify(in.pb);
  holder = std::make_unique<Valuator>(in.pb.ctx, in.cert.certs);
  val_out = holder.get();
  auto nu = recompute_wvalues(*in.pb.family, *val_out);
  std::vector<LocalElement> elems;
  for (std::size_t i = 0; i < nu.size(); ++i) elems.push_back({in.pb.family->polynomial(i), 0});
  if (!is_reduced_elements(elems, *val_out).reduced)
    fail(ErrorCode::VerificationFailed, "triangular input is not a reduced basis");
  in.profile = DeltaProfile::from_top_down(nu);
  return in;
}

int cmd_rnf(const Options& o) {
  Valuator* val = nullptr;
  std::unique_ptr<Valuator> holder;
  TriangularInput in = triangular_input(o, val, holder);
  IntMatrix R = rnf_reduce(in.pb.family->matrix, in.profile, *val);
  json j = {{"deltas", io::from_values(in.profile.deltas)},
            {"T_RNF", io::from_matrix(R)},
            {"nu_RNF", io::from_values(row_values(R, *val))},
            {"is_rnf", is_rnf(R, in.profile, in.pb.ctx.p, in.pb.ctx.residues)},
            {"residues", io::convention_metadata(in.pb.ctx)}};
  write_json(j, o.output);
  return 0;
}

int cmd_hnf(const Options& o) {
  Valuator* val = nullptr;
  std::unique_ptr<Valuator> holder;
  TriangularInput in = triangular_input(o, val, holder);
  const Integer& p = in.pb.ctx.p;
  IntMatrix H = hnf_compare(in.pb.family->matrix, in.profile, p);
  auto nu = row_values(H, *val);
  auto a = lattice_elements(in.pb.family->matrix, in.profile);
  auto b = lattice_elements(H, in.profile);
  int n = in.pb.ctx.n();
  bool same = p_integral(transition_matrix(a, b, p, n), p) && p_integral(transition_matrix(b, a, p, n), p);
  auto check = check_reduced_triangular(H, nu, in.profile);
  json j = {{"deltas", io::from_values(in.profile.deltas)},
            {"T_HNF", io::from_matrix(H)},
            {"nu_HNF", io::from_values(nu)},
            {"same_lattice", same},
            {"triangular", {{"integral", check.integral}, {"reduced", check.reduced}}}};
  write_json(j, o.output);
  return same ? 0 : 2;
}

int cmd_dissect(const Options& o) {
  ProblemFile pb = o.problem();
  DissectOutcome d = auto_dissect_partial(pb.ctx);
  json certs = json::array(), unresolved = json::array();
  for (const auto& x : d.factors) certs.push_back(io::from_certificate(x.cert));
  for (const auto& u : d.unresolved) unresolved.push_back(u);
  json j = {{"p", io::from_integer(pb.ctx.p)}, {"f", io::from_polynomial(pb.ctx.f)}, {"certificates", certs},
            {"unresolved", unresolved}};
  if (d.unresolved.empty()) {
    Valuator val(pb.ctx, auto_dissect(pb.ctx));
    json frames = json::array();
    for (const auto& fr : frames_from_dissection(d.factors, val)) frames.push_back(io::from_frame(fr));
    j["frames"] = frames;
  }
  write_json(j, o.output);
  return d.unresolved.empty() ? 0 : 3;
}

int cmd_wvalue(const Options& o) {
  ProblemFile pb = o.problem();
  Certified cert = certify(pb);
  Valuator val(pb.ctx, cert.certs);
  json out = json::array();
  for (const auto& e : pb.elements) {
    auto w = val.w_vector(e);
    Value m = *std::min_element(w.begin(), w.end());
    out.push_back({{"numerator", io::from_polynomial(e.numerator)},
                   {"exponent", e.exponent},
                   {"w_vector", io::from_values(w)},
                   {"w", io::from_value(m)}});
  }
  write_json({{"elements", out}}, o.output);
  return 0;
}

int cmd_patch(const Options& o) {
  json j = read_json(o.input);
  if (!j.contains("locals") || !j.at("locals").is_array())
    fail(ErrorCode::InvalidInput, "patch input needs a 'locals' array of problem files");
  std::vector<LocalBasis> locals;
  for (const auto& lj : j.at("locals")) {
    json pj = lj;
    if (!pj.contains("f") && j.contains("f")) pj["f"] = j.at("f");
    ProblemFile pb = io::to_problem(pj, o.overrides());
    Report r = run_pipeline(pb);
    locals.push_back({r.ctx, r.certificates, r.T_RNF, r.profile});
  }
  write_json(io::from_global(crt_patch(locals)), o.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangular reduced integral bases over Z localized at p"};
  app.require_subcommand(1);
  Options opt;
  struct Cmd {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Cmd cmds[] = {
      {"pipeline", "run the family and/or frames route to the reduced normal form", cmd_pipeline},
      {"verify", "recompute w-values and check reducedness of a family", cmd_verify},
      {"rnf", "reduce a triangular reduced basis to reduced normal form", cmd_rnf},
      {"hnf", "Hermite normal form of a triangular reduced basis, for comparison", cmd_hnf},
      {"maxmin", "MaxMin route from Okutsu frames", cmd_maxmin},
      {"dissect", "certificates for regular f by one Newton polygon level", cmd_dissect},
      {"wvalue", "evaluate w-vectors of elements", cmd_wvalue},
      {"patch", "patch local bases at several primes into a global basis", cmd_patch},
  };
  int (*selected)(const Options&) = nullptr;
  for (const auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--input,-i", opt.input, "problem file (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--output,-o", opt.output, "output file, stdout when omitted");
    sub->add_option("--residues", opt.residues, "residue convention")->check(CLI::IsMember({"balanced", "nonneg"}));
    sub->add_option("--precision-cap", opt.precision_cap, "largest p-adic precision used for lifting")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--timing", opt.timing, "include elapsed time in reports");
    auto run = c.run;
    sub->callback([&selected, run] { selected = run; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 4;
  }
  try {
    return selected(opt);
  } catch (const Error& e) {
    std::cerr << json{{"error", std::string(error_name(e.code()))}, {"message", e.detail()}}.dump() << "\n";
    return exit_code(e.code());
  }
}
