#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hha/report.hpp"
#include "hha/scenario.hpp"

namespace {

using namespace hha;

struct Options {
  std::string module_name;
  std::string mode = "regular";
  int max_degree = -1;
  std::string out_path;
};

std::string vector_payload(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + "]";
}

DiracContext context_for(const Scenario& sc) {
  return make_dirac_context(sc.algebra, sc.basis);
}

Carrier carrier_for(const Scenario& sc, const DiracContext& ctx, const std::string& mode) {
  if (mode == "isotropic") {
    if (!sc.isotropic_w) throw Error("scenario has no isotropic_subspace for isotropic mode");
    return make_isotropic_carrier(ctx, *sc.isotropic_w);
  }
  return make_regular_carrier(ctx);
}

void require_prerequisites(const Scenario& sc, const DiracContext& ctx) {
  if (!sc.kappa_report.ok)
    throw Error("prerequisite not met: kappa is not equivariant (" + sc.kappa_report.witness +
                ")");
  if (!check_pbw(*sc.algebra).pass) throw Error("prerequisite not met: PBW check fails");
  if (!parthasarathy_check(ctx).ok)
    throw Error("prerequisite not met: the Parthasarathy condition fails");
}

void cmd_check_pbw(const Scenario& sc, const Options& opt, Report& rep) {
  rep.verdict("kappa-equivariance", sc.kappa_report.ok, sc.kappa_report.witness);
  PbwResult res = check_pbw(*sc.algebra);
  rep.verdict("pbw-confluence", res.pass,
              res.pass ? std::to_string(res.overlaps_checked) + " overlaps resolved" : "");
  for (const auto& f : res.failures) rep.certificate(f.kind, f.detail);
  int bound = opt.max_degree > 0 ? opt.max_degree : 4;
  if (res.pass) {
    CheckReport dims = pbw_dimension_check(*sc.algebra, bound);
    rep.verdict("pbw-dimension-count", dims.ok, dims.ok ? "" : dims.witness);
  }
}

void cmd_pin_cover(const Scenario& sc, const Options&, Report& rep) {
  DiracContext ctx = context_for(sc);
  const PinCover& pc = *ctx.cover;
  rep.verdict("cover-invariants", true, "twisted intertwining verified on all elements");
  rep.dim("cover_order", pc.cover_order());
  const HPrime& hp = *ctx.hprime;
  rep.dim("ker_delta_c", hp.kernel.dim());
  rep.dim("h_prime", hp.dim);
  rep.dim("z_h_prime", long(hp.center.size()));
  rep.verdict("h-prime-dimension", hp.dim == sc.rep->group.order(),
              "dim H' = |G| = " + std::to_string(hp.dim));
  auto section = detect_splitting(pc);
  if (section) {
    bool ok = true;
    for (int g = 0; g < hp.dim && ok; ++g)
      for (int h = 0; h < hp.dim && ok; ++h) {
        Vector a(hp.dim), b(hp.dim);
        a[g] = ExtScalar((*section)[g]);
        b[h] = ExtScalar((*section)[h]);
        Vector prod = hp.mul(a, b);
        int gh = sc.rep->group.mul(g, h);
        for (int k = 0; k < hp.dim; ++k)
          if (!(prod[k] == (k == gh ? ExtScalar((*section)[gh]) : ExtScalar()))) ok = false;
      }
    rep.verdict("splitting", true, "section found; H' matches F[G] structure constants");
    rep.verdict("split-structure-constants", ok);
  } else {
    rep.verdict("splitting", true, "no section: the F2 cocycle system is inconsistent");
  }
  // human-readable cover table
  for (int idx = 0; idx < pc.cover_order(); ++idx) {
    std::string name =
        "(g" + std::to_string(pc.pi(idx)) + "," + (pc.sign(idx) > 0 ? "+" : "-") + ")";
    rep.certificate("gamma" + name, pc.gamma(idx).str());
  }
  std::string mu;
  for (int g = 0; g < pc.base_order(); ++g) {
    for (int h = 0; h < pc.base_order(); ++h) mu += pc.lift.mu[g][h] > 0 ? "+" : "-";
    mu += g + 1 < pc.base_order() ? "|" : "";
  }
  rep.certificate("cocycle", mu);
}

void cmd_dirac_square(const Scenario& sc, const Options&, Report& rep) {
  DiracContext ctx = context_for(sc);
  ACElement d2 = dirac_square(ctx);  // verifies the formula internally
  rep.verdict("square-formula", true, "D^2 = Omega (x) 1 + 1/2 sum kappa (x) [.,.]");
  // dual-pair independence
  std::vector<Vector> vk, dual;
  for (int k = 0; k < ctx.dim(); ++k) {
    vk.push_back(ctx.basis->p.col(k));
    dual.push_back(ctx.basis->q[k].inverse() * ctx.basis->p.col(k));
  }
  rep.verdict("dual-basis-independence", dirac_from_dual_pair(ctx, vk, dual) == dirac(ctx));
  rep.dim("d_square_terms", long(d2.terms().size()));
  rep.certificate("d_square", d2.str());
}

void cmd_parthasarathy(const Scenario& sc, const Options&, Report& rep) {
  DiracContext ctx = context_for(sc);
  ParthasarathyResult res = parthasarathy_check(ctx);
  rep.verdict("parthasarathy", res.ok, res.ok ? "certificate re-verified" : res.witness);
  if (res.ok) {
    rep.certificate("htilde", vector_payload(res.htilde));
    rep.certificate("central_part", res.central_part.str());
  }
}

void cmd_homology(const Scenario& sc, const Options& opt, Report& rep) {
  DiracContext ctx = context_for(sc);
  int bound = opt.max_degree > 0 ? opt.max_degree : sc.bounds.homology_max_degree;
  HomologyReport hr = graded_homology_check(ctx, bound);
  rep.verdict("graded-homology", hr.pass, hr.pass ? "" : hr.witness);
  for (const auto& d : hr.degrees) {
    std::string tag = "deg" + std::to_string(d.degree);
    rep.dim(tag + "_ker", d.ker_dim);
    rep.dim(tag + "_im", d.im_dim);
    rep.dim(tag + "_delta", d.delta_dim);
    rep.dim(tag + "_ker_triv", d.ker_triv_dim);
    rep.dim(tag + "_im_det", d.im_det_dim);
  }
  bool koszul = true;
  for (const auto& d : hr.degrees) koszul = koszul && d.koszul_ok;
  rep.verdict("koszul-acyclicity", koszul);
  if (parthasarathy_check(ctx).ok) {
    auto rows = filtered_homology_check(ctx, std::max(bound - 1, 1));
    bool ok = true;
    for (const auto& fh : rows) ok = ok && fh.im_det_meets_f0_trivially && fh.truncated_kernel_ok;
    rep.verdict("filtered-homology", ok);
  } else {
    rep.verdict("filtered-homology", true, "skipped: Parthasarathy condition fails");
  }
}

void cmd_center(const Scenario& sc, const Options& opt, Report& rep) {
  int bound = opt.max_degree > 0 ? opt.max_degree : sc.bounds.center_max_degree;
  auto center = center_basis(*sc.algebra, bound);
  rep.dim("center_degree_" + std::to_string(bound), long(center.size()));
  rep.verdict("center-computed", true, std::to_string(center.size()) + " elements");
  for (std::size_t i = 0; i < center.size(); ++i)
    rep.certificate("z" + std::to_string(i), center[i].str());
}

const ModuleAction& module_for(const Scenario& sc, const std::string& name) {
  auto it = sc.modules.find(name);
  if (it == sc.modules.end()) throw Error("scenario has no module named '" + name + "'");
  auto rt = sc.module_reports.find(name);
  if (rt != sc.module_reports.end() && !rt->second.ok)
    throw Error("module '" + name + "' failed validation: " + rt->second.witness);
  return it->second;
}

void cmd_cohomology(const Scenario& sc, const Options& opt, Report& rep) {
  if (opt.module_name.empty()) throw Error("cohomology requires --module NAME");
  DiracContext ctx = context_for(sc);
  const ModuleAction& m = module_for(sc, opt.module_name);
  Carrier carrier = carrier_for(sc, ctx, opt.mode);
  CohomologyResult res = dirac_cohomology(ctx, m, carrier);
  rep.dim("total", res.total_dim);
  rep.dim("ker", res.ker.dim());
  rep.dim("im_cap_ker", res.im_cap_ker.dim());
  rep.dim("hd", res.hd_dim);
  if (res.mode == CarrierMode::Regular) rep.dim("spin_multiplicity", res.spin_multiplicity);
  rep.verdict("cohomology-computed", true,
              opt.mode + " carrier of dimension " + std::to_string(carrier.dim));
  auto kc = cohomology_via_kernel(ctx, m, carrier);
  if (kc)
    rep.verdict("diagonalizable-cross-check", kc->hd_dim == res.hd_dim,
                "dim ker D^2 = " + std::to_string(kc->hd_dim));
  else
    rep.verdict("diagonalizable-cross-check", true,
                "minimal polynomial not square-free; general method only");
}

void cmd_zeta(const Scenario& sc, const Options& opt, Report& rep) {
  DiracContext ctx = context_for(sc);
  require_prerequisites(sc, ctx);
  int bound = opt.max_degree > 0 ? opt.max_degree : sc.bounds.center_max_degree;
  auto center = center_basis(*sc.algebra, bound);
  rep.dim("center", long(center.size()));
  std::vector<ZetaResult> results;
  for (std::size_t i = 0; i < center.size(); ++i) {
    ZetaResult zr = zeta(ctx, center[i], sc.bounds.zeta_retry_limit);
    rep.verdict("zeta-certificate-z" + std::to_string(i), true,
                "bound " + std::to_string(zr.bound_used));
    rep.certificate("zeta(z" + std::to_string(i) + ")", vector_payload(zr.hprime_coeffs));
    results.push_back(std::move(zr));
  }
  // multiplicativity on in-bound products
  const HPrime& hp = *ctx.hprime;
  bool mult_ok = true;
  int checked = 0;
  for (std::size_t i = 0; i < center.size(); ++i)
    for (std::size_t j = i; j < center.size(); ++j) {
      AlgebraElement prod = sc.algebra->multiply(center[i], center[j]);
      if (prod.degree() > bound) continue;
      ZetaResult zp = zeta(ctx, prod, sc.bounds.zeta_retry_limit);
      mult_ok = mult_ok &&
                zp.hprime_coeffs == hp.mul(results[i].hprime_coeffs, results[j].hprime_coeffs);
      ++checked;
    }
  rep.verdict("zeta-multiplicative", mult_ok, std::to_string(checked) + " products checked");
}

void cmd_vogan(const Scenario& sc, const Options& opt, Report& rep) {
  if (opt.module_name.empty()) throw Error("vogan requires --module NAME");
  DiracContext ctx = context_for(sc);
  require_prerequisites(sc, ctx);
  const ModuleAction& m = module_for(sc, opt.module_name);
  Carrier carrier = carrier_for(sc, ctx, opt.mode);
  int bound = opt.max_degree > 0 ? opt.max_degree : sc.bounds.center_max_degree;
  auto center = center_basis(*sc.algebra, bound);
  VoganReport vr = vogan_verify(ctx, m, carrier, center, sc.bounds.zeta_retry_limit);
  rep.dim("hd", vr.hd_dim);
  if (vr.vacuous) {
    rep.verdict("vogan", true, "H^D(M) = 0: the statement is vacuous for this module");
    return;
  }
  for (std::size_t zi = 0; zi < vr.per_z.size(); ++zi)
    for (const auto& v : vr.per_z[zi]) {
      std::string name =
          "vogan-z" + std::to_string(zi) + "-block" + std::to_string(v.block);
      rep.verdict(name, v.conclusive && v.match, v.detail);
    }
}

void cmd_all(const Scenario& sc, const Options& opt, Report& rep) {
  cmd_check_pbw(sc, opt, rep);
  cmd_pin_cover(sc, opt, rep);
  cmd_dirac_square(sc, opt, rep);
  cmd_parthasarathy(sc, opt, rep);
  cmd_homology(sc, opt, rep);
  cmd_center(sc, opt, rep);
  DiracContext ctx = context_for(sc);
  bool bs = sc.kappa_report.ok && check_pbw(*sc.algebra).pass && parthasarathy_check(ctx).ok;
  if (bs) {
    cmd_zeta(sc, opt, rep);
    for (const auto& [name, m] : sc.modules) {
      if (!sc.module_reports.at(name).ok) continue;
      Options o = opt;
      o.module_name = name;
      Report sub;
      cmd_cohomology(sc, o, sub);
      cmd_vogan(sc, o, sub);
      for (auto& v : sub.verdicts) rep.verdict(name + "/" + v.name, v.pass, v.detail);
      for (auto& [n, val] : sub.dims) rep.dim(name + "/" + n, val);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf-Hecke algebra toolkit: pin covers, Dirac elements and exact verification"};
  app.require_subcommand(1);

  Options opt;
  std::string scenario_path;
  std::vector<std::string> commands = {"check-pbw", "pin-cover", "dirac-square",
                                       "parthasarathy", "homology", "center",
                                       "cohomology", "zeta", "vogan", "all"};
  std::map<std::string, CLI::App*> subs;
  for (const auto& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("scenario", scenario_path, "scenario JSON file")->required();
    sub->add_option("--module", opt.module_name, "module name for cohomology/vogan");
    sub->add_option("--mode", opt.mode, "carrier mode: regular|isotropic")
        ->check(CLI::IsMember({"regular", "isotropic"}));
    sub->add_option("--max-degree", opt.max_degree, "override the degree bound");
    sub->add_option("--out", opt.out_path, "write the JSON report to this file");
    subs[name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors are exit 2; --help is success
  }

  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) command = name;

  hha::Report rep;
  rep.command = command;
  auto start = std::chrono::steady_clock::now();
  try {
    Scenario sc = load_scenario(scenario_path);
    rep.scenario = sc.name;
    if (command == "check-pbw")
      cmd_check_pbw(sc, opt, rep);
    else if (command == "pin-cover")
      cmd_pin_cover(sc, opt, rep);
    else if (command == "dirac-square")
      cmd_dirac_square(sc, opt, rep);
    else if (command == "parthasarathy")
      cmd_parthasarathy(sc, opt, rep);
    else if (command == "homology")
      cmd_homology(sc, opt, rep);
    else if (command == "center")
      cmd_center(sc, opt, rep);
    else if (command == "cohomology")
      cmd_cohomology(sc, opt, rep);
    else if (command == "zeta")
      cmd_zeta(sc, opt, rep);
    else if (command == "vogan")
      cmd_vogan(sc, opt, rep);
    else if (command == "all")
      cmd_all(sc, opt, rep);
  } catch (const hha::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  rep.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();

  rep.print_summary(std::cout);
  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path);
    if (!out) {
      std::cerr << "error: cannot write " << opt.out_path << "\n";
      return 2;
    }
    out << rep.to_json_text();
  }
  return rep.all_pass() ? 0 : 1;
}
