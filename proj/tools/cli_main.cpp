// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: orthogonal polynomial queries, Delsarte LP bounds,
// the Schrijver triple SDP for binary codes, Lovasz theta, certificate
// verification, and reproduction recipes for the classical numbers.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "codebounds/certlib.hpp"
#include "codebounds/report.hpp"
#include "codebounds/delsarte.hpp"
#include "codebounds/orthopoly.hpp"
#include "codebounds/schrijver.hpp"
#include "codebounds/sdpa_io.hpp"
#include "codebounds/theta.hpp"

using namespace codebounds;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitSolverFailure = 2;
constexpr int kExitVerificationFailure = 3;

std::string fmt_float(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

struct ReportTimer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

void write_json_file(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << j.dump(2) << "\n";
}

int run_poly(const std::string& family, long n, long q, long k, long i, long j,
             const std::string& eval_at, bool want_coeffs) {
  Poly p;
  bool qhahn_family = false;
  QHahnPoly qh;
  if (family == "krawtchouk") {
    p = krawtchouk(n, q, k);
  } else if (family == "hahn") {
    if (i < 0) {
      std::cerr << "hahn requires --i (the Johnson weight w)\n";
      return kExitInvalidInput;
    }
    p = hahn_johnson(n, i, k);
  } else if (family == "qhahn") {
    if (i < 0 || j < 0) {
      std::cerr << "qhahn requires --i and --j\n";
      return kExitInvalidInput;
    }
    qh = qhahn(n, q, i, j, k);
    p = qh.in_bracket;
    qhahn_family = true;
  } else if (family == "gegenbauer") {
    p = gegenbauer(n, k);
  } else {
    std::cerr << "unknown family '" << family << "'\n";
    return kExitInvalidInput;
  }

  if (!eval_at.empty()) {
    Rational x = Rational::from_string(eval_at);
    Rational v;
    if (qhahn_family) {
      if (!x.is_integer() || x.sign() < 0) {
        std::cerr << "qhahn evaluation takes a nonnegative integer point\n";
        return kExitInvalidInput;
      }
      v = qh(x.num().get_si());
    } else {
      v = p(x);
    }
    std::cout << v.str() << "\n";
  }
  if (want_coeffs || eval_at.empty()) {
    std::ostringstream os;
    for (int d = 0; d <= std::max(p.degree(), 0); ++d) {
      if (d) os << " ";
      os << p.coeff(d).str();
    }
    std::cout << os.str() << "\n";
  }
  return kExitOk;
}

int run_bound_lp(const std::string& space_name, long n, long q, long w, long delta,
                 const std::string& max_cos, long degree, long grid, const std::string& json_path) {
  ReportTimer timer;
  SpaceSpec space;
  if (space_name == "hamming") {
    space = SpaceSpec::hamming(n, q, delta);
  } else if (space_name == "johnson") {
    space = SpaceSpec::johnson(n, w, delta);
  } else if (space_name == "sphere") {
    if (max_cos.empty()) {
      std::cerr << "sphere bound requires --max-cos\n";
      return kExitInvalidInput;
    }
    space = SpaceSpec::sphere(n, Rational::from_string(max_cos));
  } else {
    std::cerr << "unknown space '" << space_name << "'\n";
    return kExitInvalidInput;
  }

  LpBoundResult res = lp_bound(space, degree, grid);
  if (res.status != LpStatus::Optimal && !res.trivial) {
    std::cerr << "LP did not reach optimality\n";
    return kExitSolverFailure;
  }
  std::cout << "space: " << space.str() << "\n";
  std::cout << "bound = " << res.bound.str() << " (~" << fmt_float(res.bound.to_double()) << ")"
            << (res.trivial ? " [trivial: empty forbidden distance set]" : "") << "\n";

  auto verdict = verify_certificate(res.certificate);
  std::cout << "certificate: " << (verdict.valid ? "verified exactly" : "INVALID") << "\n";
  if (!verdict.valid) return kExitVerificationFailure;

  if (!json_path.empty()) {
    std::string cert_path = json_path + ".cert.json";
    CertificateDocument doc = CertificateDocument::from_lp(res.certificate);
    doc.metadata["tool"] = "codebounds";
    std::ofstream cf(cert_path);
    cf << doc.serialize();
    json bounds = json::array();
    bounds.push_back({{"method", space.kind == SpaceSpec::Kind::Sphere
                                     ? "delsarte-lp-sampled+certified"
                                     : "delsarte-lp-exact"},
                      {"value", res.bound.str()},
                      {"value_float", res.bound.to_double()},
                      {"tolerance", "exact"},
                      {"provenance", "lp"}});
    json params{{"space", space.str()}, {"degree", degree}, {"grid", grid}};
    write_json_file(json_path,
                    make_run_report("bound lp " + space_name, params, bounds, timer.ms(),
                                json{{"engine", "simplex-exact-rational"},
                                     {"status", "optimal"}},
                                cert_path));
    std::cout << "report: " << json_path << "\ncertificate file: " << cert_path << "\n";
  }
  return kExitOk;
}

int run_bound_schrijver(long n, long delta, double tol, const std::string& sdpa_path,
                        bool assemble_only, const std::string& json_path,
                        const std::string& solution_path) {
  ReportTimer timer;
  auto assembly = build_schrijver(n, delta);
  SdpProblem p = assembly.to_sdp();
  if (!sdpa_path.empty()) {
    export_sdpa_file(p, sdpa_path);
    std::cout << "SDPA export: " << sdpa_path << " (" << p.num_constraints << " variables, "
              << p.blocks.size() << " blocks)\n";
  }
  if (!solution_path.empty()) {
    // certification of an externally produced dual solution
    SdpSolution ext = parse_sdpa_solution_file(solution_path, p);
    Rational bound = upper_bound_rounding(assembly, ext);
    std::cout << "external dual certified: card(C) <= " << bound.str() << " (~"
              << fmt_float(bound.to_double()) << "), integer bound "
              << bound.floor().get_str() << "\n";
    return kExitOk;
  }
  if (assemble_only) {
    std::cout << "assembly only, not solving\n";
    return kExitOk;
  }
  auto res = schrijver_bound(n, delta, tol);
  if (res.status != SdpStatus::Optimal && res.status != SdpStatus::MaxIter) {
    std::cerr << "SDP solve failed: " << to_string(res.status) << "\n";
    return kExitSolverFailure;
  }
  std::cout << "schrijver sdp value  ~ " << fmt_float(res.sdp_value) << " ("
            << to_string(res.status) << ", gap " << fmt_float(res.solution.gap) << ")\n";
  std::cout << "certified safe bound = " << res.safe_bound.str() << " (~"
            << fmt_float(res.safe_bound.to_double()) << ")\n";
  std::cout << "integer bound        = " << res.floored.get_str() << "\n";

  if (!json_path.empty()) {
    json bounds = json::array();
    bounds.push_back({{"method", "schrijver-sdp-ipm"},
                      {"value", res.sdp_value},
                      {"tolerance", tol},
                      {"provenance", "sdp"}});
    bounds.push_back({{"method", "schrijver-sdp-certified-rounding"},
                      {"value", res.safe_bound.str()},
                      {"value_float", res.safe_bound.to_double()},
                      {"tolerance", "exact"},
                      {"provenance", "sdp"}});
    bounds.push_back({{"method", "schrijver-sdp-integer"},
                      {"value", res.floored.get_str()},
                      {"tolerance", "exact"},
                      {"provenance", "sdp"}});
    json params{{"n", n}, {"delta", delta}, {"tol", tol}};
    json solver{{"engine", "ipm-hkm-mehrotra"},
                {"status", to_string(res.status)},
                {"iterations", res.solution.iterations},
                {"gap", res.solution.gap},
                {"primal_infeas", res.solution.primal_infeas},
                {"dual_infeas", res.solution.dual_infeas}};
    write_json_file(json_path, make_run_report("bound sdp schrijver", params, bounds, timer.ms(),
                                           solver, nullptr));
    std::cout << "report: " << json_path << "\n";
  }
  return kExitOk;
}

int run_theta(const std::string& mode, const std::string& graph_path, long q, long n, long delta,
              const std::string& variant_name) {
  ThetaVariant variant =
      variant_name == "theta-prime" ? ThetaVariant::ThetaPrime : ThetaVariant::Theta;
  Graph g;
  if (mode == "graph") {
    std::ifstream f(graph_path);
    if (!f) {
      std::cerr << "cannot open graph file " << graph_path << "\n";
      return kExitInvalidInput;
    }
    g = Graph::read(f);
  } else if (mode == "cycle") {
    g = Graph::cycle(static_cast<int>(q));
    std::cout << "closed form theta(C_" << q << ") = " << fmt_float(theta_cycle_closed_form(q))
              << "\n";
    auto lp = theta_cycle_symmetrized_lp(q);
    std::cout << "symmetrized LP value  = " << fmt_float(lp.second) << "\n";
  } else if (mode == "code") {
    if ((1L << n) > 16) {
      // The raw 2^n-vertex SDP is pointless at real sizes: the symmetrized
      // program is exactly the Delsarte LP bound (theta'), so route there.
      std::cout << "2^" << n << " vertices exceeds the raw-SDP cap (16); "
                << "computing the symmetrized equivalent (Delsarte LP = theta')\n";
      auto res = lp_bound(SpaceSpec::hamming(n, 2, delta));
      std::cout << "theta'(H_" << n << ", delta=" << delta << ") = " << res.bound.str() << " (~"
                << fmt_float(res.bound.to_double()) << ")\n";
      return kExitOk;
    }
    g = code_graph(SpaceSpec::hamming(n, 2, 1), delta);
  } else {
    std::cerr << "theta mode must be graph|cycle|code\n";
    return kExitInvalidInput;
  }

  auto res = theta_solve(g, variant);
  if (res.status != SdpStatus::Optimal) {
    std::cerr << "SDP solve failed: " << to_string(res.status) << "\n";
    return kExitSolverFailure;
  }
  std::cout << (variant == ThetaVariant::Theta ? "theta" : "theta'") << " = "
            << fmt_float(res.value) << " (gap " << fmt_float(res.solution.gap) << ", "
            << res.solution.iterations << " iterations)\n";
  return kExitOk;
}

int run_verify(const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    std::cerr << "cannot open " << path << "\n";
    return kExitInvalidInput;
  }
  std::stringstream ss;
  ss << f.rdbuf();
  CertificateDocument doc;
  try {
    doc = CertificateDocument::parse(ss.str());
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  DocVerdict v = verify_document(doc);
  if (!v.valid) {
    std::cout << "INVALID: " << v.reason << "\n";
    return kExitVerificationFailure;
  }
  std::cout << "VALID bound=" << v.bound.str() << "\n";
  return kExitOk;
}

int reproduce_kissing8() {
  // The degree-6 polynomial whose Gegenbauer expansion certifies 240.
  Poly F = Poly(std::vector<Rational>{Rational(-1, 2), Rational(1)});       // t - 1/2
  F = F * Poly(std::vector<Rational>{Rational(0), Rational(0), Rational(1)});  // * t^2
  Poly half = Poly(std::vector<Rational>{Rational(1, 2), Rational(1)});
  F = F * half * half;                                                      // * (t+1/2)^2
  F = F * Poly(std::vector<Rational>{Rational(1), Rational(1)});            // * (t+1)
  FamilyParams fam;
  fam.family = Family::Gegenbauer;
  fam.n = 8;
  LpCertificate cert;
  cert.space = SpaceSpec::sphere(8, Rational(1, 2));
  cert.f = expand_in_family(F, fam);
  auto verdict = verify_certificate(cert);
  if (!verdict.valid) {
    std::cerr << "verification failed: " << verdict.reason << "\n";
    return kExitVerificationFailure;
  }
  if (verdict.bound != Rational(240)) {
    std::cerr << "unexpected bound " << verdict.bound.str() << "\n";
    return kExitVerificationFailure;
  }
  std::cout << verdict.bound.str() << "\n";
  return kExitOk;
}

int reproduce_pentagon() {
  Graph g = Graph::cycle(5);
  auto res = theta_solve(g, ThetaVariant::Theta);
  double target = std::sqrt(5.0);
  std::cout << "theta(C_5) ipm    = " << fmt_float(res.value) << "\n";
  std::cout << "closed form       = " << fmt_float(theta_cycle_closed_form(5)) << "\n";
  std::cout << "sqrt(5)           = " << fmt_float(target) << "\n";
  if (res.status != SdpStatus::Optimal || std::fabs(res.value - target) > 1e-6) {
    std::cerr << "pentagon reproduction failed\n";
    return kExitSolverFailure;
  }
  std::cout << "agreement within 1e-6\n";
  return kExitOk;
}

int reproduce_macwilliams() {
  // [7,4] binary Hamming code: weight distribution transforms onto the dual.
  std::vector<unsigned> gens{0b1000011u, 0b0100101u, 0b0010110u, 0b0001111u};
  long n = 7;
  std::vector<unsigned> C;
  for (unsigned m = 0; m < 16; ++m) {
    unsigned w = 0;
    for (int b = 0; b < 4; ++b)
      if (m & (1u << b)) w ^= gens[b];
    C.push_back(w);
  }
  std::vector<unsigned> dual;
  for (unsigned v = 0; v < (1u << n); ++v) {
    bool ok = true;
    for (unsigned c : C)
      if (__builtin_popcount(v & c) % 2 != 0) {
        ok = false;
        break;
      }
    if (ok) dual.push_back(v);
  }
  auto weight_dist = [&](const std::vector<unsigned>& code) {
    std::vector<long> a(n + 1, 0);
    for (unsigned c : code) ++a[__builtin_popcount(c)];
    return a;
  };
  auto A = weight_dist(C), B = weight_dist(dual);
  std::cout << "code |C| = " << C.size() << ", dual |C'| = " << dual.size() << "\n";
  std::cout << "A(C):     ";
  for (long x : A) std::cout << x << " ";
  std::cout << "\nA(dual):  ";
  for (long x : B) std::cout << x << " ";
  std::cout << "\ntransform:";
  bool all_ok = true;
  for (long k = 0; k <= n; ++k) {
    Poly kk = krawtchouk(n, 2, k);
    Rational s(0);
    for (long w = 0; w <= n; ++w) s += Rational(A[w]) * kk(Rational(w));
    s /= Rational(static_cast<long>(C.size()));
    std::cout << " " << s.str();
    if (s != Rational(B[k])) all_ok = false;
  }
  std::cout << "\n";
  if (!all_ok) {
    std::cerr << "MacWilliams identity FAILED\n";
    return kExitVerificationFailure;
  }
  std::cout << "MacWilliams identity holds exactly\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounds for codes: Delsarte LP, Schrijver triple SDP, Lovasz theta"};
  app.require_subcommand(1);

  // poly
  auto* poly = app.add_subcommand("poly", "orthogonal polynomial queries");
  std::string poly_family;
  long poly_n = 0, poly_q = 2, poly_k = 0, poly_i = -1, poly_j = -1;
  std::string poly_eval;
  bool poly_coeffs = false;
  poly->add_option("family", poly_family, "krawtchouk|hahn|qhahn|gegenbauer")->required();
  poly->add_option("--n", poly_n)->required();
  poly->add_option("--q", poly_q, "alphabet (krawtchouk/qhahn); gegenbauer ignores it");
  poly->add_option("--k", poly_k, "level")->required();
  poly->add_option("--i", poly_i, "qhahn weight index i; hahn weight w");
  poly->add_option("--j", poly_j, "qhahn weight index j");
  poly->add_option("--eval", poly_eval, "evaluation point (rational)");
  poly->add_flag("--coeffs", poly_coeffs, "print the exact coefficient vector");

  // bound lp / bound sdp
  auto* bound = app.add_subcommand("bound", "code bounds");
  bound->require_subcommand(1);
  auto* blp = bound->add_subcommand("lp", "Delsarte linear programming bound");
  std::string blp_space;
  long blp_n = 0, blp_q = 2, blp_w = 0, blp_delta = -1, blp_degree = 10, blp_grid = 200;
  std::string blp_maxcos, blp_json;
  blp->add_option("space", blp_space, "hamming|johnson|sphere")->required();
  blp->add_option("--n", blp_n)->required();
  blp->add_option("--q", blp_q);
  blp->add_option("--w", blp_w);
  blp->add_option("--delta", blp_delta);
  blp->add_option("--max-cos", blp_maxcos, "sphere: max inner product, e.g. 1/2");
  blp->add_option("--degree", blp_degree, "sphere: Gegenbauer degree cap");
  blp->add_option("--grid", blp_grid, "sphere: sample grid size");
  blp->add_option("--json", blp_json, "write a run report here");

  auto* bsdp = bound->add_subcommand("sdp", "semidefinite programming bounds");
  bsdp->require_subcommand(1);
  auto* bschrijver = bsdp->add_subcommand("schrijver", "triple-distance SDP for binary codes");
  long bs_n = 0, bs_delta = 0;
  double bs_tol = 1e-8;
  std::string bs_sdpa, bs_json, bs_solution;
  bool bs_assemble_only = false;
  bschrijver->add_option("--n", bs_n)->required();
  bschrijver->add_option("--delta", bs_delta)->required();
  bschrijver->add_option("--tol", bs_tol);
  bschrijver->add_option("--emit-sdpa", bs_sdpa, "write the problem in SDPA sparse format");
  bschrijver->add_flag("--assemble-only", bs_assemble_only, "assemble and export, skip solving");
  bschrijver->add_option("--json", bs_json, "write a run report here");
  bschrijver->add_option("--certify-solution", bs_solution,
                         "certify an SDPA solver's solution file instead of solving");

  // theta
  auto* theta = app.add_subcommand("theta", "Lovasz theta of a graph");
  theta->require_subcommand(1);
  auto* tg = theta->add_subcommand("graph", "from an edge-list file");
  auto* tc = theta->add_subcommand("cycle", "the q-gon");
  auto* tcode = theta->add_subcommand("code", "binary Hamming code graph");
  std::string theta_path, theta_variant = "theta";
  long theta_q = 5, theta_n = 4, theta_delta = 3;
  tg->add_option("path", theta_path)->required();
  tc->add_option("--q", theta_q)->required();
  tcode->add_option("--n", theta_n)->required();
  tcode->add_option("--delta", theta_delta)->required();
  for (auto* s : {tg, tc, tcode})
    s->add_option("--variant", theta_variant, "theta|theta-prime");

  // verify
  auto* verify = app.add_subcommand("verify", "verify a certificate document");
  auto* vc = verify->add_subcommand("cert", "JSON certificate file");
  std::string verify_path;
  vc->add_option("path", verify_path)->required();

  // reproduce
  auto* rep = app.add_subcommand("reproduce", "reproduction recipes");
  std::string rep_what;
  rep->add_option("what", rep_what, "kissing8|pentagon|mcwilliams-demo")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (poly->parsed())
      return run_poly(poly_family, poly_n, poly_q, poly_k, poly_i, poly_j, poly_eval, poly_coeffs);
    if (blp->parsed())
      return run_bound_lp(blp_space, blp_n, blp_q, blp_w, blp_delta, blp_maxcos, blp_degree,
                          blp_grid, blp_json);
    if (bschrijver->parsed())
      return run_bound_schrijver(bs_n, bs_delta, bs_tol, bs_sdpa, bs_assemble_only, bs_json,
                                 bs_solution);
    if (theta->parsed()) {
      std::string mode = tg->parsed() ? "graph" : tc->parsed() ? "cycle" : "code";
      return run_theta(mode, theta_path, theta_q, theta_n, theta_delta, theta_variant);
    }
    if (verify->parsed()) return run_verify(verify_path);
    if (rep->parsed()) {
      if (rep_what == "kissing8") return reproduce_kissing8();
      if (rep_what == "pentagon") return reproduce_pentagon();
      if (rep_what == "mcwilliams-demo") return reproduce_macwilliams();
      std::cerr << "unknown recipe '" << rep_what << "'\n";
      return kExitInvalidInput;
    }
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolverFailure;
  }
  return kExitInvalidInput;
}
