// Copyright 2026 The vdcwitness Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vdc/vdc.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// A failed library call, carrying the status so main can pick the exit code.
struct CallError : std::runtime_error {
  vdc_status status;
  CallError(vdc_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(vdc_status status) {
  if (status != VDC_OK) {
    throw CallError(status, std::string(vdc_status_name(status)) + ": " + vdc_last_error());
  }
}

struct Freer {
  void operator()(vdc_poly* p) const { vdc_poly_free(p); }
  void operator()(vdc_cosine* p) const { vdc_cosine_free(p); }
  void operator()(vdc_scheme* p) const { vdc_scheme_free(p); }
};
using Poly = std::unique_ptr<vdc_poly, Freer>;
using Cosine = std::unique_ptr<vdc_cosine, Freer>;
using Scheme = std::unique_ptr<vdc_scheme, Freer>;

Json take_json(char* text) {
  Json doc = Json::parse(text);
  vdc_free(text);
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CallError(VDC_ERR_IO, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw CallError(VDC_ERR_IO, "cannot write " + path);
}

Poly make_poly(const std::string& literal) {
  vdc_poly* f = nullptr;
  check(vdc_poly_parse(literal.c_str(), &f));
  return Poly(f);
}

Cosine load_cosine(const std::string& path) {
  vdc_cosine* T = nullptr;
  check(vdc_cosine_from_json(read_file(path).c_str(), &T));
  return Cosine(T);
}

// "2^20" or a plain integer.
std::uint64_t parse_cap(const std::string& text) {
  const auto caret = text.find('^');
  if (caret == std::string::npos) return std::stoull(text);
  const auto base = std::stoull(text.substr(0, caret));
  const auto exp = std::stoull(text.substr(caret + 1));
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < exp; ++i) v *= base;
  return v;
}

// Options shared by every subcommand plus the run record.
struct Run {
  unsigned threads = 0;
  std::string manifest_path;
  std::uint64_t seed = 0;
  std::string subcommand;
  std::map<std::string, double> timings;
  std::vector<std::string> artifacts;

  template <typename F>
  auto timed(const std::string& stage, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    auto result = body();
    timings[stage] += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
  }

  void write_manifest(const CLI::App& leaf) const {
    std::string path = manifest_path;
    if (path.empty() && !artifacts.empty()) path = artifacts.front() + ".manifest.json";
    if (path.empty()) return;
    Json params = Json::object();
    for (const CLI::Option* opt : leaf.get_options()) {
      if (opt->get_name() == "--help" || opt->count() == 0) continue;
      const auto& res = opt->results();
      params[opt->get_name()] = res.size() == 1 ? Json(res.front()) : Json(res);
    }
    Json timing = Json::object();
    for (const auto& [k, v] : timings) timing[k] = v;
    const Json doc = {{"subcommand", subcommand},
                      {"parameters", params},
                      {"threads", threads},
                      {"seed", seed},
                      {"tool_version", vdc_version()},
                      {"artifacts", artifacts},
                      {"timings_ms", timing}};
    write_file(path, doc.dump(2) + "\n");
  }
};

void print(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

double estimate_c0(Run& run, vdc_poly* f, std::uint64_t q_max) {
  double c0 = 0.0;
  run.timed("estimate_c0", [&] { check(vdc_estimate_c0(f, q_max, run.threads, 0, &c0, nullptr)); return 0; });
  return c0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonnegative cosine polynomials with spectrum in the values of an odd integer polynomial"};
  app.require_subcommand(1);
  app.set_version_flag("--version", vdc_version());
  Run run;
  app.add_option("--threads", run.threads, "worker threads (default: VDC_THREADS, else all cores)");
  app.add_option("--manifest", run.manifest_path, "write a run manifest to this path");
  app.add_option("--seed", run.seed, "seed recorded in the manifest");

  int exit_code = kExitPass;
  std::string poly = "0,0,1";
  auto add_poly = [&](CLI::App* sub) {
    sub->add_option("--poly", poly, "coefficients low to high, e.g. 2,0,3 for 3x^3+2x")->capture_default_str();
  };

  // ---- expsum ----
  auto* expsum = app.add_subcommand("expsum", "complete exponential sums S_d(af, q)");
  add_poly(expsum);
  std::uint64_t d = 1, q = 0, qmax = 5000;
  std::int64_t a = 1;
  std::string csv_path;
  expsum->add_option("--d", d, "dilation")->capture_default_str();
  expsum->add_option("--a", a, "multiplier")->capture_default_str();
  expsum->add_option("--q", q, "modulus");
  auto* sweep = expsum->add_subcommand("sweep", "running estimate of the complete-sum constant");
  add_poly(sweep);
  sweep->add_option("--qmax", qmax, "largest modulus")->capture_default_str();
  sweep->add_option("--csv", csv_path, "write q,max_ratio,argmax_a,running_c0 rows here");

  expsum->callback([&] {
    if (*sweep) return;
    if (q == 0) throw CLI::RequiredError("--q");
    auto f = make_poly(poly);
    vdc_sum s{};
    double ref = 0.0;
    run.timed("reduced_sum", [&] { check(vdc_reduced_sum(f.get(), d, a, q, &s)); return 0; });
    check(vdc_reference_imag(f.get(), d, a, q, &ref));
    print({{"q", q}, {"a", a}, {"d", d}, {"value", s.value}, {"residual_imag", s.residual_imag},
           {"reference_imag", ref}});
  });
  sweep->callback([&] {
    auto f = make_poly(poly);
    char* text = nullptr;
    run.timed("estimate_c0", [&] { check(vdc_estimate_c0(f.get(), qmax, run.threads, 1, nullptr, &text)); return 0; });
    Json doc = take_json(text);
    if (!csv_path.empty()) {
      std::ostringstream out;
      out << "q,max_ratio,argmax_a,running_c0\n";
      char line[128];
      for (const auto& r : doc["rows"]) {
        std::snprintf(line, sizeof line, "%llu,%.17g,%lld,%.17g\n",
                      static_cast<unsigned long long>(r["q"].get<std::uint64_t>()), r["max_ratio"].get<double>(),
                      static_cast<long long>(r["argmax_a"].get<std::int64_t>()), r["running_c0"].get<double>());
        out << line;
      }
      write_file(csv_path, out.str());
      run.artifacts.push_back(csv_path);
    }
    doc.erase("rows");
    print(doc);
  });

  // ---- scheme ----
  auto* scheme = app.add_subcommand("scheme", "averaging scheme of moduli and weights");
  scheme->require_subcommand(1);
  double delta = 0.3, c0 = 0.0;
  std::uint64_t c0_qmax = 5000;
  std::string cap_text = "2^24", in_path, out_path;
  auto add_scheme_inputs = [&](CLI::App* sub) {
    add_poly(sub);
    sub->add_option("--delta", delta, "target level delta in (0, 1)")->capture_default_str();
    sub->add_option("--c0", c0, "complete-sum constant (default: estimated)");
    sub->add_option("--c0-qmax", c0_qmax, "modulus range for the c0 estimate")->capture_default_str();
    sub->add_option("--cap", cap_text, "largest allowed 2^s, e.g. 2^20")->capture_default_str();
  };
  auto build = [&]() {
    auto f = make_poly(poly);
    const double c = c0 > 0.0 ? c0 : estimate_c0(run, f.get(), c0_qmax);
    vdc_scheme* sc = nullptr;
    run.timed("build_scheme", [&] { check(vdc_scheme_build(f.get(), delta, c, parse_cap(cap_text), &sc)); return 0; });
    return Scheme(sc);
  };
  auto* scheme_build = scheme->add_subcommand("build", "construct the scheme and print it as JSON");
  add_scheme_inputs(scheme_build);
  scheme_build->add_option("--out", out_path, "write the scheme here instead of stdout");
  scheme_build->callback([&] {
    auto sc = build();
    char* text = nullptr;
    check(vdc_scheme_to_json(sc.get(), &text));
    const Json doc = take_json(text);
    if (out_path.empty()) {
      print(doc);
    } else {
      write_file(out_path, doc.dump(2) + "\n");
      run.artifacts.push_back(out_path);
      print({{"out", out_path}, {"s", doc["s"]}, {"m", doc["m"]}, {"c0", doc["c0"]}});
    }
  });
  auto* scheme_verify = scheme->add_subcommand("verify", "exhaustive check of the averaged bound");
  add_scheme_inputs(scheme_verify);
  scheme_verify->add_option("--in", in_path, "scheme JSON (default: build from --poly/--delta)");
  scheme_verify->add_option("--qmax", qmax, "largest q checked")->capture_default_str();
  scheme_verify->callback([&] {
    Scheme sc;
    if (in_path.empty()) {
      sc = build();
    } else {
      vdc_scheme* raw = nullptr;
      check(vdc_scheme_from_json(read_file(in_path).c_str(), &raw));
      sc.reset(raw);
    }
    int pass = 0;
    char* text = nullptr;
    run.timed("verify_scheme", [&] { check(vdc_scheme_verify(sc.get(), qmax, run.threads, &pass, &text)); return 0; });
    Json doc = take_json(text);
    doc["delta"] = vdc_scheme_delta(sc.get());
    print(doc);
    if (!pass) exit_code = kExitFail;
  });
  std::uint64_t pmax = 1000;
  int smax = 8;
  auto* lemmas = scheme->add_subcommand("lemmas", "prime-power inequality suites");
  add_scheme_inputs(lemmas);
  lemmas->add_option("--pmax", pmax, "largest prime")->capture_default_str();
  lemmas->add_option("--smax", smax, "largest number of levels")->capture_default_str();
  lemmas->callback([&] {
    auto f = make_poly(poly);
    const double c = c0 > 0.0 ? c0 : estimate_c0(run, f.get(), c0_qmax);
    char* info = nullptr;
    check(vdc_poly_info(f.get(), &info));
    const Json pinfo = take_json(info);
    const int l = pinfo["least_index"].get<int>();
    const double beta = 1.0 / pinfo["degree"].get<int>();
    // alpha = c0 |a_l|; the coefficient is read back from the literal.
    std::vector<double> coeffs;
    std::stringstream ss(pinfo["literal"].get<std::string>());
    for (std::string tok; std::getline(ss, tok, ',');) coeffs.push_back(std::stod(tok));
    const double alpha = c * std::abs(coeffs[static_cast<std::size_t>(l - 1)]);
    Json doc = {{"alpha", alpha}, {"beta", beta}, {"l", l}, {"pmax", pmax}, {"smax", smax}};
    std::uint64_t total = 0;
    for (auto [name, which] : {std::pair{"large_primes", VDC_LEMMA_LARGE_PRIMES},
                               std::pair{"small_primes", VDC_LEMMA_SMALL_PRIMES},
                               std::pair{"ladders", VDC_LEMMA_LADDERS}}) {
      std::uint64_t failures = 0;
      char* text = nullptr;
      run.timed(name, [&] { check(vdc_lemma_suite(which, alpha, beta, l, pmax, smax, &failures, &text)); return 0; });
      doc[name] = take_json(text);
      total += failures;
    }
    print(doc);
    if (total) exit_code = kExitFail;
  });

  // ---- witness ----
  auto* witness = app.add_subcommand("witness", "assemble and scan the cosine polynomial");
  witness->require_subcommand(1);
  std::uint64_t n = 1000000, grid = 0, principal_qmax = 200, min_terms = 4;
  int max_levels = 8, refine = 60;
  double tol = 1e-9;
  std::string scheme_path;
  auto* wbuild = witness->add_subcommand("build", "build the witness for a desk-scale chain of moduli");
  add_poly(wbuild);
  wbuild->add_option("--delta", delta, "free coefficient delta")->capture_default_str();
  wbuild->add_option("--n", n, "frequency cap n")->capture_default_str();
  wbuild->add_option("--out", out_path, "write the witness JSON here");
  wbuild->add_option("--scheme", scheme_path, "scheme JSON (default: greedy desk chain)");
  wbuild->add_option("--principal-qmax", principal_qmax, "desk chain: moduli range of the principal part")->capture_default_str();
  wbuild->add_option("--min-terms", min_terms, "desk chain: fewest surrogate terms per level")->capture_default_str();
  wbuild->add_option("--max-levels", max_levels, "desk chain: most levels beyond d_0")->capture_default_str();
  wbuild->add_option("--scan-grid", grid, "also scan on this many grid points");
  wbuild->add_option("--verify-qmax", qmax, "also verify the scheme up to this q (0 skips)");
  wbuild->add_option("--tol", tol, "scan passes when the minimum is >= -tol")->capture_default_str();

  auto load_scheme = [&](vdc_poly* f) {
    vdc_scheme* sc = nullptr;
    if (scheme_path.empty()) {
      run.timed("desk_scheme", [&] {
        check(vdc_scheme_build_desk(f, n, delta, 1.0, principal_qmax, min_terms, max_levels, &sc));
        return 0;
      });
    } else {
      check(vdc_scheme_from_json(read_file(scheme_path).c_str(), &sc));
    }
    return Scheme(sc);
  };
  wbuild->callback([&] {
    auto f = make_poly(poly);
    auto sc = load_scheme(f.get());
    vdc_cosine* raw = nullptr;
    char* text = nullptr;
    run.timed("build_witness", [&] { check(vdc_witness_build(f.get(), delta, sc.get(), n, &raw, &text)); return 0; });
    Cosine T(raw);
    Json report = take_json(text);
    if (wbuild->count("--verify-qmax") && qmax > 0) {
      char* v = nullptr;
      run.timed("verify_scheme", [&] { check(vdc_scheme_verify(sc.get(), qmax, run.threads, nullptr, &v)); return 0; });
      report["scheme_verdict"] = take_json(v);
    }
    if (grid > 0) {
      char* s = nullptr;
      double mn = 0.0;
      run.timed("scan_min", [&] { check(vdc_scan_min(T.get(), grid, refine, run.threads, &mn, &s)); return 0; });
      report["scan"] = take_json(s);
      report["scan_pass"] = mn >= -tol;
      if (mn < -tol) exit_code = kExitFail;
    }
    if (!out_path.empty()) {
      char* body = nullptr;
      check(vdc_cosine_to_json(T.get(), &body));
      Json doc = take_json(body);
      doc["report"] = report;
      write_file(out_path, doc.dump(1) + "\n");
      run.artifacts.push_back(out_path);
    }
    print(report);
  });

  auto* wscan = witness->add_subcommand("scan", "grid scan with golden-section refinement");
  wscan->add_option("--in", in_path, "witness JSON")->required();
  wscan->add_option("--grid", grid, "grid points (default 8 x max frequency)");
  wscan->add_option("--refine", refine, "golden-section iterations")->capture_default_str();
  wscan->add_option("--tol", tol, "passes when the minimum is >= -tol")->capture_default_str();
  wscan->callback([&] {
    auto T = load_cosine(in_path);
    const std::uint64_t points = grid ? grid : std::max<std::uint64_t>(8 * vdc_cosine_max_frequency(T.get()), 1024);
    char* s = nullptr;
    double mn = 0.0;
    run.timed("scan_min", [&] { check(vdc_scan_min(T.get(), points, refine, run.threads, &mn, &s)); return 0; });
    Json doc = take_json(s);
    doc["b0"] = vdc_cosine_b0(T.get());
    doc["pass"] = mn >= -tol;
    if (doc["undersampled"].get<bool>()) std::cerr << "warning: grid has fewer than 4 points per unit of the top frequency\n";
    print(doc);
    if (mn < -tol) exit_code = kExitFail;
  });

  auto* wdelta = witness->add_subcommand("delta", "smallest delta whose desk witness passes the scan");
  add_poly(wdelta);
  wdelta->add_option("--n", n, "frequency cap n")->capture_default_str();
  wdelta->add_option("--grid", grid, "grid points (default 8 x max frequency)");
  wdelta->add_option("--tol", tol, "accepted negativity")->capture_default_str();
  wdelta->add_option("--scheme", scheme_path, "scheme JSON (default: greedy desk chain)");
  wdelta->callback([&] {
    auto f = make_poly(poly);
    auto sc = load_scheme(f.get());
    std::uint64_t points = grid;
    if (points == 0) {
      vdc_cosine* raw = nullptr;
      check(vdc_witness_build(f.get(), 0.5, sc.get(), n, &raw, nullptr));
      points = 8 * vdc_cosine_max_frequency(raw);
      vdc_cosine_free(raw);
    }
    char* text = nullptr;
    run.timed("min_passing_delta", [&] {
      check(vdc_min_passing_delta(f.get(), sc.get(), n, points, tol, run.threads, nullptr, &text));
      return 0;
    });
    Json doc = take_json(text);
    doc["grid_points"] = points;
    print(doc);
    if (!doc["confirmed"].get<bool>()) exit_code = kExitFail;
  });

  double c5 = 1.0, c6 = 1.0, c7 = 1.0;
  auto* wpaper = witness->add_subcommand("paper", "proof-scale parameters in log space");
  add_poly(wpaper);
  wpaper->add_option("--delta", delta, "free coefficient delta")->capture_default_str();
  wpaper->add_option("--c5", c5)->capture_default_str();
  wpaper->add_option("--c6", c6)->capture_default_str();
  wpaper->add_option("--c7", c7)->capture_default_str();
  wpaper->callback([&] {
    auto f = make_poly(poly);
    char* text = nullptr;
    check(vdc_paper_parameters(f.get(), delta, c5, c6, c7, &text));
    print(take_json(text));
  });

  // ---- oracle ----
  auto* oracle = app.add_subcommand("oracle", "independent ground truth");
  oracle->require_subcommand(1);
  int rounds = 8;
  auto* gamma = oracle->add_subcommand("gamma", "grid linear program bracket for the smallest b0");
  add_poly(gamma);
  gamma->add_option("--n", n, "frequency cap")->capture_default_str();
  gamma->add_option("--grid", grid, "initial grid (default 4 x max frequency)");
  gamma->add_option("--rounds", rounds, "grid doublings allowed")->capture_default_str();
  gamma->callback([&] {
    auto f = make_poly(poly);
    std::uint64_t* values = nullptr;
    std::size_t count = 0;
    check(vdc_poly_positive_values(f.get(), n, &values, &count));
    std::vector<std::uint64_t> spectrum(values, values + count);
    vdc_free(values);
    char* text = nullptr;
    run.timed("gamma_bracket", [&] {
      check(vdc_gamma_bracket(spectrum.data(), spectrum.size(), grid, rounds, run.threads, nullptr, nullptr, &text));
      return 0;
    });
    Json doc = take_json(text);
    doc.erase("certified");
    print(doc);
    if (!doc["converged"].get<bool>()) exit_code = kExitFail;
  });
  std::uint64_t N = 40, cap = 64;
  auto* diffset = oracle->add_subcommand("diffset", "largest subset of 1..N avoiding differences f(j)");
  add_poly(diffset);
  diffset->add_option("--N", N, "interval length")->capture_default_str();
  diffset->add_option("--cap", cap, "largest N accepted")->capture_default_str();
  diffset->callback([&] {
    auto f = make_poly(poly);
    char* text = nullptr;
    run.timed("max_diff_avoiding", [&] { check(vdc_max_diff_avoiding(f.get(), N, cap, nullptr, nullptr, &text)); return 0; });
    print(take_json(text));
  });

  // ---- lower ----
  auto* lower = app.add_subcommand("lower", "power residue classes and the lower bound");
  lower->require_subcommand(1);
  std::uint64_t p = 7, beta = 1, mcap = 100000;
  int k = 3;
  auto* classes = lower->add_subcommand("classes", "cosets of the k-th powers mod p");
  classes->add_option("--p", p, "prime, 1 mod k")->capture_default_str();
  classes->add_option("--k", k, "odd degree")->capture_default_str();
  classes->add_option("--beta", beta, "leading coefficient")->capture_default_str();
  bool report_only = false;
  classes->add_flag("--report-only", report_only,
                    "record a violated class-sum bound in the output instead of failing");
  classes->callback([&] {
    char* text = nullptr;
    check(vdc_lower_classes(p, k, beta, report_only ? 0 : 1, &text));
    const Json out = take_json(text);
    print(out);
    if (!out.value("lemma_holds", true)) exit_code = kExitFail;
  });
  auto* bound = lower->add_subcommand("bound", "aggregated lower bound on b0");
  bound->add_option("--k", k, "odd degree")->capture_default_str();
  bound->add_option("--n", n, "frequency cap")->capture_default_str();
  bound->add_option("--mcap", mcap, "largest prime used")->capture_default_str();
  bound->callback([&] {
    char* text = nullptr;
    run.timed("gamma_lower_bound", [&] { check(vdc_lower_bound(n, k, mcap, nullptr, &text)); return 0; });
    print(take_json(text));
  });
  auto* lcheck = lower->add_subcommand("check", "per-prime inequality for a stored polynomial");
  add_poly(lcheck);
  lcheck->add_option("--witness", in_path, "witness JSON")->required();
  lcheck->add_option("--p", p, "prime, 1 mod k")->capture_default_str();
  lcheck->callback([&] {
    auto f = make_poly(poly);
    auto T = load_cosine(in_path);
    int pass = 0;
    char* text = nullptr;
    check(vdc_lower_check(T.get(), f.get(), p, &pass, &text));
    print(take_json(text));
    if (!pass) exit_code = kExitFail;
  });

  // ---- arcs ----
  auto* arcs = app.add_subcommand("arcs", "major or minor arc of a point");
  double x = 0.0, R = 0.0;
  std::int64_t num = 0;
  std::uint64_t den = 0, Q = 1;
  auto* xopt = arcs->add_option("--x", x, "point in [0, 1)");
  arcs->add_option("--num", num, "exact point num/den")->excludes(xopt);
  arcs->add_option("--den", den, "exact point num/den")->excludes(xopt);
  arcs->add_option("--Q", Q, "largest denominator")->required();
  arcs->add_option("--R", R, "width parameter, R > Q")->required();
  arcs->callback([&] {
    char* text = nullptr;
    if (den > 0) {
      check(vdc_classify_rational(num, den, Q, R, &text));
    } else {
      check(vdc_classify(x, Q, R, &text));
    }
    print(take_json(text));
  });

  try {
    app.parse(argc, argv);
    const CLI::App* leaf = &app;
    while (!leaf->get_subcommands().empty()) leaf = leaf->get_subcommands().front();
    run.subcommand = leaf->get_name();
    for (const CLI::App* parent = leaf->get_parent(); parent && parent != &app; parent = parent->get_parent()) {
      run.subcommand = parent->get_name() + " " + run.subcommand;
    }
    run.write_manifest(*leaf);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const CallError& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool verdict = e.status == VDC_ERR_VERIFICATION || e.status == VDC_ERR_NONCONVERGENCE;
    return verdict ? kExitFail : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
