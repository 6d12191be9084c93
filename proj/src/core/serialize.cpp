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

#include "core/serialize.hpp"

#include <charconv>

#include "core/error.hpp"

namespace vdc {

namespace {

std::uint64_t parse_u64(const std::string& s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  require(ec == std::errc{} && ptr == s.data() + s.size(), ErrorCode::kParse,
          "not an unsigned 64-bit integer: '" + s + "'");
  return v;
}

template <typename F>
auto guarded(F&& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    fail(ErrorCode::kParse, std::string("malformed document: ") + e.what());
  }
}

}  // namespace

Json parse_json(const std::string& text) {
  return guarded([&] { return Json::parse(text); });
}

Json cosine_to_json(const SparseCosinePolynomial& T) {
  Json terms = Json::array();
  for (const auto& t : T.terms()) terms.push_back({{"freq", std::to_string(t.freq)}, {"coeff", t.coeff}});
  return {{"b0", T.b0()}, {"terms", std::move(terms)}, {"meta", provenance_name(T.meta())}};
}

SparseCosinePolynomial cosine_from_json(const Json& j) {
  return guarded([&] {
    std::vector<CosineTerm> terms;
    for (const auto& t : j.at("terms")) {
      const auto& f = t.at("freq");
      const std::uint64_t freq = f.is_string() ? parse_u64(f.get<std::string>()) : f.get<std::uint64_t>();
      terms.push_back({freq, t.at("coeff").get<double>()});
    }
    const std::string meta = j.contains("meta") ? j.at("meta").get<std::string>() : "other";
    return SparseCosinePolynomial(j.at("b0").get<double>(), std::move(terms), provenance_from_name(meta));
  });
}

Json scheme_to_json(const AveragingScheme& sc) {
  Json ladders = Json::array();
  for (const auto& l : sc.ladders) ladders.push_back({{"p", l.p}, {"exponents", l.exponents}});
  Json moduli = Json::array();
  for (int j = 0; j <= sc.s; ++j) {
    const auto d = sc.modulus(j);
    moduli.push_back(d ? Json(std::to_string(*d)) : Json(nullptr));
  }
  return {{"delta", sc.delta},   {"c0", sc.c0},         {"alpha", sc.alpha},
          {"beta", sc.beta},     {"lambda", sc.lambda}, {"Lambda", sc.Lambda},
          {"s", sc.s},           {"l", sc.l},           {"m", sc.m},
          {"pstar", sc.pstar},   {"astar", sc.astar},   {"c1", sc.c1},
          {"c2", sc.c2},         {"c3", sc.c3},         {"c4", sc.c4},
          {"desk", sc.desk},     {"moduli", std::move(moduli)},
          {"log_moduli", sc.log_moduli},
          {"prime_count", sc.ladders.size()},
          {"ladders", std::move(ladders)}};
}

AveragingScheme scheme_from_json(const Json& j) {
  return guarded([&] {
    AveragingScheme sc;
    sc.delta = j.at("delta").get<double>();
    sc.c0 = j.at("c0").get<double>();
    sc.alpha = j.at("alpha").get<double>();
    sc.beta = j.at("beta").get<double>();
    sc.lambda = j.at("lambda").get<double>();
    sc.Lambda = j.at("Lambda").get<double>();
    sc.s = j.at("s").get<int>();
    sc.l = j.at("l").get<int>();
    sc.m = j.at("m").get<std::uint64_t>();
    sc.pstar = j.at("pstar").get<std::uint64_t>();
    sc.astar = j.at("astar").get<int>();
    sc.c1 = j.at("c1").get<double>();
    sc.c2 = j.at("c2").get<double>();
    sc.c3 = j.at("c3").get<double>();
    sc.c4 = j.at("c4").get<double>();
    sc.desk = j.at("desk").get<bool>();
    sc.log_moduli = j.at("log_moduli").get<std::vector<double>>();
    for (const auto& l : j.at("ladders")) {
      PrimeLadder ladder{l.at("p").get<std::uint64_t>(), l.at("exponents").get<std::vector<int>>()};
      require(ladder.exponents.size() == static_cast<std::size_t>(sc.s) + 1, ErrorCode::kParse,
              "ladder length does not match s");
      require(sc.ladders.empty() || sc.ladders.back().p < ladder.p, ErrorCode::kParse,
              "ladders must be sorted by prime");
      sc.ladders.push_back(std::move(ladder));
    }
    require(sc.log_moduli.size() == static_cast<std::size_t>(sc.s) + 1, ErrorCode::kParse,
            "log_moduli length does not match s");
    return sc;
  });
}

Json to_json(const OddPolynomial& f) {
  return {{"literal", f.literal()},
          {"polynomial", f.to_string()},
          {"degree", f.degree()},
          {"least_index", f.least_index()},
          {"content", f.content().str()},
          {"leading", f.leading().str()}};
}

Json to_json(const CompleteSumResult& r) {
  return {{"q", r.q}, {"a", r.a}, {"d", r.d}, {"value", r.value}, {"residual_imag", r.residual_imag}};
}

Json to_json(const C0Estimate& e, bool with_rows) {
  Json out = {{"c0", e.c0}, {"argmax_q", e.argmax_q}, {"argmax_a", e.argmax_a}, {"q_max", e.q_max}};
  if (with_rows) {
    Json rows = Json::array();
    for (const auto& r : e.rows) {
      rows.push_back({{"q", r.q}, {"max_ratio", r.max_ratio}, {"argmax_a", r.argmax_a},
                      {"running_c0", r.running_c0}});
    }
    out["rows"] = std::move(rows);
  }
  return out;
}

Json to_json(const ArcLocation& loc) {
  Json out = {{"kind", loc.kind == ArcKind::kMajor ? "major" : "minor"}, {"Q", loc.Q}, {"R", loc.R}};
  if (loc.kind == ArcKind::kMajor) {
    out["a"] = loc.a;
    out["q"] = loc.q;
    out["kappa"] = loc.kappa;
  }
  return out;
}

Json to_json(const SchemeVerdict& v) {
  return {{"q_max", v.q_max}, {"worst_q", v.worst_q}, {"worst_value", v.worst_value}, {"pass", v.pass}};
}

Json to_json(const LemmaSuiteReport& r) {
  return {{"checks", r.checks}, {"failures", r.failures}, {"worst_margin", r.worst_margin}};
}

Json to_json(const ReductionCertificate& c) {
  return {{"p", c.p},
          {"k", c.k},
          {"termwise", c.termwise},
          {"full_sum", c.full_sum},
          {"prime_sum", c.prime_sum},
          {"min_prime_sum", c.min_prime_sum}};
}

namespace {
Json log_json(const LogMagnitude& m) {
  return {{"log", m.log_value}, {"mantissa", m.mantissa()}, {"exponent10", m.exponent10()},
          {"text", m.to_string()}};
}
}  // namespace

Json to_json(const PaperParameters& p) {
  return {{"delta", p.delta},
          {"k", p.k},
          {"c5", p.constants.c5},
          {"c6", p.constants.c6},
          {"c7", p.constants.c7},
          {"c8", p.c8},
          {"dstar", log_json(p.dstar)},
          {"n_exponent", p.n_exponent},
          {"Q_exponent", p.Q_exponent},
          {"R_exponent", p.R_exponent},
          {"n", log_json(p.n)},
          {"Q", log_json(p.Q)},
          {"R", log_json(p.R)},
          {"predicted_N", log_json(p.predicted_N)},
          {"predicted_b0_scale", p.predicted_b0_scale},
          {"Q_below_R", p.q_below_r}};
}

Json to_json(const ScanResult& s) {
  return {{"grid_points", s.grid_points}, {"grid_min", s.grid_min},
          {"grid_argmin", s.grid_argmin}, {"refined_min", s.refined_min},
          {"refined_argmin", s.refined_argmin}, {"undersampled", s.undersampled}};
}

Json to_json(const WitnessReport& r) {
  Json out = {{"delta", r.delta},
              {"n", r.n},
              {"b0", r.b0},
              {"coeff_sum", r.coeff_sum},
              {"max_frequency", std::to_string(r.max_frequency)},
              {"term_count", r.term_count},
              {"moduli", r.moduli},
              {"level_terms", r.level_terms},
              {"coefficients_nonnegative", r.coefficients_nonnegative},
              {"spectrum_in_values", r.spectrum_in_values},
              {"desk", r.desk},
              {"caveat", r.caveat}};
  if (r.scan) out["scan"] = to_json(*r.scan);
  if (r.scheme_verdict) out["scheme_verdict"] = to_json(*r.scheme_verdict);
  return out;
}

Json to_json(const DeltaSearch& d) {
  return {{"delta", d.delta},       {"probe_h_min", d.probe_h_min},
          {"max_frequency", std::to_string(d.max_frequency)},
          {"scan_min", d.scan_min}, {"confirmed", d.confirmed},
          {"scale", d.scale}};
}

Json to_json(const GammaBracket& b) {
  Json spectrum = Json::array();
  for (auto d : b.spectrum) spectrum.push_back(std::to_string(d));
  return {{"spectrum", std::move(spectrum)},
          {"lower", b.lower},
          {"upper", b.upper},
          {"grid_points", b.grid_points},
          {"rounds", b.rounds},
          {"converged", b.converged},
          {"violation", b.violation},
          {"certified", cosine_to_json(b.certified)}};
}

Json to_json(const DiffAvoidingSet& s) {
  return {{"N", s.N}, {"size", s.size()}, {"set", s.elements}, {"nodes", s.nodes}};
}

Json to_json(const ResidueClassSystem& sys) {
  return {{"p", sys.p},
          {"k", sys.k},
          {"beta", sys.beta},
          {"s", sys.s},
          {"classes", sys.classes},
          {"sums", sys.sums},
          {"negative_index", sys.negative_index},
          {"lemma_bound", sys.lemma_bound},
          {"lemma_holds", sys.lemma_holds}};
}

Json to_json(const PrimeInequality& r) {
  return {{"p", r.p},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"u_bound", r.u_bound},
          {"sample_sum", r.sample_sum},
          {"class_min", r.class_min},
          {"class_bound", r.class_bound},
          {"lemma_holds", r.lemma_holds},
          {"pass", r.pass},
          {"u_pass", r.u_pass},
          {"class_pass", r.class_pass}};
}

Json to_json(const LowerBound& b) {
  return {{"bound", b.bound}, {"best_m", b.best_m}, {"primes_used", b.primes_used},
          {"totient_k", b.totient_k}};
}

}  // namespace vdc
