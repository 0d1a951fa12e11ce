// Copyright 2026 The bmw-teleport Authors
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

#include "bmw/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>

#include "bmw/entangle.hpp"
#include "bmw/relations.hpp"
#include "bmw/tangle.hpp"
#include "bmw/tbqc.hpp"
#include "bmw/teleport.hpp"

namespace bmw {

using json = nlohmann::ordered_json;

namespace {

std::string fixed(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x + 0.0);
  return buf;
}

std::string sci(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

json complex_json(cplx z) { return json::array({residual_string(z.real()), residual_string(z.imag())}); }

json config_json(const RunConfig& cfg) {
  json c;
  c["tool_version"] = kToolVersion;
  c["kind"] = cfg.kind;
  c["phi"] = residual_string(cfg.phi);
  c["sites"] = cfg.sites;
  c["seed"] = cfg.seed;
  c["tolerance"] = residual_string(cfg.tolerance);
  c["basis"] = cfg.basis;
  c["mn"] = cfg.mn;
  c["class"] = cfg.solution_class;
  c["gate"] = cfg.gate;
  c["trials"] = cfg.trials;
  c["t_convention"] = cfg.t_convention == TConvention::Standard ? "standard" : "literal";
  return c;
}

std::pair<int, int> parse_mn(const std::string& mn) {
  if (mn.size() != 2 || (mn[0] != '0' && mn[0] != '1') || (mn[1] != '0' && mn[1] != '1')) {
    throw UsageError("--mn must be one of 00, 01, 10, 11");
  }
  return {mn[0] - '0', mn[1] - '0'};
}

json relation_json(const RelationReport& r) {
  json j;
  j["name"] = std::string(to_string(r.family));
  j["pass"] = r.pass;
  j["sites"] = r.site_count;
  j["max_residual"] = residual_string(r.max_residual);
  json entries = json::array();
  for (const auto& e : r.entries) entries.push_back({{"id", e.id}, {"residual", residual_string(e.residual)}});
  j["entries"] = std::move(entries);
  j["summary"] = std::to_string(r.entries.size()) + " relations, max residual " + sci(r.max_residual);
  return j;
}

json residual_result(const std::string& name, double residual, double tol) {
  json j;
  j["name"] = name;
  j["pass"] = residual <= tol;
  j["residual"] = residual_string(residual);
  j["summary"] = "residual " + sci(residual);
  return j;
}

json constraint_json(const std::string& name, const ConstraintResiduals& r, double tol) {
  json j;
  j["name"] = name;
  j["pass"] = r.max() <= tol;
  json eqs = json::array();
  for (int eq = 0; eq < 4; ++eq) eqs.push_back(residual_string(r.max_equation(eq)));
  j["equation_max"] = std::move(eqs);
  j["max_residual"] = residual_string(r.max());
  j["summary"] = "64 cells, max residual " + sci(r.max());
  return j;
}

std::vector<Ket> seeded_probes(std::uint64_t seed) {
  Sampler s(seed);
  return probe_states(s, 2);
}

Mat named_gate(const RunConfig& cfg) {
  const std::string& g = cfg.gate;
  if (g == "B") return yb_gate(cfg.phi);
  if (g == "B0") return yb_clifford();
  if (g == "I") return identity(4);
  if (g == "CZ") return gates::cz();
  if (g == "CNOT") return gates::cnot();
  if (g == "SWAP") return gates::swap();
  throw UsageError("unknown two-qubit gate '" + g + "' (expected B, B0, I, CZ, CNOT, SWAP)");
}

Mat single_gate(const RunConfig& cfg, Sampler& sampler) {
  if (cfg.gate == "random") return sampler.haar_unitary(2);
  try {
    return elementary(cfg.gate, cfg.phi, cfg.t_convention);
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown single-qubit gate '" + cfg.gate + "'");
  }
}

// ---------------------------------------------------------------- verify

void verify_bmw(const RunConfig& cfg, ReportDocument& doc) {
  const Mat e = tl_matrix(cfg.phi);
  const Mat b = yb_gate(cfg.phi);
  const BmwParams p = derive_params(b);
  const BmwParams ref = reference_params();
  json params;
  params["name"] = "parameters";
  const double err = std::max({std::abs(p.sigma - ref.sigma), std::abs(p.w - ref.w), std::abs(p.d - ref.d),
                               std::abs(p.lambdas[1] * p.lambdas[2] + 1.0)});
  params["pass"] = err <= cfg.tolerance;
  params["sigma"] = complex_json(p.sigma);
  params["w"] = complex_json(p.w);
  params["d"] = residual_string(p.d);
  params["max_deviation"] = residual_string(err);
  params["summary"] = "sigma=" + format_complex(p.sigma) + " w=" + format_complex(p.w) + " d=" + fixed(p.d);
  doc.add(std::move(params));
  for (const auto& r : check_bmw(e, b, p, cfg.sites, cfg.tolerance)) doc.add(relation_json(r));
}

void verify_brauer(const RunConfig& cfg, ReportDocument& doc) {
  doc.add(relation_json(check_brauer(cfg.sites, cfg.tolerance)));
  Sampler s(cfg.seed);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) worst = std::max(worst, swap_teleport_residual(s.haar_ket(2)));
  doc.add(residual_result("swap-teleportation", worst, cfg.tolerance));
}

void verify_theorem1(const RunConfig& cfg, ReportDocument& doc) {
  doc.add(constraint_json("theorem1", theorem1_residuals(cfg.phi), cfg.tolerance));
  const auto c = corollary1_check(cfg.phi, seeded_probes(cfg.seed));
  for (int k = 0; k < 4; ++k) {
    doc.add(residual_result("corollary1.eq" + std::to_string(k + 1), c[static_cast<std::size_t>(k)],
                            cfg.tolerance));
  }
}

std::vector<SolutionClass> selected_classes(const RunConfig& cfg, int m, int n) {
  auto classes = solve_pauli_eigenvalues(m, n);
  if (cfg.solution_class == 0) return classes;
  for (const auto& c : classes) {
    if (c.id == cfg.solution_class) return {c};
  }
  throw UsageError("--class " + std::to_string(cfg.solution_class) + " does not exist for mn=" + cfg.mn);
}

void verify_theorem2(const RunConfig& cfg, ReportDocument& doc) {
  const auto [m, n] = parse_mn(cfg.mn);
  if (cfg.basis == "bell-like") {
    const SpectralData lam = yb_spectral_data();
    const EigenAssignment mu{lam.lambda};
    doc.add(constraint_json("theorem2.bell-like", theorem2_residuals(UnitaryBasis::bell_like(cfg.phi), mu, 0, 0),
                            cfg.tolerance));
    return;
  }
  if (cfg.basis != "pauli") throw UsageError("--basis must be pauli or bell-like");
  const UnitaryBasis basis = UnitaryBasis::pauli();
  for (const auto& cls : selected_classes(cfg, m, n)) {
    const EigenAssignment mu = cls.at(cfg.phi);
    json j = constraint_json("theorem2.class" + std::to_string(cls.id), theorem2_residuals(basis, mu, m, n),
                             cfg.tolerance);
    const double sum_err = std::abs(eigenvalue_sum(mu, m, n) - 1.0);
    j["formula"] = cls.formula();
    j["eigenvalue_sum_residual"] = residual_string(sum_err);
    j["pass"] = j["pass"].get<bool>() && sum_err <= cfg.tolerance;
    doc.add(std::move(j));
  }
}

json tangle_vs_bmw(const Mat& e, const Mat& g, double tol) {
  const Representation rep = build_rep(e, g, 3);
  json j;
  j["tangle_relations_hold"] = check_tangle(rep, 2.0, tol).pass;
  bool full = false;
  try {
    const BmwParams p = derive_params(g);
    full = true;
    for (const auto& r : check_bmw(e, g, p, 3, tol)) full = full && r.pass;
  } catch (const std::domain_error&) {
    full = false;
  }
  j["bmw_relations_hold"] = full;
  return j;
}

void verify_theorem3(const RunConfig& cfg, ReportDocument& doc) {
  const auto [m, n] = parse_mn(cfg.mn);
  {
    const UnitaryBasis basis = UnitaryBasis::bell_like(cfg.phi);
    const Mat b = yb_gate(cfg.phi);
    const auto coeffs = GateCoefficients::from_gate(b, basis);
    json j = constraint_json("theorem3.braid-matrix", theorem3_residuals(coeffs, basis, 0, 0), cfg.tolerance);
    j.update(tangle_vs_bmw(tl_matrix(cfg.phi), b, cfg.tolerance));
    doc.add(std::move(j));
  }
  const UnitaryBasis pauli = UnitaryBasis::pauli();
  for (const auto& cls : selected_classes(cfg, m, n)) {
    const auto coeffs = GateCoefficients::diagonal(cls.at(cfg.phi));
    json j = constraint_json("theorem3.class" + std::to_string(cls.id), theorem3_residuals(coeffs, pauli, m, n),
                             cfg.tolerance);
    const BuiltRepresentation rep = build_representation(cls, cfg.phi);
    j.update(tangle_vs_bmw(rep.e_tilde, rep.u, cfg.tolerance));
    doc.add(std::move(j));
  }
}

void verify_appendix_b(const RunConfig& cfg, ReportDocument& doc) {
  const double dec = max_abs_diff(factor_product(decompose_b(cfg.phi)), yb_gate(cfg.phi));
  doc.add(residual_result("cz-decomposition", dec, cfg.tolerance));
  const AppendixBResult r = appendix_b_decompositions(cfg.phi);
  doc.add(residual_result("projector-form", r.projector_form, cfg.tolerance));
  doc.add(residual_result("u-tilde-unitarity", r.u_tilde_unitarity, cfg.tolerance));
  doc.add(residual_result("five-term-form", r.five_term_form, cfg.tolerance));
}

void verify_appendix_d(const RunConfig& cfg, ReportDocument& doc) {
  const UnitaryBasis basis = UnitaryBasis::pauli();
  double worst = 0.0, worst_general = 0.0;
  int instances = 0;
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      for (const auto& cls : solve_pauli_eigenvalues(m, n)) {
        const EigenAssignment mu = cls.at(cfg.phi);
        worst = std::max(worst, skew_transpose_agreement(basis, mu, m, n));
        worst_general = std::max(worst_general,
                                 skew_transpose_agreement(GateCoefficients::diagonal(mu), basis, m, n));
        ++instances;
      }
    }
  }
  json a = residual_result("simplified-vs-original", worst, kArithmeticTol);
  a["instances"] = instances;
  doc.add(std::move(a));
  doc.add(residual_result("general-simplified-vs-original", worst_general, kArithmeticTol));
  Sampler s(cfg.seed);
  double def = 0.0;
  for (int t = 0; t < 20; ++t) {
    const Mat b = s.gaussian_matrix(2, 2);
    const Mat c = s.gaussian_matrix(2, 2);
    def = std::max(def, skew_transpose_definition_residual(b, c));
  }
  doc.add(residual_result("skew-transpose-definition", def, kArithmeticTol));
}

// -------------------------------------------------------------- teleport

struct FidelityStats {
  double min_fidelity = 1.0;
  double max_probability_error = 0.0;
  std::map<std::string, int> histogram;
  std::map<std::string, std::string> corrections;
};

json stats_json(const std::string& name, const FidelityStats& st, int trials, double tol) {
  json j;
  j["name"] = name;
  j["trials"] = trials;
  j["min_fidelity"] = residual_string(st.min_fidelity);
  j["max_probability_error"] = residual_string(st.max_probability_error);
  json hist = json::object();
  for (const auto& [k, v] : st.histogram) hist[k] = v;
  j["histogram"] = std::move(hist);
  json corr = json::object();
  for (const auto& [k, v] : st.corrections) corr[k] = v;
  j["corrections"] = std::move(corr);
  j["pass"] = st.min_fidelity >= 1.0 - tol && st.max_probability_error <= tol;
  j["summary"] = "min fidelity " + fixed(st.min_fidelity, 12) + ", probability error " +
                 sci(st.max_probability_error);
  return j;
}

std::string pauli_label(const Mat& m) {
  const auto p = PauliString::recognize(m);
  return p ? p->to_string() : std::string("non-Pauli");
}

void record(FidelityStats& st, const TeleportResult& r, const std::string& label, double expected_p) {
  st.min_fidelity = std::min(st.min_fidelity, r.fidelity);
  for (double p : r.probabilities) st.max_probability_error = std::max(st.max_probability_error, std::abs(p - expected_p));
  const std::string key = std::to_string(r.outcome.i) + std::to_string(r.outcome.j);
  ++st.histogram[label + key];
  st.corrections.emplace(label + key, pauli_label(r.correction));
}

void teleport_report(const RunConfig& cfg, ReportDocument& doc) {
  Sampler sampler(cfg.seed);
  FidelityStats st;
  const std::string& v = cfg.kind;
  if (v == "standard") {
    for (int t = 0; t < cfg.trials; ++t) record(st, teleport_standard(sampler.haar_ket(2), sampler), "", 0.25);
  } else if (v == "bell-like") {
    for (int t = 0; t < cfg.trials; ++t) {
      record(st, teleport_bell_like(sampler.haar_ket(2), cfg.phi, sampler), "", 0.25);
    }
  } else if (v == "yang-baxter") {
    for (int t = 0; t < cfg.trials; ++t) {
      const int kl = sampler.choose(std::array<double, 4>{0.25, 0.25, 0.25, 0.25});
      const Ket a = sampler.haar_ket(2);
      const auto r = teleport_with_yb(a, kl / 2, kl % 2, cfg.phi, sampler);
      record(st, r, "kl=" + std::to_string(kl / 2) + std::to_string(kl % 2) + ",ij=", 0.25);
    }
  } else if (v == "gate") {
    if (cfg.gate.empty()) throw UsageError("teleport gate needs --gate");
    const Mat u = single_gate(cfg, sampler);
    for (int t = 0; t < cfg.trials; ++t) {
      const int kl = sampler.choose(std::array<double, 4>{0.25, 0.25, 0.25, 0.25});
      const Ket a = sampler.haar_ket(2);
      const auto r = teleport_single_gate(u, a, kl / 2, kl % 2, sampler);
      record(st, r, "kl=" + std::to_string(kl / 2) + std::to_string(kl % 2) + ",ij=", 0.25);
    }
    // Correction structure: R(U) over all 16 index tuples.
    bool all_clifford = true, all_pauli = true;
    for (int code = 0; code < 16; ++code) {
      const Mat r = r_gate(u, code >> 3 & 1, code >> 2 & 1, code >> 1 & 1, code & 1);
      all_clifford = all_clifford && clifford_check(r, 1, cfg.tolerance).is_clifford;
      all_pauli = all_pauli && PauliString::recognize(r, cfg.tolerance).has_value();
    }
    json s = stats_json("teleport.gate", st, cfg.trials, cfg.tolerance);
    s["gate"] = cfg.gate;
    s["gate_is_clifford"] = clifford_check(u, 1, cfg.tolerance).is_clifford;
    s["corrections_are_clifford"] = all_clifford;
    s["corrections_are_pauli"] = all_pauli;
    s["summary"] = s["summary"].get<std::string>() + (all_clifford ? ", R(U) Clifford" : ", R(U) not Clifford");
    doc.add(std::move(s));
    return;
  } else if (v == "two-qubit") {
    double min_f = 1.0, p_err = 0.0;
    std::map<std::string, int> hist;
    for (int t = 0; t < cfg.trials; ++t) {
      const int code = sampler.choose(std::array<double, 16>{
          1. / 16, 1. / 16, 1. / 16, 1. / 16, 1. / 16, 1. / 16, 1. / 16, 1. / 16,
          1. / 16, 1. / 16, 1. / 16, 1. / 16, 1. / 16, 1. / 16, 1. / 16, 1. / 16});
      const Ket ab = sampler.haar_ket(4);
      const auto r = teleport_two_qubit(ab, code >> 3 & 1, code >> 2 & 1, code >> 1 & 1, code & 1, sampler);
      min_f = std::min(min_f, r.fidelity);
      for (double p : r.probabilities) p_err = std::max(p_err, std::abs(p - 1.0 / 16));
      std::string key;
      for (int b : r.outcome) key += std::to_string(b);
      ++hist[key];
    }
    FidelityStats fs;
    fs.min_fidelity = min_f;
    fs.max_probability_error = p_err;
    fs.histogram = std::move(hist);
    json s = stats_json("teleport.two-qubit", fs, cfg.trials, cfg.tolerance);
    s["layout"] = "1:alpha 2-3:resource A 4-5:resource B 6:beta; measured (1,2) and (5,6)";
    s["bracketing"] = "(B0 x B0 x B0)(1 x B0 x B0 x 1)";
    Sampler probe(cfg.seed);
    s["preparation_line_worst_infidelity"] =
        residual_string(bracketing_infidelity(Bracketing::PreparationLine, probe, 1));
    doc.add(std::move(s));
    return;
  } else {
    throw UsageError("unknown teleport variant '" + v + "'");
  }
  doc.add(stats_json("teleport." + v, st, cfg.trials, cfg.tolerance));
}

}  // namespace

void RunConfig::validate() const {
  if (!(tolerance > 0.0)) throw UsageError("tolerance must be positive");
  if (sites < 2 || sites > kMaxSites) throw UsageError("--sites must lie in [2, 10]");
  if (trials < 1) throw UsageError("--trials must be positive");
  if (format != "text" && format != "json") throw UsageError("--format must be text or json");
  if (!std::isfinite(phi)) throw UsageError("--phi must be finite");
}

double default_tolerance() {
  if (const char* env = std::getenv("BMW_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0 && std::isfinite(v)) return v;
  }
  return kRelationTol;
}

std::string residual_string(double r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.14e", r + 0.0);
  return buf;
}

void ReportDocument::add(json result) {
  pass = pass && result.value("pass", false);
  results.push_back(std::move(result));
}

std::string ReportDocument::to_json() const {
  json doc;
  doc["command"] = command;
  doc["config"] = config;
  doc["results"] = results;
  doc["pass"] = pass;
  return doc.dump(2) + "\n";
}

std::string ReportDocument::to_text() const {
  std::ostringstream out;
  out << "bmwtool " << kToolVersion << "  " << command << "\n";
  for (const auto& r : results) {
    out << (r.value("pass", false) ? "  PASS  " : "  FAIL  ") << r.value("name", std::string("?")) << ": "
        << r.value("summary", std::string()) << "\n";
  }
  out << (pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

ReportDocument run_verify(const RunConfig& cfg) {
  ReportDocument doc;
  doc.command = "verify " + cfg.kind;
  doc.config = config_json(cfg);
  const std::string& k = cfg.kind;
  if (k == "bmw") {
    verify_bmw(cfg, doc);
  } else if (k == "brauer") {
    verify_brauer(cfg, doc);
  } else if (k == "theorem1") {
    verify_theorem1(cfg, doc);
  } else if (k == "theorem2") {
    verify_theorem2(cfg, doc);
  } else if (k == "theorem3") {
    verify_theorem3(cfg, doc);
  } else if (k == "appendixB") {
    verify_appendix_b(cfg, doc);
  } else if (k == "appendixD") {
    verify_appendix_d(cfg, doc);
  } else {
    throw UsageError("unknown verify kind '" + k + "'");
  }
  return doc;
}

ReportDocument run_teleport(const RunConfig& cfg) {
  ReportDocument doc;
  doc.command = "teleport " + cfg.kind;
  doc.config = config_json(cfg);
  teleport_report(cfg, doc);
  return doc;
}

ReportDocument run_solve(const RunConfig& cfg) {
  if (cfg.basis != "pauli") throw UsageError("solve supports --basis pauli only");
  const auto [m, n] = parse_mn(cfg.mn);
  ReportDocument doc;
  doc.command = "solve";
  doc.config = config_json(cfg);
  const UnitaryBasis basis = UnitaryBasis::pauli();
  for (const auto& cls : selected_classes(cfg, m, n)) {
    json j;
    j["name"] = "class" + std::to_string(cls.id);
    j["mn"] = cfg.mn;
    j["epsilon"] = cls.epsilon;
    j["formula"] = cls.formula();
    const EigenAssignment mu = cls.at(cfg.phi);
    json sampled = json::array();
    for (int a = 0; a < 4; ++a) sampled.push_back(complex_json(mu[a]));
    j["mu"] = std::move(sampled);
    double worst = 0.0, sum_err = 0.0;
    for (int s = 0; s < 10; ++s) {
      const double phi = 0.1 + 0.6 * s;
      const EigenAssignment sm = cls.at(phi);
      worst = std::max(worst, theorem2_residuals(basis, sm, m, n).max());
      sum_err = std::max(sum_err, std::abs(eigenvalue_sum(sm, m, n) - 1.0));
    }
    j["max_constraint_residual"] = residual_string(worst);
    j["eigenvalue_sum_residual"] = residual_string(sum_err);
    const BuiltRepresentation rep = build_representation(cls, cfg.phi);
    const auto pe = match_printed(rep.e_tilde, cfg.phi);
    const auto pu = match_printed(rep.u, cfg.phi);
    const auto label = [](const std::optional<PrintedForm>& f) {
      if (!f) return std::string("none");
      std::string s = f->name + "(eps=" + std::to_string(f->epsilon);
      if (f->pm) s += f->pm > 0 ? ",+" : ",-";
      return s + ")";
    };
    j["printed_projector"] = label(pe);
    j["printed_gate"] = label(pu);
    j["pass"] = worst <= cfg.tolerance && sum_err <= cfg.tolerance && pe.has_value() && pu.has_value();
    j["summary"] = cls.formula() + " -> " + label(pe) + ", " + label(pu);
    doc.add(std::move(j));
  }
  return doc;
}

ReportDocument run_analyze(const RunConfig& cfg) {
  ReportDocument doc;
  doc.command = "analyze";
  doc.config = config_json(cfg);
  if (cfg.gate.empty()) throw UsageError("analyze needs --gate");
  const Mat u = named_gate(cfg);
  const CanonicalParams p = canonical_params(u);
  const double ep = entangling_power(p);
  json j;
  j["name"] = "analyze." + cfg.gate;
  j["canonical"] = json::array({residual_string(p.a), residual_string(p.b), residual_string(p.c)});
  j["canonical_over_pi"] = json::array({fixed(p.a / kPi), fixed(p.b / kPi), fixed(p.c / kPi)});
  j["entangling_power"] = residual_string(ep);
  j["pass"] = true;
  j["summary"] = "(a,b,c)/pi = (" + fixed(p.a / kPi) + ", " + fixed(p.b / kPi) + ", " + fixed(p.c / kPi) +
                 "), e_p = " + fixed(ep);
  doc.add(std::move(j));
  if (cfg.gate == "B") {
    const double dec = max_abs_diff(factor_product(decompose_b(cfg.phi)), u);
    doc.add(residual_result("cz-decomposition", dec, cfg.tolerance));
    const AppendixBResult r = appendix_b_decompositions(cfg.phi);
    doc.add(residual_result("projector-form", r.projector_form, cfg.tolerance));
    doc.add(residual_result("five-term-form", r.five_term_form, cfg.tolerance));
  }
  return doc;
}

ReportDocument run(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.command == "verify") return run_verify(cfg);
  if (cfg.command == "teleport") return run_teleport(cfg);
  if (cfg.command == "solve") return run_solve(cfg);
  if (cfg.command == "analyze") return run_analyze(cfg);
  throw UsageError("unknown command '" + cfg.command + "'");
}

}  // namespace bmw
