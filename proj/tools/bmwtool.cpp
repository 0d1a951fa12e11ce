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

// bmwtool: verify relations, simulate teleportation, solve eigenvalue
// constraints and analyze gates. Exit codes: 0 pass, 1 fail, 2 usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "bmw/report.hpp"

namespace {

void add_common(CLI::App* sub, bmw::RunConfig& cfg, std::string& t_conv) {
  sub->add_option("--phi", cfg.phi, "Free phase parameter phi");
  sub->add_option("--sites", cfg.sites, "Number of tensor sites n (2..10)");
  sub->add_option("--seed", cfg.seed, "Seed for the random sampler");
  sub->add_option("--tol", cfg.tolerance, "Residual tolerance (overrides BMW_TOL)");
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--output", cfg.output, "Write the report to this file");
  sub->add_option("--basis", cfg.basis, "Unitary basis")->check(CLI::IsMember({"pauli", "bell-like"}));
  sub->add_option("--mn", cfg.mn, "Constraint labels m,n")->check(CLI::IsMember({"00", "01", "10", "11"}));
  sub->add_option("--class", cfg.solution_class, "Solution class id (0 = all)");
  sub->add_option("--gate", cfg.gate, "Gate name");
  sub->add_option("--trials", cfg.trials, "Number of random trials");
  sub->add_option("--t-convention", t_conv, "Phase of the T gate")
      ->check(CLI::IsMember({"standard", "literal"}));
}

}  // namespace

int main(int argc, char** argv) {
  bmw::RunConfig cfg;
  cfg.tolerance = bmw::default_tolerance();
  std::string t_conv = "standard";

  CLI::App app{"Braid-algebra teleportation toolkit"};
  app.set_version_flag("--version", std::string(bmw::kToolVersion));
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Check algebraic relations and identities");
  verify->add_option("kind", cfg.kind, "bmw | brauer | theorem1 | theorem2 | theorem3 | appendixB | appendixD")
      ->required()
      ->check(CLI::IsMember({"bmw", "brauer", "theorem1", "theorem2", "theorem3", "appendixB", "appendixD"}));
  auto* teleport = app.add_subcommand("teleport", "Simulate a teleportation protocol");
  teleport->add_option("variant", cfg.kind, "standard | bell-like | yang-baxter | gate | two-qubit")
      ->required()
      ->check(CLI::IsMember({"standard", "bell-like", "yang-baxter", "gate", "two-qubit"}));
  auto* solve = app.add_subcommand("solve", "Enumerate Pauli-basis eigenvalue solutions");
  auto* analyze = app.add_subcommand("analyze", "Canonical parameters and entangling power of a gate");
  for (auto* sub : {verify, teleport, solve, analyze}) add_common(sub, cfg, t_conv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.t_convention = t_conv == "literal" ? bmw::TConvention::Literal : bmw::TConvention::Standard;

  try {
    const bmw::ReportDocument doc = bmw::run(cfg);
    const std::string body = cfg.format == "json" ? doc.to_json() : doc.to_text();
    if (cfg.output) {
      std::ofstream out(*cfg.output, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot open " << *cfg.output << "\n";
        return 2;
      }
      out << body;
    } else {
      std::cout << body;
    }
    return doc.pass ? 0 : 1;
  } catch (const bmw::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
