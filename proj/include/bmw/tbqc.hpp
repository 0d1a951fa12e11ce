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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bmw/teleport.hpp"
#include "bmw/tensor.hpp"

namespace bmw {

/// i^phase_power times a tensor product of Hermitian Paulis.
/// Factors are 'I', 'X', 'Y', 'Z'; 'Y' is the Hermitian [[0,-i],[i,0]].
struct PauliString {
  int phase_power = 0;  // 0..3
  std::string factors;

  Mat matrix() const;
  /// E.g. "-XZ", "+iIY".
  std::string to_string() const;
  bool operator==(const PauliString& other) const = default;

  static PauliString parse(std::string_view text);
  /// The Pauli string equal to `m` within `tol`, if any. `m` must be 2^n x 2^n.
  static std::optional<PauliString> recognize(const Mat& m, double tol = kRelationTol);
};

struct CliffordRow {
  std::string generator;  // e.g. "XI"
  std::optional<PauliString> image;
};

struct CliffordReport {
  bool is_clifford = false;
  std::vector<CliffordRow> rows;  // X then Z generator for each qubit
};

/// Conjugates every single-qubit X and Z generator by `u`. Throws
/// std::invalid_argument unless `u` is a unitary on n_qubits <= 3 qubits.
CliffordReport clifford_check(const Mat& u, int n_qubits, double tol = kRelationTol);

/// K = (-1)^{jl+ij+k} X^{j+k+1} Z^{i+l+1}.
Mat k_gate(int i, int j, int k, int l);
/// L = (-1)^{ik+ij+l} X^{i+l+1} Z^{j+k+1}.
Mat l_gate(int i, int j, int k, int l);
/// R(U) = U K U^dag.
Mat r_gate(const Mat& u, int i, int j, int k, int l);
/// (-1)^{jl+ij+k} Z^{j+k+1} X^{i+l+1}.
Mat r_h_closed(int i, int j, int k, int l);
/// (-1)^{jl+ij+k} ((X - iY)/sqrt2)^{j+k+1} Z^{i+l+1} with Y = ZX and T = diag(1, e^{i pi/4}).
Mat r_t_closed(int i, int j, int k, int l);

/// max over probes and (k, l) of |(B0 x 1)(1 x B0)|a>|kl> - 1/2 sum |ij> K|a>|.
double b0_teleport_residual(const std::vector<Ket>& probes);
/// max over probes and (k, l) of |(1 x B0)(B0 x 1)|kl>|a> - 1/2 sum L|a> |ij>|.
double b0_inverse_residual(const std::vector<Ket>& probes);

/// Runs (B0 x 1)(1 x 1 x U)(1 x B0)|a>|kl>, measures |ij>, corrects with
/// R(U)^dag. The fidelity is against U|a>. Throws unless U is a 2x2 unitary.
TeleportResult teleport_single_gate(const Mat& u, const Ket& alpha, int k, int l, Sampler& sampler);

/// Q = (-1)^{(k1+1)(i1+l1+1)+1} X^{i1+i2+l1+l2} Z^{j2+k2+1}.
Mat q_closed(int i1, int j1, int k1, int l1, int i2, int j2, int k2, int l2);
/// P = (-1)^{i2(k2+j2+1)+1} Z^{i1+l1+1} X^{j1+k1+j2+k2}.
Mat p_closed(int i1, int j1, int k1, int l1, int i2, int j2, int k2, int l2);
/// B0 (K_{i1 j1 k1 l1} (x) L_{i2 j2 k2 l2}) B0^dag.
Mat qp_conjugated(int i1, int j1, int k1, int l1, int i2, int j2, int k2, int l2);

/// Register layout for two-qubit teleportation: 1 = alpha, 2-3 = resource A
/// (k1 l1), 4-5 = resource B (k2 l2), 6 = beta. Outcomes are read on (1,2) and (5,6).
enum class Bracketing {
  /// (B0 x B0 x B0)(1 x B0 x B0 x 1)
  Displayed,
  /// (B0 x B0 x B0)(1 x 1 x B0 x 1 x 1)(1 x B0 x B0 x 1)
  PreparationLine,
};

struct TwoQubitResult {
  std::array<int, 4> outcome{};  // i1, j1, i2, j2
  double probability = 0.0;
  std::array<double, 16> probabilities{};  // index 8 i1 + 4 j1 + 2 i2 + j2
  Mat correction;
  Ket corrected;
  double fidelity = 0.0;  // against B0 |alpha beta>
};

/// Six-qubit operator for the chosen bracketing.
Mat two_qubit_circuit(Bracketing bracketing);

/// Teleports B0 onto a two-qubit input; correction (Q (x) P)^dag on registers 3, 4.
TwoQubitResult teleport_two_qubit(const Ket& alphabeta, int k1, int l1, int k2, int l2,
                                  Sampler& sampler, Bracketing bracketing = Bracketing::Displayed);

/// Worst infidelity against B0|alpha beta> over every branch, every resource
/// label and `trials` random inputs.
double bracketing_infidelity(Bracketing bracketing, Sampler& sampler, int trials = 2);

}  // namespace bmw
