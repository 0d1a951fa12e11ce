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
#include <string_view>
#include <vector>

#include "bmw/gates.hpp"
#include "bmw/tensor.hpp"

namespace bmw {

/// One branch of a two-qubit measurement on the first two registers.
struct MeasurementOutcome {
  int i = 0;
  int j = 0;
  double probability = 0.0;
  Ket post_state;  // normalized state of the remaining register
};

struct TeleportResult {
  MeasurementOutcome outcome;
  std::array<double, 4> probabilities{};  // exact Born probabilities, index 2i + j
  Mat correction;
  Ket corrected;
  double fidelity = 0.0;  // against the intended output
};

/// Projects the leading two qubits of `state` onto `bra_state`; returns the
/// unnormalized remainder (<bra_state| (x) 1) |state>.
Ket project_leading_pair(const Ket& state, const Ket& bra_state);
/// Projects the trailing two qubits; returns (1 (x) <bra_state|) |state>.
Ket project_trailing_pair(const Ket& state, const Ket& bra_state);

/// Bell measurement on |alpha> (x) |EPR>, correction W_ij^dag.
TeleportResult teleport_standard(const Ket& alpha, Sampler& sampler);
TeleportResult teleport_standard(const Ket& alpha, std::uint64_t seed);

/// Resource |Psi_{M00}>, measurement {E_ij}, correction (M_00 M_ij^*)^dag.
TeleportResult teleport_bell_like(const Ket& alpha, double phi, Sampler& sampler);
TeleportResult teleport_bell_like(const Ket& alpha, double phi, std::uint64_t seed);

/// Phases alpha_B(i, j) and alpha_{B^dag}(i, j) in radians, index 2i + j:
///   B |ij>     = e^{i alpha_B}     (R (x) R H) |psi(j i)>
///   B^dag |ij> = e^{i alpha_B^dag} (R (x) R H) |psi(j+1, i+1)>
struct PhaseTable {
  double phi = 0.0;
  std::array<double, 4> alpha_b{};
  std::array<double, 4> alpha_b_dagger{};
  double max_residual = 0.0;

  double b(int i, int j) const { return alpha_b[pair_index(i, j)]; }
  double b_dagger(int i, int j) const { return alpha_b_dagger[pair_index(i, j)]; }
};

/// Throws std::logic_error when some column admits no phase match at 1e-10.
PhaseTable extract_phases(double phi);

/// V_kl = e^{i alpha_B(k,l)} R H X^l Z^k R.
Mat v_gate(int k, int l, const PhaseTable& phases);
/// U_ij = e^{-i alpha_B^dag(i,j)} R^dag Z^{i+1} X^{j+1} H R^dag.
Mat u_gate(int i, int j, const PhaseTable& phases);
/// Closed form (-1)^{l(k+j+1)} e^{i(alpha_B(k,l) - alpha_B^dag(i,j))} R X^{j+k+1} Z^{i+l+1} R^dag.
Mat w_closed(int i, int j, int k, int l, const PhaseTable& phases);
/// V_kl U_ij^T.
Mat w_product(int i, int j, int k, int l, const PhaseTable& phases);

/// sum_kl (1 (x) V_kl)|EPR><kl|.
Mat reconstruct_b_from_v(const PhaseTable& phases);
/// sum_ij |ij><EPR|(1 (x) U_ij).
Mat reconstruct_b_from_u(const PhaseTable& phases);

/// Prepares |alpha> (x) |kl>, applies (B (x) 1)(1 (x) B), measures |ij> on the
/// first two qubits and corrects with the closed-form W_{i,j,k,l}^dag.
TeleportResult teleport_with_yb(const Ket& alpha, int k, int l, double phi, Sampler& sampler);
TeleportResult teleport_with_yb(const Ket& alpha, int k, int l, double phi, std::uint64_t seed);

/// Teleportation identities checked as vector or operator equations.
enum class TeleportIdentity {
  Original,           // |a>|EPR> = 1/2 sum |psi(ij)> W_ij|a>
  OriginalTranspose,  // |EPR>|a> = 1/2 sum W_ij^T|a> |psi(ij)>
  Projector,          // (|psi(ij)><psi(ij)| x 1)|a>|EPR> = 1/2 |psi(ij)> W_ij|a>
  Half,               // (E_ij x 1)|a>|Psi_M00> = 1/2 |Psi_Mij> M00 Mij^*|a>
  M00,                // |a>|Psi_M00> = 1/2 sum |Psi_Mij> M00 Mij^*|a>
  M00Transpose,       // |Psi_M00>|a> = 1/2 sum M00^T Mij^dag|a> |Psi_Mij>
  E00,                // (E00 x 1)(|a> x E00) = 1/2 (|Psi_M00>|a>)<Psi_M00|
  E00Transpose,       // (1 x E00)(E00 x |a>) = 1/2 (|a>|Psi_M00>)<Psi_M00|
  Completeness,       // sum |psi(ij)><psi(ij)| = 1 and sum E_ij = 1
  YangBaxter,         // (B x 1)(1 x B)|a>|kl> = 1/2 sum |ij> W_ijkl|a>
};

std::string_view to_string(TeleportIdentity id);
std::vector<TeleportIdentity> all_teleport_identities();

/// Max residual over the probe states (and all free indices).
double check_teleportation_identity(TeleportIdentity id, double phi, const std::vector<Ket>& probes);

/// |(1 (x) U)|EPR> - (U^T (x) 1)|EPR>|.
double flow_identity_residual(const Mat& u);

/// max_ij |(M00 Mij^*)^T - M00^T Mij^dag|; nonzero at generic phi.
double transpose_asymmetry(double phi);

}  // namespace bmw
