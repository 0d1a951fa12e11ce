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
#include <string_view>
#include <utility>
#include <vector>

#include "bmw/tensor.hpp"

namespace bmw {

/// Which phase the T gate carries. `Standard` is the usual pi/8 gate
/// diag(1, e^{i pi/4}); `Literal` reads "T = R_{pi/8}" as diag(1, e^{i pi/8}).
enum class TConvention { Standard, Literal };

/// Flattened index of a bit pair (i, j): 2i + j.
constexpr int pair_index(int i, int j) { return 2 * i + j; }
void require_bit(int b, const char* what);

namespace gates {

Mat id2();
Mat x();
/// Y is Z X (real, anti-Hermitian form); equals i times the Hermitian Pauli Y.
Mat y();
Mat z();
Mat h();
Mat s();
Mat t(TConvention convention = TConvention::Standard);
/// R_phi = diag(1, e^{i phi}).
Mat phase_shift(double phi);
/// CZ = |0><0| (x) 1 + |1><1| (x) Z.
Mat cz();
Mat cnot();
Mat swap();

}  // namespace gates

/// W_ij = X^i Z^j.
Mat pauli_w(int i, int j);

/// Named single-qubit gate: I, X, Y, Z, H, S, Sdg, T, R (R needs `phi`).
/// Throws std::invalid_argument for unknown names.
Mat elementary(std::string_view name, std::optional<double> phi = std::nullopt,
               TConvention convention = TConvention::Standard);

/// The EPR pair (|00> + |11>)/sqrt(2).
Ket epr_pair();
/// (1 (x) U)|EPR>.
Ket bell_like_state(const Mat& u);
/// |psi(ij)> = (1 (x) W_ij)|EPR>.
Ket bell_state(int i, int j);

/// M_00 = R H S H R, M_01 = R Z R, M_10 = X Z, M_11 = R H S^dag H R with R = R_phi.
Mat m_gate(int i, int j, double phi);
/// E_ij = |Psi_{M_ij}><Psi_{M_ij}|, built from M_ij.
Mat tl_projector(int i, int j, double phi);
/// The closed-form Temperley-Lieb matrix E; equals tl_projector(0, 0, phi).
Mat tl_matrix(double phi);

/// Eigenvalues lambda_ij of the Yang-Baxter gate on the projectors E_ij.
struct SpectralData {
  std::array<cplx, 4> lambda;
  cplx at(int i, int j) const { return lambda[pair_index(i, j)]; }
};

/// lambda_00 = e^{i5pi/4}, lambda_01 = lambda_10 = e^{i3pi/4}, lambda_11 = e^{ipi/4}.
SpectralData yb_spectral_data();

/// Closed-form Yang-Baxter (braid) matrix B(phi).
Mat yb_gate(double phi);
/// Returns the eigenvalues and sum_ij lambda_ij E_ij. Throws std::logic_error
/// if the spectral sum differs from yb_gate(phi) by more than 1e-12.
std::pair<SpectralData, Mat> yb_spectral(double phi);

/// B_0 = CZ (HZ (x) HZ) CZ, computed from its factors.
Mat yb_clifford();

/// One factor of a two-qubit gate product, as a 4x4 matrix.
struct GateFactor {
  enum class Kind { GlobalPhase, Local, Entangling };
  Kind kind;
  std::string label;
  Mat matrix;
};

/// e^{i3pi/4} (R (x) R) CZ (HZ (x) HZ) CZ (R^dag (x) R^dag), leftmost first.
std::vector<GateFactor> decompose_b(double phi);
/// Ordered product of the factors (leftmost factor applied last).
Mat factor_product(const std::vector<GateFactor>& factors);

/// SWAP: P|ij> = |ji>.
Mat permutation_p();
/// |EPR><EPR|.
Mat brauer_projector();

}  // namespace bmw
