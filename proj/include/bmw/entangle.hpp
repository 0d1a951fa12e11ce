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

#include "bmw/tensor.hpp"

namespace bmw {

/// Nonlocal parameters of a two-qubit gate, U ~ exp(i(a XX + b YY + c ZZ)) up to
/// local unitaries. Reduced to pi/4 >= a >= b >= |c|, with c >= 0 when a = pi/4.
struct CanonicalParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Magic-basis method. Throws std::invalid_argument unless `u` is a 4x4 unitary.
CanonicalParams canonical_params(const Mat& u);

/// exp(i(a XX + b YY + c ZZ)).
Mat canonical_gate(double a, double b, double c);

/// 1 - cos^2 2a cos^2 2b cos^2 2c - sin^2 2a sin^2 2b sin^2 2c, clamped to [0, 1].
double entangling_power(const CanonicalParams& p);
double entangling_power(const Mat& u);

/// Residuals of the two projector expansions of the braid matrix B(phi).
struct AppendixBResult {
  /// |B - (U~ + 2i e^{i3pi/4} E)| with U~ = e^{i3pi/4} 1 + sqrt2 (P_{psi(10)} + P_{Psi_R(2phi)}).
  double projector_form = 0.0;
  /// |U~ U~^dag - 1|.
  double u_tilde_unitarity = 0.0;
  /// |B - e^{i3pi/4}(1 - P_a - P_b - e^{-i phi}|b><a| + e^{i phi}|a><b|)|,
  /// a = psi(10), b = Psi_R(2phi).
  double five_term_form = 0.0;
};

AppendixBResult appendix_b_decompositions(double phi);

}  // namespace bmw
