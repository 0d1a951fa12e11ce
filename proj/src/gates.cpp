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

#include "bmw/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace bmw {

void require_bit(int b, const char* what) {
  if (b != 0 && b != 1) throw std::invalid_argument(std::string(what) + ": index must be 0 or 1");
}

namespace gates {

namespace {
Mat make2(cplx a, cplx b, cplx c, cplx d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}
}  // namespace

Mat id2() { return Mat::Identity(2, 2); }
Mat x() { return make2(0, 1, 1, 0); }
Mat y() { return z() * x(); }
Mat z() { return make2(1, 0, 0, -1); }
Mat h() {
  const double r = 1.0 / std::sqrt(2.0);
  return make2(r, r, r, -r);
}
Mat s() { return make2(1, 0, 0, kI); }
Mat t(TConvention convention) {
  return phase_shift(convention == TConvention::Standard ? kPi / 4 : kPi / 8);
}
Mat phase_shift(double phi) { return make2(1, 0, 0, expi(phi)); }

Mat cz() {
  Mat m = Mat::Identity(4, 4);
  m(3, 3) = -1.0;
  return m;
}

Mat cnot() {
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

Mat swap() {
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
  return m;
}

}  // namespace gates

Mat pauli_w(int i, int j) {
  require_bit(i, "pauli_w");
  require_bit(j, "pauli_w");
  Mat w = gates::id2();
  if (i) w = w * gates::x();
  if (j) w = w * gates::z();
  return w;
}

Mat elementary(std::string_view name, std::optional<double> phi, TConvention convention) {
  if (name == "I") return gates::id2();
  if (name == "X") return gates::x();
  if (name == "Y") return gates::y();
  if (name == "Z") return gates::z();
  if (name == "H") return gates::h();
  if (name == "S") return gates::s();
  if (name == "Sdg") return gates::s().adjoint();
  if (name == "T") return gates::t(convention);
  if (name == "R") {
    if (!phi) throw std::invalid_argument("elementary: R needs a phase");
    return gates::phase_shift(*phi);
  }
  throw std::invalid_argument("elementary: unknown gate '" + std::string(name) + "'");
}

Ket epr_pair() {
  Ket v = Ket::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v;
}

Ket bell_like_state(const Mat& u) { return kron(gates::id2(), u) * epr_pair(); }

Ket bell_state(int i, int j) { return bell_like_state(pauli_w(i, j)); }

Mat m_gate(int i, int j, double phi) {
  require_bit(i, "m_gate");
  require_bit(j, "m_gate");
  using namespace gates;
  const Mat r = phase_shift(phi);
  switch (pair_index(i, j)) {
    case 0:
      return r * h() * s() * h() * r;
    case 1:
      return r * z() * r;
    case 2:
      return x() * z();
    default:
      return r * h() * s().adjoint() * h() * r;
  }
}

Mat tl_projector(int i, int j, double phi) { return projector(bell_like_state(m_gate(i, j, phi))); }

Mat tl_matrix(double phi) {
  const cplx a = kI * expi(-phi);
  const cplx b = -kI * expi(phi);
  const cplx c = kI * expi(phi);
  Mat e(4, 4);
  // clang-format off
  e << 1.0,         a,   a,   expi(-2 * phi),
       b,           1.0, 1.0, -a,
       b,           1.0, 1.0, -a,
       expi(2 * phi), c,   c,   1.0;
  // clang-format on
  return e / 4.0;
}

SpectralData yb_spectral_data() {
  return {{expi(5 * kPi / 4), expi(3 * kPi / 4), expi(3 * kPi / 4), expi(kPi / 4)}};
}

Mat yb_gate(double phi) {
  const cplx m1 = expi(-phi);
  const cplx p1 = expi(phi);
  Mat b(4, 4);
  // clang-format off
  b <<  1.0,             -m1,  -m1,  -expi(-2 * phi),
        p1,              1.0,  -1.0, m1,
        p1,              -1.0, 1.0,  m1,
        -expi(2 * phi),  -p1,  -p1,  1.0;
  // clang-format on
  return (expi(3 * kPi / 4) / 2.0) * b;
}

std::pair<SpectralData, Mat> yb_spectral(double phi) {
  const SpectralData data = yb_spectral_data();
  Mat sum = Mat::Zero(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) sum += data.at(i, j) * tl_projector(i, j, phi);
  }
  if (max_abs_diff(sum, yb_gate(phi)) > kArithmeticTol) {
    throw std::logic_error("yb_spectral: spectral sum disagrees with the closed-form braid matrix");
  }
  return {data, sum};
}

Mat yb_clifford() {
  using namespace gates;
  const Mat hz = h() * z();
  return cz() * kron(hz, hz) * cz();
}

std::vector<GateFactor> decompose_b(double phi) {
  using namespace gates;
  using Kind = GateFactor::Kind;
  const Mat r = phase_shift(phi);
  const Mat hz = h() * z();
  return {
      {Kind::GlobalPhase, "exp(i 3pi/4)", expi(3 * kPi / 4) * identity(4)},
      {Kind::Local, "R(phi) x R(phi)", kron(r, r)},
      {Kind::Entangling, "CZ", cz()},
      {Kind::Local, "HZ x HZ", kron(hz, hz)},
      {Kind::Entangling, "CZ", cz()},
      {Kind::Local, "R(phi)^dag x R(phi)^dag", kron(r.adjoint(), r.adjoint())},
  };
}

Mat factor_product(const std::vector<GateFactor>& factors) {
  Mat out = identity(4);
  for (const auto& f : factors) out = out * f.matrix;
  return out;
}

Mat permutation_p() { return gates::swap(); }

Mat brauer_projector() { return projector(epr_pair()); }

}  // namespace bmw
