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

#include "bmw/entangle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "bmw/gates.hpp"

namespace bmw {

namespace {

constexpr double kSnap = 1e-12;

// Columns map Bell states to a basis where exp(i(aXX + bYY + cZZ)) is diagonal
// with phases (a-b+c, -a+b+c, a+b-c, -a-b-c).
Mat magic_basis() {
  const double r = 1.0 / std::sqrt(2.0);
  Mat q(4, 4);
  // clang-format off
  q << r,   0,      0,  kI * r,
       0,   kI * r, r,  0,
       0,   kI * r, -r, 0,
       r,   0,      0,  -kI * r;
  // clang-format on
  return q;
}

double snap(double x) {
  if (std::abs(x) < kSnap) return 0.0;
  if (std::abs(x - kPi / 4) < kSnap) return kPi / 4;
  if (std::abs(x + kPi / 4) < kSnap) return -kPi / 4;
  return x;
}

// Representative of x modulo pi/2 in [-pi/4, pi/4).
double wrap_quarter(double x) {
  const double half = kPi / 2;
  double y = std::fmod(x + kPi / 4, half);
  if (y < 0) y += half;
  return snap(y - kPi / 4);
}

}  // namespace

CanonicalParams canonical_params(const Mat& u) {
  if (u.rows() != 4 || u.cols() != 4 || !is_unitary(u, 1e-10)) {
    throw std::invalid_argument("canonical_params: expected a 4x4 unitary");
  }
  const Mat q = magic_basis();
  const Mat special = u / std::pow(u.determinant(), 0.25);
  const Mat up = q.adjoint() * special * q;
  Eigen::ComplexEigenSolver<Mat> solver(up.transpose() * up, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("canonical_params: eigensolver failed");

  std::array<double, 4> th{};
  for (int k = 0; k < 4; ++k) th[k] = std::arg(solver.eigenvalues()(k)) / 2.0;
  std::sort(th.begin(), th.end(), std::greater<>());
  // Half-phases sum to a multiple of pi; shift the extremes to make it zero.
  const int turns = static_cast<int>(std::lround((th[0] + th[1] + th[2] + th[3]) / kPi));
  for (int k = 0; k < turns; ++k) th[static_cast<std::size_t>(k)] -= kPi;
  for (int k = 0; k < -turns; ++k) th[static_cast<std::size_t>(3 - k)] += kPi;

  std::array<double, 3> v = {wrap_quarter((th[0] + th[2]) / 2), wrap_quarter((th[1] + th[2]) / 2),
                             wrap_quarter((th[0] + th[1]) / 2)};
  std::stable_sort(v.begin(), v.end(), [](double x, double y) { return std::abs(x) > std::abs(y); });
  CanonicalParams p{v[0], v[1], v[2]};
  // Flipping the signs of two coordinates is a local equivalence.
  if (p.a < 0) {
    p.a = -p.a;
    p.c = -p.c;
  }
  if (p.b < 0) {
    p.b = -p.b;
    p.c = -p.c;
  }
  // On the a = pi/4 face, c and -c are equivalent.
  if (p.a == kPi / 4 && p.c < 0) p.c = -p.c;
  p.a = snap(p.a) + 0.0;
  p.b = snap(p.b) + 0.0;
  p.c = snap(p.c) + 0.0;
  return p;
}

Mat canonical_gate(double a, double b, double c) {
  const Mat xx = kron(gates::x(), gates::x());
  const Mat yy = kron(Mat(-kI * gates::y()), Mat(-kI * gates::y()));
  const Mat zz = kron(gates::z(), gates::z());
  const Mat one = identity(4);
  const auto rot = [&](double t, const Mat& g) { return Mat(std::cos(t) * one + kI * std::sin(t) * g); };
  return rot(a, xx) * rot(b, yy) * rot(c, zz);
}

double entangling_power(const CanonicalParams& p) {
  const double ca = std::cos(2 * p.a), cb = std::cos(2 * p.b), cc = std::cos(2 * p.c);
  const double sa = std::sin(2 * p.a), sb = std::sin(2 * p.b), sc = std::sin(2 * p.c);
  const double ep = 1.0 - ca * ca * cb * cb * cc * cc - sa * sa * sb * sb * sc * sc;
  return std::clamp(ep, 0.0, 1.0);
}

double entangling_power(const Mat& u) { return entangling_power(canonical_params(u)); }

AppendixBResult appendix_b_decompositions(double phi) {
  const cplx g = expi(3 * kPi / 4);
  const Mat b = yb_gate(phi);
  const Mat one = identity(4);
  const Ket a_state = bell_state(1, 0);
  const Ket b_state = bell_like_state(gates::phase_shift(2 * phi));
  const Mat pa = projector(a_state);
  const Mat pb = projector(b_state);

  AppendixBResult r;
  const Mat u_tilde = g * one + std::sqrt(2.0) * (pa + pb);
  r.projector_form = max_abs_diff(b, Mat(u_tilde + 2.0 * kI * g * tl_matrix(phi)));
  r.u_tilde_unitarity = max_abs_diff(Mat(u_tilde * u_tilde.adjoint()), one);
  const Mat five = g * (one - pa - pb - expi(-phi) * outer(b_state, a_state) +
                        expi(phi) * outer(a_state, b_state));
  r.five_term_form = max_abs_diff(b, five);
  return r;
}

}  // namespace bmw
