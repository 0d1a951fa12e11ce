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

// Independent reference values for the test suites. Everything here is typed
// in entry by entry or computed with plain loops; nothing calls into the
// library, so a shared bug cannot make both sides agree.

#pragma once

#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;
using V = Eigen::VectorXcd;

inline const double kPi = std::acos(-1.0);
inline const C I{0.0, 1.0};

inline C ex(double a) { return {std::cos(a), std::sin(a)}; }

inline M mat2(C a, C b, C c, C d) {
  M m(2, 2);
  m << a, b, c, d;
  return m;
}

inline M id(int n) { return M::Identity(n, n); }
inline M X() { return mat2(0, 1, 1, 0); }
inline M Z() { return mat2(1, 0, 0, -1); }
inline M H() { return mat2(1, 1, 1, -1) / std::sqrt(2.0); }
inline M S() { return mat2(1, 0, 0, I); }
inline M T() { return mat2(1, 0, 0, ex(kPi / 4)); }
inline M R(double phi) { return mat2(1, 0, 0, ex(phi)); }
inline M YH() { return mat2(0, -I, I, 0); }  // Hermitian Pauli Y

// Kronecker product by explicit index arithmetic.
inline M kron(const M& a, const M& b) {
  M out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int r = 0; r < out.rows(); ++r) {
    for (int c = 0; c < out.cols(); ++c) {
      out(r, c) = a(r / b.rows(), c / b.cols()) * b(r % b.rows(), c % b.cols());
    }
  }
  return out;
}

inline M kron3(const M& a, const M& b, const M& c) { return kron(kron(a, b), c); }

inline double diff(const M& a, const M& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Printed 4x4 Temperley-Lieb matrix.
inline M E(double p) {
  M e(4, 4);
  e << 1.0, I * ex(-p), I * ex(-p), ex(-2 * p),
      -I * ex(p), 1.0, 1.0, -I * ex(-p),
      -I * ex(p), 1.0, 1.0, -I * ex(-p),
      ex(2 * p), I * ex(p), I * ex(p), 1.0;
  return e / 4.0;
}

// Printed 4x4 braid matrix.
inline M B(double p) {
  M b(4, 4);
  b << 1.0, -ex(-p), -ex(-p), -ex(-2 * p),
      ex(p), 1.0, -1.0, ex(-p),
      ex(p), -1.0, 1.0, ex(-p),
      -ex(2 * p), -ex(p), -ex(p), 1.0;
  return ex(3 * kPi / 4) / 2.0 * b;
}

// B at phi = 0 with the global phase removed.
inline M B0() {
  M b(4, 4);
  b << 1, -1, -1, -1,
      1, 1, -1, 1,
      1, -1, 1, 1,
      -1, -1, -1, 1;
  return b / 2.0;
}

inline M CZ() {
  M m = id(4);
  m(3, 3) = -1;
  return m;
}

inline M SWAP() {
  M m = M::Zero(4, 4);
  m(0, 0) = m(3, 3) = 1;
  m(1, 2) = m(2, 1) = 1;
  return m;
}

inline M CNOT() {
  M m = M::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

inline V ket(std::initializer_list<C> amps) {
  V v(static_cast<int>(amps.size()));
  int k = 0;
  for (C a : amps) v(k++) = a;
  return v;
}

// |psi(ij)> = (1 x X^i Z^j)|Psi>, entries written out.
inline V bell(int i, int j) {
  const double r = 1.0 / std::sqrt(2.0);
  const double s = j ? -1.0 : 1.0;
  if (i == 0) return ket({r, 0, 0, s * r});
  return ket({0, r, s * r, 0});
}

inline M proj(const V& v) { return v * v.adjoint(); }

// (1/2) times the printed projector forms.
inline M E1(int eps) {
  M m = M::Zero(4, 4);
  m(0, 0) = m(3, 3) = 1;
  m(0, 3) = m(3, 0) = static_cast<double>(eps);
  return m / 2.0;
}

inline M E2(int eps) {
  M m = M::Zero(4, 4);
  m(1, 1) = m(2, 2) = 1;
  m(1, 2) = m(2, 1) = static_cast<double>(eps);
  return m / 2.0;
}

inline M U1(double p, int eps, int pm) {
  const double c = std::cos(p), s = std::sin(p);
  M m(4, 4);
  m << c, 0, 0, I * s,
      0, -I * double(eps) * s, double(pm) * c, 0,
      0, double(pm) * c, -I * double(eps) * s, 0,
      I * s, 0, 0, c;
  return m;
}

inline M U2(double p, int eps) {
  M m = M::Zero(4, 4);
  m(0, 3) = m(3, 0) = ex(p);
  m(1, 1) = m(2, 2) = double(eps) * ex(-p);
  return m;
}

inline M U3(double p, int eps, int pm) {
  const double c = std::cos(p), s = std::sin(p);
  M m(4, 4);
  m << I * s, 0, 0, c,
      0, double(pm) * c, -I * double(eps) * s, 0,
      0, -I * double(eps) * s, double(pm) * c, 0,
      c, 0, 0, I * s;
  return m;
}

inline M U4(double p, int eps) {
  M m = M::Zero(4, 4);
  m(0, 0) = m(3, 3) = ex(p);
  m(1, 2) = m(2, 1) = double(eps) * ex(-p);
  return m;
}

// Matrix power by repeated multiplication, k >= 0.
inline M pw(const M& a, int k) {
  M out = id(static_cast<int>(a.rows()));
  for (int t = 0; t < k; ++t) out = out * a;
  return out;
}

// Deterministic pseudo-random unit vector from a small LCG; independent of the
// library sampler.
inline V lcg_state(int dim, unsigned seed) {
  unsigned x = seed * 2654435761u + 12345u;
  V v(dim);
  for (int k = 0; k < dim; ++k) {
    x = x * 1103515245u + 12345u;
    const double re = ((x >> 8) & 0xffff) / 65535.0 - 0.5;
    x = x * 1103515245u + 12345u;
    const double im = ((x >> 8) & 0xffff) / 65535.0 - 0.5;
    v(k) = C(re, im);
  }
  return v / v.norm();
}

}  // namespace oracle
