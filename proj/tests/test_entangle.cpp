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

#include <gtest/gtest.h>

#include "bmw/entangle.hpp"
#include "bmw/gates.hpp"
#include "oracle.hpp"

using namespace bmw;

namespace {

void expect_params(const CanonicalParams& p, double a, double b, double c, double tol = 1e-10) {
  EXPECT_NEAR(p.a, a, tol);
  EXPECT_NEAR(p.b, b, tol);
  EXPECT_NEAR(p.c, c, tol);
}

// exp(i t P) for an involution P.
oracle::M rot(double t, const oracle::M& p) {
  return std::cos(t) * oracle::id(4) + oracle::I * std::sin(t) * p;
}

}  // namespace

TEST(Canonical, KnownGates) {
  expect_params(canonical_params(identity(4)), 0, 0, 0);
  expect_params(canonical_params(yb_gate(0.0)), kPi / 4, kPi / 4, 0);
  expect_params(canonical_params(yb_gate(0.9)), kPi / 4, kPi / 4, 0);
  expect_params(canonical_params(gates::swap()), kPi / 4, kPi / 4, kPi / 4);
  expect_params(canonical_params(gates::cnot()), kPi / 4, 0, 0);
  expect_params(canonical_params(gates::cz()), kPi / 4, 0, 0);
}

TEST(Canonical, RejectsNonUnitary) {
  EXPECT_THROW(canonical_params(Mat(2.0 * identity(4))), std::invalid_argument);
  EXPECT_THROW(canonical_params(identity(2)), std::invalid_argument);
}

TEST(Canonical, GateMatchesOracleExponential) {
  const double a = 0.5, b = 0.3, c = -0.1;
  using oracle::kron;
  const oracle::M want = rot(a, kron(oracle::X(), oracle::X())) * rot(b, kron(oracle::YH(), oracle::YH())) *
                         rot(c, kron(oracle::Z(), oracle::Z()));
  EXPECT_LT(max_abs_diff(canonical_gate(a, b, c), want), 1e-14);
}

TEST(EntanglingPower, KnownValues) {
  EXPECT_NEAR(entangling_power(yb_gate(0.3)), 1.0, 1e-10);
  EXPECT_NEAR(entangling_power(identity(4)), 0.0, 1e-12);
  EXPECT_NEAR(entangling_power(gates::swap()), 0.0, 1e-12);
  EXPECT_NEAR(entangling_power(CanonicalParams{kPi / 4, kPi / 4, kPi / 4}), 0.0, 1e-15);
}

TEST(ProjectorForms, BothFormsHold) {
  for (double p : {0.0, 1.1, 2.4}) {
    const AppendixBResult r = appendix_b_decompositions(p);
    EXPECT_LE(r.projector_form, 1e-10);
    EXPECT_LE(r.u_tilde_unitarity, 1e-10);
    EXPECT_LE(r.five_term_form, 1e-10);
  }
}

// Round trip on random chamber-interior triples pi/4 > a > b > |c|.
TEST(EntangleProperty, RoundTrip) {
  Sampler s(51);
  for (int t = 0; t < 50; ++t) {
    const double a = s.uniform(0.02, kPi / 4 - 0.02);
    const double b = s.uniform(0.01, a - 0.005);
    const double c = s.uniform(-b + 0.005, b - 0.005);
    const Mat local_l = kron(s.haar_unitary(2), s.haar_unitary(2));
    const Mat local_r = kron(s.haar_unitary(2), s.haar_unitary(2));
    const Mat u = oracle::ex(s.uniform(0, 6)) * local_l * canonical_gate(a, b, c) * local_r;
    expect_params(canonical_params(u), a, b, c, 1e-8);
  }
}

TEST(EntangleProperty, PowerInvariantUnderLocals) {
  Sampler s(52);
  for (int t = 0; t < 20; ++t) {
    const Mat u = s.haar_unitary(4);
    const Mat v = kron(s.haar_unitary(2), s.haar_unitary(2)) * u * kron(s.haar_unitary(2), s.haar_unitary(2));
    EXPECT_NEAR(entangling_power(u), entangling_power(v), 1e-8);
    const CanonicalParams p = canonical_params(u);
    EXPECT_GE(p.a + 1e-12, p.b);
    EXPECT_GE(p.b + 1e-12, std::abs(p.c));
    EXPECT_LE(p.a, kPi / 4 + 1e-12);
  }
}
