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

#include <map>

#include "bmw/gates.hpp"
#include "bmw/tbqc.hpp"
#include "oracle.hpp"

using namespace bmw;
using oracle::pw;

namespace {

int sgn(int e) { return (e % 2) ? -1 : 1; }

// (X - iY)/sqrt2 with Y = ZX, the real convention of the gate table.
oracle::M xy() { return (oracle::X() - oracle::I * oracle::Z() * oracle::X()) / std::sqrt(2.0); }

}  // namespace

TEST(PauliString, ParseRoundTrip) {
  for (const char* s : {"+IX", "-XZ", "+iYY", "-iZI"}) EXPECT_EQ(PauliString::parse(s).to_string(), s);
  EXPECT_THROW(PauliString::parse("+AB"), std::invalid_argument);
}

TEST(PauliString, RecognizeWithPhase) {
  const auto p = PauliString::recognize(Mat(-oracle::kron(oracle::id(2), oracle::X())));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->to_string(), "-IX");
  EXPECT_FALSE(PauliString::recognize(gates::h()).has_value());
  EXPECT_FALSE(PauliString::recognize(Mat(oracle::ex(0.3) * gates::x())).has_value());
}

TEST(Clifford, B0RowsMatchDisplayedTable) {
  const CliffordReport r = clifford_check(yb_clifford(), 2);
  ASSERT_TRUE(r.is_clifford);
  ASSERT_EQ(r.rows.size(), 4u);
  const std::map<std::string, std::string> want = {{"XI", "-IX"}, {"IX", "-XI"}, {"ZI", "+XZ"}, {"IZ", "+ZX"}};
  for (const auto& row : r.rows) {
    ASSERT_TRUE(row.image.has_value());
    EXPECT_EQ(row.image->to_string(), want.at(row.generator)) << row.generator;
  }
}

TEST(Clifford, SingleQubitGates) {
  EXPECT_TRUE(clifford_check(gates::h(), 1).is_clifford);
  EXPECT_TRUE(clifford_check(gates::s(), 1).is_clifford);
  EXPECT_FALSE(clifford_check(gates::t(), 1).is_clifford);
  EXPECT_THROW(clifford_check(Mat(2.0 * gates::h()), 1), std::invalid_argument);
  EXPECT_THROW(clifford_check(gates::h(), 2), std::invalid_argument);
}

TEST(KGate, ClosedFormAtOrigin) {
  EXPECT_LT(max_abs_diff(k_gate(0, 0, 0, 0), Mat(gates::x() * gates::z())), 1e-15);
}

TEST(KGate, PeriodTwoInEveryIndex) {
  for (int c = 0; c < 16; ++c) {
    const int i = c >> 3 & 1, j = c >> 2 & 1, k = c >> 1 & 1, l = c & 1;
    EXPECT_EQ(max_abs_diff(k_gate(i, j, k, l), k_gate(i + 2, j, k + 2, l)), 0.0);
    EXPECT_EQ(max_abs_diff(l_gate(i, j, k, l), l_gate(i, j + 2, k, l + 2)), 0.0);
  }
}

TEST(B0Teleport, BothDirections) {
  Sampler s(31);
  const auto probes = probe_states(s, 3);
  EXPECT_LE(b0_teleport_residual(probes), 1e-10);
  EXPECT_LE(b0_inverse_residual(probes), 1e-10);
}

TEST(RGate, HadamardClosedFormFromOracle) {
  for (int c = 0; c < 16; ++c) {
    const int i = c >> 3 & 1, j = c >> 2 & 1, k = c >> 1 & 1, l = c & 1;
    const oracle::M want = double(sgn(j * l + i * j + k)) * pw(oracle::Z(), (j + k + 1) % 2) *
                           pw(oracle::X(), (i + l + 1) % 2);
    EXPECT_LT(max_abs_diff(r_gate(gates::h(), i, j, k, l), want), 1e-12) << c;
    EXPECT_LT(max_abs_diff(r_h_closed(i, j, k, l), want), 1e-12) << c;
  }
}

TEST(RGate, TClosedFormAndClifford) {
  for (int c = 0; c < 16; ++c) {
    const int i = c >> 3 & 1, j = c >> 2 & 1, k = c >> 1 & 1, l = c & 1;
    const oracle::M want =
        double(sgn(j * l + i * j + k)) * pw(xy(), (j + k + 1) % 2) * pw(oracle::Z(), (i + l + 1) % 2);
    const Mat r = r_gate(gates::t(), i, j, k, l);
    EXPECT_LT(max_abs_diff(r, want), 1e-12) << c;
    EXPECT_LT(max_abs_diff(r_t_closed(i, j, k, l), want), 1e-12) << c;
    EXPECT_TRUE(clifford_check(r, 1).is_clifford);
  }
}

TEST(RGate, PauliIffClifford) {
  for (const Mat& u : {gates::h(), gates::s(), gates::x(), gates::z()}) {
    for (int c = 0; c < 16; ++c) {
      EXPECT_TRUE(PauliString::recognize(r_gate(u, c >> 3 & 1, c >> 2 & 1, c >> 1 & 1, c & 1)).has_value());
    }
  }
  // R(T) is Pauli exactly when the (X - iY)/sqrt2 factor drops out, i.e. j + k odd.
  for (int c = 0; c < 16; ++c) {
    const int j = c >> 2 & 1, k = c >> 1 & 1;
    const bool pauli =
        PauliString::recognize(r_gate(gates::t(), c >> 3 & 1, j, k, c & 1)).has_value();
    EXPECT_EQ(pauli, (j + k) % 2 == 1) << c;
  }
  EXPECT_THROW(r_gate(Mat(2.0 * gates::h()), 0, 0, 0, 0), std::invalid_argument);
}

TEST(GateTeleport, HSTAndRandom) {
  Sampler s(32);
  std::vector<Mat> us = {gates::h(), gates::s(), gates::t(), s.haar_unitary(2)};
  for (const Mat& u : us) {
    for (int kl = 0; kl < 4; ++kl) {
      for (int t = 0; t < 4; ++t) {
        const auto r = teleport_single_gate(u, s.haar_ket(2), kl / 2, kl % 2, s);
        EXPECT_GE(r.fidelity, 1.0 - 1e-10);
        for (double p : r.probabilities) EXPECT_NEAR(p, 0.25, 1e-10);
      }
    }
  }
}

TEST(TwoQubit, QPClosedFormsAllTuples) {
  double worst = 0.0;
  for (int c = 0; c < 256; ++c) {
    const int b[8] = {c >> 7 & 1, c >> 6 & 1, c >> 5 & 1, c >> 4 & 1, c >> 3 & 1, c >> 2 & 1, c >> 1 & 1, c & 1};
    const Mat q = q_closed(b[0], b[1], b[2], b[3], b[4], b[5], b[6], b[7]);
    const Mat p = p_closed(b[0], b[1], b[2], b[3], b[4], b[5], b[6], b[7]);
    worst = std::max(worst, max_abs_diff(qp_conjugated(b[0], b[1], b[2], b[3], b[4], b[5], b[6], b[7]),
                                         kron(q, p)));
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(TwoQubit, QClosedFormFromOracle) {
  // Q = (-1)^{(k1+1)(i1+l1+1)+1} X^{i1+i2+l1+l2} Z^{j2+k2+1}.
  const int i1 = 1, j1 = 0, k1 = 0, l1 = 1, i2 = 1, j2 = 1, k2 = 0, l2 = 0;
  const oracle::M q = double(sgn((k1 + 1) * (i1 + l1 + 1) + 1)) * pw(oracle::X(), (i1 + i2 + l1 + l2) % 2) *
                      pw(oracle::Z(), (j2 + k2 + 1) % 2);
  EXPECT_LT(max_abs_diff(q_closed(i1, j1, k1, l1, i2, j2, k2, l2), q), 1e-15);
}

TEST(TwoQubit, DisplayedBracketingTeleports) {
  Sampler s(33);
  for (int c = 0; c < 16; ++c) {
    const auto r = teleport_two_qubit(s.haar_ket(4), c >> 3 & 1, c >> 2 & 1, c >> 1 & 1, c & 1, s);
    EXPECT_GE(r.fidelity, 1.0 - 1e-10);
    for (double p : r.probabilities) EXPECT_NEAR(p, 1.0 / 16, 1e-10);
  }
}

TEST(TwoQubit, PreparationLineBracketingFails) {
  Sampler s(34);
  EXPECT_LE(bracketing_infidelity(Bracketing::Displayed, s, 3), 1e-10);
  EXPECT_GT(bracketing_infidelity(Bracketing::PreparationLine, s, 3), 0.1);
}
