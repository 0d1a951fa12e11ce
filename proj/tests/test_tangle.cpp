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

#include <Eigen/Eigenvalues>
#include <set>

#include "bmw/relations.hpp"
#include "bmw/tangle.hpp"
#include "oracle.hpp"

using namespace bmw;

namespace {

const double kSampled[] = {0.05, 0.4, 0.9, 1.3, 1.7, 2.2, 2.8, 3.5, 4.6, 5.9};

// Sum mu_ij |psi(ij)><psi(ij)| with the written-out Bell vectors.
oracle::M spectral(const std::array<cplx, 4>& mu) {
  oracle::M u = oracle::M::Zero(4, 4);
  for (int a = 0; a < 4; ++a) u += mu[static_cast<std::size_t>(a)] * oracle::proj(oracle::bell(a / 2, a % 2));
  return u;
}

EigenAssignment printed_class(int id, double p) {
  const cplx e = oracle::ex(p), f = oracle::ex(-p);
  switch (id) {
    case 1: return {{e, f, f, -e}};
    case 2: return {{e, f, -e, f}};
    default: return {{e, -e, f, f}};
  }
}

int distinct(const Mat& u) {
  Eigen::ComplexEigenSolver<Mat> es(u, false);
  std::vector<cplx> seen;
  for (int k = 0; k < 4; ++k) {
    bool dup = false;
    for (const cplx& s : seen) dup = dup || std::abs(s - es.eigenvalues()(k)) < 1e-8;
    if (!dup) seen.push_back(es.eigenvalues()(k));
  }
  return static_cast<int>(seen.size());
}

}  // namespace

TEST(UnitaryBasis, RejectsNonOrthonormal) {
  std::array<Mat, 4> bad = {identity(2), identity(2), identity(2), identity(2)};
  EXPECT_THROW(UnitaryBasis{bad}, std::invalid_argument);
  EXPECT_NO_THROW(UnitaryBasis::pauli());
  EXPECT_NO_THROW(UnitaryBasis::bell_like(0.8));
}

TEST(SpectralConstraints, OriginCellAndAllCells) {
  EXPECT_LE(theorem1_residuals(0.0).cell[0][0], 1e-10);
  EXPECT_LE(theorem1_residuals(kPi / 7).max(), 1e-10);
  for (double p : {0.3, 1.1, 2.7}) EXPECT_LE(theorem1_residuals(p).max(), 1e-10);
}

TEST(SpectralConstraints, PerturbedSpectrumFails) {
  SpectralData lam = yb_spectral_data();
  lam.lambda[3] *= oracle::ex(0.1);
  EXPECT_GT(theorem1_residuals(0.5, lam).max(), 1e-3);
}

TEST(ConstraintTeleport, TeleportationIdentities) {
  Sampler s(41);
  auto probes = probe_states(s, 2);
  for (double p : {0.0, 0.6, 2.1}) {
    for (double r : corollary1_check(p, probes)) EXPECT_LE(r, 1e-10);
  }
  // |alpha> = |0> on its own.
  for (double r : corollary1_check(0.6, {basis_ket({0})})) EXPECT_LE(r, 1e-10);
}

TEST(BasisConstraints, ClassOneAtSampledPhase) {
  const auto r = theorem2_residuals(UnitaryBasis::pauli(), printed_class(1, 0.7), 0, 0);
  EXPECT_LE(r.max(), 1e-10);
  EXPECT_LT(std::abs(eigenvalue_sum(printed_class(1, 0.7), 0, 0) - 1.0), 1e-12);
}

TEST(BasisConstraints, AllOnesViolatesSum) {
  const EigenAssignment ones{{1.0, 1.0, 1.0, 1.0}};
  EXPECT_LT(std::abs(eigenvalue_sum(ones, 0, 0) - 2.0), 1e-12);
  EXPECT_GT(theorem2_residuals(UnitaryBasis::pauli(), ones, 0, 0).max(), 0.5);
}

TEST(BasisConstraints, BellLikeBasisWithBraidSpectrum) {
  const EigenAssignment mu{yb_spectral_data().lambda};
  EXPECT_LE(theorem2_residuals(UnitaryBasis::bell_like(0.9), mu, 0, 0).max(), 1e-10);
}

TEST(Solver, PrintedClassesForOrigin) {
  const auto classes = solve_pauli_eigenvalues(0, 0);
  ASSERT_EQ(classes.size(), 3u);
  for (const auto& c : classes) {
    const EigenAssignment got = c.at(0.37), want = printed_class(c.id, 0.37);
    for (int a = 0; a < 4; ++a) EXPECT_LT(std::abs(got[a] - want[a]), 1e-15) << c.id << " " << a;
  }
}

TEST(Solver, EveryClassSatisfiesAllConstraints) {
  const UnitaryBasis pauli = UnitaryBasis::pauli();
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      const auto classes = solve_pauli_eigenvalues(m, n);
      EXPECT_EQ(classes.size(), 3u);
      for (const auto& c : classes) {
        EXPECT_EQ(c.epsilon, n ? -1 : 1);
        for (double p : kSampled) {
          const EigenAssignment mu = c.at(p);
          EXPECT_LE(theorem2_residuals(pauli, mu, m, n).max(), 1e-10);
          EXPECT_LT(std::abs(eigenvalue_sum(mu, m, n) - 1.0), 1e-10);
          for (int a = 0; a < 4; ++a) EXPECT_NEAR(std::abs(mu[a]), 1.0, 1e-12);
        }
      }
    }
  }
}

TEST(Solver, ClassesDistinctAtDedupPhase) {
  for (int mn = 0; mn < 4; ++mn) {
    std::set<std::string> formulas;
    for (const auto& c : solve_pauli_eigenvalues(mn / 2, mn % 2)) formulas.insert(c.formula());
    EXPECT_EQ(formulas.size(), 3u);
  }
}

TEST(Representations, BuiltPairsMatchPrintedAndOracle) {
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      for (const auto& c : solve_pauli_eigenvalues(m, n)) {
        for (double p : {0.3, 1.9}) {
          const BuiltRepresentation rep = build_representation(c, p);
          EXPECT_LT(max_abs_diff(rep.e_tilde, oracle::proj(oracle::bell(m, n))), 1e-12);
          EXPECT_LT(max_abs_diff(rep.u, spectral(c.at(p).mu)), 1e-12);
          EXPECT_TRUE(match_printed(rep.e_tilde, p).has_value());
          EXPECT_TRUE(match_printed(rep.u, p).has_value());
        }
      }
    }
  }
}

TEST(Representations, PrintedFormsAgainstOracle) {
  const double p = 0.8;
  for (const auto& f : printed_representations(p)) {
    oracle::M want;
    if (f.name == "E1") want = oracle::E1(f.epsilon);
    if (f.name == "E2") want = oracle::E2(f.epsilon);
    if (f.name == "U1") want = oracle::U1(p, f.epsilon, f.pm);
    if (f.name == "U2") want = oracle::U2(p, f.epsilon);
    if (f.name == "U3") want = oracle::U3(p, f.epsilon, f.pm);
    if (f.name == "U4") want = oracle::U4(p, f.epsilon);
    ASSERT_EQ(want.rows(), 4) << f.name;
    EXPECT_LT(max_abs_diff(f.matrix, want), 1e-15) << f.name;
  }
}

TEST(Representations, OriginClassesMatchExpectedForms) {
  // Class 1 and 2 give the cos/sin form, class 3 the anti-diagonal form.
  const double p = 0.6;
  const auto classes = solve_pauli_eigenvalues(0, 0);
  const auto u1 = match_printed(build_representation(classes[0], p).u, p);
  const auto u3 = match_printed(build_representation(classes[2], p).u, p);
  ASSERT_TRUE(u1 && u3);
  EXPECT_EQ(u1->name, "U1");
  EXPECT_EQ(u3->name, "U2");
  EXPECT_LT(max_abs_diff(build_representation(classes[0], p).u, oracle::U1(p, 1, 1)), 1e-12);
  EXPECT_LT(max_abs_diff(build_representation(classes[1], p).u, oracle::U1(p, 1, -1)), 1e-12);
  EXPECT_LT(max_abs_diff(build_representation(classes[2], p).u, oracle::U2(p, 1)), 1e-12);
}

TEST(Representations, TangleTlAndBraidHold) {
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      for (const auto& c : solve_pauli_eigenvalues(m, n)) {
        const BuiltRepresentation rep = build_representation(c, 1.1);
        const Representation r = build_rep(rep.e_tilde, rep.u, 3);
        EXPECT_TRUE(check_temperley_lieb(r, 2.0).pass);
        EXPECT_TRUE(check_braid(r).pass);
        EXPECT_TRUE(check_tangle(r, 2.0).pass);
      }
    }
  }
}

TEST(Representations, ThreeEigenvaluePairsHaveLambdaProductMinusOne) {
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      for (const auto& c : solve_pauli_eigenvalues(m, n)) {
        const Mat u = build_representation(c, 0.7).u;
        if (distinct(u) != 3) continue;
        const BmwParams p = derive_params(u);
        EXPECT_LT(std::abs(p.lambdas[1] * p.lambdas[2] + 1.0), 1e-12);
      }
    }
  }
}

TEST(GateConstraints, DiagonalSpecializesBasisConstraints) {
  const UnitaryBasis pauli = UnitaryBasis::pauli();
  for (const auto& c : solve_pauli_eigenvalues(1, 0)) {
    const EigenAssignment mu = c.at(0.5);
    const auto t2 = theorem2_residuals(pauli, mu, 1, 0);
    const auto t3 = theorem3_residuals(GateCoefficients::diagonal(mu), pauli, 1, 0);
    for (int eq = 0; eq < 4; ++eq) {
      for (int k = 0; k < 16; ++k) EXPECT_NEAR(t2.cell[eq][k], t3.cell[eq][k], 1e-12);
    }
  }
  // Off-solution values must also agree.
  const EigenAssignment junk{{1.0, cplx(0, 1), -1.0, 1.0}};
  EXPECT_NEAR(theorem2_residuals(pauli, junk, 0, 1).max(),
              theorem3_residuals(GateCoefficients::diagonal(junk), pauli, 0, 1).max(), 1e-12);
}

TEST(GateConstraints, BraidMatrixInBellLikeBasis) {
  const UnitaryBasis basis = UnitaryBasis::bell_like(0.45);
  const auto g = GateCoefficients::from_gate(yb_gate(0.45), basis);
  EXPECT_LT(max_abs_diff(g.assemble(basis), yb_gate(0.45)), 1e-12);
  EXPECT_LE(theorem3_residuals(g, basis, 0, 0).max(), 1e-10);
}

TEST(GateConstraints, RandomGateFails) {
  Sampler s(43);
  const UnitaryBasis pauli = UnitaryBasis::pauli();
  for (int t = 0; t < 5; ++t) {
    const auto g = GateCoefficients::from_gate(s.haar_unitary(4), pauli);
    EXPECT_GT(theorem3_residuals(g, pauli, 0, 0).max(), 1e-2);
  }
}

TEST(SkewTranspose, SimplifiedAgreesWithOriginal) {
  const UnitaryBasis pauli = UnitaryBasis::pauli();
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      for (const auto& c : solve_pauli_eigenvalues(m, n)) {
        for (double p : {0.2, 2.3}) {
          EXPECT_LE(skew_transpose_agreement(pauli, c.at(p), m, n), 1e-12);
          EXPECT_TRUE(skew_transpose_check(pauli, c.at(p), m, n));
        }
      }
    }
  }
  Sampler s(44);
  const auto g = GateCoefficients::from_gate(s.haar_unitary(4), pauli);
  EXPECT_LE(skew_transpose_agreement(g, pauli, 0, 1), 1e-12);
}

TEST(SkewTranspose, DefinitionKeepsFactorOrder) {
  Sampler s(45);
  for (int t = 0; t < 20; ++t) {
    const Mat b = s.gaussian_matrix(2, 2), c = s.gaussian_matrix(2, 2);
    EXPECT_LE(skew_transpose_definition_residual(b, c), 1e-12);
    const SkewProduct sp{b, c};
    EXPECT_LT(max_abs_diff(sp.skew_transposed().value(), Mat(b.transpose() * c.transpose())), 1e-15);
  }
}
