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

#include "bmw/gates.hpp"
#include "bmw/tensor.hpp"

namespace bmw {

/// Four single-qubit unitaries U_ij (index 2i + j) with
/// 1/2 tr(U_{i2j2}^dag U_{i1j1}) = delta delta.
class UnitaryBasis {
 public:
  /// Throws std::invalid_argument unless the gates are 2x2 and orthonormal within `tol`.
  explicit UnitaryBasis(std::array<Mat, 4> u, double tol = kRelationTol);

  /// U_ij = X^i Z^j.
  static UnitaryBasis pauli();
  /// U_ij = M_ij(phi).
  static UnitaryBasis bell_like(double phi);

  const Mat& at(int i, int j) const { return u_[pair_index(i, j)]; }
  const Mat& operator[](int idx) const { return u_[static_cast<std::size_t>(idx)]; }
  /// |Psi_{U_ij}> = (1 (x) U_ij)|EPR>.
  Ket state(int i, int j) const { return bell_like_state(at(i, j)); }

  static double orthonormality_residual(const std::array<Mat, 4>& u);

 private:
  std::array<Mat, 4> u_;
};

/// Eigenvalues mu_ij, index 2i + j.
struct EigenAssignment {
  std::array<cplx, 4> mu{};
  cplx at(int i, int j) const { return mu[pair_index(i, j)]; }
  cplx operator[](int idx) const { return mu[static_cast<std::size_t>(idx)]; }
};

/// G~_{ij,kl}: G = sum G~_{ij,kl} |Psi_{U_ij}><Psi_{U_kl}|; g[2i+j][2k+l].
struct GateCoefficients {
  std::array<std::array<cplx, 4>, 4> g{};

  static GateCoefficients diagonal(const EigenAssignment& mu);
  /// G~_{ij,kl} = <Psi_{U_ij}| G |Psi_{U_kl}>.
  static GateCoefficients from_gate(const Mat& gate, const UnitaryBasis& basis);
  Mat assemble(const UnitaryBasis& basis) const;
};

/// Residuals of four constraint equations; cell[eq][4 * (2i + j) + entry]
/// is the modulus of one entry of the 2x2 residual matrix for (i, j).
struct ConstraintResiduals {
  std::array<std::array<double, 16>, 4> cell{};
  double max() const;
  double max_equation(int eq) const;
};

/// Four constraints on M_ij with the braid eigenvalues lambda_ij, e.g.
/// sum_kl lambda_ij lambda_kl M_kl M_ij^* M_00^T M_kl^dag - 2 M_00 M_ij^*.
ConstraintResiduals theorem1_residuals(double phi, const SpectralData& lambda = yb_spectral_data());

/// Vector and bra-form teleportation equations attached to the four tangle
/// matrix relations; max residual per equation over the probes.
std::array<double, 4> corollary1_check(double phi, const std::vector<Ket>& probes);

/// Four constraints for E~ = |Psi_{U_mn}><Psi_{U_mn}| and U = sum mu_ij |Psi_{U_ij}><Psi_{U_ij}|.
ConstraintResiduals theorem2_residuals(const UnitaryBasis& basis, const EigenAssignment& mu, int m,
                                       int n);

/// 1/2 mu_mn sum_kl mu_kl; equals 1 for any solution.
cplx eigenvalue_sum(const EigenAssignment& mu, int m, int n);

/// Scalar reduction of the first constraint on the Pauli basis:
/// U^dag_mn W_kl W_ij^* W_mn^T W_kl^dag W_mn = s[ij][kl] W_ij^* W_mn^T with s = +-1.
std::array<std::array<int, 4>, 4> pauli_sign_table(int m, int n);
/// max_ij |1/2 sum_kl mu_ij mu_kl s[ij][kl] - 1|.
double scalar_system_residual(const EigenAssignment& mu, int m, int n);

/// A phi-parameterized eigenvalue solution on the Pauli basis.
/// mu_ij = sign_ij * e^{i exponent_ij phi}; mu_00 = e^{i phi} always.
struct SolutionClass {
  int id = 0;  // 1-based within (m, n)
  int m = 0;
  int n = 0;
  int epsilon = 1;  // (-1)^n; sign in the printed projector
  std::array<int, 4> sign{};
  std::array<int, 4> exponent{};

  EigenAssignment at(double phi) const;
  /// E.g. "mu00=e^{i phi}, mu01=-e^{-i phi}, ...".
  std::string formula() const;
};

/// Enumerates mu_00 = e^{i phi} and mu_kl = +-e^{+-i phi}, keeps candidates
/// solving the scalar system and all four constraints at several phi, drops
/// duplicates by value at phi = 0.3 and orders them by descending
/// (sign, exponent) of mu_01, mu_10, mu_11.
std::vector<SolutionClass> solve_pauli_eigenvalues(int m, int n);

struct BuiltRepresentation {
  Mat e_tilde;
  Mat u;
};

/// E~ = |psi(mn)><psi(mn)|, U = sum mu_ij |psi(ij)><psi(ij)| (assembled from projectors).
BuiltRepresentation build_representation(const SolutionClass& cls, double phi);

/// A matrix in the printed family of representations.
struct PrintedForm {
  std::string name;  // "E1", "E2", "U1", "U2", "U3", "U4"
  int epsilon = 1;
  int pm = 0;  // +1 / -1 for the forms with a +- choice, else 0
  Mat matrix;
};

/// All printed projector and gate forms at `phi`.
std::vector<PrintedForm> printed_representations(double phi);
/// The printed form equal to `m` within `tol`, if any.
std::optional<PrintedForm> match_printed(const Mat& m, double phi, double tol = kArithmeticTol);

/// Four general constraints with 16 coefficients G~ (double sum over k1l1 and i2j2, k2l2).
ConstraintResiduals theorem3_residuals(const GateCoefficients& coeffs, const UnitaryBasis& basis,
                                       int m, int n);

/// A product B C kept in factored form so the skew-transpose (B C)^ST = B^T C^T
/// is well defined.
struct SkewProduct {
  Mat left;
  Mat right;

  Mat value() const { return left * right; }
  SkewProduct skew_transposed() const { return {left.transpose(), right.transpose()}; }
  SkewProduct adjoint() const { return {right.adjoint(), left.adjoint()}; }
};

/// O_ab = U_mn^dag U_ab in factored form.
SkewProduct o_operator(const UnitaryBasis& basis, int m, int n, int a, int b);

/// The constraints rewritten with O and eta = 1/2 mu_ij mu_kl.
ConstraintResiduals simplified_theorem2_residuals(const UnitaryBasis& basis, const EigenAssignment& mu,
                                                  int m, int n);
/// The general constraints rewritten with O and eta = 1/2 G~ G~.
ConstraintResiduals simplified_theorem3_residuals(const GateCoefficients& coeffs,
                                                  const UnitaryBasis& basis, int m, int n);

/// Max cellwise difference between original and simplified residuals.
double skew_transpose_agreement(const UnitaryBasis& basis, const EigenAssignment& mu, int m, int n);
double skew_transpose_agreement(const GateCoefficients& coeffs, const UnitaryBasis& basis, int m,
                                int n);
/// True when the agreement is within `tol`.
bool skew_transpose_check(const UnitaryBasis& basis, const EigenAssignment& mu, int m, int n,
                          double tol = kArithmeticTol);

/// Max of |(BC)^ST - B^T C^T| and |((BC)^ST)^dag - ((BC)^dag)^ST|.
double skew_transpose_definition_residual(const Mat& b, const Mat& c);

}  // namespace bmw
