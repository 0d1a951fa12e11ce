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

#include "bmw/tangle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace bmw {

namespace {

void store(ConstraintResiduals& r, int eq, int ij, const Mat& residual) {
  for (int e = 0; e < 4; ++e) r.cell[eq][4 * ij + e] = std::abs(residual(e / 2, e % 2));
}

void require_mn(int m, int n, const char* what) {
  require_bit(m, what);
  require_bit(n, what);
}

// Sample phases for filtering candidate eigenvalue patterns.
constexpr std::array<double, 4> kFilterPhis = {0.3, 0.7, 1.9, 2.5};
constexpr double kDedupPhi = 0.3;

}  // namespace

// --- UnitaryBasis ----------------------------------------------------------

UnitaryBasis::UnitaryBasis(std::array<Mat, 4> u, double tol) : u_(std::move(u)) {
  for (const auto& g : u_) {
    if (g.rows() != 2 || g.cols() != 2) throw std::invalid_argument("UnitaryBasis: gates must be 2x2");
  }
  if (orthonormality_residual(u_) > tol) {
    throw std::invalid_argument("UnitaryBasis: gates violate the trace orthonormality condition");
  }
}

UnitaryBasis UnitaryBasis::pauli() {
  return UnitaryBasis({pauli_w(0, 0), pauli_w(0, 1), pauli_w(1, 0), pauli_w(1, 1)});
}

UnitaryBasis UnitaryBasis::bell_like(double phi) {
  return UnitaryBasis({m_gate(0, 0, phi), m_gate(0, 1, phi), m_gate(1, 0, phi), m_gate(1, 1, phi)});
}

double UnitaryBasis::orthonormality_residual(const std::array<Mat, 4>& u) {
  double worst = 0.0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const cplx overlap = 0.5 * (u[b].adjoint() * u[a]).trace();
      worst = std::max(worst, std::abs(overlap - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

// --- coefficients ----------------------------------------------------------

GateCoefficients GateCoefficients::diagonal(const EigenAssignment& mu) {
  GateCoefficients c;
  for (int a = 0; a < 4; ++a) c.g[a][a] = mu[a];
  return c;
}

GateCoefficients GateCoefficients::from_gate(const Mat& gate, const UnitaryBasis& basis) {
  if (gate.rows() != 4 || gate.cols() != 4) throw std::invalid_argument("from_gate: 4x4 gate");
  GateCoefficients c;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      c.g[a][b] = basis.state(a / 2, a % 2).dot(gate * basis.state(b / 2, b % 2));
    }
  }
  return c;
}

Mat GateCoefficients::assemble(const UnitaryBasis& basis) const {
  Mat out = Mat::Zero(4, 4);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) out += g[a][b] * outer(basis.state(a / 2, a % 2), basis.state(b / 2, b % 2));
  }
  return out;
}

double ConstraintResiduals::max() const {
  double worst = 0.0;
  for (int eq = 0; eq < 4; ++eq) worst = std::max(worst, max_equation(eq));
  return worst;
}

double ConstraintResiduals::max_equation(int eq) const {
  const auto& row = cell.at(static_cast<std::size_t>(eq));
  return *std::max_element(row.begin(), row.end());
}

// --- constraint systems -----------------------------------------------------

ConstraintResiduals theorem1_residuals(double phi, const SpectralData& lambda) {
  std::array<Mat, 4> m;
  for (int a = 0; a < 4; ++a) m[a] = m_gate(a / 2, a % 2, phi);
  const Mat& m00 = m[0];
  ConstraintResiduals r;
  for (int ij = 0; ij < 4; ++ij) {
    const Mat& mi = m[ij];
    std::array<Mat, 4> lhs;
    lhs.fill(Mat::Zero(2, 2));
    for (int kl = 0; kl < 4; ++kl) {
      const cplx c = lambda.lambda[ij] * lambda.lambda[kl];
      const Mat& mk = m[kl];
      lhs[0] += c * mk * mi.conjugate() * m00.transpose() * mk.adjoint();
      lhs[1] += c * mk.transpose() * mi.adjoint() * m00 * mk.conjugate();
      lhs[2] += c * mk * m00.conjugate() * mi.transpose() * mk.adjoint();
      lhs[3] += c * mk.transpose() * m00.adjoint() * mi * mk.conjugate();
    }
    store(r, 0, ij, lhs[0] - 2.0 * m00 * mi.conjugate());
    store(r, 1, ij, lhs[1] - 2.0 * m00.transpose() * mi.adjoint());
    store(r, 2, ij, lhs[2] - 2.0 * mi.transpose() * m00.adjoint());
    store(r, 3, ij, lhs[3] - 2.0 * mi * m00.conjugate());
  }
  return r;
}

std::array<double, 4> corollary1_check(double phi, const std::vector<Ket>& probes) {
  std::array<Mat, 4> m;
  std::array<Ket, 4> psi;
  for (int a = 0; a < 4; ++a) {
    m[a] = m_gate(a / 2, a % 2, phi);
    psi[a] = bell_like_state(m[a]);
  }
  const Mat& m00 = m[0];
  std::array<double, 4> worst{};
  for (const Ket& a : probes) {
    require_state(a, "corollary1_check");
    const Mat bra = a.adjoint();
    Ket r1 = Ket::Zero(8), r2 = Ket::Zero(8);
    Mat r3 = Mat::Zero(1, 8), r4 = Mat::Zero(1, 8);
    for (int ij = 0; ij < 4; ++ij) {
      const Mat& mi = m[ij];
      r1 += kron(psi[ij], Ket(m00 * mi.conjugate() * a));
      r2 += kron(Ket(m00.transpose() * mi.adjoint() * a), psi[ij]);
      r3 += kron(Mat(psi[ij].adjoint()), Mat(bra * mi.transpose() * m00.adjoint()));
      r4 += kron(Mat(bra * mi * m00.conjugate()), Mat(psi[ij].adjoint()));
    }
    worst[0] = std::max(worst[0], max_abs_diff(Ket(kron(a, psi[0])), 0.5 * r1));
    worst[1] = std::max(worst[1], max_abs_diff(Ket(kron(psi[0], a)), 0.5 * r2));
    worst[2] = std::max(worst[2], max_abs_diff(Mat(kron(bra, Mat(psi[0].adjoint()))), 0.5 * r3));
    worst[3] = std::max(worst[3], max_abs_diff(Mat(kron(Mat(psi[0].adjoint()), bra)), 0.5 * r4));
  }
  return worst;
}

ConstraintResiduals theorem2_residuals(const UnitaryBasis& basis, const EigenAssignment& mu, int m,
                                       int n) {
  require_mn(m, n, "theorem2_residuals");
  const Mat& um = basis.at(m, n);
  ConstraintResiduals r;
  for (int ij = 0; ij < 4; ++ij) {
    const Mat& ui = basis[ij];
    std::array<Mat, 4> lhs;
    lhs.fill(Mat::Zero(2, 2));
    for (int kl = 0; kl < 4; ++kl) {
      const cplx c = 0.5 * mu[ij] * mu[kl];
      const Mat& uk = basis[kl];
      lhs[0] += c * um.adjoint() * uk * ui.conjugate() * um.transpose() * uk.adjoint() * um;
      lhs[1] += c * um.conjugate() * uk.transpose() * ui.adjoint() * um * uk.conjugate() * um.transpose();
      lhs[2] += c * um.adjoint() * uk * um.conjugate() * ui.transpose() * uk.adjoint() * um;
      lhs[3] += c * um.conjugate() * uk.transpose() * um.adjoint() * ui * uk.conjugate() * um.transpose();
    }
    store(r, 0, ij, lhs[0] - ui.conjugate() * um.transpose());
    store(r, 1, ij, lhs[1] - ui.adjoint() * um);
    store(r, 2, ij, lhs[2] - um.conjugate() * ui.transpose());
    store(r, 3, ij, lhs[3] - um.adjoint() * ui);
  }
  return r;
}

cplx eigenvalue_sum(const EigenAssignment& mu, int m, int n) {
  require_mn(m, n, "eigenvalue_sum");
  cplx total = 0.0;
  for (int kl = 0; kl < 4; ++kl) total += mu[kl];
  return 0.5 * mu.at(m, n) * total;
}

std::array<std::array<int, 4>, 4> pauli_sign_table(int m, int n) {
  require_mn(m, n, "pauli_sign_table");
  const UnitaryBasis basis = UnitaryBasis::pauli();
  const Mat& um = basis.at(m, n);
  std::array<std::array<int, 4>, 4> s{};
  for (int ij = 0; ij < 4; ++ij) {
    const Mat rhs = basis[ij].conjugate() * um.transpose();
    for (int kl = 0; kl < 4; ++kl) {
      const Mat& uk = basis[kl];
      const Mat term = um.adjoint() * uk * basis[ij].conjugate() * um.transpose() * uk.adjoint() * um;
      s[ij][kl] = (0.5 * (rhs.adjoint() * term).trace()).real() > 0 ? 1 : -1;
    }
  }
  return s;
}

double scalar_system_residual(const EigenAssignment& mu, int m, int n) {
  const auto s = pauli_sign_table(m, n);
  double worst = 0.0;
  for (int ij = 0; ij < 4; ++ij) {
    cplx total = 0.0;
    for (int kl = 0; kl < 4; ++kl) total += 0.5 * mu[ij] * mu[kl] * static_cast<double>(s[ij][kl]);
    worst = std::max(worst, std::abs(total - 1.0));
  }
  return worst;
}

EigenAssignment SolutionClass::at(double phi) const {
  EigenAssignment e;
  for (int a = 0; a < 4; ++a) e.mu[a] = static_cast<double>(sign[a]) * expi(exponent[a] * phi);
  return e;
}

std::string SolutionClass::formula() const {
  static const char* const names[] = {"mu00", "mu01", "mu10", "mu11"};
  std::string out;
  for (int a = 0; a < 4; ++a) {
    if (a) out += ", ";
    out += names[a];
    out += sign[a] < 0 ? "=-" : "=";
    out += exponent[a] < 0 ? "e^{-i phi}" : "e^{i phi}";
  }
  return out;
}

std::vector<SolutionClass> solve_pauli_eigenvalues(int m, int n) {
  require_mn(m, n, "solve_pauli_eigenvalues");
  const UnitaryBasis basis = UnitaryBasis::pauli();
  std::vector<SolutionClass> found;
  // Each of mu_01, mu_10, mu_11 is one of +e^{i phi}, +e^{-i phi}, -e^{i phi}, -e^{-i phi}.
  for (int code = 0; code < 64; ++code) {
    SolutionClass c;
    c.m = m;
    c.n = n;
    c.epsilon = n ? -1 : 1;
    c.sign[0] = 1;
    c.exponent[0] = 1;
    for (int a = 1; a < 4; ++a) {
      const int choice = (code >> (2 * (a - 1))) & 3;
      c.sign[a] = (choice & 2) ? -1 : 1;
      c.exponent[a] = (choice & 1) ? -1 : 1;
    }
    bool ok = true;
    for (double phi : kFilterPhis) {
      const EigenAssignment mu = c.at(phi);
      if (scalar_system_residual(mu, m, n) > kRelationTol ||
          theorem2_residuals(basis, mu, m, n).max() > kRelationTol) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    const EigenAssignment probe = c.at(kDedupPhi);
    const bool duplicate = std::any_of(found.begin(), found.end(), [&](const SolutionClass& f) {
      const EigenAssignment other = f.at(kDedupPhi);
      for (int a = 0; a < 4; ++a) {
        if (std::abs(other[a] - probe[a]) > kArithmeticTol) return false;
      }
      return true;
    });
    if (!duplicate) found.push_back(c);
  }
  const auto key = [](const SolutionClass& c) {
    return std::make_tuple(c.sign[1], c.exponent[1], c.sign[2], c.exponent[2], c.sign[3], c.exponent[3]);
  };
  std::sort(found.begin(), found.end(),
            [&](const SolutionClass& a, const SolutionClass& b) { return key(a) > key(b); });
  for (std::size_t k = 0; k < found.size(); ++k) found[k].id = static_cast<int>(k) + 1;
  return found;
}

BuiltRepresentation build_representation(const SolutionClass& cls, double phi) {
  const EigenAssignment mu = cls.at(phi);
  BuiltRepresentation rep;
  rep.e_tilde = projector(bell_state(cls.m, cls.n));
  rep.u = Mat::Zero(4, 4);
  for (int a = 0; a < 4; ++a) rep.u += mu[a] * projector(bell_state(a / 2, a % 2));
  return rep;
}

std::vector<PrintedForm> printed_representations(double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  const cplx ep = expi(phi), em = expi(-phi);
  std::vector<PrintedForm> out;
  for (int eps : {1, -1}) {
    const double e = eps;
    Mat e1 = Mat::Zero(4, 4), e2 = Mat::Zero(4, 4);
    e1(0, 0) = e1(3, 3) = 0.5;
    e1(0, 3) = e1(3, 0) = 0.5 * e;
    e2(1, 1) = e2(2, 2) = 0.5;
    e2(1, 2) = e2(2, 1) = 0.5 * e;
    out.push_back({"E1", eps, 0, e1});
    out.push_back({"E2", eps, 0, e2});
    for (int pm : {1, -1}) {
      const double p = pm;
      Mat u1(4, 4), u3(4, 4);
      // clang-format off
      u1 << c,      0,          0,          kI * s,
            0,      -kI * e * s, p * c,     0,
            0,      p * c,      -kI * e * s, 0,
            kI * s, 0,          0,          c;
      u3 << kI * s, 0,          0,          c,
            0,      p * c,      -kI * e * s, 0,
            0,      -kI * e * s, p * c,     0,
            c,      0,          0,          kI * s;
      // clang-format on
      out.push_back({"U1", eps, pm, u1});
      out.push_back({"U3", eps, pm, u3});
    }
    Mat u2 = Mat::Zero(4, 4), u4 = Mat::Zero(4, 4);
    u2(0, 3) = u2(3, 0) = ep;
    u2(1, 1) = u2(2, 2) = e * em;
    u4(0, 0) = u4(3, 3) = ep;
    u4(1, 2) = u4(2, 1) = e * em;
    out.push_back({"U2", eps, 0, u2});
    out.push_back({"U4", eps, 0, u4});
  }
  return out;
}

std::optional<PrintedForm> match_printed(const Mat& m, double phi, double tol) {
  for (auto& f : printed_representations(phi)) {
    if (approx_eq(m, f.matrix, tol)) return f;
  }
  return std::nullopt;
}

ConstraintResiduals theorem3_residuals(const GateCoefficients& coeffs, const UnitaryBasis& basis,
                                       int m, int n) {
  require_mn(m, n, "theorem3_residuals");
  const Mat& um = basis.at(m, n);
  ConstraintResiduals r;
  for (int a1 = 0; a1 < 4; ++a1) {
    std::array<Mat, 4> lhs;
    lhs.fill(Mat::Zero(2, 2));
    for (int k1 = 0; k1 < 4; ++k1) {
      const Mat& uk1 = basis[k1];
      for (int a2 = 0; a2 < 4; ++a2) {
        const Mat& ua2 = basis[a2];
        for (int k2 = 0; k2 < 4; ++k2) {
          const cplx c = 0.5 * coeffs.g[a1][k1] * coeffs.g[a2][k2];
          if (c == 0.0) continue;
          const Mat& uk2 = basis[k2];
          lhs[0] += c * um.adjoint() * ua2 * uk1.conjugate() * um.transpose() * uk2.adjoint() * um;
          lhs[1] += c * um.conjugate() * ua2.transpose() * uk1.adjoint() * um * uk2.conjugate() * um.transpose();
          lhs[2] += c * um.adjoint() * ua2 * um.conjugate() * uk1.transpose() * uk2.adjoint() * um;
          lhs[3] += c * um.conjugate() * ua2.transpose() * um.adjoint() * uk1 * uk2.conjugate() * um.transpose();
        }
      }
    }
    const Mat& ui = basis[a1];
    store(r, 0, a1, lhs[0] - ui.conjugate() * um.transpose());
    store(r, 1, a1, lhs[1] - ui.adjoint() * um);
    store(r, 2, a1, lhs[2] - um.conjugate() * ui.transpose());
    store(r, 3, a1, lhs[3] - um.adjoint() * ui);
  }
  return r;
}

// --- skew-transpose reformulation -------------------------------------------

SkewProduct o_operator(const UnitaryBasis& basis, int m, int n, int a, int b) {
  return {basis.at(m, n).adjoint(), basis.at(a, b)};
}

namespace {

struct OTerms {
  Mat o;        // O
  Mat o_dag;    // O^dag
  Mat st;       // O^ST
  Mat st_dag;   // (O^ST)^dag
};

std::array<OTerms, 4> o_terms(const UnitaryBasis& basis, int m, int n) {
  std::array<OTerms, 4> t;
  for (int a = 0; a < 4; ++a) {
    const SkewProduct o = o_operator(basis, m, n, a / 2, a % 2);
    const SkewProduct st = o.skew_transposed();
    t[a] = {o.value(), o.adjoint().value(), st.value(), st.adjoint().value()};
  }
  return t;
}

}  // namespace

ConstraintResiduals simplified_theorem2_residuals(const UnitaryBasis& basis, const EigenAssignment& mu,
                                                  int m, int n) {
  require_mn(m, n, "simplified_theorem2_residuals");
  const auto o = o_terms(basis, m, n);
  ConstraintResiduals r;
  for (int ij = 0; ij < 4; ++ij) {
    std::array<Mat, 4> lhs;
    lhs.fill(Mat::Zero(2, 2));
    for (int kl = 0; kl < 4; ++kl) {
      const cplx eta = 0.5 * mu[ij] * mu[kl];
      lhs[0] += eta * o[kl].o * o[ij].st_dag * o[kl].o_dag;
      lhs[1] += eta * o[kl].st * o[ij].o_dag * o[kl].st_dag;
      lhs[2] += eta * o[kl].o * o[ij].st * o[kl].o_dag;
      lhs[3] += eta * o[kl].st * o[ij].o * o[kl].st_dag;
    }
    store(r, 0, ij, lhs[0] - o[ij].st_dag);
    store(r, 1, ij, lhs[1] - o[ij].o_dag);
    store(r, 2, ij, lhs[2] - o[ij].st);
    store(r, 3, ij, lhs[3] - o[ij].o);
  }
  return r;
}

ConstraintResiduals simplified_theorem3_residuals(const GateCoefficients& coeffs,
                                                  const UnitaryBasis& basis, int m, int n) {
  require_mn(m, n, "simplified_theorem3_residuals");
  const auto o = o_terms(basis, m, n);
  ConstraintResiduals r;
  for (int a1 = 0; a1 < 4; ++a1) {
    std::array<Mat, 4> lhs;
    lhs.fill(Mat::Zero(2, 2));
    for (int k1 = 0; k1 < 4; ++k1) {
      for (int a2 = 0; a2 < 4; ++a2) {
        for (int k2 = 0; k2 < 4; ++k2) {
          const cplx eta = 0.5 * coeffs.g[a1][k1] * coeffs.g[a2][k2];
          if (eta == 0.0) continue;
          lhs[0] += eta * o[a2].o * o[k1].st_dag * o[k2].o_dag;
          lhs[1] += eta * o[a2].st * o[k1].o_dag * o[k2].st_dag;
          lhs[2] += eta * o[a2].o * o[k1].st * o[k2].o_dag;
          lhs[3] += eta * o[a2].st * o[k1].o * o[k2].st_dag;
        }
      }
    }
    store(r, 0, a1, lhs[0] - o[a1].st_dag);
    store(r, 1, a1, lhs[1] - o[a1].o_dag);
    store(r, 2, a1, lhs[2] - o[a1].st);
    store(r, 3, a1, lhs[3] - o[a1].o);
  }
  return r;
}

namespace {
double cellwise_gap(const ConstraintResiduals& a, const ConstraintResiduals& b) {
  double worst = 0.0;
  for (int eq = 0; eq < 4; ++eq) {
    for (int c = 0; c < 16; ++c) worst = std::max(worst, std::abs(a.cell[eq][c] - b.cell[eq][c]));
  }
  return worst;
}
}  // namespace

double skew_transpose_agreement(const UnitaryBasis& basis, const EigenAssignment& mu, int m, int n) {
  return cellwise_gap(theorem2_residuals(basis, mu, m, n),
                      simplified_theorem2_residuals(basis, mu, m, n));
}

double skew_transpose_agreement(const GateCoefficients& coeffs, const UnitaryBasis& basis, int m,
                                int n) {
  return cellwise_gap(theorem3_residuals(coeffs, basis, m, n),
                      simplified_theorem3_residuals(coeffs, basis, m, n));
}

bool skew_transpose_check(const UnitaryBasis& basis, const EigenAssignment& mu, int m, int n,
                          double tol) {
  return skew_transpose_agreement(basis, mu, m, n) <= tol;
}

double skew_transpose_definition_residual(const Mat& b, const Mat& c) {
  const SkewProduct p{b, c};
  const double def = max_abs_diff(p.skew_transposed().value(), Mat(b.transpose() * c.transpose()));
  const double commute =
      max_abs_diff(p.skew_transposed().adjoint().value(), p.adjoint().skew_transposed().value());
  return std::max(def, commute);
}

}  // namespace bmw
