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

#include "bmw/teleport.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bmw {

namespace {

void require_qubit(const Ket& alpha, const char* what) {
  require_state(alpha, what);
  if (alpha.size() != 2) throw std::invalid_argument(std::string(what) + ": expected one qubit");
}

Mat pow_gate(const Mat& g, int e) { return (e % 2) ? g : identity(2); }

// Samples one branch among four unnormalized remainders and finishes the run.
TeleportResult finish(const std::array<Ket, 4>& branches, const std::array<Mat, 4>& corrections,
                      const Ket& target, Sampler& sampler) {
  TeleportResult res;
  for (int k = 0; k < 4; ++k) res.probabilities[k] = branches[k].squaredNorm();
  const int pick = sampler.choose(res.probabilities);
  res.outcome.i = pick / 2;
  res.outcome.j = pick % 2;
  res.outcome.probability = res.probabilities[pick];
  res.outcome.post_state = normalized(branches[pick]);
  res.correction = corrections[pick];
  res.corrected = res.correction * res.outcome.post_state;
  res.fidelity = fidelity(target, res.corrected);
  return res;
}

Ket yb_output(const Ket& alpha, int k, int l, double phi) {
  const Mat b = yb_gate(phi);
  const Mat i2 = identity(2);
  return kron(b, i2) * kron(i2, b) * kron(alpha, basis_ket({k, l}));
}

}  // namespace

Ket project_leading_pair(const Ket& state, const Ket& bra_state) {
  const Eigen::Index rest = state.size() / 4;
  if (bra_state.size() != 4 || rest * 4 != state.size()) {
    throw std::invalid_argument("project_leading_pair: incompatible dimensions");
  }
  Ket out = Ket::Zero(rest);
  for (Eigen::Index q = 0; q < 4; ++q) out += std::conj(bra_state(q)) * state.segment(q * rest, rest);
  return out;
}

Ket project_trailing_pair(const Ket& state, const Ket& bra_state) {
  const Eigen::Index rest = state.size() / 4;
  if (bra_state.size() != 4 || rest * 4 != state.size()) {
    throw std::invalid_argument("project_trailing_pair: incompatible dimensions");
  }
  Ket out = Ket::Zero(rest);
  for (Eigen::Index r = 0; r < rest; ++r) {
    for (Eigen::Index q = 0; q < 4; ++q) out(r) += std::conj(bra_state(q)) * state(r * 4 + q);
  }
  return out;
}

TeleportResult teleport_standard(const Ket& alpha, Sampler& sampler) {
  require_qubit(alpha, "teleport_standard");
  const Ket state = kron(alpha, epr_pair());
  std::array<Ket, 4> branches;
  std::array<Mat, 4> corrections;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      branches[pair_index(i, j)] = project_leading_pair(state, bell_state(i, j));
      corrections[pair_index(i, j)] = pauli_w(i, j).adjoint();
    }
  }
  return finish(branches, corrections, alpha, sampler);
}

TeleportResult teleport_standard(const Ket& alpha, std::uint64_t seed) {
  Sampler s(seed);
  return teleport_standard(alpha, s);
}

TeleportResult teleport_bell_like(const Ket& alpha, double phi, Sampler& sampler) {
  require_qubit(alpha, "teleport_bell_like");
  const Mat m00 = m_gate(0, 0, phi);
  const Ket state = kron(alpha, bell_like_state(m00));
  std::array<Ket, 4> branches;
  std::array<Mat, 4> corrections;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Mat mij = m_gate(i, j, phi);
      branches[pair_index(i, j)] = project_leading_pair(state, bell_like_state(mij));
      corrections[pair_index(i, j)] = (m00 * mij.conjugate()).adjoint();
    }
  }
  return finish(branches, corrections, alpha, sampler);
}

TeleportResult teleport_bell_like(const Ket& alpha, double phi, std::uint64_t seed) {
  Sampler s(seed);
  return teleport_bell_like(alpha, phi, s);
}

PhaseTable extract_phases(double phi) {
  PhaseTable t;
  t.phi = phi;
  const Mat b = yb_gate(phi);
  const Mat r = gates::phase_shift(phi);
  const Mat local = kron(r, Mat(r * gates::h()));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Ket in = basis_ket({i, j});
      const Ket lhs = b * in;
      const Ket lhs_dag = b.adjoint() * in;
      const Ket ref = local * bell_state(j, i);
      const Ket ref_dag = local * bell_state((j + 1) % 2, (i + 1) % 2);
      const auto ph = approx_eq_phase(lhs, ref, kRelationTol);
      const auto ph_dag = approx_eq_phase(lhs_dag, ref_dag, kRelationTol);
      if (!ph || !ph_dag) throw std::logic_error("extract_phases: no phase match");
      t.alpha_b[pair_index(i, j)] = std::arg(*ph);
      t.alpha_b_dagger[pair_index(i, j)] = std::arg(*ph_dag);
      t.max_residual = std::max({t.max_residual, max_abs_diff(lhs, *ph * ref),
                                 max_abs_diff(lhs_dag, *ph_dag * ref_dag)});
    }
  }
  return t;
}

Mat v_gate(int k, int l, const PhaseTable& phases) {
  require_bit(k, "v_gate");
  require_bit(l, "v_gate");
  const Mat r = gates::phase_shift(phases.phi);
  return expi(phases.b(k, l)) * r * gates::h() * pow_gate(gates::x(), l) * pow_gate(gates::z(), k) *
         r;
}

Mat u_gate(int i, int j, const PhaseTable& phases) {
  require_bit(i, "u_gate");
  require_bit(j, "u_gate");
  const Mat rd = gates::phase_shift(phases.phi).adjoint();
  return expi(-phases.b_dagger(i, j)) * rd * pow_gate(gates::z(), i + 1) *
         pow_gate(gates::x(), j + 1) * gates::h() * rd;
}

Mat w_closed(int i, int j, int k, int l, const PhaseTable& phases) {
  for (int bit : {i, j, k, l}) require_bit(bit, "w_closed");
  const Mat r = gates::phase_shift(phases.phi);
  const double sign = ((l * (k + j + 1)) % 2) ? -1.0 : 1.0;
  return sign * expi(phases.b(k, l) - phases.b_dagger(i, j)) * r *
         pow_gate(gates::x(), j + k + 1) * pow_gate(gates::z(), i + l + 1) * r.adjoint();
}

Mat w_product(int i, int j, int k, int l, const PhaseTable& phases) {
  return v_gate(k, l, phases) * u_gate(i, j, phases).transpose();
}

Mat reconstruct_b_from_v(const PhaseTable& phases) {
  Mat out = Mat::Zero(4, 4);
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) out += outer(bell_like_state(v_gate(k, l, phases)), basis_ket({k, l}));
  }
  return out;
}

Mat reconstruct_b_from_u(const PhaseTable& phases) {
  Mat out = Mat::Zero(4, 4);
  const Mat i2 = identity(2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      // <EPR|(1 (x) U) as a row; outer() would conjugate, so build it directly.
      const Mat row = epr_pair().adjoint() * kron(i2, u_gate(i, j, phases));
      out += basis_ket({i, j}) * row;
    }
  }
  return out;
}

TeleportResult teleport_with_yb(const Ket& alpha, int k, int l, double phi, Sampler& sampler) {
  require_qubit(alpha, "teleport_with_yb");
  require_bit(k, "teleport_with_yb");
  require_bit(l, "teleport_with_yb");
  const PhaseTable phases = extract_phases(phi);
  const Ket state = yb_output(alpha, k, l, phi);
  std::array<Ket, 4> branches;
  std::array<Mat, 4> corrections;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      branches[pair_index(i, j)] = project_leading_pair(state, basis_ket({i, j}));
      corrections[pair_index(i, j)] = w_closed(i, j, k, l, phases).adjoint();
    }
  }
  return finish(branches, corrections, alpha, sampler);
}

TeleportResult teleport_with_yb(const Ket& alpha, int k, int l, double phi, std::uint64_t seed) {
  Sampler s(seed);
  return teleport_with_yb(alpha, k, l, phi, s);
}

std::string_view to_string(TeleportIdentity id) {
  switch (id) {
    case TeleportIdentity::Original:
      return "original";
    case TeleportIdentity::OriginalTranspose:
      return "original-transpose";
    case TeleportIdentity::Projector:
      return "projector";
    case TeleportIdentity::Half:
      return "bell-like-projector";
    case TeleportIdentity::M00:
      return "m00";
    case TeleportIdentity::M00Transpose:
      return "m00-transpose";
    case TeleportIdentity::E00:
      return "e00";
    case TeleportIdentity::E00Transpose:
      return "e00-transpose";
    case TeleportIdentity::Completeness:
      return "completeness";
    case TeleportIdentity::YangBaxter:
      return "yang-baxter";
  }
  return "?";
}

std::vector<TeleportIdentity> all_teleport_identities() {
  using T = TeleportIdentity;
  return {T::Original, T::OriginalTranspose, T::Projector, T::Half,         T::M00,
          T::M00Transpose, T::E00,           T::E00Transpose, T::Completeness, T::YangBaxter};
}

double check_teleportation_identity(TeleportIdentity id, double phi, const std::vector<Ket>& probes) {
  const Mat i2 = identity(2);
  const Mat m00 = m_gate(0, 0, phi);
  const Ket psi00 = bell_like_state(m00);
  const Mat e00 = projector(psi00);
  double worst = 0.0;

  if (id == TeleportIdentity::Completeness) {
    Mat bell = Mat::Zero(4, 4), bell_like = Mat::Zero(4, 4);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        bell += projector(bell_state(i, j));
        bell_like += tl_projector(i, j, phi);
      }
    }
    return std::max(max_abs_diff(bell, identity(4)), max_abs_diff(bell_like, identity(4)));
  }

  const PhaseTable phases =
      id == TeleportIdentity::YangBaxter ? extract_phases(phi) : PhaseTable{};
  for (const Ket& a : probes) {
    require_qubit(a, "check_teleportation_identity");
    switch (id) {
      case TeleportIdentity::Original:
      case TeleportIdentity::OriginalTranspose: {
        const bool tr = id == TeleportIdentity::OriginalTranspose;
        Ket rhs = Ket::Zero(8);
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            rhs += tr ? Ket(kron(Ket(pauli_w(i, j).transpose() * a), bell_state(i, j)))
                      : Ket(kron(bell_state(i, j), Ket(pauli_w(i, j) * a)));
          }
        }
        const Ket lhs = tr ? Ket(kron(epr_pair(), a)) : Ket(kron(a, epr_pair()));
        worst = std::max(worst, max_abs_diff(lhs, 0.5 * rhs));
        break;
      }
      case TeleportIdentity::Projector:
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            const Ket lhs = kron(projector(bell_state(i, j)), i2) * kron(a, epr_pair());
            const Ket rhs = 0.5 * kron(bell_state(i, j), Ket(pauli_w(i, j) * a));
            worst = std::max(worst, max_abs_diff(lhs, rhs));
          }
        }
        break;
      case TeleportIdentity::Half:
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            const Mat mij = m_gate(i, j, phi);
            const Ket lhs = kron(tl_projector(i, j, phi), i2) * kron(a, psi00);
            const Ket rhs = 0.5 * kron(bell_like_state(mij), Ket(m00 * mij.conjugate() * a));
            worst = std::max(worst, max_abs_diff(lhs, rhs));
          }
        }
        break;
      case TeleportIdentity::M00:
      case TeleportIdentity::M00Transpose: {
        const bool tr = id == TeleportIdentity::M00Transpose;
        Ket rhs = Ket::Zero(8);
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            const Mat mij = m_gate(i, j, phi);
            rhs += tr ? Ket(kron(Ket(m00.transpose() * mij.adjoint() * a), bell_like_state(mij)))
                      : Ket(kron(bell_like_state(mij), Ket(m00 * mij.conjugate() * a)));
          }
        }
        const Ket lhs = tr ? Ket(kron(psi00, a)) : Ket(kron(a, psi00));
        worst = std::max(worst, max_abs_diff(lhs, 0.5 * rhs));
        break;
      }
      case TeleportIdentity::E00: {
        const Mat lhs = kron(e00, i2) * kron(a, e00);
        const Mat rhs = 0.5 * Mat(kron(psi00, a)) * psi00.adjoint();
        worst = std::max(worst, max_abs_diff(lhs, rhs));
        break;
      }
      case TeleportIdentity::E00Transpose: {
        const Mat lhs = kron(i2, e00) * kron(e00, a);
        const Mat rhs = 0.5 * Mat(kron(a, psi00)) * psi00.adjoint();
        worst = std::max(worst, max_abs_diff(lhs, rhs));
        break;
      }
      case TeleportIdentity::YangBaxter:
        for (int k = 0; k < 2; ++k) {
          for (int l = 0; l < 2; ++l) {
            Ket rhs = Ket::Zero(8);
            for (int i = 0; i < 2; ++i) {
              for (int j = 0; j < 2; ++j) {
                rhs += kron(basis_ket({i, j}), Ket(w_closed(i, j, k, l, phases) * a));
              }
            }
            worst = std::max(worst, max_abs_diff(yb_output(a, k, l, phi), 0.5 * rhs));
          }
        }
        break;
      case TeleportIdentity::Completeness:
        break;
    }
  }
  return worst;
}

double flow_identity_residual(const Mat& u) {
  if (u.rows() != 2 || u.cols() != 2) throw std::invalid_argument("flow_identity_residual: 2x2 gate");
  const Mat i2 = identity(2);
  return max_abs_diff(kron(i2, u) * epr_pair(), kron(Mat(u.transpose()), i2) * epr_pair());
}

double transpose_asymmetry(double phi) {
  const Mat m00 = m_gate(0, 0, phi);
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Mat mij = m_gate(i, j, phi);
      worst = std::max(worst, max_abs_diff(Mat((m00 * mij.conjugate()).transpose()),
                                           Mat(m00.transpose() * mij.adjoint())));
    }
  }
  return worst;
}

}  // namespace bmw
