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

#include "bmw/tbqc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bmw/gates.hpp"

namespace bmw {

namespace {

constexpr std::array<cplx, 4> kPhases = {cplx{1, 0}, cplx{0, 1}, cplx{-1, 0}, cplx{0, -1}};

Mat hermitian_pauli(char c) {
  switch (c) {
    case 'I':
      return identity(2);
    case 'X':
      return gates::x();
    case 'Y':
      return -kI * gates::y();  // ZX = iY
    case 'Z':
      return gates::z();
    default:
      throw std::invalid_argument(std::string("PauliString: bad factor '") + c + "'");
  }
}

Mat pw(const Mat& g, int e) { return (e % 2) ? g : identity(2); }
double sgn(int e) { return (e % 2) ? -1.0 : 1.0; }

int qubit_count(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim) throw std::invalid_argument("expected a 2^n dimension");
  return n;
}

// Labels enter only through parities, so any integer is reduced mod 2.
int mod2(int x) { return ((x % 2) + 2) % 2; }

void require_bits(std::initializer_list<int> bits, const char* what) {
  for (int b : bits) require_bit(b, what);
}

}  // namespace

Mat PauliString::matrix() const {
  Mat m = Mat::Identity(1, 1);
  for (char c : factors) m = kron(m, hermitian_pauli(c));
  return kPhases[static_cast<std::size_t>(((phase_power % 4) + 4) % 4)] * m;
}

std::string PauliString::to_string() const {
  static const char* const prefix[] = {"+", "+i", "-", "-i"};
  return prefix[((phase_power % 4) + 4) % 4] + factors;
}

PauliString PauliString::parse(std::string_view text) {
  PauliString p;
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) negative = text[pos++] == '-';
  if (pos < text.size() && text[pos] == 'i') {
    p.phase_power = 1;
    ++pos;
  }
  if (negative) p.phase_power += 2;
  p.factors = std::string(text.substr(pos));
  if (p.factors.empty()) throw std::invalid_argument("PauliString: no factors");
  for (char c : p.factors) hermitian_pauli(c);
  return p;
}

std::optional<PauliString> PauliString::recognize(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return std::nullopt;
  const int n = qubit_count(m.rows());
  const double dim = static_cast<double>(m.rows());
  static const char kLetters[] = {'I', 'X', 'Y', 'Z'};
  const int total = 1 << (2 * n);
  for (int code = 0; code < total; ++code) {
    PauliString p;
    for (int q = n - 1; q >= 0; --q) p.factors += kLetters[(code >> (2 * q)) & 3];
    const Mat base = p.matrix();
    const cplx c = (base.adjoint() * m).trace() / dim;
    if (std::abs(std::abs(c) - 1.0) > tol) continue;
    for (int k = 0; k < 4; ++k) {
      if (std::abs(c - kPhases[k]) > tol) continue;
      p.phase_power = k;
      if (max_abs_diff(m, kPhases[k] * base) <= tol) return p;
    }
    return std::nullopt;
  }
  return std::nullopt;
}

CliffordReport clifford_check(const Mat& u, int n_qubits, double tol) {
  if (n_qubits < 1 || n_qubits > 3) throw std::invalid_argument("clifford_check: 1 to 3 qubits");
  if (u.rows() != (1 << n_qubits) || u.cols() != u.rows()) {
    throw std::invalid_argument("clifford_check: dimension does not match qubit count");
  }
  if (!is_unitary(u, tol)) throw std::invalid_argument("clifford_check: gate is not unitary");
  CliffordReport report;
  report.is_clifford = true;
  for (int q = 0; q < n_qubits; ++q) {
    for (char g : {'X', 'Z'}) {
      PauliString gen;
      gen.factors.assign(static_cast<std::size_t>(n_qubits), 'I');
      gen.factors[static_cast<std::size_t>(q)] = g;
      CliffordRow row{gen.factors, PauliString::recognize(u * gen.matrix() * u.adjoint(), tol)};
      report.is_clifford = report.is_clifford && row.image.has_value();
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

Mat k_gate(int i, int j, int k, int l) {
  i = mod2(i), j = mod2(j), k = mod2(k), l = mod2(l);
  return sgn(j * l + i * j + k) * pw(gates::x(), j + k + 1) * pw(gates::z(), i + l + 1);
}

Mat l_gate(int i, int j, int k, int l) {
  i = mod2(i), j = mod2(j), k = mod2(k), l = mod2(l);
  return sgn(i * k + i * j + l) * pw(gates::x(), i + l + 1) * pw(gates::z(), j + k + 1);
}

Mat r_gate(const Mat& u, int i, int j, int k, int l) {
  if (u.rows() != 2 || u.cols() != 2 || !is_unitary(u, kRelationTol)) {
    throw std::invalid_argument("r_gate: expected a 2x2 unitary");
  }
  return u * k_gate(i, j, k, l) * u.adjoint();
}

Mat r_h_closed(int i, int j, int k, int l) {
  require_bits({i, j, k, l}, "r_h_closed");
  return sgn(j * l + i * j + k) * pw(gates::z(), j + k + 1) * pw(gates::x(), i + l + 1);
}

Mat r_t_closed(int i, int j, int k, int l) {
  require_bits({i, j, k, l}, "r_t_closed");
  const Mat xy = (gates::x() - kI * gates::y()) / std::sqrt(2.0);
  return sgn(j * l + i * j + k) * pw(xy, j + k + 1) * pw(gates::z(), i + l + 1);
}

double b0_teleport_residual(const std::vector<Ket>& probes) {
  const Mat b0 = yb_clifford();
  const Mat i2 = identity(2);
  const Mat op = kron(b0, i2) * kron(i2, b0);
  double worst = 0.0;
  for (const Ket& a : probes) {
    for (int k = 0; k < 2; ++k) {
      for (int l = 0; l < 2; ++l) {
        Ket rhs = Ket::Zero(8);
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) rhs += kron(basis_ket({i, j}), Ket(k_gate(i, j, k, l) * a));
        }
        worst = std::max(worst, max_abs_diff(Ket(op * kron(a, basis_ket({k, l}))), 0.5 * rhs));
      }
    }
  }
  return worst;
}

double b0_inverse_residual(const std::vector<Ket>& probes) {
  const Mat b0 = yb_clifford();
  const Mat i2 = identity(2);
  const Mat op = kron(i2, b0) * kron(b0, i2);
  double worst = 0.0;
  for (const Ket& a : probes) {
    for (int k = 0; k < 2; ++k) {
      for (int l = 0; l < 2; ++l) {
        Ket rhs = Ket::Zero(8);
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) rhs += kron(Ket(l_gate(i, j, k, l) * a), basis_ket({i, j}));
        }
        worst = std::max(worst, max_abs_diff(Ket(op * kron(basis_ket({k, l}), a)), 0.5 * rhs));
      }
    }
  }
  return worst;
}

TeleportResult teleport_single_gate(const Mat& u, const Ket& alpha, int k, int l, Sampler& sampler) {
  if (u.rows() != 2 || u.cols() != 2 || !is_unitary(u)) {
    throw std::invalid_argument("teleport_single_gate: U must be a single-qubit unitary");
  }
  require_state(alpha, "teleport_single_gate");
  if (alpha.size() != 2) throw std::invalid_argument("teleport_single_gate: expected one qubit");
  require_bits({k, l}, "teleport_single_gate");
  const Mat b0 = yb_clifford();
  const Mat i2 = identity(2);
  const Ket state =
      kron(b0, i2) * kron(identity(4), u) * kron(i2, b0) * kron(alpha, basis_ket({k, l}));
  const Ket target = u * alpha;

  TeleportResult res;
  std::array<Ket, 4> branches;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      branches[pair_index(i, j)] = project_leading_pair(state, basis_ket({i, j}));
      res.probabilities[pair_index(i, j)] = branches[pair_index(i, j)].squaredNorm();
    }
  }
  const int pick = sampler.choose(res.probabilities);
  res.outcome = {pick / 2, pick % 2, res.probabilities[pick], normalized(branches[pick])};
  res.correction = r_gate(u, pick / 2, pick % 2, k, l).adjoint();
  res.corrected = res.correction * res.outcome.post_state;
  res.fidelity = fidelity(target, res.corrected);
  return res;
}

Mat q_closed(int i1, int j1, int k1, int l1, int i2, int j2, int k2, int l2) {
  require_bits({i1, j1, k1, l1, i2, j2, k2, l2}, "q_closed");
  return sgn((k1 + 1) * (i1 + l1 + 1) + 1) * pw(gates::x(), i1 + i2 + l1 + l2) *
         pw(gates::z(), j2 + k2 + 1);
}

Mat p_closed(int i1, int j1, int k1, int l1, int i2, int j2, int k2, int l2) {
  require_bits({i1, j1, k1, l1, i2, j2, k2, l2}, "p_closed");
  return sgn(i2 * (k2 + j2 + 1) + 1) * pw(gates::z(), i1 + l1 + 1) *
         pw(gates::x(), j1 + k1 + j2 + k2);
}

Mat qp_conjugated(int i1, int j1, int k1, int l1, int i2, int j2, int k2, int l2) {
  const Mat b0 = yb_clifford();
  return b0 * kron(k_gate(i1, j1, k1, l1), l_gate(i2, j2, k2, l2)) * b0.adjoint();
}

Mat two_qubit_circuit(Bracketing bracketing) {
  const Mat b0 = yb_clifford();
  const Mat outer_layer = embed(b0, 1, 6) * embed(b0, 3, 6) * embed(b0, 5, 6);
  const Mat inner_layer = embed(b0, 2, 6) * embed(b0, 4, 6);
  if (bracketing == Bracketing::Displayed) return outer_layer * inner_layer;
  return outer_layer * embed(b0, 3, 6) * inner_layer;
}

TwoQubitResult teleport_two_qubit(const Ket& alphabeta, int k1, int l1, int k2, int l2,
                                  Sampler& sampler, Bracketing bracketing) {
  require_state(alphabeta, "teleport_two_qubit");
  if (alphabeta.size() != 4) throw std::invalid_argument("teleport_two_qubit: expected two qubits");
  require_bits({k1, l1, k2, l2}, "teleport_two_qubit");

  // Input amplitude (a, b) goes to qubit 1 = a, qubits 2-5 = k1 l1 k2 l2, qubit 6 = b.
  const int middle = (k1 << 3) | (l1 << 2) | (k2 << 1) | l2;
  Ket state = Ket::Zero(64);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) state((a << 5) | (middle << 1) | b) = alphabeta(2 * a + b);
  }
  state = two_qubit_circuit(bracketing) * state;

  // Branch (i1 j1 i2 j2) keeps qubits 3-4; index = i1 j1 | q3 q4 | i2 j2.
  std::array<Ket, 16> branches;
  TwoQubitResult res;
  for (int o = 0; o < 16; ++o) {
    const int i1 = (o >> 3) & 1, j1 = (o >> 2) & 1, i2 = (o >> 1) & 1, j2 = o & 1;
    Ket v(4);
    for (int mid = 0; mid < 4; ++mid) v(mid) = state((i1 << 5) | (j1 << 4) | (mid << 2) | (i2 << 1) | j2);
    branches[o] = v;
    res.probabilities[o] = v.squaredNorm();
  }
  const int pick = sampler.choose(res.probabilities);
  const int i1 = (pick >> 3) & 1, j1 = (pick >> 2) & 1, i2 = (pick >> 1) & 1, j2 = pick & 1;
  res.outcome = {i1, j1, i2, j2};
  res.probability = res.probabilities[pick];
  res.correction = kron(q_closed(i1, j1, k1, l1, i2, j2, k2, l2),
                        p_closed(i1, j1, k1, l1, i2, j2, k2, l2))
                       .adjoint();
  res.corrected = res.correction * normalized(branches[pick]);
  res.fidelity = fidelity(Ket(yb_clifford() * alphabeta), res.corrected);
  return res;
}

double bracketing_infidelity(Bracketing bracketing, Sampler& sampler, int trials) {
  const Mat circuit = two_qubit_circuit(bracketing);
  const Mat b0 = yb_clifford();
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Ket ab = sampler.haar_ket(4);
    for (int middle = 0; middle < 16; ++middle) {
      const int k1 = (middle >> 3) & 1, l1 = (middle >> 2) & 1, k2 = (middle >> 1) & 1, l2 = middle & 1;
      Ket state = Ket::Zero(64);
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) state((a << 5) | (middle << 1) | b) = ab(2 * a + b);
      }
      state = circuit * state;
      for (int o = 0; o < 16; ++o) {
        const int i1 = (o >> 3) & 1, j1 = (o >> 2) & 1, i2 = (o >> 1) & 1, j2 = o & 1;
        Ket v(4);
        for (int mid = 0; mid < 4; ++mid) {
          v(mid) = state((i1 << 5) | (j1 << 4) | (mid << 2) | (i2 << 1) | j2);
        }
        if (v.norm() < 1e-12) {
          worst = 1.0;
          continue;
        }
        const Mat qp = kron(q_closed(i1, j1, k1, l1, i2, j2, k2, l2), p_closed(i1, j1, k1, l1, i2, j2, k2, l2));
        worst = std::max(worst, 1.0 - fidelity(Ket(b0 * ab), Ket(qp.adjoint() * normalized(v))));
      }
    }
  }
  return worst;
}

}  // namespace bmw
