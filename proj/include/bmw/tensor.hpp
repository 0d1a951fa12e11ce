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

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace bmw {

using cplx = std::complex<double>;

template <typename T>
using CMatrix = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using CVector = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, 1>;

/// Dense complex matrix carrying gates, projectors and algebra generators.
/// Index convention: qubit 1 is the most significant bit, |i j> <-> 2i + j.
using Mat = CMatrix<double>;
/// Dense complex state vector of a qubit register.
using Ket = CVector<double>;

inline constexpr double kPi = 3.14159265358979323846;
/// Default tolerance for algebra and protocol relations.
inline constexpr double kRelationTol = 1e-10;
/// Default tolerance for arithmetic identities between closed forms.
inline constexpr double kArithmeticTol = 1e-12;

inline constexpr cplx kI{0.0, 1.0};

inline cplx expi(double angle) { return std::polar(1.0, angle); }

/// Kronecker product a (x) b; the row/column index of `a` is the high part.
template <typename A, typename B>
CMatrix<typename A::Scalar::value_type> kron(const Eigen::MatrixBase<A>& a,
                                             const Eigen::MatrixBase<B>& b) {
  using Out = CMatrix<typename A::Scalar::value_type>;
  Out out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Maximum entrywise modulus of a - b. Shapes must agree.
template <typename A, typename B>
double max_abs_diff(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: incompatible shapes");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

template <typename A>
double max_abs(const Eigen::MatrixBase<A>& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

template <typename A, typename B>
bool approx_eq(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b,
               double tol = kArithmeticTol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs_diff(a, b) <= tol;
}

/// Finds the unit-modulus theta with ||a - theta * b||_max <= tol.
///
/// The phase is anchored on the largest-modulus entry of `b` (first in
/// row-major order on ties), so the answer is deterministic even when `b`
/// has many zeros. Returns nothing when no such phase exists.
template <typename A, typename B>
std::optional<cplx> approx_eq_phase(const Eigen::MatrixBase<A>& a,
                                    const Eigen::MatrixBase<B>& b,
                                    double tol = kArithmeticTol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  Eigen::Index ar = 0, ac = 0;
  double best = -1.0;
  for (Eigen::Index r = 0; r < b.rows(); ++r) {
    for (Eigen::Index c = 0; c < b.cols(); ++c) {
      const double m = std::abs(b(r, c));
      if (m > best) {
        best = m;
        ar = r;
        ac = c;
      }
    }
  }
  if (best <= 0.0) {
    return max_abs(a) <= tol ? std::optional<cplx>(cplx{1.0, 0.0}) : std::nullopt;
  }
  const cplx ratio = a(ar, ac) / b(ar, ac);
  if (std::abs(ratio) == 0.0) return std::nullopt;
  const cplx theta = ratio / std::abs(ratio);
  if (max_abs_diff(a, theta * b) > tol) return std::nullopt;
  return theta;
}

// Shape-checked arithmetic. Eigen's operators are used freely inside the
// library where shapes are known; these are the public checked forms.
Mat mul(const Mat& a, const Mat& b);
Mat add(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);
inline Mat scale(const Mat& a, cplx s) { return s * a; }
inline Mat dagger(const Mat& a) { return a.adjoint(); }
inline Mat transpose(const Mat& a) { return a.transpose(); }
inline Mat conj(const Mat& a) { return a.conjugate(); }
inline cplx trace(const Mat& a) { return a.trace(); }

Mat identity(Eigen::Index dim);

/// Places a 2^k x 2^k operator on sites [site, site + k) of an n-site qubit
/// chain (sites are 1-based): 1^{(site-1)} (x) op (x) 1^{(n-site-k+1)}.
Mat embed(const Mat& op, int site, int n_sites);

bool is_unitary(const Mat& u, double tol = kArithmeticTol);
bool is_hermitian(const Mat& a, double tol = kArithmeticTol);

/// |<a|b>|^2.
double fidelity(const Ket& a, const Ket& b);
bool is_normalized(const Ket& v, double tol = kArithmeticTol);
Ket normalized(const Ket& v);
/// Throws std::invalid_argument unless `v` is a normalized 2^n-dimensional state.
void require_state(const Ket& v, const char* what);

/// Computational basis state |b_1 b_2 ... b_n>.
Ket basis_ket(std::span<const int> bits);
Ket basis_ket(std::initializer_list<int> bits);

inline Mat outer(const Ket& a, const Ket& b) { return a * b.adjoint(); }
inline Mat projector(const Ket& v) { return v * v.adjoint(); }

/// Seeded source of randomness. One instance per thread of use.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Picks an index with the given (already normalized) probabilities.
  int choose(std::span<const double> probabilities);
  double uniform(double lo, double hi);
  /// Haar-random pure state (normalized complex Gaussian amplitudes).
  Ket haar_ket(Eigen::Index dim);
  /// Haar-random unitary via QR of a complex Gaussian matrix.
  Mat haar_unitary(Eigen::Index dim);
  Mat gaussian_matrix(Eigen::Index rows, Eigen::Index cols);

 private:
  std::mt19937_64 engine_;
};

/// The six Pauli eigenstates followed by `n_random` Haar-random qubit states.
std::vector<Ket> probe_states(Sampler& sampler, int n_random = 2);

std::string format_complex(cplx z, int digits = 6);

}  // namespace bmw
