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

#include "bmw/tensor.hpp"

#include <cmath>
#include <cstdio>

namespace bmw {

namespace {

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

int log2_exact(Eigen::Index n) {
  int k = 0;
  while ((Eigen::Index{1} << k) < n) ++k;
  return k;
}

}  // namespace

Mat mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("mul: incompatible shapes " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " * " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
  }
  return a * b;
}

Mat add(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("add: incompatible shapes");
  }
  return a + b;
}

Mat sub(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("sub: incompatible shapes");
  }
  return a - b;
}

Mat identity(Eigen::Index dim) { return Mat::Identity(dim, dim); }

Mat embed(const Mat& op, int site, int n_sites) {
  if (op.rows() != op.cols() || !is_power_of_two(op.rows()) || op.rows() < 2) {
    throw std::invalid_argument("embed: operator must be square with dimension 2^k, k >= 1");
  }
  const int width = log2_exact(op.rows());
  if (site < 1 || site + width - 1 > n_sites) {
    throw std::out_of_range("embed: site " + std::to_string(site) + " out of range for " +
                            std::to_string(n_sites) + " sites");
  }
  const Mat left = identity(Eigen::Index{1} << (site - 1));
  const Mat right = identity(Eigen::Index{1} << (n_sites - site - width + 1));
  return kron(kron(left, op), right);
}

bool is_unitary(const Mat& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return max_abs_diff(u * u.adjoint(), identity(u.rows())) <= tol;
}

bool is_hermitian(const Mat& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs_diff(a, a.adjoint()) <= tol;
}

double fidelity(const Ket& a, const Ket& b) { return std::norm(a.dot(b)); }

bool is_normalized(const Ket& v, double tol) {
  return std::abs(v.squaredNorm() - 1.0) <= tol;
}

Ket normalized(const Ket& v) {
  const double n = v.norm();
  if (n == 0.0) throw std::invalid_argument("normalized: zero vector");
  return v / n;
}

void require_state(const Ket& v, const char* what) {
  if (!is_power_of_two(v.size())) {
    throw std::invalid_argument(std::string(what) + ": state dimension must be a power of two");
  }
  if (!v.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite amplitude");
  if (!is_normalized(v)) throw std::invalid_argument(std::string(what) + ": state is not normalized");
}

Ket basis_ket(std::span<const int> bits) {
  Eigen::Index index = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("basis_ket: bits must be 0 or 1");
    index = 2 * index + b;
  }
  Ket v = Ket::Zero(Eigen::Index{1} << bits.size());
  v(index) = 1.0;
  return v;
}

Ket basis_ket(std::initializer_list<int> bits) {
  return basis_ket(std::span<const int>(bits.begin(), bits.size()));
}

int Sampler::choose(std::span<const double> probabilities) {
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0)) throw std::invalid_argument("choose: negative or NaN probability");
    total += p;
  }
  if (probabilities.empty() || std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("choose: probabilities must sum to 1");
  }
  std::discrete_distribution<int> pick(probabilities.begin(), probabilities.end());
  return pick(engine_);
}

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

Mat Sampler::gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat m(rows, cols);
  // Fill in row-major order so the draw sequence does not depend on storage.
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      const double re = g(engine_);
      const double im = g(engine_);
      m(r, c) = cplx{re, im};
    }
  }
  return m;
}

Ket Sampler::haar_ket(Eigen::Index dim) {
  return normalized(gaussian_matrix(dim, 1).col(0));
}

Mat Sampler::haar_unitary(Eigen::Index dim) {
  const Mat g = gaussian_matrix(dim, dim);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ() * identity(dim);
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const cplx d = r(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

std::vector<Ket> probe_states(Sampler& sampler, int n_random) {
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<Ket> probes;
  probes.push_back(basis_ket({0}));
  probes.push_back(basis_ket({1}));
  Ket v(2);
  v << s, s;
  probes.push_back(v);
  v << s, -s;
  probes.push_back(v);
  v << s, cplx(0, s);
  probes.push_back(v);
  v << s, cplx(0, -s);
  probes.push_back(v);
  for (int k = 0; k < n_random; ++k) probes.push_back(sampler.haar_ket(2));
  return probes;
}

std::string format_complex(cplx z, int digits) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.*g%+.*gi", digits, z.real(), digits, z.imag());
  return buf;
}

}  // namespace bmw
