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
#include <string>
#include <string_view>
#include <vector>

#include "bmw/tensor.hpp"

namespace bmw {

inline constexpr int kMaxSites = 10;

/// Tensor-product representation on n qubit sites:
/// e_i = 1^{(i-1)} (x) E (x) 1^{(n-i-1)}, likewise b_i, for i = 1..n-1.
struct Representation {
  Mat local_e;
  Mat local_b;
  int sites = 0;
  std::vector<Mat> e;  // e[i-1] is e_i
  std::vector<Mat> b;

  const Mat& e_at(int i) const { return e.at(static_cast<std::size_t>(i - 1)); }
  const Mat& b_at(int i) const { return b.at(static_cast<std::size_t>(i - 1)); }
};

/// Throws std::invalid_argument unless both matrices are 4x4 and 2 <= n <= 10.
Representation build_rep(const Mat& e, const Mat& b, int n);

/// BMW parameters read off a braid matrix's spectrum.
/// `lambdas` holds (lambda_1, lambda_2, lambda_3) with sigma = lambda_1,
/// w = lambda_2 + lambda_3 and lambda_2 lambda_3 = -1.
struct BmwParams {
  cplx sigma;
  cplx w;
  double d = 0.0;
  std::array<cplx, 3> lambdas;
};

/// Parameters from the three-eigenvalue pattern of `b`.
///
/// Eigenvalues are clustered at `cluster_tol`; exactly three clusters must
/// remain, and some pair of them must multiply to -1. When several pairs
/// qualify, the one containing the most degenerate eigenvalue wins, then the
/// first in ascending-argument order. Throws std::domain_error when the
/// pattern does not match or d = 1 - (sigma - 1/sigma)/w is not real.
BmwParams derive_params(const Mat& b, double cluster_tol = 1e-8);

/// The three parameters quoted for the two spin-1/2 representation.
BmwParams reference_params();

enum class RelationFamily { TemperleyLieb, Braid, Mixed, Tangle, Brauer };
std::string_view to_string(RelationFamily family);

struct RelationEntry {
  std::string id;
  double residual = 0.0;
};

struct RelationReport {
  RelationFamily family = RelationFamily::TemperleyLieb;
  int site_count = 0;
  double tolerance = kRelationTol;
  std::vector<RelationEntry> entries;
  double max_residual = 0.0;
  bool pass = true;

  void add(std::string id, double residual);
  /// Residual for `id`; throws std::out_of_range if absent.
  double residual(std::string_view id) const;
};

/// e_i^2 = e_i; e_i e_{i+-1} e_i = d^{-2} e_i; e_i e_j = e_j e_i for |i - j| >= 2.
RelationReport check_temperley_lieb(const Representation& rep, double d,
                                    double tol = kRelationTol);

/// b_i b_{i+1} b_i = b_{i+1} b_i b_{i+1}; b_i b_j = b_j b_i for |i - j| >= 2.
RelationReport check_braid(const Representation& rep, double tol = kRelationTol);

/// How b_i^{-1} is formed in the mixed relations.
enum class InverseMethod { Auto, Adjoint, LU };

/// b_i - b_i^{-1} = w(1 - d e_i); e_i b_i = b_i e_i = sigma e_i;
/// b_{i+-1} e_i b_{i+-1} = b_i^{-1} e_{i+-1} b_i^{-1}.
RelationReport check_mixed(const Representation& rep, const BmwParams& params,
                           double tol = kRelationTol,
                           InverseMethod method = InverseMethod::Auto);

/// b_{i+-1} b_i e_{i+-1} = e_i b_{i+-1} b_i = d e_i e_{i+-1}, plus the four
/// three-site matrix forms built from the local E and B (always checked).
RelationReport check_tangle(const Representation& rep, double d, double tol = kRelationTol);

/// Full relation set for (|EPR><EPR|, SWAP, d = 2) on n sites.
RelationReport check_brauer(int n, double tol = kRelationTol);

/// max over (i, j) of |(1 (x) P)(P (x) 1)(|alpha> (x) |ij>) - |ij> (x) |alpha>|.
double swap_teleport_residual(const Ket& alpha);

/// TL, braid, mixed and tangle reports for (E, B) on n sites.
std::vector<RelationReport> check_bmw(const Mat& e, const Mat& b, const BmwParams& params, int n,
                                      double tol = kRelationTol);

}  // namespace bmw
