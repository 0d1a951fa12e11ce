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

#include "bmw/relations.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "bmw/gates.hpp"

namespace bmw {

namespace {

std::string at1(std::string_view stem, int i) {
  return std::string(stem) + "@" + std::to_string(i);
}

std::string at2(std::string_view stem, int i, int j) {
  return std::string(stem) + "@" + std::to_string(i) + "," + std::to_string(j);
}

double commutator(const Mat& a, const Mat& b) { return max_abs(a * b - b * a); }

RelationReport make_report(RelationFamily family, const Representation& rep, double tol) {
  RelationReport r;
  r.family = family;
  r.site_count = rep.sites;
  r.tolerance = tol;
  return r;
}

void require_4x4(const Mat& m, const char* what) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw std::invalid_argument(std::string(what) + ": local matrix must be 4x4");
  }
}

// Adjacent-pair tangle relations; `sign` names the direction of j = i + sign.
void add_tangle_pair(RelationReport& r, const Representation& rep, double d, int i, int j) {
  const char* tag = j > i ? "+1" : "-1";
  const Mat target = d * rep.e_at(i) * rep.e_at(j);
  r.add(at1(std::string("tangle.") + tag + ".left", i),
        max_abs(rep.b_at(j) * rep.b_at(i) * rep.e_at(j) - target));
  r.add(at1(std::string("tangle.") + tag + ".right", i),
        max_abs(rep.e_at(i) * rep.b_at(j) * rep.b_at(i) - target));
}

void add_matrix_forms(RelationReport& r, const Mat& e_local, const Mat& b_local, double d) {
  const Mat i2 = identity(2);
  const Mat e1 = kron(e_local, i2), e2 = kron(i2, e_local);
  const Mat b1 = kron(b_local, i2), b2 = kron(i2, b_local);
  r.add("tangle.matrix1", max_abs(b1 * b2 * e1 - d * e2 * e1));
  r.add("tangle.matrix2", max_abs(b2 * b1 * e2 - d * e1 * e2));
  r.add("tangle.matrix3", max_abs(e1 * b2 * b1 - d * e1 * e2));
  r.add("tangle.matrix4", max_abs(e2 * b1 * b2 - d * e2 * e1));
}

}  // namespace

Representation build_rep(const Mat& e, const Mat& b, int n) {
  require_4x4(e, "build_rep");
  require_4x4(b, "build_rep");
  if (n < 2 || n > kMaxSites) {
    throw std::invalid_argument("build_rep: site count must lie in [2, " +
                                std::to_string(kMaxSites) + "]");
  }
  Representation rep;
  rep.local_e = e;
  rep.local_b = b;
  rep.sites = n;
  for (int i = 1; i < n; ++i) {
    rep.e.push_back(embed(e, i, n));
    rep.b.push_back(embed(b, i, n));
  }
  return rep;
}

BmwParams derive_params(const Mat& b, double cluster_tol) {
  require_4x4(b, "derive_params");
  Eigen::ComplexEigenSolver<Mat> solver(b, false);
  if (solver.info() != Eigen::Success) throw std::domain_error("derive_params: eigensolver failed");

  struct Cluster {
    cplx value;
    int count;
  };
  std::vector<Cluster> clusters;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const cplx v = solver.eigenvalues()(k);
    auto hit = std::find_if(clusters.begin(), clusters.end(),
                            [&](const Cluster& c) { return std::abs(c.value - v) <= cluster_tol; });
    if (hit == clusters.end()) {
      clusters.push_back({v, 1});
    } else {
      hit->value = (hit->value * static_cast<double>(hit->count) + v) / (hit->count + 1.0);
      ++hit->count;
    }
  }
  if (clusters.size() != 3) {
    throw std::domain_error("derive_params: expected three distinct eigenvalues, found " +
                            std::to_string(clusters.size()));
  }
  std::sort(clusters.begin(), clusters.end(),
            [](const Cluster& x, const Cluster& y) { return std::arg(x.value) < std::arg(y.value); });

  int best_a = -1, best_b = -1, best_mult = -1;
  for (int a = 0; a < 3; ++a) {
    for (int c = a + 1; c < 3; ++c) {
      if (std::abs(clusters[a].value * clusters[c].value + 1.0) > cluster_tol) continue;
      const int mult = std::max(clusters[a].count, clusters[c].count);
      if (mult > best_mult) {
        best_a = a;
        best_b = c;
        best_mult = mult;
      }
    }
  }
  if (best_a < 0) throw std::domain_error("derive_params: no eigenvalue pair with product -1");
  if (clusters[best_b].count > clusters[best_a].count) std::swap(best_a, best_b);
  const int lone = 3 - best_a - best_b;

  BmwParams p;
  p.lambdas = {clusters[lone].value, clusters[best_a].value, clusters[best_b].value};
  p.sigma = p.lambdas[0];
  p.w = p.lambdas[1] + p.lambdas[2];
  if (std::abs(p.w) <= cluster_tol) throw std::domain_error("derive_params: w vanishes");
  const cplx d = 1.0 - (p.sigma - 1.0 / p.sigma) / p.w;
  if (std::abs(d.imag()) > 1e-10) throw std::domain_error("derive_params: loop parameter not real");
  p.d = d.real();
  return p;
}

BmwParams reference_params() {
  BmwParams p;
  p.lambdas = {expi(5 * kPi / 4), expi(3 * kPi / 4), expi(kPi / 4)};
  p.sigma = p.lambdas[0];
  p.w = cplx{0.0, std::sqrt(2.0)};
  p.d = 2.0;
  return p;
}

std::string_view to_string(RelationFamily family) {
  switch (family) {
    case RelationFamily::TemperleyLieb:
      return "TL";
    case RelationFamily::Braid:
      return "Braid";
    case RelationFamily::Mixed:
      return "Mixed";
    case RelationFamily::Tangle:
      return "Tangle";
    case RelationFamily::Brauer:
      return "Brauer";
  }
  return "?";
}

void RelationReport::add(std::string id, double r) {
  entries.push_back({std::move(id), r});
  max_residual = std::max(max_residual, r);
  pass = max_residual <= tolerance;
}

double RelationReport::residual(std::string_view id) const {
  for (const auto& e : entries) {
    if (e.id == id) return e.residual;
  }
  throw std::out_of_range("RelationReport: no relation '" + std::string(id) + "'");
}

RelationReport check_temperley_lieb(const Representation& rep, double d, double tol) {
  RelationReport r = make_report(RelationFamily::TemperleyLieb, rep, tol);
  const int m = rep.sites - 1;
  for (int i = 1; i <= m; ++i) {
    r.add(at1("TL.e2=e", i), max_abs(rep.e_at(i) * rep.e_at(i) - rep.e_at(i)));
    for (int j : {i - 1, i + 1}) {
      if (j < 1 || j > m) continue;
      r.add(at2("TL.eee", i, j),
            max_abs(rep.e_at(i) * rep.e_at(j) * rep.e_at(i) - rep.e_at(i) / (d * d)));
    }
    for (int j = i + 2; j <= m; ++j) r.add(at2("TL.far", i, j), commutator(rep.e_at(i), rep.e_at(j)));
  }
  return r;
}

RelationReport check_braid(const Representation& rep, double tol) {
  RelationReport r = make_report(RelationFamily::Braid, rep, tol);
  const int m = rep.sites - 1;
  for (int i = 1; i <= m; ++i) {
    if (i + 1 <= m) {
      const Mat& x = rep.b_at(i);
      const Mat& y = rep.b_at(i + 1);
      r.add(at2("braid.bbb", i, i + 1), max_abs(x * y * x - y * x * y));
    }
    for (int j = i + 2; j <= m; ++j) r.add(at2("braid.far", i, j), commutator(rep.b_at(i), rep.b_at(j)));
  }
  return r;
}

RelationReport check_mixed(const Representation& rep, const BmwParams& params, double tol,
                           InverseMethod method) {
  RelationReport r = make_report(RelationFamily::Mixed, rep, tol);
  const int m = rep.sites - 1;
  const bool adjoint = method == InverseMethod::Adjoint ||
                       (method == InverseMethod::Auto && is_unitary(rep.local_b));
  std::vector<Mat> inv;
  for (int i = 1; i <= m; ++i) {
    inv.push_back(adjoint ? Mat(rep.b_at(i).adjoint()) : Mat(rep.b_at(i).partialPivLu().inverse()));
  }
  const Mat one = identity(rep.b_at(1).rows());
  for (int i = 1; i <= m; ++i) {
    const Mat& e = rep.e_at(i);
    const Mat& b = rep.b_at(i);
    r.add(at1("mixed.b-binv", i), max_abs(b - inv[i - 1] - params.w * (one - params.d * e)));
    r.add(at1("mixed.eb", i), max_abs(e * b - params.sigma * e));
    r.add(at1("mixed.be", i), max_abs(b * e - params.sigma * e));
    for (int j : {i - 1, i + 1}) {
      if (j < 1 || j > m) continue;
      r.add(at2("mixed.beb", i, j),
            max_abs(rep.b_at(j) * e * rep.b_at(j) - inv[i - 1] * rep.e_at(j) * inv[i - 1]));
    }
  }
  return r;
}

RelationReport check_tangle(const Representation& rep, double d, double tol) {
  RelationReport r = make_report(RelationFamily::Tangle, rep, tol);
  const int m = rep.sites - 1;
  for (int i = 1; i <= m; ++i) {
    if (i + 1 <= m) add_tangle_pair(r, rep, d, i, i + 1);
    if (i - 1 >= 1) add_tangle_pair(r, rep, d, i, i - 1);
  }
  add_matrix_forms(r, rep.local_e, rep.local_b, d);
  return r;
}

RelationReport check_brauer(int n, double tol) {
  const Representation rep = build_rep(brauer_projector(), permutation_p(), n);
  constexpr double d = 2.0;
  RelationReport r = make_report(RelationFamily::Brauer, rep, tol);
  const auto absorb = [&r](const RelationReport& part) {
    for (const auto& e : part.entries) r.add(e.id, e.residual);
  };
  absorb(check_temperley_lieb(rep, d, tol));
  absorb(check_braid(rep, tol));
  const Mat one = identity(rep.b_at(1).rows());
  for (int i = 1; i < n; ++i) {
    const Mat& e = rep.e_at(i);
    const Mat& v = rep.b_at(i);
    r.add(at1("brauer.v2=1", i), max_abs(v * v - one));
    r.add(at1("brauer.ev=e", i), max_abs(e * v - e));
    r.add(at1("brauer.ve=e", i), max_abs(v * e - e));
  }
  absorb(check_tangle(rep, d, tol));
  return r;
}

double swap_teleport_residual(const Ket& alpha) {
  require_state(alpha, "swap_teleport_residual");
  if (alpha.size() != 2) throw std::invalid_argument("swap_teleport_residual: expected one qubit");
  const Mat p = permutation_p();
  const Mat i2 = identity(2);
  const Mat op = kron(i2, p) * kron(p, i2);
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Ket ij = basis_ket({i, j});
      worst = std::max(worst, max_abs_diff(op * kron(alpha, ij), kron(ij, alpha)));
    }
  }
  return worst;
}

std::vector<RelationReport> check_bmw(const Mat& e, const Mat& b, const BmwParams& params, int n,
                                      double tol) {
  const Representation rep = build_rep(e, b, n);
  return {check_temperley_lieb(rep, params.d, tol), check_braid(rep, tol),
          check_mixed(rep, params, tol), check_tangle(rep, params.d, tol)};
}

}  // namespace bmw
