// Copyright 2026 The Authors.
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

// Block LOBPCG (Knyazev 2001) with Jacobi preconditioning and
// Rayleigh-Ritz over span[X, W, P].

#include "mbed/eigensolver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

namespace mbed {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Returns C with S * C orthonormal, spanning the numerically independent
// part of span(S). Columns of S must be pre-scaled to unit norm.
MatrixXd OrthonormalizingTransform(const MatrixXd& s) {
  MatrixXd gram = s.transpose() * s;
  gram = 0.5 * (gram + gram.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(gram);
  const VectorXd& evals = es.eigenvalues();
  const double cutoff = std::max(evals.maxCoeff(), 1.0) * 1e-10;
  std::vector<int> keep;
  for (int i = static_cast<int>(evals.size()) - 1; i >= 0; --i) {
    if (evals(i) > cutoff) keep.push_back(i);
  }
  MatrixXd c(s.cols(), keep.size());
  for (size_t j = 0; j < keep.size(); ++j) {
    c.col(j) = es.eigenvectors().col(keep[j]) / std::sqrt(evals(keep[j]));
  }
  return c;
}

// Two Gram passes recover accuracy lost by squaring the condition number.
MatrixXd Orthonormalize(const MatrixXd& s) {
  MatrixXd c1 = OrthonormalizingTransform(s);
  MatrixXd q1 = s * c1;
  MatrixXd c2 = OrthonormalizingTransform(q1);
  return c1 * c2;
}

void ScaleColumns(MatrixXd& s, MatrixXd& as) {
  for (int j = 0; j < s.cols(); ++j) {
    double norm = s.col(j).norm();
    if (norm > 0.0) {
      s.col(j) /= norm;
      as.col(j) /= norm;
    }
  }
}

}  // namespace

void NormalizeSign(VectorXd& v) {
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12) {
      if (v(i) < 0) v = -v;
      return;
    }
  }
}

EigenPair SmallestEigenpairDense(const MatrixXd& a) {
  EigenPair out;
  out.dense = true;
  const int n = static_cast<int>(a.rows());
  if (n == 0) return out;
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(a);
  out.lambda1 = es.eigenvalues()(0);
  out.v = es.eigenvectors().col(0);
  out.v.normalize();
  NormalizeSign(out.v);
  out.residual = (a * out.v - out.lambda1 * out.v).norm();
  if (n >= 2) out.gap = es.eigenvalues()(1) - es.eigenvalues()(0);
  return out;
}

EigenPair Lobpcg(const SymmetricOperator& op, const LobpcgOptions& options) {
  const int n = op.dim;
  if (n <= 0) throw std::invalid_argument("operator dimension must be positive");
  const int k = std::min(options.block_size, n);
  const int max_iter = options.max_iter > 0 ? options.max_iter : 10 * n;
  const double threshold = options.tol * std::max(1.0, op.norm_bound);

  VectorXd precond(n);
  for (int i = 0; i < n; ++i) {
    double d = op.diagonal.size() == n ? op.diagonal(i) : 1.0;
    precond(i) = d > 1e-14 ? 1.0 / d : 1.0;
  }

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  MatrixXd x(n, k);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < n; ++i) x(i, j) = normal(rng);
  }
  MatrixXd ax(n, k);
  {
    MatrixXd dummy = x;
    ScaleColumns(x, dummy);
    x = x * Orthonormalize(x);
  }
  op.apply(x, ax);

  // Rayleigh-Ritz on the start block.
  VectorXd ritz(k);
  {
    MatrixXd h = x.transpose() * ax;
    h = 0.5 * (h + h.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(h);
    x = x * es.eigenvectors();
    ax = ax * es.eigenvectors();
    ritz = es.eigenvalues();
  }

  MatrixXd p(n, 0), ap(n, 0);
  EigenPair best;
  best.residual = std::numeric_limits<double>::infinity();

  auto snapshot = [&](int iteration, double residual) {
    EigenPair pair;
    pair.v = x.col(0);
    pair.v.normalize();
    pair.lambda1 = ritz(0);
    pair.residual = residual;
    pair.iterations = iteration;
    if (k >= 2) pair.gap = ritz(1) - ritz(0);
    return pair;
  };

  for (int iter = 0; iter < max_iter; ++iter) {
    MatrixXd r = ax - x * ritz.asDiagonal();
    const double res0 = r.col(0).norm();
    if (res0 < best.residual) best = snapshot(iter, res0);
    if (res0 <= threshold) break;

    MatrixXd w = precond.asDiagonal() * r;
    w -= x * (x.transpose() * w);
    MatrixXd aw(n, k);
    op.apply(w, aw);

    const int cols = static_cast<int>(x.cols() + w.cols() + p.cols());
    MatrixXd s(n, cols), as(n, cols);
    s << x, w, p;
    as << ax, aw, ap;
    ScaleColumns(s, as);
    MatrixXd c = Orthonormalize(s);
    if (c.cols() < k) break;
    MatrixXd q = s * c;
    MatrixXd aq = as * c;
    MatrixXd h = q.transpose() * aq;
    h = 0.5 * (h + h.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(h);
    MatrixXd coeff = c * es.eigenvectors().leftCols(k);
    ritz = es.eigenvalues().head(k);

    x = s * coeff;
    const int tail = cols - k;
    p = s.rightCols(tail) * coeff.bottomRows(tail);
    ap = as.rightCols(tail) * coeff.bottomRows(tail);
    // Recompute A*X directly so rounding in the recurrences does not build up.
    op.apply(x, ax);
  }

  if (!(best.residual <= threshold)) {
    throw EigenSolveError("LOBPCG did not converge: residual " + std::to_string(best.residual) +
                              " > " + std::to_string(threshold),
                          best);
  }
  // Polish the reported pair with an exact Rayleigh quotient.
  EigenPair out = best;
  MatrixXd v = out.v;
  MatrixXd av(n, 1);
  op.apply(v, av);
  out.lambda1 = v.col(0).dot(av.col(0));
  out.residual = (av.col(0) - out.lambda1 * v.col(0)).norm();
  NormalizeSign(out.v);
  return out;
}

}  // namespace mbed
