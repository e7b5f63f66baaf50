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

// Signed Laplacian L = D - A_sigma and the spectral edge-deletion heuristics.

#ifndef MBED_SPECTRAL_H_
#define MBED_SPECTRAL_H_

#include <cstdint>
#include <span>

#include <Eigen/Dense>

#include "mbed/eigensolver.h"
#include "mbed/graph.h"
#include "mbed/report.h"

namespace mbed {

// Laplacian of a graph minus an excluded edge set, applied edgewise.
class LaplacianView {
 public:
  explicit LaplacianView(const SignedGraph& g);
  LaplacianView(const SignedGraph& g, const EdgeSet& excluded);
  LaplacianView(const SignedGraph& g, const DeletionMask& mask);

  int dim() const { return graph_->node_count(); }
  const SignedGraph& graph() const { return *graph_; }
  bool included(EdgeId e) const { return mask_.alive(e); }

  // y = L x for each column.
  void Apply(const Eigen::MatrixXd& x, Eigen::MatrixXd& y) const;
  Eigen::VectorXd Diagonal() const;
  Eigen::MatrixXd Dense() const;
  // sum over E+ of (x_i - x_j)^2 plus sum over E- of (x_i + x_j)^2.
  double QuadraticForm(std::span<const double> x) const;

 private:
  const SignedGraph* graph_;
  DeletionMask mask_;
};

// Throws std::invalid_argument when x has the wrong length.
double QuadraticForm(const SignedGraph& g, const EdgeSet& excluded, std::span<const double> x);

struct SpectralOptions {
  double tol = 1e-8;
  int max_iter = 0;  // 0 selects 10 * n
  std::uint64_t seed = 0;
  int dense_threshold = 256;
  int block_size = 4;
};

// Dense solve up to dense_threshold nodes, LOBPCG above it. lambda1 values
// in [-tol, 0) are clamped to 0.
EigenPair SmallestEigenpair(const LaplacianView& view, const SpectralOptions& options = {});

// All eigenvalues in ascending order (dense; intended for small graphs).
Eigen::VectorXd LaplacianSpectrum(const LaplacianView& view);

// (v_i - sigma v_j)^2
double EdgeScore(const Eigen::VectorXd& v, const SignedEdge& e);

// lambda1 - sum of scores over X: an upper bound on lambda1 after deleting X.
double UpperBoundG(const EigenPair& eig, const EdgeSet& x, const SignedGraph& g);

// |V(H)| - lambda1: an upper bound on Delta(H).
double BalanceUpperBound(const SignedGraph& h, const EigenPair& eig);

// First-order prediction of lambda1 after deleting e.
double PerturbationPredict(const EigenPair& eig, const SignedEdge& e);

// Scores compare after rounding to 1e-12 so floating-point noise does not
// break ties; equal keys fall back to the smaller edge id.
long long ScoreKey(double score);

// Top-b candidates by score from one eigenpair of H (minus `removed`).
EdgeSet SpecTop(const SignedGraph& h, const EdgeSet& candidates, int b,
                const SpectralOptions& options = {}, const DeletionMask* removed = nullptr);

// Iterative variant: re-solve after every deletion and delete the current
// best-scoring candidate. An eigensolver failure ends the run early.
SolutionReport Isa(const SignedGraph& h, const EdgeSet& candidates, int b,
                   const SpectralOptions& options = {}, const DeletionMask* removed = nullptr);

}  // namespace mbed

#endif  // MBED_SPECTRAL_H_
