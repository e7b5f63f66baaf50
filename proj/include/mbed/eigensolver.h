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

// Smallest eigenpair of a symmetric positive semidefinite operator.

#ifndef MBED_EIGENSOLVER_H_
#define MBED_EIGENSOLVER_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include <Eigen/Dense>

namespace mbed {

struct EigenPair {
  double lambda1 = 0.0;
  Eigen::VectorXd v;  // unit norm
  double residual = 0.0;  // ||A v - lambda1 v||
  std::optional<double> gap;  // estimate of lambda2 - lambda1
  int iterations = 0;
  bool dense = false;
};

class EigenSolveError : public std::runtime_error {
 public:
  EigenSolveError(const std::string& what, EigenPair best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const EigenPair& best() const { return best_; }

 private:
  EigenPair best_;
};

// Matrix-free symmetric operator: Y = A * X for a block X.
struct SymmetricOperator {
  int dim = 0;
  std::function<void(const Eigen::MatrixXd& x, Eigen::MatrixXd& y)> apply;
  Eigen::VectorXd diagonal;
  // Upper bound on the spectral radius; scales the residual tolerance.
  double norm_bound = 1.0;
};

struct LobpcgOptions {
  double tol = 1e-8;
  int max_iter = 0;  // 0 selects 10 * dim
  int block_size = 4;
  std::uint64_t seed = 0;
};

// Converged when ||A v - lambda v|| <= tol * max(1, norm_bound).
// Throws EigenSolveError carrying the best pair after max_iter iterations.
EigenPair Lobpcg(const SymmetricOperator& op, const LobpcgOptions& options = {});

// Full symmetric eigendecomposition; deterministic.
EigenPair SmallestEigenpairDense(const Eigen::MatrixXd& a);

// Flips v so its first entry with magnitude above 1e-12 is positive.
void NormalizeSign(Eigen::VectorXd& v);

}  // namespace mbed

#endif  // MBED_EIGENSOLVER_H_
