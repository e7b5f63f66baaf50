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

#include "mbed/spectral.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace mbed {

LaplacianView::LaplacianView(const SignedGraph& g) : graph_(&g), mask_(g.edge_count()) {}

LaplacianView::LaplacianView(const SignedGraph& g, const EdgeSet& excluded)
    : graph_(&g), mask_(g.edge_count(), excluded) {}

LaplacianView::LaplacianView(const SignedGraph& g, const DeletionMask& mask)
    : graph_(&g), mask_(mask) {}

void LaplacianView::Apply(const Eigen::MatrixXd& x, Eigen::MatrixXd& y) const {
  y.setZero(x.rows(), x.cols());
  const auto edges = graph_->edges();
  for (EdgeId id = 0; id < static_cast<EdgeId>(edges.size()); ++id) {
    if (!mask_.alive(id)) continue;
    const auto& e = edges[id];
    const double s = ToInt(e.sign);
    // Each edge contributes [[1, -s], [-s, 1]] on rows/cols (u, v).
    for (int c = 0; c < x.cols(); ++c) {
      const double xu = x(e.u, c), xv = x(e.v, c);
      y(e.u, c) += xu - s * xv;
      y(e.v, c) += xv - s * xu;
    }
  }
}

Eigen::VectorXd LaplacianView::Diagonal() const {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(dim());
  for (EdgeId id = 0; id < graph_->edge_count(); ++id) {
    if (!mask_.alive(id)) continue;
    d(graph_->edge(id).u) += 1.0;
    d(graph_->edge(id).v) += 1.0;
  }
  return d;
}

Eigen::MatrixXd LaplacianView::Dense() const {
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(dim(), dim());
  for (EdgeId id = 0; id < graph_->edge_count(); ++id) {
    if (!mask_.alive(id)) continue;
    const auto& e = graph_->edge(id);
    const double s = ToInt(e.sign);
    l(e.u, e.u) += 1.0;
    l(e.v, e.v) += 1.0;
    l(e.u, e.v) -= s;
    l(e.v, e.u) -= s;
  }
  return l;
}

double LaplacianView::QuadraticForm(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim()) {
    throw std::invalid_argument("vector length " + std::to_string(x.size()) +
                                " does not match node count " + std::to_string(dim()));
  }
  double sum = 0.0;
  for (EdgeId id = 0; id < graph_->edge_count(); ++id) {
    if (!mask_.alive(id)) continue;
    const auto& e = graph_->edge(id);
    const double d = x[e.u] - ToInt(e.sign) * x[e.v];
    sum += d * d;
  }
  return sum;
}

double QuadraticForm(const SignedGraph& g, const EdgeSet& excluded, std::span<const double> x) {
  return LaplacianView(g, excluded).QuadraticForm(x);
}

EigenPair SmallestEigenpair(const LaplacianView& view, const SpectralOptions& options) {
  const int n = view.dim();
  if (n < 1) throw std::invalid_argument("eigenpair of an empty graph");
  if (options.tol <= 0) throw std::invalid_argument("tolerance must be positive");
  EigenPair pair;
  if (n <= options.dense_threshold) {
    pair = SmallestEigenpairDense(view.Dense());
  } else {
    SymmetricOperator op;
    op.dim = n;
    op.apply = [&view](const Eigen::MatrixXd& x, Eigen::MatrixXd& y) { view.Apply(x, y); };
    op.diagonal = view.Diagonal();
    op.norm_bound = std::max(1.0, 2.0 * op.diagonal.maxCoeff());
    LobpcgOptions lo;
    lo.tol = options.tol;
    lo.max_iter = options.max_iter;
    lo.seed = options.seed;
    lo.block_size = options.block_size;
    pair = Lobpcg(op, lo);
  }
  if (pair.lambda1 < 0.0 && pair.lambda1 >= -options.tol) pair.lambda1 = 0.0;
  return pair;
}

Eigen::VectorXd LaplacianSpectrum(const LaplacianView& view) {
  if (view.dim() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(view.Dense(), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double EdgeScore(const Eigen::VectorXd& v, const SignedEdge& e) {
  const double d = v(e.u) - ToInt(e.sign) * v(e.v);
  return d * d;
}

double UpperBoundG(const EigenPair& eig, const EdgeSet& x, const SignedGraph& g) {
  double sum = 0.0;
  for (EdgeId e : x) sum += EdgeScore(eig.v, g.edge(e));
  return eig.lambda1 - sum;
}

double BalanceUpperBound(const SignedGraph& h, const EigenPair& eig) {
  return h.node_count() - eig.lambda1;
}

double PerturbationPredict(const EigenPair& eig, const SignedEdge& e) {
  return eig.lambda1 - EdgeScore(eig.v, e);
}

long long ScoreKey(double score) { return std::llround(score * 1e12); }

namespace {

struct Scored {
  long long key;
  EdgeId edge;
};

bool ScoredBefore(const Scored& a, const Scored& b) {
  return a.key != b.key ? a.key > b.key : a.edge < b.edge;
}

EdgeSet LiveCandidates(const EdgeSet& candidates, const DeletionMask& mask) {
  EdgeSet live;
  for (EdgeId e : MakeEdgeSet(candidates)) {
    if (e < 0 || e >= mask.size()) throw GraphError("unknown candidate edge " + std::to_string(e));
    if (mask.alive(e)) live.push_back(e);
  }
  return live;
}

}  // namespace

EdgeSet SpecTop(const SignedGraph& h, const EdgeSet& candidates, int b,
                const SpectralOptions& options, const DeletionMask* removed) {
  DeletionMask mask = removed ? *removed : DeletionMask(h.edge_count());
  EdgeSet live = LiveCandidates(candidates, mask);
  if (b < 0 || b > static_cast<int>(live.size())) {
    throw std::invalid_argument("budget exceeds candidate count");
  }
  if (b == 0) return {};
  const EigenPair eig = SmallestEigenpair(LaplacianView(h, mask), options);
  std::vector<Scored> scored;
  scored.reserve(live.size());
  for (EdgeId e : live) scored.push_back({ScoreKey(EdgeScore(eig.v, h.edge(e))), e});
  std::partial_sort(scored.begin(), scored.begin() + b, scored.end(), ScoredBefore);
  EdgeSet out;
  for (int i = 0; i < b; ++i) out.push_back(scored[i].edge);
  return MakeEdgeSet(std::move(out));
}

SolutionReport Isa(const SignedGraph& h, const EdgeSet& candidates, int b,
                   const SpectralOptions& options, const DeletionMask* removed) {
  const auto start = std::chrono::steady_clock::now();
  DeletionMask mask = removed ? *removed : DeletionMask(h.edge_count());
  EdgeSet pool = LiveCandidates(candidates, mask);
  if (b < 0 || b > static_cast<int>(pool.size())) {
    throw std::invalid_argument("budget exceeds candidate count");
  }
  SolutionReport report;
  report.algorithm = "isa";
  report.budget = b;
  int wide_gap_steps = 0;
  auto solve = [&]() -> std::optional<EigenPair> {
    try {
      return SmallestEigenpair(LaplacianView(h, mask), options);
    } catch (const EigenSolveError& err) {
      report.stopped_early = true;
      report.note = err.what();
      return std::nullopt;
    }
  };

  for (int step = 0; step < b; ++step) {
    auto eig = solve();
    if (!eig) break;
    report.lambda_trajectory.push_back(eig->lambda1);
    if (eig->gap && *eig->gap >= 4.0) ++wide_gap_steps;
    Scored best{-1, -1};
    for (EdgeId e : pool) {
      Scored s{ScoreKey(EdgeScore(eig->v, h.edge(e))), e};
      if (best.edge < 0 || ScoredBefore(s, best)) best = s;
    }
    pool.erase(std::find(pool.begin(), pool.end(), best.edge));
    mask.Remove(best.edge);
    report.deleted.push_back(best.edge);
    report.step_gains.push_back(0);
    report.zero_gain_steps.push_back(0);
  }
  if (!report.stopped_early && b > 0 && h.node_count() > 0) {
    if (auto eig = solve()) report.lambda_trajectory.push_back(eig->lambda1);
  }
  if (report.note.empty()) {
    report.note = "eigengap>=4 at " + std::to_string(wide_gap_steps) + "/" +
                  std::to_string(report.deleted.size()) + " steps";
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace mbed
