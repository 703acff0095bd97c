// Copyright 2026 The dmarkov Authors
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

#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Cholesky>

#include "dmarkov/errors.hpp"
#include "dmarkov/geometry.hpp"

namespace dmarkov {

namespace {

struct Evaluation {
  bool pd = false;
  Eigen::MatrixXd k;     // inverse
  Eigen::VectorXd r;     // (R^{-1})_kl over E_G^c
  double norm2 = 0.0;
  double max_abs = 0.0;
};

Evaluation evaluate(const Eigen::MatrixXd& r, const std::vector<Edge>& constraints) {
  Evaluation e;
  Eigen::LLT<Eigen::MatrixXd> llt(r);
  if (llt.info() != Eigen::Success) return e;
  if (!is_pd(SymMatrix<double>::symmetrize(r))) return e;
  e.pd = true;
  e.k = llt.solve(Eigen::MatrixXd::Identity(r.rows(), r.cols()));
  e.r.resize(static_cast<Eigen::Index>(constraints.size()));
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    e.r(c) = e.k(constraints[c].i, constraints[c].j);
  }
  e.norm2 = e.r.squaredNorm();
  e.max_abs = e.r.size() == 0 ? 0.0 : e.r.cwiseAbs().maxCoeff();
  return e;
}

void assign(Eigen::MatrixXd& r, const std::vector<Edge>& vars, const Eigen::VectorXd& x) {
  for (std::size_t v = 0; v < vars.size(); ++v) {
    r(vars[v].i, vars[v].j) = r(vars[v].j, vars[v].i) = x(v);
  }
}

struct Attempt {
  Eigen::MatrixXd point;
  double residual = std::numeric_limits<double>::infinity();
  int iterations = 0;
};

Attempt solve_from(Eigen::VectorXd x, const std::vector<Edge>& vars,
                   const std::vector<Edge>& constraints, int n, const ModelPointOptions& opts) {
  Attempt out;
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
  assign(r, vars, x);
  Evaluation cur = evaluate(r, constraints);
  if (!cur.pd) return out;
  double lambda = 1e-3;
  const Eigen::Index m = static_cast<Eigen::Index>(vars.size());
  Eigen::MatrixXd jac(static_cast<Eigen::Index>(constraints.size()), m);
  while (out.iterations < opts.max_iter && cur.max_abs > opts.residual_tol) {
    ++out.iterations;
    for (std::size_t c = 0; c < constraints.size(); ++c) {
      const int k = constraints[c].i, l = constraints[c].j;
      for (Eigen::Index v = 0; v < m; ++v) {
        const int s = vars[v].i, t = vars[v].j;
        jac(c, v) = -(cur.k(k, s) * cur.k(t, l) + cur.k(k, t) * cur.k(s, l));
      }
    }
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd grad = jac.transpose() * cur.r;
    Eigen::VectorXd scale = jtj.diagonal().cwiseMax(1e-12);
    Eigen::MatrixXd damped = jtj;
    damped.diagonal() += lambda * scale;
    const Eigen::VectorXd step = damped.ldlt().solve(-grad);
    Eigen::VectorXd trial = x + step;
    Eigen::MatrixXd trial_r = r;
    assign(trial_r, vars, trial);
    Evaluation next = evaluate(trial_r, constraints);
    if (next.pd && next.norm2 < cur.norm2) {
      x = std::move(trial);
      r = std::move(trial_r);
      cur = std::move(next);
      lambda = std::max(lambda / 3.0, 1e-12);
    } else {
      lambda *= 4.0;
      if (lambda > 1e14) break;
    }
  }
  out.point = r;
  out.residual = cur.max_abs;
  return out;
}

}  // namespace

ModelPointResult find_model_point(const Graph& g, const Graph& h, std::uint64_t seed,
                                  const ModelPointOptions& opts) {
  if (g.size() != h.size()) throw ArgumentError("graph sizes differ");
  const int n = g.size();
  const std::vector<Edge> vars = h.edges();
  const std::vector<Edge> constraints = g.non_edges();
  const double bound = 0.3 / n;

  ModelPointResult best;
  best.residual = std::numeric_limits<double>::infinity();
  const int restarts = std::max(1, opts.restarts);
  for (int restart = 0; restart < restarts; ++restart) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(restart));
    std::uniform_real_distribution<double> uniform(-bound, bound);
    Eigen::VectorXd x(static_cast<Eigen::Index>(vars.size()));
    for (Eigen::Index v = 0; v < x.size(); ++v) x(v) = uniform(rng);

    const Attempt attempt = solve_from(x, vars, constraints, n, opts);
    if (attempt.residual < best.residual) {
      best.point = SymMatrix<double>::symmetrize(attempt.point);
      best.residual = attempt.residual;
      best.restart = restart;
      best.iterations = attempt.iterations;
    }
    if (attempt.residual <= opts.residual_tol) {
      best.converged = true;
      break;
    }
  }
  if (best.restart >= 0) best.residual = max_residual(best.point, g, h);
  best.converged = best.restart >= 0 && best.residual <= opts.residual_tol;
  return best;
}

}  // namespace dmarkov
