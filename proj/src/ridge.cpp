#include <cmath>

#include "textclf/error.hpp"
#include "textclf/kernels.hpp"
#include "textclf/models.hpp"

namespace textclf {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

// Normal-equation operator over the stacked unknown z = [w; b]:
//   M z = [X'X w + lambda w + X'1 b ; 1'X w + n b]
struct NormalOperator {
  const CsrMatrix& csr;
  const CscMatrix& csc;
  double lambda;
  mutable std::vector<double> fitted;  // n

  void apply(std::span<const double> z, std::span<double> out) const {
    const std::size_t dim = csr.cols;
    kernels::row_dots(csr, z.subspan(0, dim), z[dim], fitted);
    kernels::column_accumulate(csc, fitted, out.subspan(0, dim));
    for (std::size_t j = 0; j < dim; ++j) out[j] += lambda * z[j];
    out[dim] = kernels::chunked_sum(fitted);
  }
};

}  // namespace

double RidgeModel::score(const SparseVector& x) const {
  if (x.dimension != dimension) throw Error("ridge score dimension mismatch");
  return x.dot(weights) + bias;
}

Label RidgeModel::classify(const SparseVector& x) const {
  return score(x) > 0.0 ? Label::depressed : Label::control;
}

double ridge_objective(const CsrMatrix& x, std::span<const double> targets,
                       double lambda, std::span<const double> weights,
                       double bias) {
  std::vector<double> fitted(x.rows);
  kernels::row_dots(x, weights, bias, fitted);
  std::vector<double> sq(x.rows);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(x.rows); ++i) {
    const std::size_t row = static_cast<std::size_t>(i);
    const double r = fitted[row] - targets[row];
    sq[row] = r * r;
  }
  return kernels::chunked_sum(sq) + lambda * dot(weights, weights);
}

RidgeModel train_ridge(std::span<const SparseVector> x,
                       std::span<const Label> y, const Hyperparams& hp,
                       std::vector<double>* objective_trace) {
  if (!(hp.ridge_lambda > 0.0)) throw Error("ridge lambda must be > 0");
  TrainingSet set = prepare_training_set(x, y, hp.seed);
  if (set.n_control == 0 || set.n_depressed == 0) {
    throw Error("ridge training requires both classes");
  }
  const std::size_t dim = set.csr.cols;
  const std::size_t unknowns = dim + 1;

  NormalOperator op{set.csr, set.csc, hp.ridge_lambda,
                    std::vector<double>(set.csr.rows)};

  std::vector<double> rhs(unknowns);
  kernels::column_accumulate(set.csc, set.targets, std::span(rhs).subspan(0, dim));
  rhs[dim] = kernels::chunked_sum(set.targets);

  // Conjugate gradient from zero; the quadratic form it minimizes equals the
  // ridge objective up to the constant |y|^2, so the objective is
  // non-increasing across iterations.
  std::vector<double> z(unknowns, 0.0);
  std::vector<double> residual = rhs;
  std::vector<double> direction = rhs;
  std::vector<double> m_dir(unknowns, 0.0);
  double rr = dot(residual, residual);
  const double stop = hp.ridge_tolerance * std::max(std::sqrt(dot(rhs, rhs)), 1e-30);

  RidgeModel model;
  model.dimension = dim;
  model.lambda = hp.ridge_lambda;

  if (objective_trace) {
    objective_trace->push_back(ridge_objective(
        set.csr, set.targets, hp.ridge_lambda, std::span(z).subspan(0, dim),
        z[dim]));
  }
  for (std::uint32_t iter = 0; iter < hp.ridge_max_iters; ++iter) {
    if (std::sqrt(rr) <= stop) {
      model.converged = true;
      break;
    }
    op.apply(direction, m_dir);
    const double dir_m_dir = dot(direction, m_dir);
    if (dir_m_dir <= 0.0) {
      model.converged = true;  // numerically singular direction; z is final
      break;
    }
    const double alpha = rr / dir_m_dir;
    for (std::size_t j = 0; j < unknowns; ++j) {
      z[j] += alpha * direction[j];
      residual[j] -= alpha * m_dir[j];
    }
    const double rr_next = dot(residual, residual);
    const double beta = rr_next / rr;
    for (std::size_t j = 0; j < unknowns; ++j) {
      direction[j] = residual[j] + beta * direction[j];
    }
    rr = rr_next;
    model.iterations = iter + 1;
    if (objective_trace) {
      objective_trace->push_back(ridge_objective(
          set.csr, set.targets, hp.ridge_lambda, std::span(z).subspan(0, dim),
          z[dim]));
    }
  }
  if (std::sqrt(rr) <= stop) model.converged = true;

  model.weights.assign(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(dim));
  model.bias = z[dim];
  model.objective = ridge_objective(set.csr, set.targets, hp.ridge_lambda,
                                    model.weights, model.bias);
  return model;
}

}  // namespace textclf
