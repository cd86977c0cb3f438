#include <cmath>

#include "textclf/error.hpp"
#include "textclf/kernels.hpp"
#include "textclf/models.hpp"

namespace textclf {

namespace {

// log(1 + exp(u)) without overflow.
double log1pexp(double u) {
  if (u <= -37.0) return std::exp(u);
  if (u <= 18.0) return std::log1p(std::exp(u));
  if (u <= 33.3) return u + std::exp(-u);
  return u;
}

double stable_sigmoid(double z) {
  if (z >= 0.0) {
    return 1.0 / (1.0 + std::exp(-z));
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace

double LogisticModel::score(const SparseVector& x) const {
  if (x.dimension != dimension) throw Error("logistic score dimension mismatch");
  return stable_sigmoid(x.dot(weights) + bias);
}

Label LogisticModel::classify(const SparseVector& x) const {
  return score(x) > threshold ? Label::depressed : Label::control;
}

double lr_objective(const CsrMatrix& x, std::span<const double> targets,
                    double lambda, std::span<const double> weights,
                    double bias) {
  std::vector<double> margins(x.rows);
  kernels::row_dots(x, weights, bias, margins);
  std::vector<double> losses(x.rows);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(x.rows); ++i) {
    const std::size_t row = static_cast<std::size_t>(i);
    losses[row] = log1pexp(-targets[row] * margins[row]);
  }
  const double mean_loss =
      kernels::chunked_sum(losses) / static_cast<double>(x.rows);
  return mean_loss + 0.5 * lambda * dot(weights, weights);
}

void lr_gradient(const CsrMatrix& x, const CscMatrix& xt,
                 std::span<const double> targets, double lambda,
                 std::span<const double> weights, double bias,
                 std::span<double> grad_w, double& grad_bias) {
  std::vector<double> margins(x.rows);
  kernels::row_dots(x, weights, bias, margins);
  std::vector<double> coeff(x.rows);
  const double inv_n = 1.0 / static_cast<double>(x.rows);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(x.rows); ++i) {
    const std::size_t row = static_cast<std::size_t>(i);
    const double t = targets[row];
    coeff[row] = -t * stable_sigmoid(-t * margins[row]) * inv_n;
  }
  kernels::column_accumulate(xt, coeff, grad_w);
  for (std::size_t j = 0; j < grad_w.size(); ++j) grad_w[j] += lambda * weights[j];
  grad_bias = kernels::chunked_sum(coeff);
}

LogisticModel train_logistic(std::span<const SparseVector> x,
                             std::span<const Label> y, const Hyperparams& hp,
                             std::vector<double>* objective_trace) {
  TrainingSet set = prepare_training_set(x, y, hp.seed);
  if (set.n_control == 0 || set.n_depressed == 0) {
    throw Error("logistic regression training requires both classes");
  }
  if (!(hp.lr_threshold > 0.0 && hp.lr_threshold < 1.0)) {
    throw Error("logistic threshold must lie in (0, 1)");
  }
  const std::size_t dim = set.csr.cols;

  LogisticModel model;
  model.dimension = dim;
  model.lambda = hp.lr_lambda;
  model.threshold = hp.lr_threshold;
  model.weights.assign(dim, 0.0);

  std::vector<double> grad(dim, 0.0);
  std::vector<double> trial(dim, 0.0);
  double grad_bias = 0.0;
  double objective =
      lr_objective(set.csr, set.targets, hp.lr_lambda, model.weights, model.bias);
  if (objective_trace) objective_trace->push_back(objective);
  double step = 1.0;

  for (std::uint32_t iter = 0; iter < hp.lr_max_iters; ++iter) {
    lr_gradient(set.csr, set.csc, set.targets, hp.lr_lambda, model.weights,
                model.bias, grad, grad_bias);
    const double grad_sq = dot(grad, grad) + grad_bias * grad_bias;
    if (std::sqrt(grad_sq) <= hp.lr_tolerance) {
      model.converged = true;
      break;
    }
    // Backtracking Armijo line search; acceptance guarantees a strict
    // decrease of the computed objective.
    step = std::min(step * 2.0, 1e10);
    bool accepted = false;
    while (step >= 1e-20) {
      for (std::size_t j = 0; j < dim; ++j) {
        trial[j] = model.weights[j] - step * grad[j];
      }
      const double trial_bias = model.bias - step * grad_bias;
      const double trial_obj =
          lr_objective(set.csr, set.targets, hp.lr_lambda, trial, trial_bias);
      if (trial_obj <= objective - 1e-4 * step * grad_sq) {
        model.weights.swap(trial);
        model.bias = trial_bias;
        objective = trial_obj;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      model.converged = true;  // no descent representable at this point
      break;
    }
    model.iterations = iter + 1;
    if (objective_trace) objective_trace->push_back(objective);
  }
  model.objective = objective;
  return model;
}

}  // namespace textclf
