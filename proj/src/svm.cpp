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

}  // namespace

double SvmModel::score(const SparseVector& x) const {
  if (x.dimension != dimension) throw Error("svm score dimension mismatch");
  return x.dot(weights) - offset;
}

Label SvmModel::classify(const SparseVector& x) const {
  return score(x) > 0.0 ? Label::depressed : Label::control;
}

double svm_objective(const CsrMatrix& x, std::span<const double> targets,
                     double c, std::span<const double> weights, double offset) {
  std::vector<double> margins(x.rows);
  kernels::row_dots(x, weights, -offset, margins);
  std::vector<double> hinge(x.rows);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(x.rows); ++i) {
    const std::size_t row = static_cast<std::size_t>(i);
    hinge[row] = std::max(0.0, 1.0 - targets[row] * margins[row]);
  }
  return 0.5 * dot(weights, weights) + c * kernels::chunked_sum(hinge);
}

SvmModel train_svm(std::span<const SparseVector> x, std::span<const Label> y,
                   const Hyperparams& hp, std::vector<double>* objective_trace) {
  if (!(hp.svm_c > 0.0)) throw Error("svm regularization C must be > 0");
  TrainingSet set = prepare_training_set(x, y, hp.seed);
  if (set.n_control == 0 || set.n_depressed == 0) {
    throw Error("svm training requires both classes");
  }
  const std::size_t dim = set.csr.cols;

  SvmModel model;
  model.dimension = dim;
  model.c = hp.svm_c;
  model.weights.assign(dim, 0.0);

  std::vector<double> margins(set.csr.rows);
  std::vector<double> coeff(set.csr.rows);
  std::vector<double> grad(dim, 0.0);
  std::vector<double> trial(dim, 0.0);
  double objective =
      svm_objective(set.csr, set.targets, hp.svm_c, model.weights, model.offset);
  if (objective_trace) objective_trace->push_back(objective);
  double step = 1.0;

  for (std::uint32_t iter = 0; iter < hp.svm_max_iters; ++iter) {
    // Subgradient of the hinge sum; the margin-1 kink contributes zero.
    kernels::row_dots(set.csr, model.weights, -model.offset, margins);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(set.csr.rows);
         ++i) {
      const std::size_t row = static_cast<std::size_t>(i);
      const bool active = set.targets[row] * margins[row] < 1.0;
      coeff[row] = active ? -hp.svm_c * set.targets[row] : 0.0;
    }
    kernels::column_accumulate(set.csc, coeff, grad);
    for (std::size_t j = 0; j < dim; ++j) grad[j] += model.weights[j];
    const double grad_offset = -kernels::chunked_sum(coeff);
    const double grad_sq = dot(grad, grad) + grad_offset * grad_offset;
    if (grad_sq == 0.0) {
      model.converged = true;
      break;
    }

    step = std::min(step * 2.0, 1e10);
    bool accepted = false;
    while (step >= 1e-20) {
      for (std::size_t j = 0; j < dim; ++j) {
        trial[j] = model.weights[j] - step * grad[j];
      }
      const double trial_offset = model.offset - step * grad_offset;
      const double trial_obj =
          svm_objective(set.csr, set.targets, hp.svm_c, trial, trial_offset);
      if (trial_obj <= objective - 1e-4 * step * grad_sq &&
          trial_obj < objective) {
        model.weights.swap(trial);
        model.offset = trial_offset;
        const double improvement = objective - trial_obj;
        objective = trial_obj;
        accepted = true;
        model.iterations = iter + 1;
        if (objective_trace) objective_trace->push_back(objective);
        if (improvement <= hp.svm_tolerance * std::max(1.0, std::abs(objective))) {
          model.converged = true;
        }
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      model.converged = true;  // subgradient direction admits no decrease
      break;
    }
    if (model.converged) break;
  }
  model.objective = objective;
  return model;
}

}  // namespace textclf
