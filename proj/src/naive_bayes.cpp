#include <cmath>

#include "textclf/error.hpp"
#include "textclf/kernels.hpp"
#include "textclf/models.hpp"

namespace textclf {

std::array<double, 2> NaiveBayesModel::joint_log_scores(
    const SparseVector& x) const {
  if (x.dimension != dimension) {
    throw Error("naive bayes score dimension mismatch");
  }
  std::array<double, 2> scores = log_prior;
  for (std::size_t k = 0; k < x.nnz(); ++k) {
    scores[0] += x.values[k] * feature_log_prob[0][x.indices[k]];
    scores[1] += x.values[k] * feature_log_prob[1][x.indices[k]];
  }
  return scores;
}

std::array<double, 2> NaiveBayesModel::posteriors(const SparseVector& x) const {
  const std::array<double, 2> s = joint_log_scores(x);
  const double m = std::max(s[0], s[1]);
  const double e0 = std::exp(s[0] - m);
  const double e1 = std::exp(s[1] - m);
  return {e0 / (e0 + e1), e1 / (e0 + e1)};
}

double NaiveBayesModel::score(const SparseVector& x) const {
  return posteriors(x)[static_cast<std::size_t>(Label::depressed)];
}

Label NaiveBayesModel::classify(const SparseVector& x) const {
  const std::array<double, 2> s = joint_log_scores(x);
  return s[1] > s[0] ? Label::depressed : Label::control;
}

NaiveBayesModel train_naive_bayes(std::span<const SparseVector> x,
                                  std::span<const Label> y, double alpha) {
  if (!(alpha > 0.0)) throw Error("naive bayes smoothing alpha must be > 0");
  TrainingSet set = prepare_training_set(x, y, 0);
  if (set.n_control == 0 || set.n_depressed == 0) {
    throw Error("naive bayes training requires both classes");
  }
  const std::size_t dim = set.csr.cols;
  const double n = static_cast<double>(x.size());

  NaiveBayesModel model;
  model.dimension = dim;
  model.alpha = alpha;
  model.log_prior[0] = std::log(static_cast<double>(set.n_control) / n);
  model.log_prior[1] = std::log(static_cast<double>(set.n_depressed) / n);

  // Exact integer totals per class and feature.
  std::vector<std::uint64_t> totals0(dim, 0), totals1(dim, 0);
  kernels::class_feature_totals(set.csc, set.labels, totals0, totals1);
  std::uint64_t class_total[2] = {0, 0};
  for (std::size_t j = 0; j < dim; ++j) {
    class_total[0] += totals0[j];
    class_total[1] += totals1[j];
  }

  for (int k = 0; k < 2; ++k) {
    model.feature_log_prob[k].resize(dim);
    const double denom =
        alpha * static_cast<double>(dim) + static_cast<double>(class_total[k]);
    const auto& totals = k == 0 ? totals0 : totals1;
    for (std::size_t j = 0; j < dim; ++j) {
      model.feature_log_prob[k][j] =
          std::log((alpha + static_cast<double>(totals[j])) / denom);
    }
  }
  return model;
}

}  // namespace textclf
