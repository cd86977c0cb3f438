#include "textclf/cross_validate.hpp"

#include <exception>
#include <mutex>

#include "textclf/error.hpp"
#include "textclf/folds.hpp"
#include "textclf/rng.hpp"
#include "textclf/vectorize.hpp"

namespace textclf {

CvResult cross_validate(const Corpus& corpus, const EvalSpec& spec) {
  const FoldPlan plan = spec.stratified
                            ? stratified_kfold(corpus, spec.folds, spec.seed)
                            : unstratified_kfold(corpus, spec.folds, spec.seed);
  const std::size_t n = corpus.size();

  CvResult result;
  result.folds.resize(static_cast<std::size_t>(spec.folds));
  result.pooled_scores.assign(n, 0.0);
  result.pooled_predictions.assign(n, Label::control);

  Vocabulary shared_vocab;
  if (spec.vocab_leakage) {
    shared_vocab = build_vocabulary(corpus, spec.rule, spec.ngrams);
  }

  // Folds write to disjoint slots (per-fold metrics, per-document pooled
  // scores), so parallel execution is deterministic. Exceptions are carried
  // out of the parallel region by hand.
  std::exception_ptr failure;
  std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic, 1)
  for (int fold = 0; fold < spec.folds; ++fold) {
    try {
      const std::vector<std::size_t> train_idx = plan.train_indices(fold);
      const std::vector<std::size_t> test_idx = plan.test_indices(fold);

      const Vocabulary vocab =
          spec.vocab_leakage
              ? shared_vocab
              : build_vocabulary(corpus, spec.rule, spec.ngrams, train_idx);

      std::vector<SparseVector> train_x(train_idx.size());
      std::vector<Label> train_y(train_idx.size());
      for (std::size_t i = 0; i < train_idx.size(); ++i) {
        train_x[i] = vectorize(corpus[train_idx[i]], vocab, spec.rule);
        train_y[i] = corpus[train_idx[i]].label;
      }

      Hyperparams hp = spec.hp;
      hp.seed = mix_seed(spec.seed, 0xf01d0000ULL + static_cast<std::uint64_t>(fold));
      const AnyModel model = train_model(spec.kind, train_x, train_y, hp);

      std::vector<Label> predictions(test_idx.size());
      std::vector<Label> truth(test_idx.size());
      for (std::size_t i = 0; i < test_idx.size(); ++i) {
        const SparseVector x = vectorize(corpus[test_idx[i]], vocab, spec.rule);
        result.pooled_scores[test_idx[i]] = model.score(x);
        predictions[i] = model.classify(x);
        result.pooled_predictions[test_idx[i]] = predictions[i];
        truth[i] = corpus[test_idx[i]].label;
      }

      FoldMetrics& metrics = result.folds[static_cast<std::size_t>(fold)];
      metrics.counts = confusion(predictions, truth);
      metrics.precision = precision(metrics.counts);
      metrics.recall = recall(metrics.counts);
      metrics.f1 = f1(metrics.precision.value, metrics.recall.value);
      metrics.accuracy = accuracy(metrics.counts);
      metrics.converged = model.converged();
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  ReportRow& row = result.row;
  row.kind = spec.kind;
  row.ngrams = spec.ngrams;
  row.classifier = display_label(spec.kind, spec.ngrams);
  row.samples = n;
  const double k = static_cast<double>(spec.folds);
  for (const FoldMetrics& metrics : result.folds) {
    row.precision += metrics.precision.value;
    row.recall += metrics.recall.value;
    row.accuracy += metrics.accuracy;
    row.precision_degenerate |= metrics.precision.degenerate;
    row.recall_degenerate |= metrics.recall.degenerate;
    row.all_converged &= metrics.converged;
  }
  row.precision /= k;
  row.recall /= k;
  row.accuracy /= k;
  row.f1 = f1(row.precision, row.recall);

  std::vector<Label> truth(n);
  for (std::size_t i = 0; i < n; ++i) truth[i] = corpus[i].label;
  result.roc = roc_curve(result.pooled_scores, truth);
  result.auc = auc(result.roc, result.pooled_scores, truth);
  row.auc = result.auc;
  return result;
}

}  // namespace textclf
