#ifndef TEXTCLF_CROSS_VALIDATE_HPP
#define TEXTCLF_CROSS_VALIDATE_HPP

#include <cstdint>
#include <vector>

#include "textclf/corpus.hpp"
#include "textclf/metrics.hpp"
#include "textclf/models.hpp"
#include "textclf/report.hpp"
#include "textclf/roc.hpp"
#include "textclf/tokenizer.hpp"
#include "textclf/vocabulary.hpp"

namespace textclf {

struct EvalSpec {
  ModelKind kind = ModelKind::naive_bayes;
  NgramRange ngrams;
  int folds = 6;
  std::uint64_t seed = 0;
  Hyperparams hp;
  TokenRule rule;
  bool stratified = true;
  // Off by default: when set, the vocabulary is built once on the full
  // corpus instead of per fold, leaking test n-grams into training.
  bool vocab_leakage = false;
};

struct FoldMetrics {
  ConfusionCounts counts;
  MetricValue precision;
  MetricValue recall;
  double f1 = 0.0;
  double accuracy = 0.0;
  bool converged = true;
};

struct CvResult {
  ReportRow row;                   // fold-averaged, Table-1 shaped
  RocCurve roc;                    // pooled out-of-fold scores
  AucEstimate auc;
  std::vector<FoldMetrics> folds;
  std::vector<double> pooled_scores;  // one per document, corpus order
  std::vector<Label> pooled_predictions;
};

// For each fold: vocabulary from the training portion only (unless leakage
// is requested), train, score the held-out fold. Precision/recall/accuracy
// are unweighted fold means; the row F1 is the harmonic mean of the averaged
// precision and recall; ROC/AUC pool the out-of-fold scores. Deterministic
// per seed; folds may run in parallel.
CvResult cross_validate(const Corpus& corpus, const EvalSpec& spec);

}  // namespace textclf

#endif  // TEXTCLF_CROSS_VALIDATE_HPP
