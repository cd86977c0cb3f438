#ifndef TEXTCLF_REPORT_HPP
#define TEXTCLF_REPORT_HPP

#include <span>
#include <string>
#include <vector>

#include "textclf/models.hpp"
#include "textclf/roc.hpp"
#include "textclf/vocabulary.hpp"

namespace textclf {

// One classification-report row. The rounded TSV carries exactly the
// columns Classifier, Precision, Recall, F1-Score, Accuracy, Samples; the
// full-precision sidecar adds the rest.
struct ReportRow {
  std::string classifier;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double accuracy = 0.0;
  std::uint64_t samples = 0;

  ModelKind kind = ModelKind::naive_bayes;
  NgramRange ngrams;
  AucEstimate auc;
  bool precision_degenerate = false;
  bool recall_degenerate = false;
  bool all_converged = true;
};

// Row label: base classifier name plus an n-gram suffix. Naive Bayes is
// always suffixed ("w/ 1-gram", "w/ 2-grams"); other models only when they
// run beyond unigrams.
std::string display_label(ModelKind kind, NgramRange ngrams);

// ASCII file-name slug for per-row artifacts (ROC csv files).
std::string row_slug(ModelKind kind, NgramRange ngrams);

void write_report_tsv(std::span<const ReportRow> rows, const std::string& path);
void write_report_full_tsv(std::span<const ReportRow> rows,
                           const std::string& path);

// CLI n-gram modes: "1" -> (1,1), "1-2" -> (1,2), "2" -> (2,2).
NgramRange parse_ngram_mode(const std::string& mode);
std::string ngram_mode_name(NgramRange range);

}  // namespace textclf

#endif  // TEXTCLF_REPORT_HPP
