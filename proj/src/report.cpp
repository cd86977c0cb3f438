#include "textclf/report.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>

#include "textclf/error.hpp"

namespace textclf {

NgramRange parse_ngram_mode(const std::string& mode) {
  if (mode == "1") return {1, 1};
  if (mode == "1-2") return {1, 2};
  if (mode == "2") return {2, 2};
  throw Error("unknown ngram mode \"" + mode + "\" (expected 1, 1-2, or 2)");
}

std::string ngram_mode_name(NgramRange range) {
  if (range.low == 1 && range.high == 1) return "1";
  if (range.low == 1 && range.high == 2) return "1-2";
  if (range.low == 2 && range.high == 2) return "2";
  return std::to_string(range.low) + "-" + std::to_string(range.high);
}

std::string display_label(ModelKind kind, NgramRange ngrams) {
  std::string label = model_display_name(kind);
  if (ngrams.high >= 2) {
    label += ngrams.low == 1 ? " w/ 2-grams" : " w/ 2-grams only";
  } else if (kind == ModelKind::naive_bayes) {
    label += " w/ 1-gram";
  }
  return label;
}

std::string row_slug(ModelKind kind, NgramRange ngrams) {
  std::string slug = model_kind_name(kind);
  slug += "_";
  slug += std::to_string(ngrams.low);
  if (ngrams.high != ngrams.low) {
    slug += "-" + std::to_string(ngrams.high);
  }
  slug += "gram";
  return slug;
}

namespace {

std::string two_decimals(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string full_precision(double v) {
  char buf[40];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

}  // namespace

void write_report_tsv(std::span<const ReportRow> rows,
                      const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write \"" + path + "\"");
  out << "Classifier\tPrecision\tRecall\tF1-Score\tAccuracy\tSamples\n";
  for (const ReportRow& row : rows) {
    out << row.classifier << '\t' << two_decimals(row.precision) << '\t'
        << two_decimals(row.recall) << '\t' << two_decimals(row.f1) << '\t'
        << two_decimals(row.accuracy) << '\t' << row.samples << '\n';
  }
  if (!out) throw Error("write failed for \"" + path + "\"");
}

void write_report_full_tsv(std::span<const ReportRow> rows,
                           const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write \"" + path + "\"");
  out << "Classifier\tModel\tNgrams\tPrecision\tRecall\tF1-Score\tAccuracy"
         "\tSamples\tAucTrapezoid\tAucPairwise\tPrecisionDegenerate"
         "\tRecallDegenerate\tConverged\n";
  for (const ReportRow& row : rows) {
    out << row.classifier << '\t' << model_kind_name(row.kind) << '\t'
        << ngram_mode_name(row.ngrams) << '\t' << full_precision(row.precision)
        << '\t' << full_precision(row.recall) << '\t' << full_precision(row.f1)
        << '\t' << full_precision(row.accuracy) << '\t' << row.samples << '\t'
        << full_precision(row.auc.trapezoid) << '\t'
        << full_precision(row.auc.pairwise) << '\t'
        << (row.precision_degenerate ? 1 : 0) << '\t'
        << (row.recall_degenerate ? 1 : 0) << '\t'
        << (row.all_converged ? 1 : 0) << '\n';
  }
  if (!out) throw Error("write failed for \"" + path + "\"");
}

}  // namespace textclf
