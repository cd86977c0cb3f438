#include "textclf/roc.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>

#include "textclf/error.hpp"

namespace textclf {

RocCurve roc_curve(std::span<const double> scores,
                   std::span<const Label> truth) {
  if (scores.size() != truth.size()) {
    throw Error("score/truth length mismatch");
  }
  std::uint64_t n_pos = 0, n_neg = 0;
  for (Label label : truth) {
    if (label == Label::depressed) ++n_pos; else ++n_neg;
  }
  if (n_pos == 0 || n_neg == 0) {
    throw Error("ROC is undefined: truth contains a single class");
  }

  // Sort indices by score descending; sweep emits one point per distinct
  // score so ties collapse into a diagonal segment.
  std::vector<std::size_t> order(scores.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] > scores[b];
  });

  RocCurve curve;
  curve.fpr.push_back(0.0);
  curve.tpr.push_back(0.0);
  curve.thresholds.push_back(std::numeric_limits<double>::infinity());

  std::uint64_t tp = 0, fp = 0;
  std::size_t i = 0;
  while (i < order.size()) {
    const double threshold = scores[order[i]];
    while (i < order.size() && scores[order[i]] == threshold) {
      if (truth[order[i]] == Label::depressed) ++tp; else ++fp;
      ++i;
    }
    curve.fpr.push_back(static_cast<double>(fp) / static_cast<double>(n_neg));
    curve.tpr.push_back(static_cast<double>(tp) / static_cast<double>(n_pos));
    curve.thresholds.push_back(threshold);
  }
  return curve;
}

AucEstimate auc(const RocCurve& curve, std::span<const double> scores,
                std::span<const Label> truth) {
  AucEstimate estimate;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    estimate.trapezoid += (curve.fpr[i] - curve.fpr[i - 1]) *
                          0.5 * (curve.tpr[i] + curve.tpr[i - 1]);
  }

  // Eq-style pairwise route: P(score_pos > score_neg), ties worth 1/2.
  std::vector<double> pos, neg;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    (truth[i] == Label::depressed ? pos : neg).push_back(scores[i]);
  }
  if (pos.empty() || neg.empty()) {
    throw Error("AUC is undefined: truth contains a single class");
  }
  std::uint64_t wins = 0, ties = 0;
#pragma omp parallel for schedule(static) reduction(+ : wins, ties)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(pos.size()); ++i) {
    const double p = pos[static_cast<std::size_t>(i)];
    std::uint64_t local_wins = 0, local_ties = 0;
    for (double n : neg) {
      if (p > n) ++local_wins;
      else if (p == n) ++local_ties;
    }
    wins += local_wins;
    ties += local_ties;
  }
  estimate.pairwise =
      (static_cast<double>(wins) + 0.5 * static_cast<double>(ties)) /
      (static_cast<double>(pos.size()) * static_cast<double>(neg.size()));
  return estimate;
}

namespace {

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

}  // namespace

void write_roc_csv(const RocCurve& curve, const AucEstimate& estimate,
                   const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write \"" + path + "\"");
  out << "threshold,fpr,tpr\n";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    out << format_double(curve.thresholds[i]) << ','
        << format_double(curve.fpr[i]) << ',' << format_double(curve.tpr[i])
        << '\n';
  }
  out << "# auc_trapezoid=" << format_double(estimate.trapezoid)
      << " auc_pairwise=" << format_double(estimate.pairwise) << '\n';
  if (!out) throw Error("write failed for \"" + path + "\"");
}

}  // namespace textclf
