#ifndef TEXTCLF_ROC_HPP
#define TEXTCLF_ROC_HPP

#include <span>
#include <string>
#include <vector>

#include "textclf/corpus.hpp"

namespace textclf {

// Threshold sweep over the empirical score distributions. Points start at
// (0,0) and end at (1,1); both coordinates are non-decreasing. Tied scores
// collapse into a single point (a diagonal segment).
struct RocCurve {
  std::vector<double> fpr;
  std::vector<double> tpr;
  std::vector<double> thresholds;  // +inf for the leading (0,0) point

  std::size_t size() const { return fpr.size(); }
};

// Classifies score >= threshold as depressed for each distinct score,
// descending. Requires both classes in truth.
RocCurve roc_curve(std::span<const double> scores, std::span<const Label> truth);

// Two independent routes to the same area: geometric (trapezoids under the
// curve) and probabilistic (fraction of positive-negative score pairs won,
// ties credited one half).
struct AucEstimate {
  double trapezoid = 0.0;
  double pairwise = 0.0;
};

AucEstimate auc(const RocCurve& curve, std::span<const double> scores,
                std::span<const Label> truth);

// CSV with header threshold,fpr,tpr and a trailing "# auc_..." comment line.
void write_roc_csv(const RocCurve& curve, const AucEstimate& estimate,
                   const std::string& path);

}  // namespace textclf

#endif  // TEXTCLF_ROC_HPP
