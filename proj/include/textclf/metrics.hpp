#ifndef TEXTCLF_METRICS_HPP
#define TEXTCLF_METRICS_HPP

#include <cstdint>
#include <span>

#include "textclf/corpus.hpp"

namespace textclf {

// Tallied with depressed as the retrieved/relevant class.
struct ConfusionCounts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;

  std::uint64_t total() const { return tp + fp + fn + tn; }
};

ConfusionCounts confusion(std::span<const Label> predictions,
                          std::span<const Label> truth);

// Degenerate denominators (no predicted positives, no actual positives)
// yield value 0 with the flag set, so fold averaging never aborts.
struct MetricValue {
  double value = 0.0;
  bool degenerate = false;
};

MetricValue precision(const ConfusionCounts& c);  // tp / (tp + fp)
MetricValue recall(const ConfusionCounts& c);     // tp / (tp + fn)
double f1(double precision, double recall);       // harmonic mean
double accuracy(const ConfusionCounts& c);        // (tp + tn) / total

}  // namespace textclf

#endif  // TEXTCLF_METRICS_HPP
