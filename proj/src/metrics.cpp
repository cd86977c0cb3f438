#include "textclf/metrics.hpp"

#include "textclf/error.hpp"

namespace textclf {

ConfusionCounts confusion(std::span<const Label> predictions,
                          std::span<const Label> truth) {
  if (predictions.size() != truth.size()) {
    throw Error("prediction/truth length mismatch: " +
                std::to_string(predictions.size()) + " vs " +
                std::to_string(truth.size()));
  }
  if (predictions.empty()) throw Error("confusion counts need predictions");
  ConfusionCounts c;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const bool predicted = predictions[i] == Label::depressed;
    const bool actual = truth[i] == Label::depressed;
    if (predicted && actual) ++c.tp;
    else if (predicted && !actual) ++c.fp;
    else if (!predicted && actual) ++c.fn;
    else ++c.tn;
  }
  return c;
}

MetricValue precision(const ConfusionCounts& c) {
  const std::uint64_t denom = c.tp + c.fp;
  if (denom == 0) return {0.0, true};
  return {static_cast<double>(c.tp) / static_cast<double>(denom), false};
}

MetricValue recall(const ConfusionCounts& c) {
  const std::uint64_t denom = c.tp + c.fn;
  if (denom == 0) return {0.0, true};
  return {static_cast<double>(c.tp) / static_cast<double>(denom), false};
}

double f1(double precision, double recall) {
  const double sum = precision + recall;
  if (sum == 0.0) return 0.0;
  return 2.0 * precision * recall / sum;
}

double accuracy(const ConfusionCounts& c) {
  if (c.total() == 0) throw Error("accuracy of empty counts");
  return static_cast<double>(c.tp + c.tn) / static_cast<double>(c.total());
}

}  // namespace textclf
