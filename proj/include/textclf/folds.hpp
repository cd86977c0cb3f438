#ifndef TEXTCLF_FOLDS_HPP
#define TEXTCLF_FOLDS_HPP

#include <cstdint>
#include <vector>

#include "textclf/corpus.hpp"

namespace textclf {

// Immutable per-document fold assignment. Fold sizes differ by at most one,
// per class as well when built stratified.
struct FoldPlan {
  int k = 0;
  std::vector<int> assignment;  // one fold index in [0, k) per document

  std::vector<std::size_t> test_indices(int fold) const;
  std::vector<std::size_t> train_indices(int fold) const;
};

// Seeded, deterministic. Requires k >= 2 and at least k documents per class.
FoldPlan stratified_kfold(const Corpus& corpus, int k, std::uint64_t seed);

// Relaxed mode (no per-class balance); supports k == corpus size
// (leave-one-out). Requires 2 <= k <= corpus size.
FoldPlan unstratified_kfold(const Corpus& corpus, int k, std::uint64_t seed);

}  // namespace textclf

#endif  // TEXTCLF_FOLDS_HPP
