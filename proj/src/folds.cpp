#include "textclf/folds.hpp"

#include "textclf/error.hpp"
#include "textclf/rng.hpp"

namespace textclf {

std::vector<std::size_t> FoldPlan::test_indices(int fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] == fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldPlan::train_indices(int fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] != fold) out.push_back(i);
  }
  return out;
}

namespace {

void check_k(int k) {
  if (k < 2) throw Error("k must be at least 2, got " + std::to_string(k));
}

}  // namespace

FoldPlan stratified_kfold(const Corpus& corpus, int k, std::uint64_t seed) {
  check_k(k);
  for (Label label : {Label::control, Label::depressed}) {
    if (corpus.count(label) < static_cast<std::size_t>(k)) {
      throw Error("infeasible stratification: class \"" +
                  std::string(label_name(label)) + "\" has " +
                  std::to_string(corpus.count(label)) + " documents, need " +
                  std::to_string(k));
    }
  }

  FoldPlan plan;
  plan.k = k;
  plan.assignment.assign(corpus.size(), -1);

  // Each class is shuffled and dealt round-robin. Dealing starts where the
  // previous class stopped so the per-class remainders land on consecutive
  // folds, keeping overall fold sizes within one of each other.
  std::size_t offset = 0;
  for (Label label : {Label::control, Label::depressed}) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (corpus[i].label == label) members.push_back(i);
    }
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(label)));
    rng.shuffle(members);
    for (std::size_t j = 0; j < members.size(); ++j) {
      plan.assignment[members[j]] =
          static_cast<int>((offset + j) % static_cast<std::size_t>(k));
    }
    offset = (offset + members.size()) % static_cast<std::size_t>(k);
  }
  return plan;
}

FoldPlan unstratified_kfold(const Corpus& corpus, int k, std::uint64_t seed) {
  check_k(k);
  if (static_cast<std::size_t>(k) > corpus.size()) {
    throw Error("k = " + std::to_string(k) + " exceeds corpus size " +
                std::to_string(corpus.size()));
  }
  FoldPlan plan;
  plan.k = k;
  plan.assignment.assign(corpus.size(), -1);
  std::vector<std::size_t> order(corpus.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(mix_seed(seed, 0x6b666f6c64ULL));
  rng.shuffle(order);
  for (std::size_t j = 0; j < order.size(); ++j) {
    plan.assignment[order[j]] = static_cast<int>(j % static_cast<std::size_t>(k));
  }
  return plan;
}

}  // namespace textclf
