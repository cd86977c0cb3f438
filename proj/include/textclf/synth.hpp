#ifndef TEXTCLF_SYNTH_HPP
#define TEXTCLF_SYNTH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "textclf/corpus.hpp"

namespace textclf {

// Generating model for synthetic corpora with known statistics. The token
// universe is laid out as [shared | positive-only | negative-only]; each
// class draws i.i.d. tokens from its multinomial over that universe.
// Document lengths are 1 + Poisson(doc_length_mean - 1), so doc_length_mean
// of 1 yields exactly one token per document and Bayes rates that are exact
// by enumeration.
struct SynthSpec {
  std::size_t n_positive = 0;
  std::size_t n_negative = 0;
  std::size_t vocab_shared = 0;
  std::size_t vocab_pos_only = 0;
  std::size_t vocab_neg_only = 0;
  double doc_length_mean = 1.0;
  std::vector<double> pos_probs;  // length vocab_total(); zero outside support
  std::vector<double> neg_probs;
  std::uint64_t seed = 0;

  std::size_t vocab_total() const {
    return vocab_shared + vocab_pos_only + vocab_neg_only;
  }

  // Token string for universe index i ("s.." shared, "p..", "n..").
  std::string token(std::size_t i) const;

  // Throws on any violated invariant (counts, support layout, sums to 1).
  void validate() const;

  // Fills pos_probs/neg_probs uniformly over each class's support.
  void set_uniform_distributions();
};

// Deterministic per spec.seed; positives first, then negatives, ids
// "dep-NNNNNN" / "ctl-NNNNNN", tokens joined by single spaces.
Corpus synthesize(const SynthSpec& spec);

struct BayesAccuracy {
  double value = 0.0;
  bool exact = false;  // false means seeded Monte Carlo estimate
};

// Accuracy of the optimal classifier under the generating model. Exact for
// disjoint supports, identical class distributions, or when the outcome
// space is small enough to enumerate; otherwise a Monte Carlo estimate.
BayesAccuracy bayes_accuracy(const SynthSpec& spec);

// Flat key=value config file, one documented key per field.
SynthSpec load_synth_spec(const std::string& path);
void save_synth_spec(const SynthSpec& spec, const std::string& path);
std::string synth_spec_to_string(const SynthSpec& spec);

// Checked-in presets: "separable", "clpsych-shape", "bayes085", "indistinct".
SynthSpec synth_preset(const std::string& name);
std::vector<std::string> synth_preset_names();

}  // namespace textclf

#endif  // TEXTCLF_SYNTH_HPP
