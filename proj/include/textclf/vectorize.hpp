#ifndef TEXTCLF_VECTORIZE_HPP
#define TEXTCLF_VECTORIZE_HPP

#include <string>
#include <vector>

#include "textclf/corpus.hpp"
#include "textclf/sparse.hpp"
#include "textclf/vocabulary.hpp"

namespace textclf {

// Raw in-vocabulary n-gram counts; out-of-vocabulary n-grams are ignored.
// No length normalization. Pure; safe to call concurrently.
SparseVector vectorize(const Document& doc, const Vocabulary& vocab,
                       const TokenRule& rule);

// All documents, parallel over the corpus.
std::vector<SparseVector> vectorize_corpus(const Corpus& corpus,
                                           const Vocabulary& vocab,
                                           const TokenRule& rule);

struct FrequencyRow {
  std::string ngram;
  std::uint64_t count_depressed = 0;
  std::uint64_t count_control = 0;
  double ratio = 0.0;  // depressed / control; +inf when control is 0
};

// Per-class total counts for every vocabulary n-gram, sorted by ratio
// descending, ties broken lexicographically.
std::vector<FrequencyRow> class_frequency_report(const Corpus& corpus,
                                                 const Vocabulary& vocab,
                                                 const TokenRule& rule);

// TSV with columns ngram, count_depressed, count_control, ratio.
void write_frequency_report(const std::vector<FrequencyRow>& rows,
                            std::size_t top_n, const std::string& path);

}  // namespace textclf

#endif  // TEXTCLF_VECTORIZE_HPP
