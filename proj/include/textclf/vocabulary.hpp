#ifndef TEXTCLF_VOCABULARY_HPP
#define TEXTCLF_VOCABULARY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "textclf/corpus.hpp"
#include "textclf/tokenizer.hpp"

namespace textclf {

struct NgramRange {
  int low = 1;
  int high = 1;
};

// Dense, canonically ordered n-gram index: lexicographically sorted n-grams
// receive ascending indices, so vocabularies built from the same document
// multiset are byte-identical. Immutable after construction.
class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::vector<std::string> sorted_terms, NgramRange range);

  std::size_t dimension() const { return terms_.size(); }
  NgramRange ngram_range() const { return range_; }
  const std::vector<std::string>& terms() const { return terms_; }
  const std::string& term(std::uint32_t index) const { return terms_[index]; }

  // -1 when the n-gram is out of vocabulary.
  std::int64_t index_of(const std::string& ngram) const {
    auto it = index_.find(ngram);
    return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
  }

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, std::uint32_t> index_;
  NgramRange range_;
};

// Contiguous token windows of each size in [low, high], joined by single
// spaces. Order of emission follows the token sequence.
std::vector<std::string> extract_ngrams(const std::vector<std::string>& tokens,
                                        NgramRange range);

// Every n-gram occurring at least once in the corpus, canonically ordered.
// Order-independent: permuting the corpus yields an identical vocabulary.
Vocabulary build_vocabulary(const Corpus& corpus, const TokenRule& rule,
                            NgramRange range);

// Restricted to a document subset (cross-validation training portions).
Vocabulary build_vocabulary(const Corpus& corpus, const TokenRule& rule,
                            NgramRange range,
                            std::span<const std::size_t> doc_indices);

// Versioned text format: header "textclf-vocab <version> <low> <high> <D>",
// then one "index<TAB>ngram" line per entry.
void save_vocabulary(const Vocabulary& vocab, const std::string& path);
Vocabulary load_vocabulary(const std::string& path);

}  // namespace textclf

#endif  // TEXTCLF_VOCABULARY_HPP
