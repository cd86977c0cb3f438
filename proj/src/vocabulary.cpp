#include "textclf/vocabulary.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "textclf/error.hpp"

namespace textclf {

namespace {

void check_range(NgramRange range) {
  if (range.low < 1 || range.low > range.high || range.high > 2) {
    throw Error("ngram range must satisfy 1 <= low <= high <= 2");
  }
}

}  // namespace

Vocabulary::Vocabulary(std::vector<std::string> sorted_terms, NgramRange range)
    : terms_(std::move(sorted_terms)), range_(range) {
  check_range(range);
  index_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0 && !(terms_[i - 1] < terms_[i])) {
      throw Error("vocabulary terms must be strictly sorted");
    }
    index_.emplace(terms_[i], static_cast<std::uint32_t>(i));
  }
}

std::vector<std::string> extract_ngrams(const std::vector<std::string>& tokens,
                                        NgramRange range) {
  check_range(range);
  std::vector<std::string> out;
  for (int n = range.low; n <= range.high; ++n) {
    if (tokens.size() < static_cast<std::size_t>(n)) continue;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      std::string gram = tokens[i];
      for (int j = 1; j < n; ++j) {
        gram.push_back(' ');
        gram += tokens[i + j];
      }
      out.push_back(std::move(gram));
    }
  }
  return out;
}

namespace {

Vocabulary build_vocabulary_indexed(const Corpus& corpus, const TokenRule& rule,
                                    NgramRange range,
                                    std::span<const std::size_t> doc_indices) {
  check_range(range);

  // Per-thread sets; set union is order-independent and the final sort is
  // canonical, so the result does not depend on scheduling.
  std::vector<std::unordered_set<std::string>> locals;
#ifdef _OPENMP
#pragma omp parallel
  {
#pragma omp single
    locals.resize(static_cast<std::size_t>(omp_get_num_threads()));
    auto& local = locals[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0;
         i < static_cast<std::ptrdiff_t>(doc_indices.size()); ++i) {
      const Document& doc = corpus[doc_indices[static_cast<std::size_t>(i)]];
      for (auto& gram : extract_ngrams(tokenize(doc.text, rule), range)) {
        local.insert(std::move(gram));
      }
    }
  }
#else
  locals.resize(1);
  for (std::size_t i : doc_indices) {
    for (auto& gram : extract_ngrams(tokenize(corpus[i].text, rule), range)) {
      locals[0].insert(std::move(gram));
    }
  }
#endif

  std::unordered_set<std::string> merged;
  for (auto& local : locals) {
    merged.merge(local);
  }
  std::vector<std::string> terms(merged.begin(), merged.end());
  std::sort(terms.begin(), terms.end());
  return Vocabulary(std::move(terms), range);
}

}  // namespace

Vocabulary build_vocabulary(const Corpus& corpus, const TokenRule& rule,
                            NgramRange range) {
  std::vector<std::size_t> all(corpus.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return build_vocabulary_indexed(corpus, rule, range, all);
}

Vocabulary build_vocabulary(const Corpus& corpus, const TokenRule& rule,
                            NgramRange range,
                            std::span<const std::size_t> doc_indices) {
  return build_vocabulary_indexed(corpus, rule, range, doc_indices);
}

namespace {

constexpr int kVocabFormatVersion = 1;

}  // namespace

void save_vocabulary(const Vocabulary& vocab, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write \"" + path + "\"");
  out << "textclf-vocab " << kVocabFormatVersion << ' '
      << vocab.ngram_range().low << ' ' << vocab.ngram_range().high << ' '
      << vocab.dimension() << '\n';
  for (std::size_t i = 0; i < vocab.dimension(); ++i) {
    out << i << '\t' << vocab.term(static_cast<std::uint32_t>(i)) << '\n';
  }
  if (!out) throw Error("write failed for \"" + path + "\"");
}

Vocabulary load_vocabulary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open vocabulary file \"" + path + "\"");
  std::string header;
  if (!std::getline(in, header)) throw Error(path + ": empty vocabulary file");
  std::istringstream hs(header);
  std::string magic;
  int version = 0;
  NgramRange range;
  std::size_t dimension = 0;
  hs >> magic >> version >> range.low >> range.high >> dimension;
  if (magic != "textclf-vocab" || hs.fail()) {
    throw Error(path + ": not a vocabulary file");
  }
  if (version != kVocabFormatVersion) {
    throw Error(path + ": unsupported vocabulary version " +
                std::to_string(version));
  }
  std::vector<std::string> terms;
  terms.reserve(dimension);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(path + ": malformed vocabulary line \"" + line + "\"");
    }
    std::size_t index = 0;
    try {
      index = std::stoull(line.substr(0, tab));
    } catch (const std::exception&) {
      throw Error(path + ": malformed vocabulary index in \"" + line + "\"");
    }
    if (index != terms.size()) {
      throw Error(path + ": vocabulary indices must be dense and ascending");
    }
    terms.push_back(line.substr(tab + 1));
  }
  if (terms.size() != dimension) {
    throw Error(path + ": header promises " + std::to_string(dimension) +
                " entries, found " + std::to_string(terms.size()));
  }
  return Vocabulary(std::move(terms), range);
}

}  // namespace textclf
