#include "textclf/vectorize.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>

#include "textclf/error.hpp"

namespace textclf {

SparseVector vectorize(const Document& doc, const Vocabulary& vocab,
                       const TokenRule& rule) {
  // Gather (index, 1) hits, sort, and coalesce duplicates.
  std::vector<std::uint32_t> hits;
  for (const std::string& gram :
       extract_ngrams(tokenize(doc.text, rule), vocab.ngram_range())) {
    const std::int64_t idx = vocab.index_of(gram);
    if (idx >= 0) hits.push_back(static_cast<std::uint32_t>(idx));
  }
  std::sort(hits.begin(), hits.end());

  SparseVector vec;
  vec.dimension = vocab.dimension();
  for (std::size_t i = 0; i < hits.size();) {
    std::size_t j = i;
    while (j < hits.size() && hits[j] == hits[i]) ++j;
    vec.indices.push_back(hits[i]);
    vec.values.push_back(static_cast<double>(j - i));
    i = j;
  }
  return vec;
}

std::vector<SparseVector> vectorize_corpus(const Corpus& corpus,
                                           const Vocabulary& vocab,
                                           const TokenRule& rule) {
  std::vector<SparseVector> rows(corpus.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(corpus.size());
       ++i) {
    rows[static_cast<std::size_t>(i)] =
        vectorize(corpus[static_cast<std::size_t>(i)], vocab, rule);
  }
  return rows;
}

std::vector<FrequencyRow> class_frequency_report(const Corpus& corpus,
                                                 const Vocabulary& vocab,
                                                 const TokenRule& rule) {
  if (vocab.dimension() == 0) throw Error("frequency report needs a vocabulary");
  const std::size_t dim = vocab.dimension();
  std::vector<std::uint64_t> counts[2];
  counts[0].assign(dim, 0);
  counts[1].assign(dim, 0);

  // Integer tallies commute, so per-document vectors can be merged in any
  // order; serial merge keeps this simple and the vectorize pass parallel.
  std::vector<SparseVector> rows = vectorize_corpus(corpus, vocab, rule);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto& class_counts = counts[static_cast<std::size_t>(corpus[i].label)];
    for (std::size_t k = 0; k < rows[i].nnz(); ++k) {
      class_counts[rows[i].indices[k]] +=
          static_cast<std::uint64_t>(rows[i].values[k]);
    }
  }

  std::vector<FrequencyRow> report(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    FrequencyRow& row = report[j];
    row.ngram = vocab.term(static_cast<std::uint32_t>(j));
    row.count_depressed = counts[static_cast<std::size_t>(Label::depressed)][j];
    row.count_control = counts[static_cast<std::size_t>(Label::control)][j];
    if (row.count_control == 0) {
      row.ratio = row.count_depressed == 0
                      ? 0.0
                      : std::numeric_limits<double>::infinity();
    } else {
      row.ratio = static_cast<double>(row.count_depressed) /
                  static_cast<double>(row.count_control);
    }
  }
  std::sort(report.begin(), report.end(),
            [](const FrequencyRow& a, const FrequencyRow& b) {
              if (a.ratio != b.ratio) return a.ratio > b.ratio;
              return a.ngram < b.ngram;
            });
  return report;
}

void write_frequency_report(const std::vector<FrequencyRow>& rows,
                            std::size_t top_n, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write \"" + path + "\"");
  out << "ngram\tcount_depressed\tcount_control\tratio\n";
  const std::size_t limit = std::min(top_n, rows.size());
  for (std::size_t i = 0; i < limit; ++i) {
    out << rows[i].ngram << '\t' << rows[i].count_depressed << '\t'
        << rows[i].count_control << '\t';
    if (std::isinf(rows[i].ratio)) {
      out << "inf";
    } else {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.6g", rows[i].ratio);
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw Error("write failed for \"" + path + "\"");
}

}  // namespace textclf
