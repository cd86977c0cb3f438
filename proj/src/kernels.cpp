#include "textclf/kernels.hpp"

namespace textclf::kernels {

void row_dots(const CsrMatrix& csr, std::span<const double> weights,
              double bias, std::span<double> out) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(csr.rows); ++i) {
    const std::size_t row = static_cast<std::size_t>(i);
    double sum = bias;
    for (std::size_t k = csr.row_ptr[row]; k < csr.row_ptr[row + 1]; ++k) {
      sum += weights[csr.col[k]] * csr.val[k];
    }
    out[row] = sum;
  }
}

void column_accumulate(const CscMatrix& csc, std::span<const double> coeff,
                       std::span<double> out) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(csc.cols); ++j) {
    const std::size_t column = static_cast<std::size_t>(j);
    double sum = 0.0;
    for (std::size_t k = csc.col_ptr[column]; k < csc.col_ptr[column + 1];
         ++k) {
      sum += coeff[csc.row[k]] * csc.val[k];
    }
    out[column] = sum;
  }
}

void class_feature_totals(const CscMatrix& csc,
                          std::span<const std::uint8_t> labels,
                          std::span<std::uint64_t> class0_totals,
                          std::span<std::uint64_t> class1_totals) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(csc.cols); ++j) {
    const std::size_t column = static_cast<std::size_t>(j);
    std::uint64_t totals[2] = {0, 0};
    for (std::size_t k = csc.col_ptr[column]; k < csc.col_ptr[column + 1];
         ++k) {
      totals[labels[csc.row[k]]] += static_cast<std::uint64_t>(csc.val[k]);
    }
    class0_totals[column] = totals[0];
    class1_totals[column] = totals[1];
  }
}

double chunked_sum(std::span<const double> values) {
  constexpr std::size_t kChunk = 4096;
  const std::size_t n_chunks = (values.size() + kChunk - 1) / kChunk;
  if (n_chunks <= 1) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum;
  }
  std::vector<double> partial(n_chunks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(n_chunks); ++c) {
    const std::size_t begin = static_cast<std::size_t>(c) * kChunk;
    const std::size_t end = std::min(begin + kChunk, values.size());
    double sum = 0.0;
    for (std::size_t i = begin; i < end; ++i) sum += values[i];
    partial[static_cast<std::size_t>(c)] = sum;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace textclf::kernels
