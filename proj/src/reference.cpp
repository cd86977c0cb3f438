#include "textclf/reference.hpp"

namespace textclf::serial {

void row_dots(const CsrMatrix& csr, std::span<const double> weights,
              double bias, std::span<double> out) {
  for (std::size_t i = 0; i < csr.rows; ++i) {
    double sum = bias;
    for (std::size_t k = csr.row_ptr[i]; k < csr.row_ptr[i + 1]; ++k) {
      sum += weights[csr.col[k]] * csr.val[k];
    }
    out[i] = sum;
  }
}

void column_accumulate(const CscMatrix& csc, std::span<const double> coeff,
                       std::span<double> out) {
  for (std::size_t j = 0; j < csc.cols; ++j) {
    double sum = 0.0;
    for (std::size_t k = csc.col_ptr[j]; k < csc.col_ptr[j + 1]; ++k) {
      sum += coeff[csc.row[k]] * csc.val[k];
    }
    out[j] = sum;
  }
}

void class_feature_totals(const CscMatrix& csc,
                          std::span<const std::uint8_t> labels,
                          std::span<std::uint64_t> class0_totals,
                          std::span<std::uint64_t> class1_totals) {
  for (std::size_t j = 0; j < csc.cols; ++j) {
    std::uint64_t totals[2] = {0, 0};
    for (std::size_t k = csc.col_ptr[j]; k < csc.col_ptr[j + 1]; ++k) {
      totals[labels[csc.row[k]]] += static_cast<std::uint64_t>(csc.val[k]);
    }
    class0_totals[j] = totals[0];
    class1_totals[j] = totals[1];
  }
}

double plain_sum(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum;
}

}  // namespace textclf::serial
