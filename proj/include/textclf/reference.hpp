#ifndef TEXTCLF_REFERENCE_HPP
#define TEXTCLF_REFERENCE_HPP

#include <cstdint>
#include <span>

#include "textclf/sparse.hpp"

namespace textclf::serial {

// Plain single-threaded counterparts of textclf::kernels, kept for tests
// and the benchmark. row_dots, column_accumulate and class_feature_totals
// match the parallel kernels bitwise; chunked sums agree to rounding.

void row_dots(const CsrMatrix& csr, std::span<const double> weights,
              double bias, std::span<double> out);

void column_accumulate(const CscMatrix& csc, std::span<const double> coeff,
                       std::span<double> out);

void class_feature_totals(const CscMatrix& csc,
                          std::span<const std::uint8_t> labels,
                          std::span<std::uint64_t> class0_totals,
                          std::span<std::uint64_t> class1_totals);

double plain_sum(std::span<const double> values);

}  // namespace textclf::serial

#endif  // TEXTCLF_REFERENCE_HPP
