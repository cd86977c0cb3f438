#ifndef TEXTCLF_KERNELS_HPP
#define TEXTCLF_KERNELS_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "textclf/sparse.hpp"

namespace textclf::kernels {

// OpenMP-parallel kernels. Every output element has a unique writer and a
// fixed serial accumulation order, so results are bitwise independent of
// thread count and scheduling. Serial counterparts live in
// textclf::serial for testing and benchmarking.

// out[i] = bias + sum_j A[i,j] * w[j], parallel over rows.
void row_dots(const CsrMatrix& csr, std::span<const double> weights,
              double bias, std::span<double> out);

// out[j] = sum_i coeff[i] * A[i,j], parallel over columns.
void column_accumulate(const CscMatrix& csc, std::span<const double> coeff,
                       std::span<double> out);

// Per-class per-feature totals of integral count values; exact uint64
// arithmetic. labels[i] selects the class of row i (0 or 1).
void class_feature_totals(const CscMatrix& csc,
                          std::span<const std::uint8_t> labels,
                          std::span<std::uint64_t> class0_totals,
                          std::span<std::uint64_t> class1_totals);

// Deterministic sum: fixed 4096-element chunks reduced in chunk order,
// regardless of how many threads computed the partials.
double chunked_sum(std::span<const double> values);

}  // namespace textclf::kernels

#endif  // TEXTCLF_KERNELS_HPP
