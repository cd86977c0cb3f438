#ifndef TEXTCLF_SPARSE_HPP
#define TEXTCLF_SPARSE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace textclf {

// Sparse feature vector: strictly ascending indices below `dimension`,
// parallel values. Vectorized documents carry positive integer counts;
// model code accepts arbitrary finite values.
struct SparseVector {
  std::size_t dimension = 0;
  std::vector<std::uint32_t> indices;
  std::vector<double> values;

  std::size_t nnz() const { return indices.size(); }

  double dot(std::span<const double> weights) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < indices.size(); ++i) {
      sum += weights[indices[i]] * values[i];
    }
    return sum;
  }

  // Sum of values (token occurrences for count vectors).
  double total() const {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum;
  }
};

struct CsrMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> row_ptr;  // rows + 1
  std::vector<std::uint32_t> col;
  std::vector<double> val;
};

struct CscMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> col_ptr;  // cols + 1
  std::vector<std::uint32_t> row;    // ascending within each column
  std::vector<double> val;
};

CsrMatrix build_csr(std::span<const SparseVector> rows, std::size_t dimension);
CscMatrix transpose_to_csc(const CsrMatrix& csr);

}  // namespace textclf

#endif  // TEXTCLF_SPARSE_HPP
