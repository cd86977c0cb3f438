#include "textclf/sparse.hpp"

#include "textclf/error.hpp"

namespace textclf {

CsrMatrix build_csr(std::span<const SparseVector> rows, std::size_t dimension) {
  CsrMatrix m;
  m.rows = rows.size();
  m.cols = dimension;
  m.row_ptr.resize(rows.size() + 1, 0);
  std::size_t nnz = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].dimension != dimension) {
      throw Error("sparse row dimension mismatch");
    }
    nnz += rows[i].nnz();
    m.row_ptr[i + 1] = nnz;
  }
  m.col.reserve(nnz);
  m.val.reserve(nnz);
  for (const SparseVector& r : rows) {
    m.col.insert(m.col.end(), r.indices.begin(), r.indices.end());
    m.val.insert(m.val.end(), r.values.begin(), r.values.end());
  }
  return m;
}

// Counting sort by column; stable, so rows stay ascending per column.
CscMatrix transpose_to_csc(const CsrMatrix& csr) {
  CscMatrix m;
  m.rows = csr.rows;
  m.cols = csr.cols;
  m.col_ptr.assign(csr.cols + 1, 0);
  m.row.resize(csr.val.size());
  m.val.resize(csr.val.size());
  for (std::uint32_t c : csr.col) ++m.col_ptr[c + 1];
  for (std::size_t j = 0; j < csr.cols; ++j) m.col_ptr[j + 1] += m.col_ptr[j];
  std::vector<std::size_t> next(m.col_ptr.begin(), m.col_ptr.end() - 1);
  for (std::size_t i = 0; i < csr.rows; ++i) {
    for (std::size_t k = csr.row_ptr[i]; k < csr.row_ptr[i + 1]; ++k) {
      const std::size_t dst = next[csr.col[k]]++;
      m.row[dst] = static_cast<std::uint32_t>(i);
      m.val[dst] = csr.val[k];
    }
  }
  return m;
}

}  // namespace textclf
