#include "homog/sparse.hpp"

#include <algorithm>

#include "homog/kernels.hpp"

namespace homog {

void CsrMatrix::multiply(const double* x, double* y) const {
  kern::spmv(static_cast<std::size_t>(n), row_ptr.data(), col.data(), val.data(), x, y);
}

double CsrMatrix::at(int i, int j) const {
  for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k)
    if (col[k] == j) return val[k];
  return 0.0;
}

CsrMatrix CsrBuilder::finalize() {
  CsrMatrix A;
  A.n = static_cast<int>(rows_.size());
  A.row_ptr.resize(rows_.size() + 1);
  std::size_t nnz = 0;
  for (auto& row : rows_) nnz += row.size();
  A.col.reserve(nnz);
  A.val.reserve(nnz);
  A.row_ptr[0] = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    auto& row = rows_[i];
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& e : row) {
      A.col.push_back(e.first);
      A.val.push_back(e.second);
    }
    A.row_ptr[i + 1] = static_cast<int>(A.col.size());
  }
  rows_.clear();
  rows_.shrink_to_fit();
  return A;
}

}  // namespace homog
