#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace homog {

// Compressed sparse row matrix with int32 indices (largest mesh here is well
// under 2^31 nonzeros).  Immutable once built; matvec dispatches to the
// active SIMD backend.
struct CsrMatrix {
  int n = 0;                 // square: n rows, n columns
  std::vector<int> row_ptr;  // size n+1
  std::vector<int> col;
  std::vector<double> val;

  int nnz() const { return static_cast<int>(col.size()); }

  // y = A x
  void multiply(const double* x, double* y) const;

  // value at (i,j), 0 if not stored (linear scan of row i)
  double at(int i, int j) const;

  double diag(int i) const { return at(i, i); }
};

// Row-wise accumulator; duplicate (i,j) contributions are summed.  Columns are
// sorted in finalize() so the CSR layout is deterministic.
class CsrBuilder {
 public:
  explicit CsrBuilder(int n) : rows_(static_cast<std::size_t>(n)) {}

  void add(int i, int j, double v) {
    auto& row = rows_[static_cast<std::size_t>(i)];
    for (auto& e : row) {
      if (e.first == j) {
        e.second += v;
        return;
      }
    }
    row.emplace_back(j, v);
  }

  CsrMatrix finalize();

 private:
  std::vector<std::vector<std::pair<int, double>>> rows_;
};

}  // namespace homog
