#pragma once

#include <vector>

#include "rcm/state.hpp"

namespace rcm {

// Dense amplitude matrix for a state under a qudit permutation and cut size l:
// rows are indexed by the first l permuted qudits, columns by the rest, both
// in mixed-radix ascending lexicographic order (most significant first).
class CoefficientMatrix {
  public:
    CoefficientMatrix(std::vector<int> row_dims, std::vector<int> col_dims, Scalar::Kind kind);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar::Kind kind() const { return kind_; }
    const std::vector<int>& row_dims() const { return row_dims_; }
    const std::vector<int>& col_dims() const { return col_dims_; }

    const Scalar& at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, Scalar v) { entries_[static_cast<std::size_t>(r) * cols_ + c] = std::move(v); }

    // Mixed-radix encodings used for row/column placement.
    static int encode(const MultiIndex& digits, const std::vector<int>& radices);
    static MultiIndex decode(int value, const std::vector<int>& radices);

  private:
    int rows_, cols_;
    std::vector<int> row_dims_, col_dims_;
    Scalar::Kind kind_;
    std::vector<Scalar> entries_;
};

// The coefficient matrix of `state` under `perm` with the first l permuted
// qudits as rows; 1 <= l < n.
CoefficientMatrix coefficient_matrix(const PureState& state, const QuditPermutation& perm, int l);

CoefficientMatrix transpose(const CoefficientMatrix& m);

} // namespace rcm
