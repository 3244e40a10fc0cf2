#include "rcm/coefficient_matrix.hpp"

#include <string>

namespace rcm {

namespace {

int product(const std::vector<int>& v) {
    int p = 1;
    for (int d : v) p *= d;
    return p;
}

} // namespace

CoefficientMatrix::CoefficientMatrix(std::vector<int> row_dims, std::vector<int> col_dims,
                                     Scalar::Kind kind)
    : rows_(product(row_dims)), cols_(product(col_dims)), row_dims_(std::move(row_dims)),
      col_dims_(std::move(col_dims)), kind_(kind) {
    Scalar zero = kind == Scalar::Kind::exact ? Scalar() : Scalar::numeric({0.0, 0.0});
    entries_.assign(static_cast<std::size_t>(rows_) * cols_, zero);
}

int CoefficientMatrix::encode(const MultiIndex& digits, const std::vector<int>& radices) {
    int value = 0;
    for (std::size_t k = 0; k < radices.size(); ++k) value = value * radices[k] + digits[k];
    return value;
}

MultiIndex CoefficientMatrix::decode(int value, const std::vector<int>& radices) {
    MultiIndex digits(radices.size());
    for (std::size_t k = radices.size(); k-- > 0;) {
        digits[k] = value % radices[k];
        value /= radices[k];
    }
    return digits;
}

CoefficientMatrix coefficient_matrix(const PureState& state, const QuditPermutation& perm,
                                     int l) {
    int n = state.n_qudits();
    if (perm.size() != n)
        throw Error(ErrorCode::length_mismatch, "permutation length != qudit count");
    if (l < 1 || l >= n)
        throw Error(ErrorCode::bad_l, "cut size must satisfy 1 <= l < n, got " +
                                          std::to_string(l));

    const auto& q = perm.mapping();
    std::vector<int> row_dims(l), col_dims(n - l);
    for (int k = 0; k < l; ++k) row_dims[k] = state.dims()[q[k] - 1];
    for (int k = l; k < n; ++k) col_dims[k - l] = state.dims()[q[k] - 1];

    CoefficientMatrix m(std::move(row_dims), std::move(col_dims), state.kind());
    for (const auto& [idx, amp] : state.terms()) {
        MultiIndex permuted = perm.apply(idx);
        MultiIndex row_digits(permuted.begin(), permuted.begin() + l);
        MultiIndex col_digits(permuted.begin() + l, permuted.end());
        m.set(CoefficientMatrix::encode(row_digits, m.row_dims()),
              CoefficientMatrix::encode(col_digits, m.col_dims()), amp);
    }
    return m;
}

CoefficientMatrix transpose(const CoefficientMatrix& m) {
    CoefficientMatrix t(m.col_dims(), m.row_dims(), m.kind());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) t.set(c, r, m.at(r, c));
    return t;
}

} // namespace rcm
