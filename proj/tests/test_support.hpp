// Test-only helpers: the minor-based rank oracle and seeded random-state
// builders. The oracle is deliberately independent of the elimination code it
// cross-checks.
#pragma once

#include <algorithm>
#include <vector>

#include "rcm/coefficient_matrix.hpp"
#include "rcm/rng.hpp"
#include "rcm/state.hpp"

namespace rcm::testing {

inline ExactComplex minor_determinant(const CoefficientMatrix& m,
                                      const std::vector<int>& rows,
                                      const std::vector<int>& cols) {
    // Laplace expansion along the first listed row; zero entries skipped.
    if (rows.size() == 1) return m.at(rows[0], cols[0]).exact_value();
    ExactComplex det{0, 0};
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    ExactComplex sign{1, 0};
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (!m.at(rows[0], cols[j]).is_zero()) {
            std::vector<int> sub_cols;
            for (std::size_t k = 0; k < cols.size(); ++k)
                if (k != j) sub_cols.push_back(cols[k]);
            det = det + sign * m.at(rows[0], cols[j]).exact_value() *
                            minor_determinant(m, sub_rows, sub_cols);
        }
        sign = -sign;
    }
    return det;
}

// Largest k such that some k-by-k minor has a nonzero determinant, by
// exhaustive enumeration. Intended for min(rows, cols) <= 4.
inline int minor_rank(const CoefficientMatrix& m) {
    int max_k = std::min(m.rows(), m.cols());
    auto subsets = [](int n, int k) {
        std::vector<std::vector<int>> out;
        std::vector<int> pick(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            out.push_back(pick);
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
        return out;
    };
    for (int k = max_k; k >= 1; --k) {
        for (const auto& rows : subsets(m.rows(), k))
            for (const auto& cols : subsets(m.cols(), k))
                if (!minor_determinant(m, rows, cols).is_zero()) return k;
    }
    return 0;
}

// Random exact state: every index gets an amplitude with numerator in
// [-bound, bound] (zeros allowed, so support varies); resampled while the
// state would be zero everywhere.
inline PureState random_exact_state(const std::vector<int>& dims, Rng& rng, int bound = 3) {
    while (true) {
        PureState::TermMap terms;
        MultiIndex idx(dims.size(), 0);
        while (true) {
            int num = rng.uniform(-bound, bound);
            if (num != 0) terms.emplace(idx, Scalar::rational(num, rng.uniform(1, 3)));
            int k = static_cast<int>(dims.size()) - 1;
            while (k >= 0 && idx[k] == dims[k] - 1) idx[k--] = 0;
            if (k < 0) break;
            ++idx[k];
        }
        if (!terms.empty()) return PureState(dims, std::move(terms));
    }
}

// Random exact state with a small random support (1..8 terms).
inline PureState random_sparse_state(const std::vector<int>& dims, Rng& rng) {
    long dimension = 1;
    for (int d : dims) dimension *= d;
    int support = rng.uniform(1, static_cast<int>(std::min<long>(dimension, 8)));
    PureState::TermMap terms;
    while (static_cast<int>(terms.size()) < support) {
        MultiIndex idx;
        for (int d : dims) idx.push_back(rng.uniform(0, d - 1));
        int num = rng.uniform(-4, 4);
        if (num == 0) num = 1;
        terms.emplace(std::move(idx), Scalar::rational(num, rng.uniform(1, 3)));
    }
    return PureState(dims, std::move(terms));
}

// Random exact matrix wrapped in a CoefficientMatrix (metadata dims are the
// plain row/col counts).
inline CoefficientMatrix random_exact_matrix(int rows, int cols, Rng& rng, int rank_cap = -1) {
    CoefficientMatrix m({rows}, {cols}, Scalar::Kind::exact);
    if (rank_cap < 0) {
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                m.set(r, c, Scalar::rational(rng.uniform(-4, 4), rng.uniform(1, 3)));
        return m;
    }
    // Sum of rank-1 outer products keeps the rank at most rank_cap.
    std::vector<std::vector<Scalar>> us, vs;
    for (int t = 0; t < rank_cap; ++t) {
        std::vector<Scalar> u(rows), v(cols);
        for (auto& x : u) x = Scalar::rational(rng.uniform(-3, 3), rng.uniform(1, 2));
        for (auto& x : v) x = Scalar::rational(rng.uniform(-3, 3), rng.uniform(1, 2));
        us.push_back(u);
        vs.push_back(v);
    }
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            Scalar sum;
            for (int t = 0; t < rank_cap; ++t) sum = sum + us[t][r] * vs[t][c];
            m.set(r, c, sum);
        }
    return m;
}

} // namespace rcm::testing
