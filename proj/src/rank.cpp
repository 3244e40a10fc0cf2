#include "rcm/rank.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace rcm {

RankResult rank_exact(const CoefficientMatrix& m) {
    if (m.kind() != Scalar::Kind::exact)
        throw Error(ErrorCode::kind_mismatch, "rank_exact needs exact entries");

    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<ExactComplex>> a(rows, std::vector<ExactComplex>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) a[r][c] = m.at(r, c).exact_value();

    int rank = 0;
    int steps = std::min(rows, cols);
    for (int k = 0; k < steps; ++k) {
        // Full pivoting: largest |entry|^2 in the remaining submatrix, ties
        // to the lowest (row, col) so elimination is deterministic.
        int pr = -1, pc = -1;
        mpq_class best = 0;
        for (int r = k; r < rows; ++r) {
            for (int c = k; c < cols; ++c) {
                if (a[r][c].is_zero()) continue;
                mpq_class n = a[r][c].norm();
                if (pr < 0 || n > best) {
                    best = n;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (pr < 0) break;
        std::swap(a[k], a[pr]);
        if (pc != k)
            for (int r = 0; r < rows; ++r) std::swap(a[r][k], a[r][pc]);
        ++rank;
        for (int r = k + 1; r < rows; ++r) {
            if (a[r][k].is_zero()) continue;
            ExactComplex factor = a[r][k] / a[k][k];
            for (int c = k; c < cols; ++c) a[r][c] = a[r][c] - factor * a[k][c];
        }
    }
    return {rank, RankBackend::exact, std::nullopt, false};
}

RankResult rank_numeric(const CoefficientMatrix& m, double tol_rel) {
    if (m.rows() == 0 || m.cols() == 0)
        throw Error(ErrorCode::empty_matrix, "rank of an empty matrix");

    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<std::complex<double>>> a(rows,
                                                     std::vector<std::complex<double>>(cols));
    double max_abs = 0.0;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            a[r][c] = m.at(r, c).to_complex();
            max_abs = std::max(max_abs, std::abs(a[r][c]));
        }
    }

    RankResult result;
    result.backend = RankBackend::numeric;
    if (max_abs == 0.0) return result; // all-zero matrix: rank 0

    const double threshold = tol_rel * max_abs;
    double min_accepted = 0.0;
    int steps = std::min(rows, cols);
    for (int k = 0; k < steps; ++k) {
        int pr = k, pc = k;
        double best = 0.0;
        for (int r = k; r < rows; ++r) {
            for (int c = k; c < cols; ++c) {
                double v = std::abs(a[r][c]);
                if (v > best) {
                    best = v;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (best <= threshold) {
            // Rejected candidates close to the threshold make the cut fragile.
            if (best > threshold / 10.0) result.rank_ambiguous = true;
            break;
        }
        min_accepted = result.rank == 0 ? best : std::min(min_accepted, best);
        std::swap(a[k], a[pr]);
        if (pc != k)
            for (int r = 0; r < rows; ++r) std::swap(a[r][k], a[r][pc]);
        ++result.rank;
        for (int r = k + 1; r < rows; ++r) {
            std::complex<double> factor = a[r][k] / a[k][k];
            for (int c = k; c < cols; ++c) a[r][c] -= factor * a[k][c];
        }
    }
    if (result.rank > 0) result.ambiguity_margin = min_accepted / threshold;
    return result;
}

std::pair<std::vector<Scalar>, std::vector<Scalar>>
rank_one_factors(const CoefficientMatrix& m, double tol_rel) {
    bool exact = m.kind() == Scalar::Kind::exact;
    int rank = exact ? rank_exact(m).rank : rank_numeric(m, tol_rel).rank;
    if (rank != 1)
        throw Error(ErrorCode::not_rank_one, "matrix has rank " + std::to_string(rank));

    // Exact: first nonzero entry in column-major order, so u is the first
    // nonzero column. Numeric: largest magnitude keeps the division stable.
    int pr = 0, pc = 0;
    if (exact) {
        bool found = false;
        for (int c = 0; c < m.cols() && !found; ++c)
            for (int r = 0; r < m.rows() && !found; ++r)
                if (!m.at(r, c).is_zero()) {
                    pr = r;
                    pc = c;
                    found = true;
                }
    } else {
        double best = -1.0;
        for (int r = 0; r < m.rows(); ++r) {
            for (int c = 0; c < m.cols(); ++c) {
                double v = m.at(r, c).abs();
                if (v > best) {
                    best = v;
                    pr = r;
                    pc = c;
                }
            }
        }
    }

    std::vector<Scalar> u(m.rows()), v(m.cols());
    for (int r = 0; r < m.rows(); ++r) u[r] = m.at(r, pc);
    const Scalar& pivot = m.at(pr, pc);
    for (int c = 0; c < m.cols(); ++c) v[c] = m.at(pr, c) / pivot;
    return {std::move(u), std::move(v)};
}

} // namespace rcm
