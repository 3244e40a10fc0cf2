#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rcm/coefficient_matrix.hpp"

namespace rcm {

enum class RankBackend { exact, numeric };

struct RankResult {
    int rank = 0;
    RankBackend backend = RankBackend::exact;
    // Numeric only: smallest accepted pivot magnitude / rejection threshold.
    std::optional<double> ambiguity_margin;
    // Numeric only: some rejected candidate pivot fell within a factor of 10
    // of the threshold; the rank decision is fragile at this tolerance.
    bool rank_ambiguous = false;
};

// Rank by rational Gaussian elimination with full pivoting. All entries must
// be exact; deterministic.
RankResult rank_exact(const CoefficientMatrix& m);

// Rank by floating-point Gaussian elimination with full pivoting. Exact
// entries are converted to binary64. A pivot is accepted iff its magnitude
// exceeds tol_rel * (max initial absolute entry).
RankResult rank_numeric(const CoefficientMatrix& m, double tol_rel = 1e-9);

// For a rank-1 matrix, vectors u (length rows) and v (length cols) with
// m(i,j) = u_i * v_j; u is a nonzero column of m, v the matching scaled row.
std::pair<std::vector<Scalar>, std::vector<Scalar>>
rank_one_factors(const CoefficientMatrix& m, double tol_rel = 1e-9);

} // namespace rcm
