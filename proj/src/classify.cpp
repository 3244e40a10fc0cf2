#include "rcm/classify.hpp"

#include <algorithm>
#include <numeric>

namespace rcm {

namespace {

RankBackend backend_for(const PureState& state, const ClassifyOptions& opts) {
    if (opts.backend) return *opts.backend;
    return state.kind() == Scalar::Kind::exact ? RankBackend::exact : RankBackend::numeric;
}

RankResult rank_of(const CoefficientMatrix& m, RankBackend backend, double tol_rel) {
    return backend == RankBackend::exact ? rank_exact(m) : rank_numeric(m, tol_rel);
}

RankSignature signature_impl(const PureState& state, const ClassifyOptions& opts,
                             std::vector<std::string>* warnings) {
    RankBackend backend = backend_for(state, opts);
    RankSignature sig;
    sig.dims = state.dims();
    int n = state.n_qudits();
    for (int l = 1; l <= n / 2; ++l) {
        CutRanks cut;
        cut.perms = permutation_set(n, l);
        for (const auto& perm : cut.perms.members) {
            RankResult r = rank_of(coefficient_matrix(state, perm, l), backend, opts.tol_rel);
            if (r.rank_ambiguous && warnings)
                warnings->push_back("RANK_AMBIGUOUS at l=" + std::to_string(l) +
                                    " sigma=" + perm.to_string());
            cut.ranks.push_back(r.rank);
        }
        sig.per_cut.push_back(std::move(cut));
    }
    return sig;
}

// Splits one block of qudits (tracked by original 1-based positions) as far
// as biseparability allows, appending fully entangled blocks to `out`.
void split_recursive(const PureState& state, const std::vector<int>& positions,
                     const ClassifyOptions& opts, std::vector<std::vector<int>>& out) {
    int n = state.n_qudits();
    if (n == 1) {
        out.push_back(positions);
        return;
    }

    RankBackend backend = backend_for(state, opts);
    for (int size = 1; size <= n / 2; ++size) {
        // Subsets in lexicographic order; for an even split only those
        // containing position 1, so each cut is tried once.
        std::vector<int> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            bool skip = 2 * size == n && pick[0] != 0;
            if (!skip) {
                std::vector<int> mapping;
                for (int p : pick) mapping.push_back(p + 1);
                for (int p = 0; p < n; ++p)
                    if (std::find(pick.begin(), pick.end(), p) == pick.end())
                        mapping.push_back(p + 1);
                auto perm = QuditPermutation::from_mapping(mapping);
                auto m = coefficient_matrix(state, perm, size);
                if (rank_of(m, backend, opts.tol_rel).rank == 1) {
                    auto [u, v] = rank_one_factors(m, opts.tol_rel);

                    PureState::TermMap terms_a, terms_b;
                    for (int r = 0; r < m.rows(); ++r)
                        if (!u[r].is_zero())
                            terms_a.emplace(CoefficientMatrix::decode(r, m.row_dims()), u[r]);
                    for (int c = 0; c < m.cols(); ++c)
                        if (!v[c].is_zero())
                            terms_b.emplace(CoefficientMatrix::decode(c, m.col_dims()), v[c]);

                    std::vector<int> pos_a, pos_b;
                    for (int k = 0; k < n; ++k) {
                        int original = positions[mapping[k] - 1];
                        (k < size ? pos_a : pos_b).push_back(original);
                    }
                    split_recursive(PureState(m.row_dims(), std::move(terms_a)), pos_a, opts,
                                    out);
                    split_recursive(PureState(m.col_dims(), std::move(terms_b)), pos_b, opts,
                                    out);
                    return;
                }
            }
            // next subset
            int i = size - 1;
            while (i >= 0 && pick[i] == n - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    out.push_back(positions);
}

} // namespace

bool RankSignature::all_ranks_exceed_one() const {
    for (const auto& cut : per_cut)
        for (int r : cut.ranks)
            if (r <= 1) return false;
    return true;
}

int RankSignature::max_rank(int cut_index) const {
    int m = 0;
    for (int r : per_cut[cut_index].ranks) m = std::max(m, r);
    return m;
}

Partition Partition::of(std::vector<std::vector<int>> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    Partition p;
    p.blocks = std::move(blocks);
    return p;
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b) s += "|";
        for (std::size_t i = 0; i < blocks[b].size(); ++i) {
            if (i) s += ",";
            s += std::to_string(blocks[b][i]);
        }
    }
    return s;
}

RankSignature rank_signature(const PureState& state, const ClassifyOptions& opts) {
    return signature_impl(state, opts, nullptr);
}

bool is_biseparable(const PureState& state, const std::vector<int>& row_block,
                    const ClassifyOptions& opts) {
    int n = state.n_qudits();
    std::vector<bool> in_block(n + 1, false);
    if (row_block.empty() || static_cast<int>(row_block.size()) >= n)
        throw Error(ErrorCode::bad_block, "row block must be a proper nonempty subset");
    for (int p : row_block) {
        if (p < 1 || p > n || in_block[p])
            throw Error(ErrorCode::bad_block, "bad position " + std::to_string(p));
        in_block[p] = true;
    }

    std::vector<int> mapping;
    for (int p = 1; p <= n; ++p)
        if (in_block[p]) mapping.push_back(p);
    int l = static_cast<int>(mapping.size());
    for (int p = 1; p <= n; ++p)
        if (!in_block[p]) mapping.push_back(p);

    auto m = coefficient_matrix(state, QuditPermutation::from_mapping(mapping), l);
    return rank_of(m, backend_for(state, opts), opts.tol_rel).rank == 1;
}

bool is_genuinely_entangled(const PureState& state, const ClassifyOptions& opts) {
    return rank_signature(state, opts).all_ranks_exceed_one();
}

Partition finest_partition(const PureState& state, const ClassifyOptions& opts) {
    std::vector<int> positions(state.n_qudits());
    std::iota(positions.begin(), positions.end(), 1);
    std::vector<std::vector<int>> blocks;
    split_recursive(state, positions, opts, blocks);
    return Partition::of(std::move(blocks));
}

std::string subfamily_label(const RankSignature& sig) {
    std::string label;
    for (std::size_t i = 0; i < sig.per_cut.size(); ++i) {
        if (i) label += ";";
        label += "l" + std::to_string(i + 1) + ":(";
        for (std::size_t j = 0; j < sig.per_cut[i].ranks.size(); ++j) {
            if (j) label += ",";
            label += std::to_string(sig.per_cut[i].ranks[j]);
        }
        label += ")";
    }
    return label;
}

ClassificationResult classify(const PureState& state, const ClassifyOptions& opts) {
    ClassificationResult result;
    result.signature = signature_impl(state, opts, &result.warnings);
    result.family = finest_partition(state, opts);
    result.genuinely_entangled = result.family.single_block();
    result.label = subfamily_label(result.signature);
    // Over the canonical permutation sets the two criteria agree whenever
    // every bipartition is covered (always true for n <= 4).
    if (result.genuinely_entangled != result.signature.all_ranks_exceed_one())
        result.warnings.push_back("SIGNATURE_PARTITION_MISMATCH: a separating cut lies outside "
                                  "the canonical permutation set");
    return result;
}

bool verify_rank_bounds_222d(const RankSignature& sig, int d) {
    std::vector<int> expected{2, 2, 2, d};
    if (sig.dims != expected || sig.per_cut.size() != 2)
        throw Error(ErrorCode::wrong_system, "signature is not from a 2x2x2xd system");
    const auto& l1 = sig.per_cut[0].ranks; // members I,(1,2),(1,3),(1,4)
    const auto& l2 = sig.per_cut[1].ranks;
    if (l1[3] > std::min(d, 8)) return false;
    for (int i = 0; i < 3; ++i)
        if (l1[i] > 2) return false;
    for (int r : l2)
        if (r > 4) return false;
    return true;
}

} // namespace rcm
