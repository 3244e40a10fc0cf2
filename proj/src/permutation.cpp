#include "rcm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <gmpxx.h>

namespace rcm {

QuditPermutation QuditPermutation::identity(int n) {
    if (n < 1) throw Error(ErrorCode::length_mismatch, "permutation needs n >= 1");
    QuditPermutation p;
    p.mapping_.resize(n);
    std::iota(p.mapping_.begin(), p.mapping_.end(), 1);
    return p;
}

QuditPermutation
QuditPermutation::from_transpositions(int n, const std::vector<std::pair<int, int>>& swaps) {
    QuditPermutation p = identity(n);
    for (auto [w, u] : swaps) {
        if (w < 1 || w > n || u < 1 || u > n || w == u)
            throw Error(ErrorCode::length_mismatch, "transposition out of range");
        std::swap(p.mapping_[w - 1], p.mapping_[u - 1]);
    }
    p.swaps_ = swaps;
    return p;
}

QuditPermutation QuditPermutation::from_mapping(std::vector<int> mapping) {
    int n = static_cast<int>(mapping.size());
    std::vector<bool> seen(n + 1, false);
    for (int q : mapping) {
        if (q < 1 || q > n || seen[q])
            throw Error(ErrorCode::length_mismatch, "mapping is not a bijection on 1..n");
        seen[q] = true;
    }
    QuditPermutation p;
    p.mapping_ = std::move(mapping);
    // Factor into transpositions by walking cycles of the mapping.
    std::vector<int> work(n);
    std::iota(work.begin(), work.end(), 1);
    for (int k = 0; k < n; ++k) {
        if (work[k] == p.mapping_[k]) continue;
        auto it = std::find(work.begin() + k + 1, work.end(), p.mapping_[k]);
        int j = static_cast<int>(it - work.begin());
        std::swap(work[k], work[j]);
        p.swaps_.emplace_back(k + 1, j + 1);
    }
    return p;
}

bool QuditPermutation::is_identity() const {
    for (int k = 0; k < size(); ++k)
        if (mapping_[k] != k + 1) return false;
    return true;
}

MultiIndex QuditPermutation::apply(const MultiIndex& idx) const {
    if (static_cast<int>(idx.size()) != size())
        throw Error(ErrorCode::length_mismatch, "index length != permutation length");
    MultiIndex out(idx.size());
    for (int k = 0; k < size(); ++k) out[k] = idx[mapping_[k] - 1];
    return out;
}

QuditPermutation QuditPermutation::inverse() const {
    std::vector<int> inv(mapping_.size());
    for (int k = 0; k < size(); ++k) inv[mapping_[k] - 1] = k + 1;
    return from_mapping(std::move(inv));
}

std::string QuditPermutation::to_string() const {
    if (swaps_.empty()) return "I";
    std::string s;
    for (auto [w, u] : swaps_)
        s += "(" + std::to_string(w) + "," + std::to_string(u) + ")";
    return s;
}

namespace {

std::vector<std::vector<int>> choose(int from, int to, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    if (to - from + 1 < k) return out;
    // simple iterative combination enumeration in lexicographic order
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = from + i;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == to - (k - 1 - i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

} // namespace

PermutationSet permutation_set(int n, int l) {
    if (n < 2) throw Error(ErrorCode::bad_l, "need n >= 2");
    if (l < 1 || l > n / 2)
        throw Error(ErrorCode::bad_l, "l must satisfy 1 <= l <= floor(n/2), got l=" +
                                          std::to_string(l) + " for n=" + std::to_string(n));

    PermutationSet set;
    set.n = n;
    set.l = l;

    if (l == 1) {
        set.members.push_back(QuditPermutation::identity(n));
        for (int k = 2; k <= n; ++k)
            set.members.push_back(QuditPermutation::from_transpositions(n, {{1, k}}));
        return set;
    }

    int w_hi = l + (n % 2) - 1; // w ranges over 1..w_hi
    int k_max = l - (n % 2);
    for (int k = 0; k <= k_max; ++k) {
        std::vector<std::vector<std::pair<int, int>>> swap_seqs;
        for (const auto& ws : choose(1, w_hi, k)) {
            for (const auto& us : choose(l + 1, n, k)) {
                std::vector<std::pair<int, int>> seq(k);
                for (int i = 0; i < k; ++i) seq[i] = {ws[i], us[i]};
                swap_seqs.push_back(std::move(seq));
            }
        }
        std::sort(swap_seqs.begin(), swap_seqs.end());
        for (const auto& seq : swap_seqs)
            set.members.push_back(QuditPermutation::from_transpositions(n, seq));
    }
    return set;
}

int legacy_argmax_l(const std::vector<int>& dims) {
    int n = static_cast<int>(dims.size());
    if (n < 2) throw Error(ErrorCode::length_mismatch, "need at least two qudits");
    int best_l = 1;
    mpz_class best_p = 0;
    for (int l = 1; l <= n / 2; ++l) {
        mpz_class p = 1;
        for (const auto& perm : permutation_set(n, l).members) {
            mpz_class rows = 1, cols = 1;
            const auto& q = perm.mapping();
            for (int k = 0; k < l; ++k) rows *= dims[q[k] - 1];
            for (int k = l; k < n; ++k) cols *= dims[q[k] - 1];
            p *= std::min(rows, cols);
        }
        if (p >= best_p) { // ties go to the larger l
            best_p = p;
            best_l = l;
        }
    }
    return best_l;
}

MultiIndex apply_permutation(const QuditPermutation& perm, const MultiIndex& idx) {
    return perm.apply(idx);
}

} // namespace rcm
