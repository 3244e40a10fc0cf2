#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcm/rank.hpp"

namespace rcm {

// Ranks for one cut size: the permutation set and one rank per member, in
// canonical member order.
struct CutRanks {
    PermutationSet perms;
    std::vector<int> ranks;
};

// All coefficient-matrix ranks of a state: for each l = 1..floor(n/2), the
// rank list over the canonical permutation set.
struct RankSignature {
    std::vector<int> dims;
    std::vector<CutRanks> per_cut;

    bool all_ranks_exceed_one() const;
    int max_rank(int cut_index) const;
};

// Disjoint blocks of 1-based qudit positions covering 1..n. Two positions in
// the same block are entangled; positions in different blocks are not.
struct Partition {
    std::vector<std::vector<int>> blocks;

    static Partition of(std::vector<std::vector<int>> blocks);

    bool single_block() const { return blocks.size() == 1; }
    std::size_t block_count() const { return blocks.size(); }
    // "1|2|3,4"
    std::string to_string() const;

    bool operator==(const Partition& o) const { return blocks == o.blocks; }
    bool operator<(const Partition& o) const { return blocks < o.blocks; }
};

struct ClassificationResult {
    RankSignature signature;
    Partition family;
    bool genuinely_entangled = false;
    std::string label;
    std::vector<std::string> warnings;
};

struct ClassifyOptions {
    // Unset: exact states use the exact backend, numeric states the numeric.
    std::optional<RankBackend> backend;
    double tol_rel = 1e-9;
};

RankSignature rank_signature(const PureState& state, const ClassifyOptions& opts = {});

// Lemma-1 test: the cut with rows indexed by row_block has rank 1.
bool is_biseparable(const PureState& state, const std::vector<int>& row_block,
                    const ClassifyOptions& opts = {});

// True iff every rank in the signature exceeds 1. Over the canonical
// permutation sets this covers every bipartition for n <= 4.
bool is_genuinely_entangled(const PureState& state, const ClassifyOptions& opts = {});

// The unique finest partition into mutually unentangled blocks, found by
// recursive rank-1 splitting over all subsets up to complement.
Partition finest_partition(const PureState& state, const ClassifyOptions& opts = {});

// Canonical text "l1:(r,...);l2:(r,...)"; equal labels iff equal signatures.
std::string subfamily_label(const RankSignature& sig);

ClassificationResult classify(const PureState& state, const ClassifyOptions& opts = {});

// Rank bounds for dims (2,2,2,d): the (1,4)-permuted l=1 rank is at most
// min(d,8), the other l=1 ranks at most 2, and every l=2 rank at most 4.
bool verify_rank_bounds_222d(const RankSignature& sig, int d);

} // namespace rcm
