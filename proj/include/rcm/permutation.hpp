#pragma once

#include <utility>
#include <vector>

#include "rcm/error.hpp"

namespace rcm {

using MultiIndex = std::vector<int>;

// A bijection on qudit positions 1..n, stored both as the position sequence
// (q_1..q_n) and as a product of transpositions that reproduces it.
class QuditPermutation {
  public:
    // Identity on n positions.
    static QuditPermutation identity(int n);

    // From a product of transpositions (w,u), applied to (1..n).
    static QuditPermutation from_transpositions(int n,
                                                const std::vector<std::pair<int, int>>& swaps);

    // From an explicit position sequence; the transposition factorization is
    // derived from its cycle structure.
    static QuditPermutation from_mapping(std::vector<int> mapping);

    int size() const { return static_cast<int>(mapping_.size()); }
    bool is_identity() const;

    // q_k for k = 1..n (1-based positions).
    const std::vector<int>& mapping() const { return mapping_; }
    const std::vector<std::pair<int, int>>& factored_form() const { return swaps_; }

    // Component k of the result is component q_k of idx.
    MultiIndex apply(const MultiIndex& idx) const;

    QuditPermutation inverse() const;

    // "I" or "(w1,u1)(w2,u2)..."
    std::string to_string() const;

    bool operator==(const QuditPermutation& o) const { return mapping_ == o.mapping_; }

  private:
    QuditPermutation() = default;
    std::vector<int> mapping_; // mapping_[k] = q_{k+1}, values 1..n
    std::vector<std::pair<int, int>> swaps_;
};

// The ordered permutation set used for cut size l on n qudits: the identity
// first, then for l = 1 the transpositions (1,2)..(1,n); for l >= 2 all
// products (w_1,u_1)..(w_k,u_k) with 1 <= w_1 < .. < w_k < l + (n mod 2),
// l < u_1 < .. < u_k <= n, ordered by ascending k then lexicographically on
// the pair sequence.
struct PermutationSet {
    int n = 0;
    int l = 0;
    std::vector<QuditPermutation> members;

    std::size_t size() const { return members.size(); }
};

PermutationSet permutation_set(int n, int l);

// The cut size that maximizes P(l) = prod over the set of
// min(row product, column product); ties resolved toward larger l.
int legacy_argmax_l(const std::vector<int>& dims);

MultiIndex apply_permutation(const QuditPermutation& perm, const MultiIndex& idx);

} // namespace rcm
