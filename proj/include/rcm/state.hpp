#pragma once

#include <map>
#include <vector>

#include "rcm/permutation.hpp"
#include "rcm/scalar.hpp"

namespace rcm {

// An n-qudit pure state as a sparse map from multi-index to amplitude.
// Immutable after construction. Zero-amplitude terms are dropped; a state
// with no terms left is rejected. All amplitudes share one scalar kind; a
// mixed-kind term set is promoted to numeric as a whole.
class PureState {
  public:
    using TermMap = std::map<MultiIndex, Scalar>;

    PureState(std::vector<int> dims, TermMap terms);

    const std::vector<int>& dims() const { return dims_; }
    int n_qudits() const { return static_cast<int>(dims_.size()); }
    Scalar::Kind kind() const { return kind_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Zero (of the state's kind) when the index carries no term.
    Scalar amplitude(const MultiIndex& idx) const;

    // Total Hilbert-space dimension prod d_k.
    long dimension() const;

    bool operator==(const PureState& o) const {
        return dims_ == o.dims_ && kind_ == o.kind_ && terms_ == o.terms_;
    }

  private:
    std::vector<int> dims_;
    Scalar::Kind kind_;
    TermMap terms_;
};

// dims = concat, amplitude(s,t) = a(s) * b(t). Mixed kinds promote to numeric.
PureState tensor_product(const PureState& a, const PureState& b);

// Position k of the result holds qudit q_k of the input; amplitudes unchanged.
PureState permute_qudits(const PureState& state, const QuditPermutation& perm);

// Every amplitude multiplied by c (nonzero).
PureState scale(const PureState& state, const Scalar& c);

// Same terms under new dims (used to widen the last qudit of catalog entries).
PureState with_dims(const PureState& state, std::vector<int> dims);

} // namespace rcm
