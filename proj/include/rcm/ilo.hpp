#pragma once

#include <vector>

#include "rcm/classify.hpp"
#include "rcm/rng.hpp"
#include "rcm/state.hpp"

namespace rcm {

// An invertible operator on a single qudit's space. Invertibility is checked
// at construction: exactly for exact entries, |det| > 1e-9 * scale for
// numeric ones.
class LocalOperator {
  public:
    LocalOperator(int dim, std::vector<Scalar> entries);

    static LocalOperator identity(int dim);

    int dim() const { return dim_; }
    Scalar::Kind kind() const { return kind_; }
    const Scalar& at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * dim_ + c]; }

    Scalar determinant() const;
    LocalOperator inverse() const;

  private:
    int dim_;
    Scalar::Kind kind_;
    std::vector<Scalar> entries_;
};

// F_1 (x) F_2 (x) ... (x) F_n applied to the state; one operator per qudit,
// each matching that qudit's dimension.
PureState apply_ilos(const PureState& state, const std::vector<LocalOperator>& ops);

// Invertible operator with small exact rational entries (numerators in
// [-5,5], denominators in [1,5]), resampled until the determinant is nonzero.
// Deterministic given the generator state.
LocalOperator random_ilo(int dim, Rng& rng);

struct InvarianceReport {
    bool passed = false;
    std::string label_before;
    std::string label_after;
};

// Draws one random ILO per qudit, applies them, and classifies both states;
// passes iff the subfamily labels match. The state must be exact-kind so the
// transformed state stays exact.
InvarianceReport invariance_trial(const PureState& state, Rng& rng);

} // namespace rcm
