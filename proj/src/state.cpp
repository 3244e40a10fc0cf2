#include "rcm/state.hpp"

#include <string>

namespace rcm {

namespace {

std::string index_to_string(const MultiIndex& idx) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(idx[i]);
    }
    return s + ")";
}

} // namespace

PureState::PureState(std::vector<int> dims, TermMap terms) : dims_(std::move(dims)) {
    if (dims_.empty()) throw Error(ErrorCode::dim_too_small, "state needs at least one qudit");
    for (int d : dims_)
        if (d < 2)
            throw Error(ErrorCode::dim_too_small, "every qudit dimension must be >= 2, got " +
                                                      std::to_string(d));

    bool any_numeric = false;
    for (auto& [idx, amp] : terms) {
        if (idx.size() != dims_.size())
            throw Error(ErrorCode::index_out_of_range,
                        "index " + index_to_string(idx) + " has wrong arity");
        for (std::size_t k = 0; k < idx.size(); ++k)
            if (idx[k] < 0 || idx[k] >= dims_[k])
                throw Error(ErrorCode::index_out_of_range,
                            "index " + index_to_string(idx) + " outside dims at position " +
                                std::to_string(k + 1));
        if (amp.kind() == Scalar::Kind::numeric) any_numeric = true;
    }

    kind_ = any_numeric ? Scalar::Kind::numeric : Scalar::Kind::exact;
    for (auto& [idx, amp] : terms) {
        if (amp.is_zero()) continue;
        terms_.emplace(idx, any_numeric ? amp.to_numeric() : amp);
    }
    if (terms_.empty()) throw Error(ErrorCode::zero_state, "state has no nonzero term");
}

Scalar PureState::amplitude(const MultiIndex& idx) const {
    auto it = terms_.find(idx);
    if (it != terms_.end()) return it->second;
    return kind_ == Scalar::Kind::exact ? Scalar() : Scalar::numeric({0.0, 0.0});
}

long PureState::dimension() const {
    long p = 1;
    for (int d : dims_) p *= d;
    return p;
}

PureState tensor_product(const PureState& a, const PureState& b) {
    std::vector<int> dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());

    bool numeric = a.kind() == Scalar::Kind::numeric || b.kind() == Scalar::Kind::numeric;
    PureState::TermMap terms;
    for (const auto& [ia, va] : a.terms()) {
        for (const auto& [ib, vb] : b.terms()) {
            MultiIndex idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            Scalar amp = numeric ? va.to_numeric() * vb.to_numeric() : va * vb;
            terms.emplace(std::move(idx), std::move(amp));
        }
    }
    return PureState(std::move(dims), std::move(terms));
}

PureState permute_qudits(const PureState& state, const QuditPermutation& perm) {
    if (perm.size() != state.n_qudits())
        throw Error(ErrorCode::length_mismatch, "permutation length != qudit count");
    std::vector<int> dims(state.n_qudits());
    for (int k = 0; k < state.n_qudits(); ++k) dims[k] = state.dims()[perm.mapping()[k] - 1];

    PureState::TermMap terms;
    for (const auto& [idx, amp] : state.terms()) terms.emplace(perm.apply(idx), amp);
    return PureState(std::move(dims), std::move(terms));
}

PureState scale(const PureState& state, const Scalar& c) {
    if (c.is_zero()) throw Error(ErrorCode::zero_scalar, "scaling by zero");
    bool numeric = state.kind() == Scalar::Kind::numeric || c.kind() == Scalar::Kind::numeric;
    PureState::TermMap terms;
    for (const auto& [idx, amp] : state.terms())
        terms.emplace(idx, numeric ? amp.to_numeric() * c.to_numeric() : amp * c);
    return PureState(state.dims(), std::move(terms));
}

PureState with_dims(const PureState& state, std::vector<int> dims) {
    return PureState(std::move(dims), state.terms());
}

} // namespace rcm
