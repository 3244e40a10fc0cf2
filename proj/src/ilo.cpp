#include "rcm/ilo.hpp"

#include <cmath>
#include <complex>

namespace rcm {

namespace {

Scalar zero_of(Scalar::Kind kind) {
    return kind == Scalar::Kind::exact ? Scalar() : Scalar::numeric({0.0, 0.0});
}

Scalar one_of(Scalar::Kind kind) {
    return kind == Scalar::Kind::exact ? Scalar::integer(1) : Scalar::numeric({1.0, 0.0});
}

} // namespace

LocalOperator::LocalOperator(int dim, std::vector<Scalar> entries) : dim_(dim) {
    if (dim < 1) throw Error(ErrorCode::dim_mismatch, "operator dimension must be positive");
    if (entries.size() != static_cast<std::size_t>(dim) * dim)
        throw Error(ErrorCode::dim_mismatch, "operator needs dim*dim entries");

    bool any_numeric = false;
    for (const auto& e : entries)
        if (e.kind() == Scalar::Kind::numeric) any_numeric = true;
    kind_ = any_numeric ? Scalar::Kind::numeric : Scalar::Kind::exact;
    if (any_numeric)
        for (auto& e : entries) e = e.to_numeric();
    entries_ = std::move(entries);

    Scalar det = determinant();
    if (kind_ == Scalar::Kind::exact) {
        if (det.is_zero()) throw Error(ErrorCode::not_invertible, "determinant is zero");
    } else {
        double max_abs = 0.0;
        for (const auto& e : entries_) max_abs = std::max(max_abs, e.abs());
        double scale = std::pow(std::max(max_abs, 1e-300), dim);
        if (det.abs() <= 1e-9 * scale)
            throw Error(ErrorCode::not_invertible, "determinant below tolerance");
    }
}

LocalOperator LocalOperator::identity(int dim) {
    std::vector<Scalar> e(static_cast<std::size_t>(dim) * dim, Scalar());
    for (int i = 0; i < dim; ++i) e[static_cast<std::size_t>(i) * dim + i] = Scalar::integer(1);
    return LocalOperator(dim, std::move(e));
}

Scalar LocalOperator::determinant() const {
    // Gaussian elimination with partial pivoting; sign tracked through swaps.
    std::vector<Scalar> a = entries_;
    auto at = [&](int r, int c) -> Scalar& { return a[static_cast<std::size_t>(r) * dim_ + c]; };
    Scalar det = one_of(kind_);
    for (int k = 0; k < dim_; ++k) {
        int pivot = -1;
        double best = 0.0;
        for (int r = k; r < dim_; ++r) {
            double v = at(r, k).abs();
            if (!at(r, k).is_zero() && (pivot < 0 || v > best)) {
                best = v;
                pivot = r;
            }
        }
        if (pivot < 0) return zero_of(kind_);
        if (pivot != k) {
            for (int c = 0; c < dim_; ++c) std::swap(at(k, c), at(pivot, c));
            det = -det;
        }
        det = det * at(k, k);
        for (int r = k + 1; r < dim_; ++r) {
            if (at(r, k).is_zero()) continue;
            Scalar factor = at(r, k) / at(k, k);
            for (int c = k; c < dim_; ++c) at(r, c) = at(r, c) - factor * at(k, c);
        }
    }
    return det;
}

LocalOperator LocalOperator::inverse() const {
    // Gauss-Jordan on [A | I].
    int n = dim_;
    std::vector<Scalar> a = entries_;
    std::vector<Scalar> inv(static_cast<std::size_t>(n) * n, zero_of(kind_));
    auto A = [&](int r, int c) -> Scalar& { return a[static_cast<std::size_t>(r) * n + c]; };
    auto B = [&](int r, int c) -> Scalar& { return inv[static_cast<std::size_t>(r) * n + c]; };
    for (int i = 0; i < n; ++i) B(i, i) = one_of(kind_);

    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        double best = 0.0;
        for (int r = k; r < n; ++r) {
            double v = A(r, k).abs();
            if (!A(r, k).is_zero() && (pivot < 0 || v > best)) {
                best = v;
                pivot = r;
            }
        }
        if (pivot < 0) throw Error(ErrorCode::not_invertible, "singular operator");
        if (pivot != k)
            for (int c = 0; c < n; ++c) {
                std::swap(A(k, c), A(pivot, c));
                std::swap(B(k, c), B(pivot, c));
            }
        Scalar d = A(k, k);
        for (int c = 0; c < n; ++c) {
            A(k, c) = A(k, c) / d;
            B(k, c) = B(k, c) / d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == k || A(r, k).is_zero()) continue;
            Scalar factor = A(r, k);
            for (int c = 0; c < n; ++c) {
                A(r, c) = A(r, c) - factor * A(k, c);
                B(r, c) = B(r, c) - factor * B(k, c);
            }
        }
    }
    return LocalOperator(n, std::move(inv));
}

PureState apply_ilos(const PureState& state, const std::vector<LocalOperator>& ops) {
    int n = state.n_qudits();
    if (static_cast<int>(ops.size()) != n)
        throw Error(ErrorCode::dim_mismatch, "need one operator per qudit");
    bool numeric = state.kind() == Scalar::Kind::numeric;
    for (int k = 0; k < n; ++k) {
        if (ops[k].dim() != state.dims()[k])
            throw Error(ErrorCode::dim_mismatch, "operator dimension != qudit dimension at " +
                                                     std::to_string(k + 1));
        if (ops[k].kind() == Scalar::Kind::numeric) numeric = true;
    }

    // amplitude'(t) = sum_s prod_k F_k[t_k, s_k] * amplitude(s); each source
    // term spreads over the per-qudit column supports.
    PureState::TermMap terms;
    MultiIndex target(n, 0);
    for (const auto& [src, amp] : state.terms()) {
        std::fill(target.begin(), target.end(), 0);
        while (true) {
            Scalar contrib = numeric ? amp.to_numeric() : amp;
            for (int k = 0; k < n && !contrib.is_zero(); ++k) {
                Scalar f = ops[k].at(target[k], src[k]);
                contrib = contrib * (numeric ? f.to_numeric() : f);
            }
            if (!contrib.is_zero()) {
                auto [it, inserted] = terms.emplace(target, contrib);
                if (!inserted) it->second = it->second + contrib;
            }
            // next target index
            int k = n - 1;
            while (k >= 0 && target[k] == state.dims()[k] - 1) target[k--] = 0;
            if (k < 0) break;
            ++target[k];
        }
    }
    // Cancellation can null some amplitudes; the constructor prunes them.
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second.is_zero())
            it = terms.erase(it);
        else
            ++it;
    }
    if (terms.empty())
        throw Error(ErrorCode::internal, "invertible operators produced the zero state");
    return PureState(state.dims(), std::move(terms));
}

LocalOperator random_ilo(int dim, Rng& rng) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<Scalar> entries;
        entries.reserve(static_cast<std::size_t>(dim) * dim);
        for (int i = 0; i < dim * dim; ++i)
            entries.push_back(Scalar::rational(rng.uniform(-5, 5), rng.uniform(1, 5)));
        try {
            return LocalOperator(dim, std::move(entries));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::not_invertible) throw;
        }
    }
    throw Error(ErrorCode::internal, "no invertible operator found in 100 attempts");
}

InvarianceReport invariance_trial(const PureState& state, Rng& rng) {
    if (state.kind() != Scalar::Kind::exact)
        throw Error(ErrorCode::kind_mismatch, "invariance trials need an exact-kind state");
    std::vector<LocalOperator> ops;
    ops.reserve(state.n_qudits());
    for (int d : state.dims()) ops.push_back(random_ilo(d, rng));

    InvarianceReport report;
    report.label_before = classify(state).label;
    report.label_after = classify(apply_ilos(state, ops)).label;
    report.passed = report.label_before == report.label_after;
    return report;
}

} // namespace rcm
