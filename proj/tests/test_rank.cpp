#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rcm/catalog.hpp"
#include "rcm/rank.hpp"
#include "test_support.hpp"

using namespace rcm;

namespace {

CoefficientMatrix make_exact(std::vector<std::vector<long>> rows) {
    CoefficientMatrix m({static_cast<int>(rows.size())},
                        {static_cast<int>(rows[0].size())}, Scalar::Kind::exact);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m.set(static_cast<int>(r), static_cast<int>(c), Scalar::integer(rows[r][c]));
    return m;
}

CoefficientMatrix to_numeric(const CoefficientMatrix& m) {
    CoefficientMatrix out(m.row_dims(), m.col_dims(), Scalar::Kind::numeric);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out.set(r, c, m.at(r, c).to_numeric());
    return out;
}

PureState rationalized_dicke() {
    PureState::TermMap terms;
    for (MultiIndex idx : {MultiIndex{0, 0, 1, 1}, {1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 1},
                           {0, 1, 0, 1}, {1, 0, 1, 0}})
        terms.emplace(idx, Scalar::integer(1));
    return PureState({2, 2, 2, 2}, std::move(terms));
}

} // namespace

TEST_CASE("rank_exact basics") {
    CHECK(rank_exact(make_exact({{1, 0, 0, 0}, {0, 0, 0, 1}})).rank == 2);
    CHECK(rank_exact(make_exact({{2, 4}, {1, 2}})).rank == 1);
    CHECK(rank_exact(make_exact({{0}})).rank == 0);
    CHECK(rank_exact(make_exact({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}})).rank == 2);
}

TEST_CASE("cluster and Dicke cuts reproduce the worked ranks") {
    auto cluster_m = coefficient_matrix(cluster4(), QuditPermutation::identity(4), 2);
    CHECK(rank_exact(cluster_m).rank == 2);

    // rationalized variant: all six amplitudes 1; rank is scale-insensitive
    for (const auto& perm : permutation_set(4, 2).members)
        CHECK(rank_exact(coefficient_matrix(rationalized_dicke(), perm, 2)).rank == 3);
    // and numerically on the printed 1/sqrt(6) amplitudes
    for (const auto& perm : permutation_set(4, 2).members)
        CHECK(rank_numeric(coefficient_matrix(dicke_2_4(), perm, 2)).rank == 3);
}

TEST_CASE("rank_exact rejects numeric entries") {
    auto m = to_numeric(make_exact({{1, 0}, {0, 1}}));
    CHECK_THROWS_WITH_AS(rank_exact(m), doctest::Contains("KIND_MISMATCH"), Error);
}

TEST_CASE("rank_numeric basics") {
    CHECK(rank_numeric(to_numeric(make_exact({{0}}))).rank == 0);
    auto r = rank_numeric(to_numeric(make_exact({{1, 2}, {2, 4}})));
    CHECK(r.rank == 1);
    CHECK(r.backend == RankBackend::numeric);
    CHECK(r.ambiguity_margin.has_value());
    CHECK_FALSE(r.rank_ambiguous);

    // exact entries are converted on the fly
    CHECK(rank_numeric(make_exact({{1, 0}, {0, 1}})).rank == 2);
}

TEST_CASE("GHZ numeric grids have rank d") {
    for (int d : {2, 3, 8}) {
        auto state = ghz(4, d);
        for (int l = 1; l <= 2; ++l)
            for (const auto& perm : permutation_set(4, l).members)
                CHECK(rank_numeric(coefficient_matrix(state, perm, l)).rank == d);
    }
}

TEST_CASE("near-threshold pivots raise the ambiguity flag") {
    CoefficientMatrix m({2}, {2}, Scalar::Kind::numeric);
    m.set(0, 0, Scalar::numeric({1.0, 0.0}));
    m.set(0, 1, Scalar::numeric({1.0, 0.0}));
    m.set(1, 0, Scalar::numeric({1.0, 0.0}));
    m.set(1, 1, Scalar::numeric({1.0 + 3e-9, 0.0}));
    auto r = rank_numeric(m, 1e-9);
    CHECK(r.rank == 2);

    // after one elimination step the remaining entry sits just under the
    // threshold: rejected, but within a factor of 10
    auto fragile = rank_numeric(m, 1e-8);
    CHECK(fragile.rank == 1);
    CHECK(fragile.rank_ambiguous);
}

TEST_CASE("rank is invariant under global scaling (both backends)") {
    Rng rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = testing::random_exact_matrix(rng.uniform(1, 4), rng.uniform(1, 4), rng,
                                              rng.uniform(0, 3));
        CoefficientMatrix scaled(m.row_dims(), m.col_dims(), Scalar::Kind::exact);
        Scalar c = Scalar::rational(-7, 3);
        for (int r = 0; r < m.rows(); ++r)
            for (int col = 0; col < m.cols(); ++col) scaled.set(r, col, m.at(r, col) * c);
        CHECK(rank_exact(m).rank == rank_exact(scaled).rank);
        CHECK(rank_numeric(m).rank == rank_numeric(scaled).rank);
    }
}

TEST_CASE("rank_exact agrees with the exhaustive minor oracle") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = rng.uniform(1, 4), cols = rng.uniform(1, 6);
        if (rows > cols) std::swap(rows, cols); // keep min side <= 4
        auto m = testing::random_exact_matrix(rows, cols, rng,
                                              trial % 2 ? rng.uniform(0, 3) : -1);
        CHECK(rank_exact(m).rank == testing::minor_rank(m));
    }
}

TEST_CASE("rank_exact equals rank_numeric on exact inputs") {
    Rng rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        auto m = testing::random_exact_matrix(rng.uniform(1, 5), rng.uniform(1, 5), rng,
                                              trial % 2 ? rng.uniform(0, 4) : -1);
        CHECK(rank_exact(m).rank == rank_numeric(m).rank);
    }
}

TEST_CASE("rank_one_factors on the worked example") {
    auto m = make_exact({{2, 4}, {1, 2}});
    auto [u, v] = rank_one_factors(m);
    REQUIRE(u.size() == 2);
    REQUIRE(v.size() == 2);
    CHECK(u[0] == Scalar::integer(2));
    CHECK(u[1] == Scalar::integer(1));
    CHECK(v[0] == Scalar::integer(1));
    CHECK(v[1] == Scalar::integer(2));
}

TEST_CASE("rank_one_factors reconstructs a product-state cut") {
    // |0> (x) (|00> + |11>): C_{1,23} rows indexed by qudit 1
    PureState::TermMap terms;
    terms.emplace(MultiIndex{0, 0, 0}, Scalar::integer(1));
    terms.emplace(MultiIndex{0, 1, 1}, Scalar::integer(1));
    PureState s({2, 2, 2}, std::move(terms));
    auto m = coefficient_matrix(s, QuditPermutation::identity(3), 1);
    auto [u, v] = rank_one_factors(m);
    CHECK(u[0] == Scalar::integer(1));
    CHECK(u[1] == Scalar());
    CHECK(v == std::vector<Scalar>{Scalar::integer(1), Scalar(), Scalar(), Scalar::integer(1)});
}

TEST_CASE("rank_one_factors recovers random outer products exactly") {
    Rng rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        int rows = rng.uniform(2, 5), cols = rng.uniform(2, 5);
        std::vector<Scalar> u0(rows), v0(cols);
        for (auto& x : u0) x = Scalar::rational(rng.uniform(-3, 3), rng.uniform(1, 3));
        for (auto& x : v0) x = Scalar::rational(rng.uniform(-3, 3), rng.uniform(1, 3));
        bool u_zero = true, v_zero = true;
        for (auto& x : u0) u_zero = u_zero && x.is_zero();
        for (auto& x : v0) v_zero = v_zero && x.is_zero();
        if (u_zero) u0[0] = Scalar::integer(1);
        if (v_zero) v0[0] = Scalar::integer(1);

        CoefficientMatrix m({rows}, {cols}, Scalar::Kind::exact);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.set(r, c, u0[r] * v0[c]);
        auto [u, v] = rank_one_factors(m);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) CHECK(u[r] * v[c] == m.at(r, c));
    }
}

TEST_CASE("rank_one_factors reconstructs numeric matrices within tolerance") {
    Rng rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = rng.uniform(2, 5), cols = rng.uniform(2, 5);
        std::vector<double> u0(rows), v0(cols);
        for (auto& x : u0) x = rng.uniform(-300, 300) / 100.0;
        for (auto& x : v0) x = rng.uniform(-300, 300) / 100.0;
        u0[0] = 1.25; // keep both factors nonzero
        v0[0] = -0.75;

        CoefficientMatrix m({rows}, {cols}, Scalar::Kind::numeric);
        double max_abs = 0.0;
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                m.set(r, c, Scalar::numeric({u0[r] * v0[c], 0.0}));
                max_abs = std::max(max_abs, std::abs(u0[r] * v0[c]));
            }
        auto [u, v] = rank_one_factors(m);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                double rebuilt = (u[r] * v[c]).to_complex().real();
                CHECK(std::abs(rebuilt - u0[r] * v0[c]) <= 1e-9 * max_abs);
            }
    }
}

TEST_CASE("rank_one_factors rejects higher rank") {
    CHECK_THROWS_WITH_AS(rank_one_factors(make_exact({{1, 0}, {0, 1}})),
                         doctest::Contains("NOT_RANK_ONE"), Error);
}
