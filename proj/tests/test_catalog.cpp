#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "rcm/catalog.hpp"
#include "rcm/state_io.hpp"

using namespace rcm;

TEST_CASE("named constructors") {
    auto g = ghz(3, 2);
    CHECK(g.kind() == Scalar::Kind::numeric);
    CHECK(g.term_count() == 2);
    CHECK(g.amplitude({0, 0, 0}).to_complex().real() == doctest::Approx(1.0 / std::sqrt(2.0)));

    auto g_exact = ghz(2, 2, true);
    CHECK(g_exact.kind() == Scalar::Kind::exact);
    CHECK(rank_signature(g_exact).per_cut[0].ranks == std::vector<int>{2, 2});

    CHECK(cluster4().kind() == Scalar::Kind::exact);
    CHECK(classify(cluster4()).label == "l1:(2,2,2,2);l2:(2,4,4)");
    CHECK(classify(dicke_2_4()).label == "l1:(2,2,2,2);l2:(3,3,3)");

    // the three named states sit in pairwise distinct subfamilies
    std::set<std::string> labels{classify(ghz(4, 2)).label, classify(cluster4()).label,
                                 classify(dicke_2_4()).label};
    CHECK(labels.size() == 3);
}

TEST_CASE("every catalog entry self-validates") {
    auto catalog = Catalog::load();
    REQUIRE(!catalog.entries().empty());
    for (const auto& e : catalog.entries()) {
        CAPTURE(e.id);
        auto result = classify(e.state);
        CHECK(result.label == e.expected_label);
        CHECK(result.family == e.expected_family);
        CHECK(result.warnings.empty());
    }
}

TEST_CASE("catalog shape matches the tables") {
    auto catalog = Catalog::load();

    auto t1 = catalog.representatives("2x2x4");
    CHECK(t1.size() == 8); // the F(2,2,2) subfamily keeps both printed states
    std::set<std::string> t1_labels;
    std::set<Partition> t1_families;
    for (const auto& e : t1) {
        t1_labels.insert(e.expected_label);
        t1_families.insert(e.expected_family);
    }
    CHECK(t1_labels.size() == 7);
    CHECK(t1_families.size() == 5);

    auto t2 = catalog.representatives("2x2x2xd", 8);
    std::set<std::string> labels;
    std::set<Partition> families;
    int degenerate = 0;
    for (const auto& e : t2) {
        labels.insert(e.expected_label);
        families.insert(e.expected_family);
    }
    for (const auto& f : families)
        if (!f.single_block()) ++degenerate;
    CHECK(labels.size() == 60);
    CHECK(families.size() == 15);
    CHECK(degenerate == 14);

    CHECK_THROWS_WITH_AS(catalog.representatives("3x3x3"), doctest::Contains("UNKNOWN_SYSTEM"),
                         Error);
}

TEST_CASE("distinct partitions across degenerate families") {
    // Theorem-1 style check: each degenerate family's representative yields
    // its own partition, and computed partitions match the manifest.
    auto catalog = Catalog::load();
    std::map<Partition, std::set<std::string>> by_partition;
    for (const auto& e : catalog.representatives("2x2x2xd", 8)) {
        auto family = finest_partition(e.state);
        CHECK(family == e.expected_family);
        by_partition[family].insert(e.id);
    }
    int degenerate = 0;
    for (const auto& [family, ids] : by_partition)
        if (!family.single_block()) ++degenerate;
    CHECK(degenerate == 14);
}

TEST_CASE("subfamily counts over d") {
    auto catalog = Catalog::load();
    CHECK(catalog.subfamily_count(4) == 56);
    for (int d = 8; d <= 12; ++d) CHECK(catalog.subfamily_count(d) == 60);
    // monotone growth between the pinned points
    int prev = 0;
    for (int d = 2; d <= 8; ++d) {
        int count = catalog.subfamily_count(d);
        CHECK(count >= prev);
        prev = count;
    }
}

TEST_CASE("min_d metadata is consistent") {
    auto catalog = Catalog::load();
    for (const auto& e : catalog.entries()) {
        if (e.system != "2x2x2xd") continue;
        CAPTURE(e.id);
        CHECK_NOTHROW(with_dims(e.state, {2, 2, 2, e.min_d}));
        if (e.min_d > 2) {
            CHECK_THROWS_WITH_AS(with_dims(e.state, {2, 2, 2, e.min_d - 1}),
                                 doctest::Contains("INDEX_OUT_OF_RANGE"), Error);
        }
    }
}

TEST_CASE("disputed printed states compute to the recorded labels") {
    auto catalog = Catalog::load();
    REQUIRE(catalog.disputes().size() == 6);
    for (const auto& d : catalog.disputes()) {
        CAPTURE(d.printed_file);
        CHECK(classify(d.printed_state).label == d.printed_label);
        CHECK(d.printed_label != d.claimed_label);
        const auto* corrected = catalog.find(d.corrected_entry);
        REQUIRE(corrected != nullptr);
        CHECK(corrected->expected_label == d.claimed_label);
    }
}

TEST_CASE("catalog lookup and env override") {
    auto catalog = Catalog::load();
    CHECK(catalog.find("ghz") != nullptr);
    CHECK(catalog.find("cluster4") != nullptr);
    CHECK(catalog.find("dicke_2_4") != nullptr);
    CHECK(catalog.find("no_such_id") == nullptr);

    CHECK(Catalog::default_directory() == std::string(RCM_DEFAULT_CATALOG_DIR));
    setenv("SLOCC_RANK_CATALOG", "/tmp/somewhere", 1);
    CHECK(Catalog::default_directory() == "/tmp/somewhere");
    unsetenv("SLOCC_RANK_CATALOG");
}
