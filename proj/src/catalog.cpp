#include "rcm/catalog.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rcm/state_io.hpp"

namespace rcm {

PureState ghz(int n, int d, bool exact_unnormalized) {
    if (n < 2 || d < 2) throw Error(ErrorCode::dim_too_small, "ghz needs n >= 2 and d >= 2");
    PureState::TermMap terms;
    for (int i = 0; i < d; ++i) {
        MultiIndex idx(n, i);
        if (exact_unnormalized)
            terms.emplace(idx, Scalar::integer(1));
        else
            terms.emplace(idx, Scalar::numeric({1.0 / std::sqrt(double(d)), 0.0}));
    }
    return PureState(std::vector<int>(n, d), std::move(terms));
}

PureState cluster4() {
    PureState::TermMap terms;
    terms.emplace(MultiIndex{0, 0, 0, 0}, Scalar::rational(1, 2));
    terms.emplace(MultiIndex{0, 0, 1, 1}, Scalar::rational(1, 2));
    terms.emplace(MultiIndex{1, 1, 0, 0}, Scalar::rational(1, 2));
    terms.emplace(MultiIndex{1, 1, 1, 1}, Scalar::rational(-1, 2));
    return PureState({2, 2, 2, 2}, std::move(terms));
}

PureState dicke_2_4() {
    double a = 1.0 / std::sqrt(6.0);
    PureState::TermMap terms;
    for (MultiIndex idx : {MultiIndex{0, 0, 1, 1}, {1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 1},
                           {0, 1, 0, 1}, {1, 0, 1, 0}})
        terms.emplace(idx, Scalar::numeric({a, 0.0}));
    return PureState({2, 2, 2, 2}, std::move(terms));
}

namespace {

using nlohmann::json;

Partition partition_from_json(const json& j) {
    return Partition::of(j.get<std::vector<std::vector<int>>>());
}

PureState load_state(const std::string& dir, const std::string& file) {
    return load_state_file(dir + "/" + file);
}

} // namespace

std::string Catalog::default_directory() {
    if (const char* env = std::getenv("SLOCC_RANK_CATALOG"); env && *env) return env;
    return RCM_DEFAULT_CATALOG_DIR;
}

Catalog Catalog::load(const std::string& directory) {
    std::ifstream in(directory + "/manifest.json");
    if (!in)
        throw Error(ErrorCode::malformed_document,
                    "cannot open catalog manifest in " + directory);
    json manifest;
    try {
        in >> manifest;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::malformed_document, e.what());
    }

    Catalog catalog;
    catalog.directory_ = directory;
    try {
        for (const auto& j : manifest.at("entries")) {
            CatalogEntry entry{
                j.at("id").get<std::string>(),
                j.at("system").get<std::string>(),
                j.at("source").get<std::string>(),
                j.at("file").get<std::string>(),
                load_state(directory, j.at("file").get<std::string>()),
                j.at("expected_label").get<std::string>(),
                partition_from_json(j.at("expected_family")),
                j.at("min_d").get<int>(),
                j.value("note", ""),
            };
            catalog.entries_.push_back(std::move(entry));
        }
        for (const auto& j : manifest.value("disputes", json::array())) {
            DisputedState dispute{
                j.at("printed_file").get<std::string>(),
                load_state(directory, j.at("printed_file").get<std::string>()),
                j.at("claimed_label").get<std::string>(),
                j.at("printed_label").get<std::string>(),
                j.at("corrected_entry").get<std::string>(),
                j.value("note", ""),
            };
            catalog.disputes_.push_back(std::move(dispute));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::malformed_document, e.what());
    }
    return catalog;
}

const CatalogEntry* Catalog::find(const std::string& id) const {
    for (const auto& e : entries_)
        if (e.id == id) return &e;
    return nullptr;
}

std::vector<CatalogEntry> Catalog::representatives(const std::string& system, int d) const {
    if (system != "2x2x4" && system != "2x2x2xd")
        throw Error(ErrorCode::unknown_system, "unknown system " + system);
    std::vector<CatalogEntry> out;
    for (const auto& e : entries_) {
        if (e.system != system) continue;
        if (system == "2x2x2xd") {
            if (e.min_d > d) continue;
            CatalogEntry widened = e;
            widened.state = with_dims(e.state, {2, 2, 2, d});
            out.push_back(std::move(widened));
        } else {
            out.push_back(e);
        }
    }
    return out;
}

int Catalog::subfamily_count(int d) const {
    std::set<std::string> labels;
    for (const auto& e : representatives("2x2x2xd", d))
        labels.insert(classify(e.state).label);
    return static_cast<int>(labels.size());
}

} // namespace rcm
