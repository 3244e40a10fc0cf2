#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcm/classify.hpp"
#include "rcm/state.hpp"

namespace rcm {

// Named states ----------------------------------------------------------

// n-partite d-level GHZ state (1/sqrt(d)) sum_i |i..i>, numeric kind; the
// exact variant drops the normalization (ranks are scale-insensitive).
PureState ghz(int n, int d, bool exact_unnormalized = false);

// (1/2)(|0000> + |0011> + |1100> - |1111>), exact kind.
PureState cluster4();

// Four-qubit Dicke state with two excitations, numeric kind.
PureState dicke_2_4();

// Catalog of table representatives ---------------------------------------

struct CatalogEntry {
    std::string id;
    std::string system; // "2x2x4" or "2x2x2xd"
    std::string source;
    std::string file;
    PureState state; // as stored; 2x2x2xd entries use dims (2,2,2,min_d)
    std::string expected_label;
    Partition expected_family;
    int min_d = 2;
    std::string note;
};

// A printed representative whose computed signature contradicts the
// signature claimed for it; kept for audit next to the corrected entry.
struct DisputedState {
    std::string printed_file;
    PureState printed_state;
    std::string claimed_label;
    std::string printed_label; // what the printed state actually computes to
    std::string corrected_entry;
    std::string note;
};

class Catalog {
  public:
    // Environment variable SLOCC_RANK_CATALOG overrides the built-in
    // directory.
    static std::string default_directory();
    static Catalog load(const std::string& directory = default_directory());

    const std::string& directory() const { return directory_; }
    const std::vector<CatalogEntry>& entries() const { return entries_; }
    const std::vector<DisputedState>& disputes() const { return disputes_; }

    const CatalogEntry* find(const std::string& id) const;

    // Entries for one system; 2x2x2xd entries with min_d <= d are re-cast to
    // dims (2,2,2,d). UNKNOWN_SYSTEM for anything else.
    std::vector<CatalogEntry> representatives(const std::string& system, int d = 8) const;

    // Distinct computed labels over 2x2x2xd entries with min_d <= d.
    int subfamily_count(int d) const;

  private:
    std::string directory_;
    std::vector<CatalogEntry> entries_;
    std::vector<DisputedState> disputes_;
};

} // namespace rcm
