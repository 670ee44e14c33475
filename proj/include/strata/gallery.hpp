#pragma once

#include <map>
#include <string>
#include <vector>

#include "strata/stratified.hpp"

namespace strata {

/// Expected values pinned from the source computations; tests consume these.
struct ExpectedCard {
    std::vector<std::int32_t> homology; // empty when not pinned
    std::map<std::string, std::vector<std::int32_t>> ih;  // perversity name -> dims
    std::map<std::string, std::int64_t> ichi;             // perversity name -> value
    /// stratum name -> perversity name -> multiplicity at its components
    std::map<std::string, std::map<std::string, std::int64_t>> multiplicity;
};

struct GalleryEntry {
    std::string name;
    std::string description;
    int n = 0;
    int subdivisions = 0; // pinned level for intersection homology runs
    ExpectedCard card;
};

/// Stable catalogue of every space the engine ships.
const std::vector<GalleryEntry>& list_gallery();

/// Build a gallery space by name; throws InputError for unknown names.
/// Builders are pure; results are cached behind an immutable value.
StratifiedSpace gallery(const std::string& name);

const GalleryEntry& gallery_entry(const std::string& name);

} // namespace strata
