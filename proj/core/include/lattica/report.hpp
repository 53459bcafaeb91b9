#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lattica/congruence.hpp"
#include "lattica/involution.hpp"

namespace lattica {

// One congruence computation as shown to the user: which signature ran,
// which constants were pinned to singleton classes, and the members in the
// set's canonical order.
struct CongruenceSummary {
    Sig sig = Sig::LAT;
    std::vector<int> fixed;
    size_t count = 0;
    std::vector<std::string> listing;
};

struct StructureReport {
    int n = 0;
    int bottom = 0;
    int top = 0;
    bool with_involution = false;
    bool with_weak = false;
    bool distributive = false;
    bool modular = false;
    // Present exactly when the structure carries an involution.
    std::optional<TaxonomyReport> taxonomy;
    std::vector<CongruenceSummary> congruences;
};

// Everything the text commands print, computed in one pass: the triple
// checks, the classification when an involution is present, and one
// congruence summary per requested signature, each filtered to the members
// keeping every listed constant in a singleton class.
StructureReport summarize(const Structure& s, const std::vector<Sig>& sigs,
                          const std::vector<int>& fixed);

std::string render_text(const StructureReport& r, bool with_listing);

// One "name: yes/no [witness] (note)" line per flag.
std::string render_taxonomy(const TaxonomyReport& t);

}  // namespace lattica
