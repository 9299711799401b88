#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistspin/word.hpp"

namespace twistspin {

enum class Provenance { wirtinger, schubert, derived };

// Finitely presented group with a marked meridional generator.
// Relators are kept freely and cyclically reduced.
struct MarkedPresentation {
    int generators = 0;
    std::vector<Word> relators;
    int meridian = 1;
    Provenance provenance = Provenance::derived;
    // Set by twist_spin_presentation; consumed by parity_reduce.
    std::optional<int> twist;

    bool operator==(const MarkedPresentation& other) const {
        return generators == other.generators && relators == other.relators &&
               meridian == other.meridian;
    }
};

// "< a1, a2 | a1 a2^-1 a1, a2 a2 >"
std::string render_presentation(const MarkedPresentation& p);

}  // namespace twistspin
