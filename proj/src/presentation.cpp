#include "twistspin/presentation.hpp"

#include <sstream>

namespace twistspin {

std::string render_word(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (int x : w.letters) {
        if (!first) out << ' ';
        first = false;
        if (x > 0)
            out << 'a' << x;
        else
            out << 'a' << -x << "^-1";
    }
    return out.str();
}

std::string render_presentation(const MarkedPresentation& p) {
    std::ostringstream out;
    out << "< ";
    for (int g = 1; g <= p.generators; ++g) {
        if (g > 1) out << ", ";
        out << 'a' << g;
    }
    out << " | ";
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        if (i > 0) out << ", ";
        out << render_word(p.relators[i]);
    }
    out << " >";
    return out.str();
}

}  // namespace twistspin
