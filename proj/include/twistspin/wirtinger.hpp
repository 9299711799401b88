#pragma once

#include "twistspin/knot.hpp"
#include "twistspin/presentation.hpp"

namespace twistspin {

// One generator per over-strand (arcs merged across over-crossings), one
// conjugation relator per crossing, meridian = generator of arc 1.
MarkedPresentation wirtinger_presentation(const KnotDiagram& d);

// Map from diagram arc label to Wirtinger generator index.
std::vector<int> arc_generators(const KnotDiagram& d);

// Preferred longitude based at base_arc: over-strand letters collected along
// the knot, then meridian^(-writhe) so the exponent sum is zero.
Word longitude_word(const KnotDiagram& d, int base_arc = 1);

int writhe(const KnotDiagram& d);

// Standard 2-generator presentation <a, b | a w b^-1 w^-1> with
// w = b^{e1} a^{e2} ... of length p-1, e_i = (-1)^floor(i q / p).
MarkedPresentation schubert_presentation(const TwoBridgeFraction& f);

// Preferred longitude for the Schubert presentation: reverse(w) w a^(-2e)
// with e the exponent sum of w.
Word schubert_longitude(const TwoBridgeFraction& f);

}  // namespace twistspin
