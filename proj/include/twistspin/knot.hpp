#pragma once

#include <array>
#include <string>
#include <vector>

#include "twistspin/errors.hpp"

namespace twistspin {

// PD tuple convention: X(i,j,k,l) counterclockwise starting at the incoming
// under-strand, so the under-strand runs i -> k and the over-strand occupies
// j and l. Arc labels follow the orientation of the knot.
//
// Worked trefoil: PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]
//   crossing 1: under 1->2, over runs 4->5
//   crossing 2: under 3->4, over runs 6->1
//   crossing 3: under 5->6, over runs 2->3
// All six arcs form the single cycle 1->2->...->6->1.
struct PDCode {
    std::vector<std::array<int, 4>> crossings;
};

struct BraidSpec {
    int strand_count = 1;
    std::vector<int> letters;  // nonzero, |letter| < strand_count
};

struct TwoBridgeFraction {
    int p = 1;  // odd, >= 1
    int q = 1;  // 0 < q < p (q = 1 when p = 1)
};

// Combinatorial oriented knot diagram. Arcs are the edges of the underlying
// 4-valent graph, labelled 1..arc_count along the orientation; the successor
// map is part of the structure rather than implied by label order.
struct DiagramCrossing {
    int over_arc = 0;   // incoming over-strand arc
    int under_in = 0;
    int under_out = 0;
    int sign = 0;       // +1 or -1
};

struct KnotDiagram {
    int arc_count = 1;
    std::vector<DiagramCrossing> crossings;
    std::vector<int> successor;  // successor[a] for a in 1..arc_count; slot 0 unused

    int next_arc(int a) const { return successor[static_cast<std::size_t>(a)]; }
    bool operator==(const KnotDiagram&) const = default;
};

// Parsers for the three supported grammars. All are whitespace-insensitive.
KnotDiagram parse_pd(const std::string& text);        // PD[X(i,j,k,l), ...]
KnotDiagram parse_braid(const std::string& text);     // BR[s; w1 w2 ...]
TwoBridgeFraction two_bridge(long p, long q);         // validated fraction
TwoBridgeFraction parse_two_bridge(const std::string& text);  // TB[p/q]

KnotDiagram diagram_from_pd(const PDCode& code);
KnotDiagram diagram_from_braid(const BraidSpec& braid);

// Canonical text form; parse_pd(render_pd(d)) == d for every valid diagram.
std::string render_pd(const KnotDiagram& d);
std::string render_two_bridge(const TwoBridgeFraction& f);

// Dispatch on the leading keyword (PD/BR/TB). TB input is converted to a
// diagram only where a caller needs one; this helper rejects TB.
bool looks_like_two_bridge(const std::string& text);
KnotDiagram parse_diagram(const std::string& text);

}  // namespace twistspin
