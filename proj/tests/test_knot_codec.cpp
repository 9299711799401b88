#include <doctest.h>

#include "twistspin/errors.hpp"
#include "twistspin/knot.hpp"

using namespace twistspin;

namespace {

const char* kTrefoilPd = "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]";

}  // namespace

TEST_CASE("empty PD code is the zero-crossing unknot") {
    KnotDiagram d = (parse_pd("PD[]"));
    CHECK(d.arc_count == 1);
    CHECK(d.crossings.empty());
}

TEST_CASE("trefoil PD code yields 3 crossings on 6 arcs") {
    KnotDiagram d = (parse_pd(kTrefoilPd));
    CHECK(d.arc_count == 6);
    CHECK(d.crossings.size() == 3);
    for (const auto& c : d.crossings) {
        CHECK(d.next_arc(c.under_in) == c.under_out);
    }
}

TEST_CASE("PD parser rejects malformed input") {
    CHECK_THROWS_AS(parse_pd("PD[X(1,2,3)]"), ArityError);
    CHECK_THROWS_AS(parse_pd("PD[X(1,2,3,4,5)]"), ArityError);
    CHECK_THROWS_AS(parse_pd("X(1,2,3,4)"), MalformedSyntax);
    CHECK_THROWS_AS(parse_pd("PD[X(1,2,3,4)"), MalformedSyntax);
    CHECK_THROWS_AS(parse_pd("PD[X(1,a,3,4)]"), MalformedSyntax);
}

TEST_CASE("PD codes with bad label multiplicity are rejected") {
    // label 3 appears three times, label 6 never
    CHECK_THROWS_AS((parse_pd("PD[X(1,4,2,5),X(3,3,4,1),X(5,2,3,3)]")),
                    LabelError);
    // labels out of range 1..2n
    CHECK_THROWS_AS((parse_pd("PD[X(1,7,2,7)]")), LabelError);
}

TEST_CASE("PD codes describing links are rejected") {
    // Hopf link: arc successor structure has two cycles
    CHECK_THROWS_AS((parse_pd("PD[X(1,3,2,4),X(3,1,4,2)]")),
                    MultiComponent);
}

TEST_CASE("one-crossing kinks carry the expected sign") {
    KnotDiagram pos = (parse_pd("PD[X(1,1,2,2)]"));
    REQUIRE(pos.crossings.size() == 1);
    CHECK(pos.crossings[0].sign == 1);

    KnotDiagram neg = (parse_pd("PD[X(1,2,2,1)]"));
    REQUIRE(neg.crossings.size() == 1);
    CHECK(neg.crossings[0].sign == -1);
}

TEST_CASE("PD render/parse round trip") {
    for (const char* s : {kTrefoilPd,
                          "PD[X(1,1,2,2)]",
                          "PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]"}) {
        KnotDiagram d = (parse_pd(s));
        KnotDiagram d2 = (parse_pd(render_pd(d)));
        CHECK(d.arc_count == d2.arc_count);
        REQUIRE(d.crossings.size() == d2.crossings.size());
        for (std::size_t i = 0; i < d.crossings.size(); ++i) {
            CHECK(d.crossings[i].over_arc == d2.crossings[i].over_arc);
            CHECK(d.crossings[i].under_in == d2.crossings[i].under_in);
            CHECK(d.crossings[i].under_out == d2.crossings[i].under_out);
            CHECK(d.crossings[i].sign == d2.crossings[i].sign);
        }
    }
}

TEST_CASE("braid closures") {
    KnotDiagram tref = (parse_braid("BR[2; 1 1 1]"));
    CHECK(tref.arc_count == 6);
    CHECK(tref.crossings.size() == 3);
    for (const auto& c : tref.crossings) CHECK(c.sign == 1);

    KnotDiagram unknot = (parse_braid("BR[1;]"));
    CHECK(unknot.crossings.empty());
    CHECK(unknot.arc_count == 1);

    KnotDiagram fig8 = (parse_braid("BR[3; 1 -2 1 -2]"));
    CHECK(fig8.arc_count == 8);
    CHECK(fig8.crossings.size() == 4);
}

TEST_CASE("braid validation") {
    // closure of the trivial 2-braid is a 2-component unlink
    CHECK_THROWS_AS((parse_braid("BR[2;]")), MultiComponent);
    // sigma_1^2 closes to the Hopf link
    CHECK_THROWS_AS((parse_braid("BR[2; 1 1]")), MultiComponent);
    CHECK_THROWS_AS(parse_braid("BR[2; 3]"), LetterOutOfRange);
    CHECK_THROWS_AS(parse_braid("BR[2; 0]"), LetterOutOfRange);
    CHECK_THROWS_AS(parse_braid("BR[2; -2 -2 -2"), MalformedSyntax);
}

TEST_CASE("two-bridge fraction validation") {
    CHECK_NOTHROW(two_bridge(3, 1));
    CHECK_NOTHROW(two_bridge(1, 1));
    CHECK_NOTHROW(two_bridge(9, 7));
    CHECK_THROWS_AS(two_bridge(4, 1), EvenP);
    CHECK_THROWS_AS(two_bridge(9, 3), NotCoprime);
    CHECK_THROWS_AS(two_bridge(3, 5), OutOfRange);
    CHECK_THROWS_AS(two_bridge(-3, 1), OutOfRange);
    CHECK_THROWS_AS(two_bridge(3, 0), OutOfRange);
}

TEST_CASE("two-bridge parse and render") {
    TwoBridgeFraction f = parse_two_bridge("TB[5/3]");
    CHECK(f.p == 5);
    CHECK(f.q == 3);
    CHECK(render_two_bridge(f) == "TB[5/3]");
    CHECK_THROWS_AS(parse_two_bridge("TB[5/]"), MalformedSyntax);
    CHECK_THROWS_AS(parse_two_bridge("TB[6/1]"), EvenP);
}

TEST_CASE("parse_diagram dispatches on notation prefix") {
    CHECK_NOTHROW(parse_diagram(kTrefoilPd));
    CHECK_NOTHROW(parse_diagram("BR[2; 1 1 1]"));
    CHECK_THROWS_AS(parse_diagram("QQ[1]"), MalformedSyntax);
}
