#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "twistspin/presentation.hpp"

namespace twistspin {

using BigInt = boost::multiprecision::cpp_int;

// Relator-by-generator exponent sums. Arbitrary precision: Smith normal form
// intermediates can blow up even on small matrices.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<BigInt> data;  // row-major

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    BigInt& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

struct AbelianInvariants {
    std::vector<BigInt> torsion;  // d1 | d2 | ..., each >= 2
    int free_rank = 0;

    bool operator==(const AbelianInvariants&) const = default;
};

IntMatrix relation_matrix(const MarkedPresentation& p);

// Diagonal of the Smith normal form (nonnegative, divisibility chain).
std::vector<BigInt> smith_normal_form(IntMatrix m);

AbelianInvariants abelian_invariants(const MarkedPresentation& p);

struct TietzeResult {
    MarkedPresentation presentation;
    bool budget_exceeded = false;  // best-so-far when true
};

// Safe moves only: free/cyclic reduction, duplicate and empty relator
// removal, gcd-combination of single-generator power relators, shortening
// substitution of one relator inside another, and elimination of generators
// defined by a relator with a single occurrence. The marked meridian is
// never eliminated. Deterministic scan order: shortest defining relator
// first, lowest generator index as tie-break.
TietzeResult tietze_simplify(const MarkedPresentation& p, long budget = 100000);

}  // namespace twistspin
