#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twistspin/coset.hpp"
#include "twistspin/fpcore.hpp"
#include "twistspin/knot.hpp"
#include "twistspin/presentation.hpp"
#include "twistspin/wirtinger.hpp"

namespace twistspin {

// A knot given either combinatorially or as a 2-bridge fraction.
struct KnotInput {
    std::string name;
    std::variant<KnotDiagram, TwoBridgeFraction> value;

    bool is_two_bridge() const { return std::holds_alternative<TwoBridgeFraction>(value); }
};

// Parse any of PD[...], BR[...], TB[p/q].
KnotInput parse_knot(const std::string& text, const std::string& name = "");

// Knot group presentation (Wirtinger or Schubert) with marked meridian.
MarkedPresentation knot_group(const KnotInput& k);
// Preferred longitude in the matching generator set.
Word knot_longitude(const KnotInput& k);

// Descriptor for tau^n K with optional unknotted projective-plane summands.
// Euler numbers are bookkeeping only; both signs give the same presentation.
struct RP2Summand {
    int genus = 1;       // 1 or 3
    int euler = 2;       // +2 or -2
};

struct SurfaceKnotSpec {
    KnotInput base;
    int twist = 0;  // n >= 0
    std::vector<RP2Summand> summands;
};

// Appends a1^n a_i a1^-n a_i^-1 for every generator i != meridian.
// Presents pi_1(S^4 \ tau^n K) when p presents the knot group through
// meridional generators.
MarkedPresentation twist_spin_presentation(const MarkedPresentation& p, int n);

// Appends the relator a1^2 (connected sum with P_1(+-2)).
MarkedPresentation connect_sum_rp2(const MarkedPresentation& p);

// Appends a1^m; m = 2 coincides with connect_sum_rp2.
MarkedPresentation meridian_power_quotient(const MarkedPresentation& p, int m);

// Odd n: each twist relator becomes the commutator [a1, a_i].
// Even n: twist relators are deleted. The a1^2 relator and the original
// relator set are kept either way.
MarkedPresentation parity_reduce(const MarkedPresentation& p, int n);

enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict v);
std::string to_string(Triviality t);

struct CheckResult {
    std::string name;
    Verdict verdict = Verdict::Inconclusive;
    std::string detail;
};

// Per-knot, per-n record of everything a verification run computed.
struct VerificationReport {
    std::string knot;
    int n = 0;
    std::vector<std::string> presentations;  // rendered presentations used
    std::optional<long> order;               // nullopt = Overflow
    std::optional<long> reduced_order;
    AbelianInvariants abelian;
    Triviality longitude_trivial = Triviality::Unknown;
    std::optional<bool> double_coset_ok;
    std::vector<CheckResult> checks;
    Verdict verdict = Verdict::Inconclusive;
    long millis = 0;

    bool passed() const { return verdict == Verdict::Pass; }
};

// Odd-twist check ("lemma2", odd n): order(G(tau^n K # P_1)) = 2, the parity-reduced
// presentation agrees, and the abelianization is Z/2.
VerificationReport verify_lemma2_odd(const KnotInput& k, int n, const Limits& lim = {});

// Even-twist check ("lemma2", even n): order(G_2) finite (2p for a 2-bridge fraction p/q),
// longitude image trivial, and the double-coset criterion holds for the
// handle core in both orientations.
VerificationReport verify_lemma2_even(const KnotInput& k, int n, const Limits& lim = {},
                                      std::optional<long> expected_det = std::nullopt);

// Parity-invariance check ("theorem1"): the parity-reduced relator multisets for
// n and n+2 are literally identical and all computed invariants agree.
VerificationReport verify_theorem1_group_level(const KnotInput& k, int n,
                                               const Limits& lim = {});

struct WitnessEntry {
    int m = 0;
    std::optional<long> order;           // nullopt = enumeration overflowed
    Triviality longitude = Triviality::Unknown;
};

struct WitnessReport {
    std::string knot;
    int n = 0;
    std::vector<WitnessEntry> entries;
    std::optional<WitnessEntry> witness;  // first m with nontrivial longitude

    bool found() const { return witness.has_value(); }
};

// Best-effort search for a finite quotient of G_{1,n} in which the longitude
// image survives; a witness certifies lambda_n != 1 in G_{1,n}.
WitnessReport handle_witness_search(const KnotInput& k, int n,
                                   const std::vector<int>& m_range,
                                   const Limits& lim = {});

}  // namespace twistspin
