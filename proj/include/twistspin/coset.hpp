#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twistspin/presentation.hpp"

namespace twistspin {

struct Limits {
    long max_cosets = 1'000'000;      // live cosets at any moment
    long max_definitions = 10'000'000;  // total cosets ever defined
};

// Regular or relative permutation action on live cosets. Coset 1 is the
// subgroup itself. Entries are 0 while undefined (partial tables only).
class CosetTable {
public:
    CosetTable() = default;
    CosetTable(int generators, int cosets)
        : ngens_(generators), n_(cosets),
          tab_(static_cast<std::size_t>(2 * generators) * (cosets + 1), 0) {}

    int generators() const { return ngens_; }
    int size() const { return n_; }
    bool complete() const { return complete_; }
    void set_complete(bool c) { complete_ = c; }

    // letter: signed generator index as in Word.
    int act(int coset, int letter) const {
        return tab_[index(coset, letter)];
    }
    void set(int coset, int letter, int image) {
        tab_[index(coset, letter)] = image;
    }

    // 0 when the trace runs into an undefined entry.
    int trace(int coset, const Word& w) const {
        int c = coset;
        for (int x : w.letters) {
            c = act(c, x);
            if (c == 0) return 0;
        }
        return c;
    }

    // One row per coset, the image under a1, a1^-1, a2, a2^-1, ...
    std::string dump() const;

private:
    std::size_t index(int coset, int letter) const {
        int col = letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
        return static_cast<std::size_t>(coset) * static_cast<std::size_t>(2 * ngens_) +
               static_cast<std::size_t>(col);
    }

    int ngens_ = 0;
    int n_ = 0;
    bool complete_ = false;
    std::vector<int> tab_;
};

struct EnumerationStats {
    long cosets_defined = 0;
    long max_live = 0;
    long coincidences = 0;
};

struct EnumerationResult {
    enum class Outcome { Index, Overflow };
    Outcome outcome = Outcome::Overflow;
    int index = 0;  // meaningful when outcome == Index
    CosetTable table;
    EnumerationStats stats;

    bool complete() const { return outcome == Outcome::Index; }
};

// HLT coset enumeration with union-find coincidence handling. Complete
// tables are standardized (breadth-first renumbering) and therefore
// canonical for a given presentation and subgroup.
EnumerationResult enumerate_cosets(const MarkedPresentation& p,
                                   const std::vector<Word>& subgroup,
                                   const Limits& lim = {});

struct OrderResult {
    enum class Outcome { Order, Overflow };
    Outcome outcome = Outcome::Overflow;
    long order = 0;
    CosetTable table;  // regular representation when complete

    bool complete() const { return outcome == Outcome::Order; }
};

OrderResult group_order(const MarkedPresentation& p, const Limits& lim = {});

enum class Triviality { True, False, Unknown };

// Decided in the regular representation: a word is trivial iff it fixes
// coset 1. Unknown when enumeration overflows.
Triviality word_is_trivial(const MarkedPresentation& p, const Word& w,
                           const Limits& lim = {});
Triviality word_is_trivial(const CosetTable& regular, const Word& w);

// H x H = H y H inside the finite group realized by a complete regular
// table, with H the subgroup generated by the given words.
bool double_coset_equal(const CosetTable& regular, const std::vector<Word>& subgroup,
                        const Word& x, const Word& y);

// Independent re-check of the table invariants: permutation action per
// generator, every relator closes a cycle at every coset, every subgroup
// word stabilizes coset 1.
bool verify_table(const CosetTable& t, const MarkedPresentation& p,
                  const std::vector<Word>& subgroup);

}  // namespace twistspin
