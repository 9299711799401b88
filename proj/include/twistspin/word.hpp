#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

namespace twistspin {

// A word in a free group: sequence of signed generator indices.
// Letter +g is generator g (1-based), -g its inverse.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    bool operator==(const Word& other) const = default;
    auto operator<=>(const Word& other) const = default;
};

inline Word inverse(const Word& w) {
    Word out;
    out.letters.reserve(w.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back(-*it);
    return out;
}

inline Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

// Cancel adjacent inverse pairs until none remain.
inline Word free_reduce(const Word& w) {
    Word out;
    out.letters.reserve(w.size());
    for (int x : w.letters) {
        if (x == 0) continue;
        if (!out.letters.empty() && out.letters.back() == -x)
            out.letters.pop_back();
        else
            out.letters.push_back(x);
    }
    return out;
}

// Free reduction plus trimming of inverse first/last pairs.
inline Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    std::size_t i = 0, j = r.size();
    while (j > i + 1 && r.letters[i] == -r.letters[j - 1]) {
        ++i;
        --j;
    }
    return Word(std::vector<int>(r.letters.begin() + static_cast<long>(i),
                                 r.letters.begin() + static_cast<long>(j)));
}

inline Word rotated(const Word& w, std::size_t k) {
    if (w.empty()) return w;
    k %= w.size();
    Word out;
    out.letters.reserve(w.size());
    out.letters.insert(out.letters.end(), w.letters.begin() + static_cast<long>(k), w.letters.end());
    out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + static_cast<long>(k));
    return out;
}

inline Word power(int gen, int exp) {
    Word out;
    int letter = exp >= 0 ? gen : -gen;
    for (int i = 0; i < std::abs(exp); ++i) out.letters.push_back(letter);
    return out;
}

inline Word power(const Word& w, int exp) {
    const Word base = exp >= 0 ? w : inverse(w);
    Word out;
    out.letters.reserve(base.size() * static_cast<std::size_t>(std::abs(exp)));
    for (int i = 0; i < std::abs(exp); ++i)
        out.letters.insert(out.letters.end(), base.letters.begin(), base.letters.end());
    return out;
}

inline int exponent_sum(const Word& w) {
    int s = 0;
    for (int x : w.letters) s += x > 0 ? 1 : -1;
    return s;
}

// Lexicographically least cyclic rotation among w and its inverse.
// Canonical key for duplicate detection of cyclic words.
inline Word cyclic_canonical(const Word& w) {
    Word r = cyclic_reduce(w);
    if (r.empty()) return r;
    Word best = r;
    for (const Word& base : {r, inverse(r)})
        for (std::size_t k = 0; k < base.size(); ++k) {
            Word cand = rotated(base, k);
            if (cand.letters < best.letters) best = cand;
        }
    return best;
}

// Text form: "a1 a2^-1 a1"; the empty word renders as "1".
std::string render_word(const Word& w);

}  // namespace twistspin
