#include "twistspin/fpcore.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "twistspin/errors.hpp"

namespace twistspin {

IntMatrix relation_matrix(const MarkedPresentation& p) {
    IntMatrix m;
    m.rows = p.relators.size();
    m.cols = static_cast<std::size_t>(p.generators);
    m.data.assign(m.rows * m.cols, 0);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (int x : p.relators[r].letters) {
            const std::size_t g = static_cast<std::size_t>(std::abs(x)) - 1;
            m.at(r, g) += x > 0 ? 1 : -1;
        }
    return m;
}

namespace {

using boost::multiprecision::abs;

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, a), m.at(r, b));
}

}  // namespace

std::vector<BigInt> smith_normal_form(IntMatrix m) {
    const std::size_t dim = std::min(m.rows, m.cols);
    std::vector<BigInt> diag(dim, 0);

    for (std::size_t t = 0; t < dim; ++t) {
        // Move a minimal nonzero entry of the trailing submatrix to (t, t).
        bool found = false;
        std::size_t pr = t, pc = t;
        for (std::size_t r = t; r < m.rows; ++r)
            for (std::size_t c = t; c < m.cols; ++c) {
                const BigInt& v = m.at(r, c);
                if (v == 0) continue;
                if (!found || abs(v) < abs(m.at(pr, pc))) {
                    pr = r;
                    pc = c;
                    found = true;
                }
            }
        if (!found) break;
        swap_rows(m, t, pr);
        swap_cols(m, t, pc);

        for (bool dirty = true; dirty;) {
            dirty = false;
            for (std::size_t r = t + 1; r < m.rows; ++r) {
                if (m.at(r, t) == 0) continue;
                const BigInt q = m.at(r, t) / m.at(t, t);
                for (std::size_t c = t; c < m.cols; ++c) m.at(r, c) -= q * m.at(t, c);
                if (m.at(r, t) != 0) {
                    swap_rows(m, t, r);
                    dirty = true;
                }
            }
            for (std::size_t c = t + 1; c < m.cols; ++c) {
                if (m.at(t, c) == 0) continue;
                const BigInt q = m.at(t, c) / m.at(t, t);
                for (std::size_t r = t; r < m.rows; ++r) m.at(r, c) -= q * m.at(r, t);
                if (m.at(t, c) != 0) {
                    swap_cols(m, t, c);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Pivot must divide every remaining entry for the chain d1 | d2 | ...
            for (std::size_t r = t + 1; r < m.rows && !dirty; ++r)
                for (std::size_t c = t + 1; c < m.cols && !dirty; ++c)
                    if (m.at(r, c) % m.at(t, t) != 0) {
                        for (std::size_t cc = t; cc < m.cols; ++cc) m.at(t, cc) += m.at(r, cc);
                        dirty = true;
                    }
        }
        diag[t] = abs(m.at(t, t));
    }
    return diag;
}

AbelianInvariants abelian_invariants(const MarkedPresentation& p) {
    AbelianInvariants inv;
    if (p.generators == 0) return inv;
    if (p.relators.empty()) {
        inv.free_rank = p.generators;
        return inv;
    }
    const std::vector<BigInt> diag = smith_normal_form(relation_matrix(p));
    int rank = 0;
    for (const BigInt& d : diag)
        if (d != 0) {
            ++rank;
            if (d >= 2) inv.torsion.push_back(d);
        }
    inv.free_rank = p.generators - rank;
    return inv;
}

namespace {

struct Budget {
    long remaining;
    bool exhausted = false;

    bool spend(long units) {
        if (exhausted) return false;
        remaining -= units;
        if (remaining < 0) exhausted = true;
        return !exhausted;
    }
};

// Is the relator a power of a single generator? Returns {gen, exponent}.
std::optional<std::pair<int, long>> single_gen_power(const Word& w) {
    if (w.empty()) return std::nullopt;
    const int g = std::abs(w.letters.front());
    long e = 0;
    for (int x : w.letters) {
        if (std::abs(x) != g) return std::nullopt;
        e += x > 0 ? 1 : -1;
    }
    return std::make_pair(g, e);
}

void sort_relators(std::vector<Word>& rels) {
    std::stable_sort(rels.begin(), rels.end(), [](const Word& a, const Word& b) {
        return a.size() < b.size();
    });
}

// Drop empty relators, canonical-form duplicates, and combine relators that
// are powers of the same generator via gcd.
bool cleanup(std::vector<Word>& rels, Budget& budget) {
    bool changed = false;
    std::vector<Word> out;
    std::set<std::vector<int>> seen;
    std::map<int, long> powers;
    for (Word& r : rels) {
        Word red = cyclic_reduce(r);
        budget.spend(static_cast<long>(red.size()));
        if (red.empty()) {
            changed = true;
            continue;
        }
        if (auto pw = single_gen_power(red)) {
            auto [g, e] = *pw;
            long& acc = powers[g];
            long ng = std::gcd(acc, std::abs(e));
            if (acc != 0 && ng != acc) changed = true;
            if (acc != 0) changed = true;  // merged into one relator
            acc = ng;
            continue;
        }
        Word key = cyclic_canonical(red);
        if (!seen.insert(key.letters).second) {
            changed = true;
            continue;
        }
        if (red.size() != r.size()) changed = true;
        out.push_back(std::move(red));
    }
    for (auto [g, e] : powers)
        if (e != 0) out.push_back(power(g, static_cast<int>(e)));
    rels = std::move(out);
    sort_relators(rels);
    return changed;
}

// Replace an occurrence of more than half of relator `shorter` (or of its
// inverse, cyclically) inside `longer` by the inverse of the remainder.
bool shorten_with(const Word& shorter, Word& longer, Budget& budget) {
    if (shorter.size() < 2 || longer.size() < shorter.size()) return false;
    const std::size_t vlen = shorter.size();
    std::vector<Word> bases = {shorter, inverse(shorter)};
    // doubled copy of `longer` for cyclic substring search
    std::vector<int> dbl = longer.letters;
    dbl.insert(dbl.end(), longer.letters.begin(), longer.letters.end());

    for (const Word& base : bases)
        for (std::size_t rot = 0; rot < vlen; ++rot) {
            const Word v = rotated(base, rot);
            for (std::size_t ulen = vlen; 2 * ulen > vlen; --ulen) {
                if (!budget.spend(static_cast<long>(vlen))) return false;
                for (std::size_t start = 0; start < longer.size(); ++start) {
                    if (start + ulen > dbl.size()) break;
                    if (!std::equal(v.letters.begin(),
                                    v.letters.begin() + static_cast<long>(ulen),
                                    dbl.begin() + static_cast<long>(start)))
                        continue;
                    // u = v[0:ulen] equals rest^-1 where v = u . rest
                    Word rest(std::vector<int>(v.letters.begin() + static_cast<long>(ulen),
                                               v.letters.end()));
                    Word rep = inverse(rest);
                    std::vector<int> rebuilt;
                    rebuilt.insert(rebuilt.end(), rep.letters.begin(), rep.letters.end());
                    rebuilt.insert(rebuilt.end(),
                                   dbl.begin() + static_cast<long>(start + ulen),
                                   dbl.begin() + static_cast<long>(start + longer.size()));
                    longer = cyclic_reduce(Word(std::move(rebuilt)));
                    return true;
                }
            }
        }
    return false;
}

struct Elimination {
    std::size_t relator;
    std::size_t position;
    int gen;  // generator to eliminate (positive index)
};

std::optional<Elimination> find_elimination(const std::vector<Word>& rels, int meridian) {
    // Relators are kept sorted by length, so the first hit uses the shortest
    // defining relator; within a relator prefer the lowest generator index.
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
        const Word& r = rels[ri];
        std::map<int, std::pair<int, std::size_t>> occ;  // gen -> (count, first pos)
        for (std::size_t i = 0; i < r.size(); ++i) {
            int g = std::abs(r.letters[i]);
            auto it = occ.find(g);
            if (it == occ.end())
                occ[g] = {1, i};
            else
                ++it->second.first;
        }
        for (const auto& [g, info] : occ)
            if (g != meridian && info.first == 1)
                return Elimination{ri, info.second, g};
    }
    return std::nullopt;
}

Word substitute(const Word& w, int gen, const Word& value, Budget& budget) {
    Word out;
    const Word inv_value = inverse(value);
    for (int x : w.letters) {
        if (x == gen)
            out.letters.insert(out.letters.end(), value.letters.begin(), value.letters.end());
        else if (x == -gen)
            out.letters.insert(out.letters.end(), inv_value.letters.begin(),
                               inv_value.letters.end());
        else
            out.letters.push_back(x);
    }
    budget.spend(static_cast<long>(out.size()));
    return cyclic_reduce(out);
}

void renumber_after_removal(std::vector<Word>& rels, int removed_gen) {
    for (Word& r : rels)
        for (int& x : r.letters) {
            int g = std::abs(x);
            if (g > removed_gen) x = x > 0 ? x - 1 : x + 1;
        }
}

}  // namespace

TietzeResult tietze_simplify(const MarkedPresentation& p, long budget_units) {
    if (budget_units <= 0) throw OutOfRange("tietze budget must be positive");
    Budget budget{budget_units};

    MarkedPresentation cur = p;
    cur.provenance = Provenance::derived;
    cur.twist.reset();

    while (true) {
        // Phase 1: strictly size-reducing moves to a fixpoint.
        for (bool changed = true; changed && !budget.exhausted;) {
            changed = cleanup(cur.relators, budget);
            for (std::size_t i = 0; i < cur.relators.size() && !budget.exhausted; ++i)
                for (std::size_t j = 0; j < cur.relators.size(); ++j) {
                    if (i == j) continue;
                    if (shorten_with(cur.relators[i], cur.relators[j], budget)) changed = true;
                }
        }
        if (budget.exhausted) break;

        // Phase 2: one generator elimination, then start over.
        auto elim = find_elimination(cur.relators, cur.meridian);
        if (!elim) break;
        const Word r = rotated(cur.relators[elim->relator], elim->position);
        // r = g^e t with a single occurrence of g; g = t^-1 when e = +1.
        Word tail(std::vector<int>(r.letters.begin() + 1, r.letters.end()));
        const Word value = r.letters.front() > 0 ? inverse(tail) : tail;

        std::vector<Word> next;
        for (std::size_t i = 0; i < cur.relators.size(); ++i) {
            if (i == elim->relator) continue;
            next.push_back(substitute(cur.relators[i], elim->gen, value, budget));
        }
        renumber_after_removal(next, elim->gen);
        cur.relators = std::move(next);
        cur.generators -= 1;
        if (cur.meridian > elim->gen) cur.meridian -= 1;
        if (budget.exhausted) break;
    }

    cleanup(cur.relators, budget);
    return TietzeResult{std::move(cur), budget.exhausted};
}

}  // namespace twistspin
