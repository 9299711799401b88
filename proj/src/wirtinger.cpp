#include "twistspin/wirtinger.hpp"

#include <numeric>

namespace twistspin {

namespace {

int find_root(std::vector<int>& parent, int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
        parent[static_cast<std::size_t>(a)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
        a = parent[static_cast<std::size_t>(a)];
    }
    return a;
}

}  // namespace

std::vector<int> arc_generators(const KnotDiagram& d) {
    std::vector<int> parent(static_cast<std::size_t>(d.arc_count) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    // The over-strand continues through the crossing: its incoming and
    // outgoing arcs carry the same Wirtinger generator.
    for (const auto& c : d.crossings) {
        int a = find_root(parent, c.over_arc);
        int b = find_root(parent, d.next_arc(c.over_arc));
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<int> gen(static_cast<std::size_t>(d.arc_count) + 1, 0);
    int next = 0;
    for (int a = 1; a <= d.arc_count; ++a) {
        int r = find_root(parent, a);
        if (gen[static_cast<std::size_t>(r)] == 0) gen[static_cast<std::size_t>(r)] = ++next;
        gen[static_cast<std::size_t>(a)] = gen[static_cast<std::size_t>(r)];
    }
    return gen;
}

MarkedPresentation wirtinger_presentation(const KnotDiagram& d) {
    const std::vector<int> gen = arc_generators(d);
    int gens = 0;
    for (int a = 1; a <= d.arc_count; ++a) gens = std::max(gens, gen[static_cast<std::size_t>(a)]);

    MarkedPresentation p;
    p.generators = gens;
    p.meridian = 1;
    p.provenance = Provenance::wirtinger;
    for (const auto& c : d.crossings) {
        const int over = gen[static_cast<std::size_t>(c.over_arc)];
        const int in = gen[static_cast<std::size_t>(c.under_in)];
        const int out = gen[static_cast<std::size_t>(c.under_out)];
        Word r({out, c.sign * over, -in, -c.sign * over});
        p.relators.push_back(cyclic_reduce(r));
    }
    return p;
}

int writhe(const KnotDiagram& d) {
    int w = 0;
    for (const auto& c : d.crossings) w += c.sign;
    return w;
}

Word longitude_word(const KnotDiagram& d, int base_arc) {
    if (base_arc < 1 || base_arc > d.arc_count)
        throw OutOfRange("base arc out of range");
    const std::vector<int> gen = arc_generators(d);

    std::vector<int> under_at(static_cast<std::size_t>(d.arc_count) + 1, -1);
    for (std::size_t i = 0; i < d.crossings.size(); ++i)
        under_at[static_cast<std::size_t>(d.crossings[i].under_in)] = static_cast<int>(i);

    Word w;
    int a = base_arc;
    do {
        int ci = under_at[static_cast<std::size_t>(a)];
        if (ci >= 0) {
            const auto& c = d.crossings[static_cast<std::size_t>(ci)];
            w.letters.push_back(c.sign * gen[static_cast<std::size_t>(c.over_arc)]);
        }
        a = d.next_arc(a);
    } while (a != base_arc);

    const int base_gen = gen[static_cast<std::size_t>(base_arc)];
    const Word correction = power(base_gen, -writhe(d));
    return free_reduce(concat(w, correction));
}

namespace {

// w = b^{e1} a^{e2} b^{e3} ... of length p-1, e_i = (-1)^floor(i q / p).
Word schubert_word(const TwoBridgeFraction& f) {
    Word w;
    for (int i = 1; i < f.p; ++i) {
        const int gen = i % 2 == 1 ? 2 : 1;
        const int eps = (static_cast<long>(i) * f.q / f.p) % 2 == 0 ? +1 : -1;
        w.letters.push_back(eps * gen);
    }
    return w;
}

}  // namespace

MarkedPresentation schubert_presentation(const TwoBridgeFraction& f) {
    MarkedPresentation p;
    p.meridian = 1;
    p.provenance = Provenance::schubert;
    if (f.p == 1) {
        p.generators = 1;
        return p;
    }
    p.generators = 2;
    const Word w = schubert_word(f);
    Word r = concat(concat(Word({1}), w), concat(Word({-2}), inverse(w)));
    p.relators.push_back(cyclic_reduce(r));
    return p;
}

Word schubert_longitude(const TwoBridgeFraction& f) {
    if (f.p == 1) return Word{};
    const Word w = schubert_word(f);
    Word rev;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) rev.letters.push_back(*it);
    const int e = exponent_sum(w);
    return free_reduce(concat(concat(rev, w), power(1, -2 * e)));
}

}  // namespace twistspin
