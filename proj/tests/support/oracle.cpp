#include "support/oracle.hpp"
#include <algorithm>
#include "twistspin/errors.hpp"

#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace twistspin::oracle {

namespace {

// letters encoded as chars: generator g -> 2(g-1), inverse -> 2(g-1)+1
char encode(int letter) {
    return letter > 0 ? static_cast<char>(2 * (letter - 1))
                      : static_cast<char>(2 * (-letter - 1) + 1);
}

std::string encode_word(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (int x : w.letters) s.push_back(encode(x));
    return s;
}

bool reduce_append(std::string& out, char c) {
    if (!out.empty() && (out.back() ^ 1) == c) {
        out.pop_back();
        return true;
    }
    out.push_back(c);
    return true;
}

std::string reduce_concat(const std::string& a, const std::string& b,
                          const std::string& c) {
    std::string out;
    out.reserve(a.size() + b.size() + c.size());
    for (char ch : a) reduce_append(out, ch);
    for (char ch : b) reduce_append(out, ch);
    for (char ch : c) reduce_append(out, ch);
    return out;
}

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }
    void merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace

std::optional<long> closure_order(const MarkedPresentation& p, int max_len,
                                  std::size_t max_words) {
    const int k = p.generators;
    if (k == 0) return 1;
    const int alphabet = 2 * k;

    // every cyclic rotation of every relator and of its inverse
    std::set<std::string> variant_set;
    for (const Word& r : p.relators) {
        const Word red = cyclic_reduce(r);
        if (red.empty()) continue;
        for (const Word& base : {red, inverse(red)})
            for (std::size_t rot = 0; rot < base.size(); ++rot)
                variant_set.insert(encode_word(rotated(base, rot)));
    }
    if (variant_set.empty()) return std::nullopt;  // free group, never closes
    const std::vector<std::string> variants(variant_set.begin(), variant_set.end());

    // breadth-first ball of freely reduced words; ids are in length order
    std::vector<std::string> words{""};
    std::unordered_map<std::string, int> id{{"", 0}};
    for (std::size_t head = 0; head < words.size(); ++head) {
        const std::string w = words[head];
        if (static_cast<int>(w.size()) >= max_len) break;
        for (char c = 0; c < static_cast<char>(alphabet); ++c) {
            if (!w.empty() && (w.back() ^ 1) == c) continue;
            std::string next = w;
            next.push_back(c);
            if (id.emplace(next, static_cast<int>(words.size())).second) {
                words.push_back(std::move(next));
                if (words.size() > max_words) return std::nullopt;
            }
        }
    }

    // merge w with every relator insertion that stays inside the ball
    UnionFind uf(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        const std::string& w = words[i];
        for (std::size_t cut = 0; cut <= w.size(); ++cut) {
            const std::string head = w.substr(0, cut);
            const std::string tail = w.substr(cut);
            for (const std::string& v : variants) {
                const std::string u = reduce_concat(head, v, tail);
                if (static_cast<int>(u.size()) > max_len) continue;
                uf.merge(static_cast<int>(i), id.at(u));
            }
        }
    }

    // Shortest representative per class (words are in length order, so the
    // first hit wins). All words in one class share a single group value, as
    // every merge inserts a relator.
    std::unordered_map<int, int> shortest;  // root -> word id
    for (std::size_t i = 0; i < words.size(); ++i)
        shortest.emplace(uf.find(static_cast<int>(i)), static_cast<int>(i));

    // Letter action through the shortest representative: C . c is the class
    // of rep(C) . c. Orbit of the identity class, breadth first; any class
    // whose representative cannot be extended inside the ball leaves the
    // result undecided.
    std::unordered_map<int, int> orbit_index;  // root -> compact index
    std::vector<int> orbit_roots{uf.find(0)};
    orbit_index.emplace(orbit_roots[0], 0);
    std::vector<int> action;  // orbit_index * alphabet + letter -> orbit_index
    for (std::size_t head = 0; head < orbit_roots.size(); ++head) {
        const std::string& rep = words[static_cast<std::size_t>(
            shortest.at(orbit_roots[head]))];
        if (static_cast<int>(rep.size()) >= max_len) return std::nullopt;
        action.resize(orbit_roots.size() * static_cast<std::size_t>(alphabet), -1);
        for (char c = 0; c < static_cast<char>(alphabet); ++c) {
            std::string next = rep;
            reduce_append(next, c);
            const int root = uf.find(id.at(next));
            auto [it, fresh] = orbit_index.emplace(root, static_cast<int>(orbit_roots.size()));
            if (fresh) orbit_roots.push_back(root);
            action.resize(orbit_roots.size() * static_cast<std::size_t>(alphabet), -1);
            action[head * static_cast<std::size_t>(alphabet) + static_cast<std::size_t>(c)] =
                it->second;
        }
    }
    const std::size_t m = orbit_roots.size();
    auto act = [&](std::size_t ci, char c) {
        return action[ci * static_cast<std::size_t>(alphabet) + static_cast<std::size_t>(c)];
    };

    // The free group must genuinely act: each letter composed with its
    // inverse is the identity on the orbit.
    for (std::size_t ci = 0; ci < m; ++ci)
        for (char c = 0; c < static_cast<char>(alphabet); ++c) {
            const int img = act(ci, c);
            if (img < 0 || act(static_cast<std::size_t>(img), static_cast<char>(c ^ 1)) !=
                               static_cast<int>(ci))
                return std::nullopt;
        }

    // ... and factor through the presented group: every relator fixes every
    // orbit class. Then the orbit is the regular action and its size is the
    // group order (the stabilizer of the identity class is trivial because
    // classes are value-homogeneous).
    for (const Word& r : p.relators) {
        const std::string enc = encode_word(free_reduce(r));
        for (std::size_t ci = 0; ci < m; ++ci) {
            std::size_t cur = ci;
            for (char c : enc) cur = static_cast<std::size_t>(act(cur, c));
            if (cur != ci) return std::nullopt;
        }
    }

    return static_cast<long>(m);
}

std::optional<long> closure_order_adaptive(const MarkedPresentation& p, int start_len,
                                           int max_len) {
    for (int len = start_len; len <= max_len; ++len)
        if (auto n = closure_order(p, len)) return n;
    return std::nullopt;
}

MarkedPresentation involution_closure(const MarkedPresentation& p) {
    if (p.provenance == Provenance::derived)
        throw Error("involution closure needs a diagram-derived presentation");
    const Word square = cyclic_canonical(Word{{p.meridian, p.meridian}});
    const bool has_square =
        std::any_of(p.relators.begin(), p.relators.end(),
                    [&](const Word& r) { return cyclic_canonical(r) == square; });
    if (!has_square) throw Error("involution closure needs the meridian-square relator");
    MarkedPresentation out = p;
    for (int g = 1; g <= p.generators; ++g)
        if (g != p.meridian) out.relators.push_back(Word{{g, g}});
    return out;
}

}  // namespace twistspin::oracle
