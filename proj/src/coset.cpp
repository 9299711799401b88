#include "twistspin/coset.hpp"

#include <deque>
#include <sstream>

namespace twistspin {

namespace {

struct OverflowSignal {};

// HLT enumerator with union-find coincidence handling (minimum survives).
class Enumerator {
public:
    Enumerator(const MarkedPresentation& p, const std::vector<Word>& subgroup,
               const Limits& lim)
        : ngens_(p.generators), ncols_(2 * p.generators), lim_(lim), subgroup_(subgroup) {
        for (const Word& r : p.relators) {
            Word red = cyclic_reduce(r);
            if (!red.empty()) relators_.push_back(std::move(red));
        }
        tab_.assign(static_cast<std::size_t>(ncols_), std::vector<int>{0, 0});
        parent_ = {0, 1};
        live_ = 1;
        defined_ = 1;
        max_live_ = 1;
    }

    bool run() {
        try {
            for (const Word& w : subgroup_) scan_and_fill(1, free_reduce(w));
            // Re-run until a full pass over the table is coincidence-free;
            // in practice the second pass only re-checks.
            for (bool clean = false; !clean;) {
                pass();
                clean = closed();
            }
            return true;
        } catch (const OverflowSignal&) {
            return false;
        }
    }

    int rep(int c) {
        while (parent_[static_cast<std::size_t>(c)] != c) {
            parent_[static_cast<std::size_t>(c)] =
                parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(c)])];
            c = parent_[static_cast<std::size_t>(c)];
        }
        return c;
    }

    bool live(int c) { return rep(c) == c; }
    int total_defined() const { return static_cast<int>(parent_.size()) - 1; }
    long live_count() const { return live_; }

    EnumerationStats stats() const {
        return EnumerationStats{defined_, max_live_, coincidences_};
    }

    int get(int coset, int letter) const {
        return tab_[col(letter)][static_cast<std::size_t>(coset)];
    }

    const std::vector<Word>& relators() const { return relators_; }

private:
    static int col_index(int letter) {
        return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
    }
    std::size_t col(int letter) const { return static_cast<std::size_t>(col_index(letter)); }

    int& entry(int coset, int letter) {
        return tab_[col(letter)][static_cast<std::size_t>(coset)];
    }

    int define(int coset, int letter) {
        if (live_ >= lim_.max_cosets || defined_ >= lim_.max_definitions)
            throw OverflowSignal{};
        const int fresh = static_cast<int>(parent_.size());
        parent_.push_back(fresh);
        for (auto& column : tab_) column.push_back(0);
        ++live_;
        ++defined_;
        max_live_ = std::max(max_live_, live_);
        entry(coset, letter) = fresh;
        entry(fresh, -letter) = coset;
        return fresh;
    }

    void merge(int a, int b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        queue_.push_back(b);
        --live_;
        ++coincidences_;
    }

    void coincidence(int a, int b) {
        merge(a, b);
        while (!queue_.empty()) {
            const int dead = queue_.front();
            queue_.pop_front();
            for (int c = 0; c < ncols_; ++c) {
                const int image = tab_[static_cast<std::size_t>(c)][static_cast<std::size_t>(dead)];
                if (image == 0) continue;
                tab_[static_cast<std::size_t>(c)][static_cast<std::size_t>(dead)] = 0;
                // remove the back-reference before transplanting the edge
                tab_[static_cast<std::size_t>(c ^ 1)][static_cast<std::size_t>(image)] = 0;
                const int mu = rep(dead);
                const int nu = rep(image);
                int& fwd = tab_[static_cast<std::size_t>(c)][static_cast<std::size_t>(mu)];
                int& bwd = tab_[static_cast<std::size_t>(c ^ 1)][static_cast<std::size_t>(nu)];
                if (fwd != 0)
                    merge(nu, fwd);
                else if (bwd != 0)
                    merge(mu, bwd);
                else {
                    fwd = nu;
                    bwd = mu;
                }
            }
        }
    }

    void scan_and_fill(int alpha, const Word& w) {
        if (w.empty()) return;
        int f = alpha;
        std::size_t i = 0;
        int b = alpha;
        std::size_t j = w.size();  // letters w[i..j) remain
        while (true) {
            while (i < j && entry(f, w.letters[i]) != 0) f = entry(f, w.letters[i++]);
            if (i == j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j > i && entry(b, -w.letters[j - 1]) != 0) b = entry(b, -w.letters[--j]);
            if (j == i) {
                coincidence(f, b);
                return;
            }
            if (j == i + 1) {
                entry(f, w.letters[i]) = b;
                entry(b, -w.letters[i]) = f;
                return;
            }
            define(f, w.letters[i]);
        }
    }

    void pass() {
        for (int alpha = 1; alpha <= total_defined(); ++alpha) {
            if (!live(alpha)) continue;
            for (const Word& r : relators_) {
                scan_and_fill(alpha, r);
                if (!live(alpha)) break;
            }
            if (!live(alpha)) continue;
            for (int g = 1; g <= ngens_; ++g) {
                if (entry(alpha, g) == 0) define(alpha, g);
                if (entry(alpha, -g) == 0) define(alpha, -g);
            }
        }
    }

    // Complete and coincidence-free: every relator closes at every live coset.
    bool closed() {
        for (int alpha = 1; alpha <= total_defined(); ++alpha) {
            if (!live(alpha)) continue;
            for (int g = 1; g <= ngens_; ++g)
                if (entry(alpha, g) == 0 || !live(entry(alpha, g)) || entry(alpha, -g) == 0 ||
                    !live(entry(alpha, -g)))
                    return false;
            for (const Word& r : relators_) {
                int c = alpha;
                for (int x : r.letters) c = rep(entry(c, x));
                if (c != alpha) return false;
            }
        }
        for (const Word& w : subgroup_) {
            int c = 1;
            for (int x : free_reduce(w).letters) {
                c = entry(c, x);
                if (c == 0) return false;
                c = rep(c);
            }
            if (c != 1) return false;
        }
        return true;
    }

    int ngens_;
    int ncols_;
    Limits lim_;
    std::vector<Word> relators_;
    std::vector<Word> subgroup_;
    std::vector<std::vector<int>> tab_;  // per column, indexed by coset; row 0 unused
    std::vector<int> parent_;
    std::deque<int> queue_;
    long live_ = 0;
    long defined_ = 0;
    long max_live_ = 0;
    long coincidences_ = 0;
};

// Renumber live cosets breadth-first from coset 1, columns scanned in the
// order a1, a1^-1, a2, a2^-1, ... so complete tables are canonical.
CosetTable extract_table(Enumerator& e, int ngens, bool standardize) {
    std::vector<int> order;
    std::vector<int> newid(static_cast<std::size_t>(e.total_defined()) + 1, 0);
    if (standardize) {
        order.push_back(1);
        newid[1] = 1;
        for (std::size_t head = 0; head < order.size(); ++head) {
            const int c = order[head];
            for (int g = 1; g <= ngens; ++g)
                for (int letter : {g, -g}) {
                    int img = e.get(c, letter);
                    if (img == 0) continue;
                    img = e.rep(img);
                    if (newid[static_cast<std::size_t>(img)] == 0) {
                        order.push_back(img);
                        newid[static_cast<std::size_t>(img)] =
                            static_cast<int>(order.size());
                    }
                }
        }
    } else {
        for (int c = 1; c <= e.total_defined(); ++c)
            if (e.live(c)) {
                order.push_back(c);
                newid[static_cast<std::size_t>(c)] = static_cast<int>(order.size());
            }
    }

    CosetTable t(ngens, static_cast<int>(order.size()));
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
        const int c = order[idx];
        for (int g = 1; g <= ngens; ++g)
            for (int letter : {g, -g}) {
                int img = e.get(c, letter);
                if (img != 0)
                    t.set(static_cast<int>(idx) + 1, letter,
                          newid[static_cast<std::size_t>(e.rep(img))]);
            }
    }
    return t;
}

}  // namespace

std::string CosetTable::dump() const {
    std::ostringstream out;
    for (int c = 1; c <= n_; ++c) {
        out << c << ':';
        for (int g = 1; g <= ngens_; ++g)
            for (int letter : {g, -g}) out << ' ' << act(c, letter);
        out << '\n';
    }
    return out.str();
}

EnumerationResult enumerate_cosets(const MarkedPresentation& p,
                                   const std::vector<Word>& subgroup, const Limits& lim) {
    Enumerator e(p, subgroup, lim);
    EnumerationResult res;
    const bool complete = e.run();
    res.stats = e.stats();
    if (complete) {
        res.outcome = EnumerationResult::Outcome::Index;
        res.index = static_cast<int>(e.live_count());
        res.table = extract_table(e, p.generators, /*standardize=*/true);
        res.table.set_complete(true);
    } else {
        res.outcome = EnumerationResult::Outcome::Overflow;
        res.table = extract_table(e, p.generators, /*standardize=*/false);
        res.table.set_complete(false);
    }
    return res;
}

OrderResult group_order(const MarkedPresentation& p, const Limits& lim) {
    EnumerationResult e = enumerate_cosets(p, {}, lim);
    OrderResult res;
    if (e.complete()) {
        res.outcome = OrderResult::Outcome::Order;
        res.order = e.index;
        res.table = std::move(e.table);
    }
    return res;
}

Triviality word_is_trivial(const CosetTable& regular, const Word& w) {
    if (!regular.complete()) return Triviality::Unknown;
    // Regular action is free: fixing coset 1 is equivalent to being trivial.
    return regular.trace(1, free_reduce(w)) == 1 ? Triviality::True : Triviality::False;
}

Triviality word_is_trivial(const MarkedPresentation& p, const Word& w, const Limits& lim) {
    OrderResult ord = group_order(p, lim);
    if (!ord.complete()) return Triviality::Unknown;
    return word_is_trivial(ord.table, w);
}

namespace {

// Word labelling the breadth-first tree path from coset 1 to each coset.
std::vector<Word> representative_words(const CosetTable& t) {
    std::vector<Word> words(static_cast<std::size_t>(t.size()) + 1);
    std::vector<char> seen(static_cast<std::size_t>(t.size()) + 1, 0);
    std::deque<int> queue{1};
    seen[1] = 1;
    while (!queue.empty()) {
        const int c = queue.front();
        queue.pop_front();
        for (int g = 1; g <= t.generators(); ++g)
            for (int letter : {g, -g}) {
                const int img = t.act(c, letter);
                if (img == 0 || seen[static_cast<std::size_t>(img)]) continue;
                seen[static_cast<std::size_t>(img)] = 1;
                words[static_cast<std::size_t>(img)] = words[static_cast<std::size_t>(c)];
                words[static_cast<std::size_t>(img)].letters.push_back(letter);
                queue.push_back(img);
            }
    }
    return words;
}

}  // namespace

bool double_coset_equal(const CosetTable& regular, const std::vector<Word>& subgroup,
                        const Word& x, const Word& y) {
    if (!regular.complete()) return false;
    const std::vector<Word> reps = representative_words(regular);

    std::vector<Word> hgens;
    for (const Word& h : subgroup) {
        Word red = free_reduce(h);
        hgens.push_back(red);
        hgens.push_back(inverse(red));
    }

    auto closure = [&](const Word& seed) {
        std::vector<char> in(static_cast<std::size_t>(regular.size()) + 1, 0);
        std::deque<int> queue;
        const int start = regular.trace(1, free_reduce(seed));
        in[static_cast<std::size_t>(start)] = 1;
        queue.push_back(start);
        while (!queue.empty()) {
            const int elem = queue.front();
            queue.pop_front();
            for (const Word& h : hgens) {
                // right multiplication: elem . h
                const int r = regular.trace(elem, h);
                // left multiplication: h . elem
                const int l = regular.trace(regular.trace(1, h),
                                            reps[static_cast<std::size_t>(elem)]);
                for (int next : {r, l})
                    if (!in[static_cast<std::size_t>(next)]) {
                        in[static_cast<std::size_t>(next)] = 1;
                        queue.push_back(next);
                    }
            }
        }
        return in;
    };

    return closure(x) == closure(y);
}

bool verify_table(const CosetTable& t, const MarkedPresentation& p,
                  const std::vector<Word>& subgroup) {
    if (!t.complete() || t.size() < 1 || t.generators() != p.generators) return false;
    const int n = t.size();
    for (int g = 1; g <= p.generators; ++g) {
        std::vector<char> hit(static_cast<std::size_t>(n) + 1, 0);
        for (int c = 1; c <= n; ++c) {
            const int img = t.act(c, g);
            if (img < 1 || img > n) return false;
            if (t.act(img, -g) != c) return false;
            if (hit[static_cast<std::size_t>(img)]) return false;  // not injective
            hit[static_cast<std::size_t>(img)] = 1;
        }
    }
    for (const Word& r : p.relators)
        for (int c = 1; c <= n; ++c)
            if (t.trace(c, r) != c) return false;
    for (const Word& w : subgroup)
        if (t.trace(1, free_reduce(w)) != 1) return false;
    return true;
}

}  // namespace twistspin
