#include "twistspin/knot.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace twistspin {

namespace {

std::string strip_ws(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

long parse_int(const std::string& s, std::size_t& pos, const char* what) {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw MalformedSyntax(std::string("expected integer in ") + what);
    return std::stol(s.substr(start, pos - start));
}

void expect(const std::string& s, std::size_t& pos, char c) {
    if (pos >= s.size() || s[pos] != c)
        throw MalformedSyntax(std::string("expected '") + c + "'");
    ++pos;
}

}  // namespace

KnotDiagram diagram_from_pd(const PDCode& code) {
    const int n = static_cast<int>(code.crossings.size());
    if (n == 0) {
        KnotDiagram d;
        d.arc_count = 1;
        d.successor = {0, 1};
        return d;
    }
    const int arcs = 2 * n;

    std::vector<int> count(static_cast<std::size_t>(arcs) + 1, 0);
    for (const auto& x : code.crossings)
        for (int lbl : x) {
            if (lbl < 1 || lbl > arcs)
                throw LabelError("arc label " + std::to_string(lbl) + " outside 1.." +
                                 std::to_string(arcs));
            ++count[static_cast<std::size_t>(lbl)];
        }
    for (int a = 1; a <= arcs; ++a)
        if (count[static_cast<std::size_t>(a)] != 2)
            throw LabelError("arc label " + std::to_string(a) + " appears " +
                             std::to_string(count[static_cast<std::size_t>(a)]) +
                             " times, expected 2");

    auto succ = [arcs](int a) { return a % arcs + 1; };

    // Each arc is the source of exactly one passage; labels must follow the
    // orientation, so every transition is arc -> succ(arc).
    std::vector<char> source_used(static_cast<std::size_t>(arcs) + 1, 0);
    KnotDiagram d;
    d.arc_count = arcs;
    d.successor.assign(static_cast<std::size_t>(arcs) + 1, 0);
    for (int a = 1; a <= arcs; ++a) d.successor[static_cast<std::size_t>(a)] = succ(a);

    for (const auto& x : code.crossings) {
        const int i = x[0], k = x[2];
        if (succ(i) != k)
            throw MultiComponent("under-strand " + std::to_string(i) + "->" +
                                 std::to_string(k) + " does not follow the orientation");
        if (source_used[static_cast<std::size_t>(i)])
            throw MultiComponent("arc " + std::to_string(i) + " leaves two crossings");
        source_used[static_cast<std::size_t>(i)] = 1;
    }
    for (const auto& x : code.crossings) {
        const int i = x[0], j = x[1], k = x[2], l = x[3];
        const bool fwd_ok = succ(j) == l && !source_used[static_cast<std::size_t>(j)];
        const bool bwd_ok = succ(l) == j && !source_used[static_cast<std::size_t>(l)];
        DiagramCrossing c;
        c.under_in = i;
        c.under_out = k;
        if (fwd_ok) {
            c.over_arc = j;
            c.sign = -1;  // over-strand labels increase: negative crossing
            source_used[static_cast<std::size_t>(j)] = 1;
        } else if (bwd_ok) {
            c.over_arc = l;
            c.sign = +1;
            source_used[static_cast<std::size_t>(l)] = 1;
        } else {
            throw MultiComponent("over-strand {" + std::to_string(j) + "," +
                                 std::to_string(l) + "} does not follow the orientation");
        }
        d.crossings.push_back(c);
    }
    return d;
}

KnotDiagram parse_pd(const std::string& text) {
    const std::string s = strip_ws(text);
    if (s.rfind("PD[", 0) != 0 || s.back() != ']')
        throw MalformedSyntax("expected PD[...]");
    std::string body = s.substr(3, s.size() - 4);

    PDCode code;
    std::size_t pos = 0;
    while (pos < body.size()) {
        if (!code.crossings.empty()) expect(body, pos, ',');
        expect(body, pos, 'X');
        expect(body, pos, '(');
        std::vector<long> entries;
        while (true) {
            entries.push_back(parse_int(body, pos, "PD tuple"));
            if (pos < body.size() && body[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
        expect(body, pos, ')');
        if (entries.size() != 4)
            throw ArityError("PD tuple has " + std::to_string(entries.size()) +
                             " entries, expected 4");
        code.crossings.push_back({static_cast<int>(entries[0]), static_cast<int>(entries[1]),
                                  static_cast<int>(entries[2]), static_cast<int>(entries[3])});
    }
    return diagram_from_pd(code);
}

KnotDiagram diagram_from_braid(const BraidSpec& braid) {
    const int s = braid.strand_count;
    const int m = static_cast<int>(braid.letters.size());
    if (s < 1) throw MalformedSyntax("strand count must be positive");
    for (int w : braid.letters)
        if (w == 0 || std::abs(w) >= s)
            throw LetterOutOfRange("braid letter " + std::to_string(w) +
                                   " outside 1.." + std::to_string(s - 1));

    // Closure must be a knot: the strand permutation is a single s-cycle.
    std::vector<int> perm(static_cast<std::size_t>(s));
    std::iota(perm.begin(), perm.end(), 0);
    for (int w : braid.letters) {
        int i = std::abs(w) - 1;
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i) + 1]);
    }
    {
        std::vector<char> seen(static_cast<std::size_t>(s), 0);
        int cycle_len = 0;
        for (int p = 0; !seen[static_cast<std::size_t>(p)]; p = perm[static_cast<std::size_t>(p)]) {
            seen[static_cast<std::size_t>(p)] = 1;
            ++cycle_len;
        }
        if (cycle_len != s)
            throw MultiComponent("braid closure has more than one component");
    }

    if (m == 0) {
        KnotDiagram d;
        d.arc_count = 1;
        d.successor = {0, 1};
        return d;
    }

    KnotDiagram d;
    d.arc_count = 2 * m;
    d.crossings.assign(static_cast<std::size_t>(m), DiagramCrossing{});
    d.successor.assign(static_cast<std::size_t>(2 * m) + 1, 0);
    for (int a = 1; a <= 2 * m; ++a) d.successor[static_cast<std::size_t>(a)] = a % (2 * m) + 1;

    // Walk the closed-up knot, labelling arcs in traversal order. For a
    // positive letter the strand entering at position i passes over.
    int pos = 0;  // 0-based strand position at the top
    int arc = 1;
    int passages = 0;
    do {
        for (int t = 0; t < m; ++t) {
            const int w = braid.letters[static_cast<std::size_t>(t)];
            const int i = std::abs(w) - 1;
            if (pos != i && pos != i + 1) continue;
            DiagramCrossing& c = d.crossings[static_cast<std::size_t>(t)];
            c.sign = w > 0 ? +1 : -1;
            const bool over = (w > 0) == (pos == i);
            ++passages;
            const int next = passages == 2 * m ? 1 : arc + 1;
            if (over) {
                c.over_arc = arc;
            } else {
                c.under_in = arc;
                c.under_out = next;
            }
            arc = next;
            pos = pos == i ? i + 1 : i;
        }
        // bottom of the braid; the closure arc returns to the top unchanged
    } while (pos != 0 || passages != 2 * m);

    return d;
}

KnotDiagram parse_braid(const std::string& text) {
    // Grammar: BR[s; w1 w2 ...]; letters are whitespace-separated.
    std::string s = text;
    // strip leading/trailing whitespace only; inner whitespace separates letters
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    if (s.rfind("BR[", 0) != 0 || s.back() != ']')
        throw MalformedSyntax("expected BR[s; ...]");
    std::string body = s.substr(3, s.size() - 4);
    auto semi = body.find(';');
    if (semi == std::string::npos) throw MalformedSyntax("expected ';' in BR[s; ...]");

    BraidSpec braid;
    {
        std::string head = strip_ws(body.substr(0, semi));
        std::size_t pos = 0;
        long sc = parse_int(head, pos, "strand count");
        if (pos != head.size()) throw MalformedSyntax("junk after strand count");
        if (sc < 1) throw MalformedSyntax("strand count must be positive");
        braid.strand_count = static_cast<int>(sc);
    }
    std::istringstream rest(body.substr(semi + 1));
    std::string tok;
    while (rest >> tok) {
        std::size_t pos = 0;
        long v = parse_int(tok, pos, "braid letter");
        if (pos != tok.size()) throw MalformedSyntax("bad braid letter '" + tok + "'");
        braid.letters.push_back(static_cast<int>(v));
    }
    return diagram_from_braid(braid);
}

TwoBridgeFraction two_bridge(long p, long q) {
    if (p < 1) throw OutOfRange("p must be >= 1");
    if (p % 2 == 0) throw EvenP("even p gives a 2-component link");
    if (p == 1) {
        if (q != 1) throw OutOfRange("p = 1 permits only q = 1");
    } else if (q <= 0 || q >= p) {
        throw OutOfRange("q must satisfy 0 < q < p");
    }
    if (std::gcd(p, q) != 1) throw NotCoprime("gcd(p, q) must be 1");
    return TwoBridgeFraction{static_cast<int>(p), static_cast<int>(q)};
}

TwoBridgeFraction parse_two_bridge(const std::string& text) {
    const std::string s = strip_ws(text);
    if (s.rfind("TB[", 0) != 0 || s.back() != ']')
        throw MalformedSyntax("expected TB[p/q]");
    std::string body = s.substr(3, s.size() - 4);
    std::size_t pos = 0;
    long p = parse_int(body, pos, "TB fraction");
    expect(body, pos, '/');
    long q = parse_int(body, pos, "TB fraction");
    if (pos != body.size()) throw MalformedSyntax("junk after TB[p/q]");
    return two_bridge(p, q);
}

std::string render_pd(const KnotDiagram& d) {
    std::ostringstream out;
    out << "PD[";
    for (std::size_t c = 0; c < d.crossings.size(); ++c) {
        const auto& x = d.crossings[c];
        const int over_out = d.next_arc(x.over_arc);
        const int j = x.sign < 0 ? x.over_arc : over_out;
        const int l = x.sign < 0 ? over_out : x.over_arc;
        if (c > 0) out << ',';
        out << "X(" << x.under_in << ',' << j << ',' << x.under_out << ',' << l << ')';
    }
    out << ']';
    return out.str();
}

std::string render_two_bridge(const TwoBridgeFraction& f) {
    return "TB[" + std::to_string(f.p) + "/" + std::to_string(f.q) + "]";
}

bool looks_like_two_bridge(const std::string& text) {
    return strip_ws(text).rfind("TB[", 0) == 0;
}

KnotDiagram parse_diagram(const std::string& text) {
    const std::string s = strip_ws(text);
    if (s.rfind("PD", 0) == 0) return parse_pd(text);
    if (s.rfind("BR", 0) == 0) return parse_braid(text);
    throw MalformedSyntax("expected PD[...] or BR[...]");
}

}  // namespace twistspin
