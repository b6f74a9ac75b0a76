#include "ncsf/polyomino.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "ncsf/theta.hpp"

namespace ncsf {

int PolyominoCode::area() const {
    int a = 0;
    for (const auto& [i, j] : columns) a += j;
    return a;
}

std::vector<std::pair<int, int>> PolyominoCode::cells() const {
    std::vector<std::pair<int, int>> out;
    int base = 1;
    for (size_t k = 0; k < columns.size(); ++k) {
        const auto& [i, j] = columns[k];
        for (int r = base; r < base + j; ++r) out.emplace_back(static_cast<int>(k) + 1, r);
        base += j - i;  // next column starts above the shared rows
    }
    return out;
}

int PolyominoCode::height() const {
    std::set<int> rows;
    for (const auto& [c, r] : cells()) rows.insert(r);
    return static_cast<int>(rows.size());
}

bool PolyominoCode::valid() const {
    if (columns.empty()) return false;
    for (size_t k = 0; k < columns.size(); ++k) {
        const auto& [i, j] = columns[k];
        if (i < 1 || i > j) return false;
        if (k + 1 < columns.size() && i > columns[k + 1].second) return false;
    }
    return columns.back().first == 1;
}

std::string PolyominoCode::biword() const {
    std::ostringstream os;
    os << '[';
    for (size_t k = 0; k < columns.size(); ++k) {
        if (k) os << ' ';
        os << columns[k].first;
    }
    os << " / ";
    for (size_t k = 0; k < columns.size(); ++k) {
        if (k) os << ' ';
        os << columns[k].second;
    }
    os << ']';
    return os.str();
}

PolyominoCode PolyominoCode::parse_biword(const std::string& s) {
    std::string body = s;
    if (!body.empty() && body.front() == '[') body = body.substr(1);
    if (!body.empty() && body.back() == ']') body.pop_back();
    const size_t slash = body.find('/');
    if (slash == std::string::npos)
        throw std::invalid_argument("parse_biword: expected 'overlaps / heights'");
    auto parse_row = [](const std::string& row) {
        std::vector<int> out;
        std::istringstream is(row);
        int v;
        while (is >> v) out.push_back(v);
        return out;
    };
    return from_rows(parse_row(body.substr(0, slash)), parse_row(body.substr(slash + 1)));
}

PolyominoCode PolyominoCode::from_rows(const std::vector<int>& overlaps,
                                       const std::vector<int>& heights) {
    if (overlaps.size() != heights.size())
        throw std::invalid_argument("PolyominoCode: row lengths differ");
    PolyominoCode code;
    for (size_t k = 0; k < overlaps.size(); ++k)
        code.columns.emplace_back(overlaps[k], heights[k]);
    return code;
}

std::vector<PolyominoStats> enumerate_polyominoes(int max_width, int max_area) {
    if (max_width <= 0 || max_area <= 0)
        throw std::domain_error("enumerate_polyominoes: bounds must be positive");
    std::vector<PolyominoStats> out;
    PolyominoCode code;
    // prev_i constrains the next column height: prev_i <= j.
    std::function<void(int, int)> rec = [&](int prev_i, int area_left) {
        const int w = code.width();
        for (int j = std::max(prev_i, 1); j <= area_left; ++j) {
            // close with this column: i = 1
            code.columns.emplace_back(1, j);
            out.push_back({code, w + 1, code.height(), code.area()});
            code.columns.pop_back();
            if (w + 1 == max_width) continue;
            for (int i = 1; i <= j; ++i) {
                if (area_left - j < i) continue;  // no room for a next column of height >= i
                code.columns.emplace_back(i, j);
                rec(i, area_left - j);
                code.columns.pop_back();
            }
        }
    };
    rec(1, max_area);
    std::sort(out.begin(), out.end(), [](const PolyominoStats& a, const PolyominoStats& b) {
        return a.code.columns < b.code.columns;
    });
    return out;
}

std::vector<Segment> segment_alphabet(int max_j) {
    std::vector<Segment> out;
    for (int i = 1; i <= max_j; ++i)
        for (int j = i; j <= max_j; ++j) out.push_back({i, j});
    return out;
}

Relation segment_relation(int max_j) {
    const auto segs = segment_alphabet(max_j);
    const int m = static_cast<int>(segs.size());
    Relation r(m, false);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) r.set(a, b, segs[a].lo <= segs[b].hi);
    return r;
}

namespace {

// Specialization a_{ij} -> x y^{j-i} q^j.
MultiPoly segment_weight(const Segment& s, const Truncation& cap) {
    Monomial m = kUnitMonomial;
    m[static_cast<int>(Var::x)] = 1;
    m[static_cast<int>(Var::y)] = s.hi - s.lo;
    m[static_cast<int>(Var::q)] = s.hi;
    return MultiPoly::monomial(m, 1, cap);
}

// Alternating sum over strictly separated chains (i_k > j_{k+1}, the
// theta-bar relation): sum_m (-1)^{m-1} Lambda_m(theta-bar), specialized.
// `ending` restricts to chains whose last segment has lo == 1.
MultiPoly trivial_heap_kernel(int max_j, int max_area, const Truncation& cap, bool ending) {
    MultiPoly out = MultiPoly::zero(cap);
    const auto segs = segment_alphabet(max_j);
    std::vector<Segment> chain;
    std::function<void(MultiPoly, int)> rec = [&](MultiPoly weight, int area_used) {
        if (!chain.empty()) {
            if (!ending || chain.back().lo == 1) {
                const int sign = chain.size() % 2 == 1 ? 1 : -1;
                out += weight * Rational(sign);
            }
        }
        for (const Segment& s : segs) {
            if (!chain.empty() && !(chain.back().lo > s.hi)) continue;
            if (area_used + s.hi > max_area) continue;
            chain.push_back(s);
            rec(weight * segment_weight(s, cap), area_used + s.hi);
            chain.pop_back();
        }
    };
    rec(MultiPoly::one(cap), 0);
    return out;
}

}  // namespace

MultiPoly polyomino_series(int max_width, int max_area, int max_j) {
    if (max_j < max_area)
        throw std::domain_error(
            "polyomino_series: max_j must reach max_area to certify the window");
    const Truncation cap = Truncation::cap(Var::x, max_width)
                               .with(Var::q, max_area)
                               .with(Var::y, max_area);
    const MultiPoly g = trivial_heap_kernel(max_j, max_area, cap, false);
    const MultiPoly gp = trivial_heap_kernel(max_j, max_area, cap, true);
    const MultiPoly inv = geometric_inverse(MultiPoly::one(cap) - g);
    return MultiPoly::one(cap) + inv * gp;
}

std::set<HeapWord> heap_class(const HeapWord& w, int max_len) {
    if (static_cast<int>(w.size()) > max_len)
        throw std::domain_error("heap_class: word exceeds the configured length bound");
    std::set<HeapWord> seen{w};
    std::vector<HeapWord> queue{w};
    while (!queue.empty()) {
        HeapWord u = queue.back();
        queue.pop_back();
        for (size_t k = 0; k + 1 < u.size(); ++k) {
            if (!u[k].disjoint(u[k + 1])) continue;
            std::swap(u[k], u[k + 1]);
            if (seen.insert(u).second) queue.push_back(u);
            std::swap(u[k], u[k + 1]);
        }
    }
    return seen;
}

namespace {

bool staircase_form(const HeapWord& w) {
    for (size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k].lo > w[k + 1].hi) return false;
    return true;
}

}  // namespace

HeapWord heap_normal_form(const HeapWord& w, int max_len) {
    const auto cls = heap_class(w, max_len);
    const HeapWord* found = nullptr;
    for (const auto& u : cls) {
        if (!staircase_form(u)) continue;
        if (found)
            throw VerificationError("heap_normal_form: several representatives for " +
                                    heap_word_string(w));
        found = &u;
    }
    if (!found)
        throw VerificationError("heap_normal_form: no representative for " +
                                heap_word_string(w));
    return *found;
}

bool heap_uniqueness_check(int n, int max_j) {
    const auto segs = segment_alphabet(max_j);
    const int m = static_cast<int>(segs.size());
    std::set<HeapWord> visited;
    bool ok = true;
    HeapWord w(n);
    std::function<void(int)> rec = [&](int pos) {
        if (!ok) return;
        if (pos == n) {
            if (visited.count(w)) return;
            const auto cls = heap_class(w, n);
            int reps = 0;
            for (const auto& u : cls) {
                visited.insert(u);
                if (staircase_form(u)) ++reps;
            }
            if (reps != 1) ok = false;
            return;
        }
        for (int a = 0; a < m; ++a) {
            w[pos] = segs[a];
            rec(pos + 1);
        }
    };
    rec(0);
    return ok;
}

bool cartier_foata_check(int n, int max_j) {
    const Relation th = segment_relation(max_j);
    if (!koszul_check(n, th)) return false;
    // Lambda_n(theta-bar) must consist exactly of the trivial heaps:
    // strictly decreasing sequences of pairwise disjoint segments.
    const auto segs = segment_alphabet(max_j);
    const WordPoly lam = theta_complete(n, th);
    for (const auto& [word, c] : lam.terms()) {
        for (size_t a = 0; a < word.size(); ++a) {
            for (size_t b = a + 1; b < word.size(); ++b) {
                const Segment &sa = segs[word[a]], &sb = segs[word[b]];
                if (!sa.disjoint(sb) || !(sa.lo > sb.hi)) return false;
            }
        }
    }
    return true;
}

std::string heap_word_string(const HeapWord& w) {
    std::ostringstream os;
    os << '[';
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) os << ' ';
        os << '(' << w[k].lo << ',' << w[k].hi << ')';
    }
    os << ']';
    return os.str();
}

}  // namespace ncsf
