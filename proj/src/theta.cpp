#include "ncsf/theta.hpp"

#include <bit>
#include <sstream>

namespace ncsf {

void for_each_word(int m, int len, const std::function<void(const Word&)>& fn) {
    Word w(len, 0);
    if (len == 0) {
        fn(w);
        return;
    }
    while (true) {
        fn(w);
        int i = len - 1;
        while (i >= 0 && w[i] == m - 1) w[i--] = 0;
        if (i < 0) return;
        ++w[i];
    }
}

namespace {

// Sum of length-n theta-chains, by DFS.
WordPoly chain_sum(int n, const Relation& th, int max_len) {
    WordPoly out(max_len);
    if (n == 0) {
        out.add_term(Word{}, MultiPoly::one());
        return out;
    }
    Word w;
    w.reserve(n);
    const int m = th.size();
    std::function<void()> rec = [&]() {
        if (static_cast<int>(w.size()) == n) {
            out.add_term(w, MultiPoly::one());
            return;
        }
        for (int a = 0; a < m; ++a) {
            if (!w.empty() && !th(w.back(), a)) continue;
            w.push_back(a);
            rec();
            w.pop_back();
        }
    };
    rec();
    return out;
}

MultiPoly t_minus_one_pow(int k) {
    const MultiPoly tm1 = MultiPoly::variable(Var::t) - MultiPoly::one();
    MultiPoly out = MultiPoly::one();
    for (int i = 0; i < k; ++i) out *= tm1;
    return out;
}

// F = sum over nonempty theta-chains w of length <= n of (t-1)^{l(w)-1} w.
WordPoly eulerian_kernel(int n, const Relation& th) {
    WordPoly f(n);
    for (int l = 1; l <= n; ++l) {
        const MultiPoly c = t_minus_one_pow(l - 1);
        const WordPoly chains = chain_sum(l, th, n);
        for (const auto& [w, one] : chains.terms()) f.add_term(w, c);
    }
    return f;
}

}  // namespace

WordPoly theta_lambda(int n, const Relation& th) { return chain_sum(n, th, n); }

WordPoly theta_complete(int n, const Relation& th) {
    return chain_sum(n, th.complement(), n);
}

WordPoly theta_ribbon(const Composition& I, const Relation& th) {
    const int n = I.degree();
    const std::uint32_t des = I.descent_mask();
    WordPoly out(n);
    for_each_word(th.size(), n, [&](const Word& w) {
        if (th.adjacency_mask(w) == des) out.add_term(w, MultiPoly::one());
    });
    return out;
}

bool koszul_check(int n, const Relation& th) {
    const Relation co = th.complement();
    WordPoly acc(n);
    for (int k = 0; k <= n; ++k) {
        const WordPoly prod = chain_sum(k, th, n) * chain_sum(n - k, co, n);
        acc += prod * MultiPoly::constant(k % 2 == 0 ? 1 : -1);
    }
    return acc.is_zero();
}

WordPoly theta_eulerian_closed_form(int n, const Relation& th) {
    const WordPoly f = eulerian_kernel(n, th);
    const WordPoly unit = WordPoly::unit(MultiPoly::one(), n);
    return word_invert(unit - f, n).length_component(n);
}

WordPoly theta_eulerian(int n, const Relation& th) {
    WordPoly enumerated(n);
    for_each_word(th.size(), n, [&](const Word& w) {
        enumerated.add_term(w, MultiPoly::variable(Var::t, th.adjacency_count(w)));
    });
    // t^0 exponents: variable(t, 0) is the constant 1
    const WordPoly closed = theta_eulerian_closed_form(n, th);
    if (!(enumerated == closed))
        throw VerificationError("theta_eulerian: enumeration differs from closed form at n=" +
                                std::to_string(n));
    return enumerated;
}

bool theta_ending_check(int n, const Relation& th, const std::vector<int>& letters) {
    WordPoly enumerated(n);
    for_each_word(th.size(), n, [&](const Word& w) {
        if (w.empty()) return;
        bool ends = false;
        for (int c : letters) ends = ends || w.back() == c;
        if (ends)
            enumerated.add_term(w, MultiPoly::variable(Var::t, th.adjacency_count(w)));
    });

    const WordPoly f = eulerian_kernel(n, th);
    const WordPoly unit = WordPoly::unit(MultiPoly::one(), n);
    const WordPoly inv = word_invert(unit - f, n);
    const WordPoly closed = (inv * ending_projection(f, letters)).length_component(n);
    return enumerated == closed;
}

WordPoly theta_maj_closed_form(int n, const Relation& th, int qtrunc) {
    const Truncation qcap = Truncation::cap(Var::q, qtrunc);
    // Ordered product of sigma_{z q^k}(A;theta) with the q-power decreasing
    // left to right, truncated at k = qtrunc + 1; the z-grading is the word
    // length, so no explicit z variable is needed. The opposite factor order
    // produces the co-major index instead of theta-maj.
    std::vector<WordPoly> s_parts(n + 1);
    for (int m = 0; m <= n; ++m) s_parts[m] = theta_complete(m, th);

    WordPoly prod = WordPoly::unit(MultiPoly::one(qcap), n);
    for (int k = qtrunc + 1; k >= 0; --k) {
        WordPoly factor(n);
        for (int m = 0; m <= n; ++m) {
            if (static_cast<long>(k) * m > qtrunc && m > 0) continue;
            const MultiPoly c = MultiPoly::variable(Var::q, k * m, qcap);
            for (const auto& [w, one] : s_parts[m].terms()) factor.add_term(w, c);
        }
        prod = prod * factor;
    }
    const MultiPoly poch = qpochhammer(n).with_truncation(qcap);
    return prod.length_component(n) * poch;
}

WordPoly theta_maj(int n, const Relation& th, int qtrunc) {
    if (qtrunc < n * (n - 1) / 2)
        throw std::domain_error("theta_maj: q-truncation below the statistic range");
    const Truncation qcap = Truncation::cap(Var::q, qtrunc);
    WordPoly enumerated(n);
    for_each_word(th.size(), n, [&](const Word& w) {
        enumerated.add_term(w, MultiPoly::variable(Var::q, th.theta_maj(w), qcap));
    });
    const WordPoly closed = theta_maj_closed_form(n, th, qtrunc);
    if (!(enumerated == closed))
        throw VerificationError("theta_maj: enumeration differs from closed form at n=" +
                                std::to_string(n));
    return enumerated;
}

Word BiAlphabet::top(const Word& w) const {
    Word u;
    u.reserve(w.size());
    for (int id : w) u.push_back(split(id).first);
    return u;
}

Word BiAlphabet::bottom(const Word& w) const {
    Word v;
    v.reserve(w.size());
    for (int id : w) v.push_back(split(id).second);
    return v;
}

Relation BiAlphabet::relation() const {
    Relation r(letters(), false);
    for (int id1 = 0; id1 < letters(); ++id1) {
        const auto [a, b] = split(id1);
        for (int id2 = 0; id2 < letters(); ++id2) {
            const auto [a2, b2] = split(id2);
            r.set(id1, id2, a > a2 && b <= b2);
        }
    }
    return r;
}

std::string BiAlphabet::biword_string(const Word& w) const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        os << split(w[i]).first;
    }
    os << " / ";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        os << split(w[i]).second;
    }
    os << ']';
    return os.str();
}

WordPoly double_eulerian(int n, const BiAlphabet& ab) {
    const Relation th = ab.relation();
    // theta-Adj([u,v]) = Des(u) \ Des(v) for every biword
    for_each_word(ab.letters(), n, [&](const Word& w) {
        if (w.size() < 2) return;
        const Word u = ab.top(w), v = ab.bottom(w);
        std::uint32_t des_u = 0, des_v = 0;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (u[i] > u[i + 1]) des_u |= 1u << i;
            if (v[i] > v[i + 1]) des_v |= 1u << i;
        }
        if (th.adjacency_mask(w) != (des_u & ~des_v))
            throw VerificationError("double_eulerian: descent identity fails on " +
                                    ab.biword_string(w));
    });
    return theta_eulerian(n, th);
}

MultiPoly double_eulerian_exponential(int n) {
    // (1-t)/(J_0((1-t)z; E, E) - t) = (1 - sum_{m>=1} z^m (t-1)^{m-1}/(m!)^2)^{-1}
    const Truncation cap = Truncation::cap(Var::z, n);
    MultiPoly f = MultiPoly::one(cap);
    for (int m = 1; m <= n; ++m) {
        const Rational w(1, factorial(m) * factorial(m));
        f -= MultiPoly::variable(Var::z, m, cap) * t_minus_one_pow(m - 1) * w;
    }
    const MultiPoly inv = geometric_inverse(f);
    return inv.coeff_of(Var::z, n) * Rational(factorial(n) * factorial(n));
}

MultiPoly desris_distribution(int n) {
    std::vector<std::uint32_t> masks;
    Permutation::for_each(n, [&](const Permutation& s) { masks.push_back(s.descent_mask()); });
    MultiPoly out;
    for (std::uint32_t a : masks)
        for (std::uint32_t b : masks)
            out += MultiPoly::variable(Var::t, std::popcount(a & ~b));
    return out;
}

}  // namespace ncsf
