#include "ncsf/specialize.hpp"

#include <bit>
#include <stdexcept>

#include "ncsf/theta.hpp"

namespace ncsf {

MultiPoly spec_exponential(const NsymElement& f, Var var) {
    const NsymElement s = convert(f, Basis::S);
    MultiPoly out;
    for (const auto& [I, c] : s.terms()) {
        Rational w = 1;
        for (int part : I.parts()) w /= Rational(factorial(part));
        out += c * MultiPoly::variable(var, I.degree()) * w;
    }
    return out;
}

MultiPoly spec_q(const NsymElement& f, int qtrunc) {
    const Truncation cap = Truncation::cap(Var::q, qtrunc);
    const NsymElement s = convert(f, Basis::S);
    std::vector<MultiPoly> inv_poch;  // 1/(q)_m
    MultiPoly out = MultiPoly::zero(cap);
    for (const auto& [I, c] : s.terms()) {
        MultiPoly term = c.with_truncation(cap);
        for (int part : I.parts()) {
            while (static_cast<int>(inv_poch.size()) <= part)
                inv_poch.push_back(geometric_inverse(
                    qpochhammer(static_cast<int>(inv_poch.size())).with_truncation(cap)));
            term *= inv_poch[part];
        }
        out += term;
    }
    return out;
}

MultiPoly spec_chain(const NsymElement& f, const ChainAlphabet& a) {
    const NsymElement r = convert(f, Basis::R);
    MultiPoly out;
    for (const auto& [I, c] : r.terms()) {
        const int n = I.degree();
        if (n == 0) {
            out += c;
            continue;
        }
        if (a.m == 0) continue;
        const std::uint32_t des = I.descent_mask();
        MultiPoly sum;
        for_each_word(a.m, n, [&](const Word& w) {
            std::uint32_t mask = 0;
            int total = 0;
            for (size_t i = 0; i < w.size(); ++i) {
                if (i + 1 < w.size() && w[i] > w[i + 1]) mask |= 1u << i;
                total += w[i];
            }
            if (mask == des) sum += MultiPoly::variable(a.var, total);
        });
        out += c * sum;
    }
    return out;
}

MultiPoly range_complete(Var var, int lo, int hi, int k) {
    // h_k over the letters var^lo..var^hi. Adding a letter v turns h into
    // h + v*h', with h' the updated lower row, so sweep d upward.
    if (k == 0) return MultiPoly::one();
    if (lo > hi) return MultiPoly();
    std::vector<MultiPoly> h(k + 1);
    h[0] = MultiPoly::one();
    for (int e = lo; e <= hi; ++e) {
        const MultiPoly v = MultiPoly::variable(var, e);
        for (int d = 1; d <= k; ++d) h[d] += v * h[d - 1];
    }
    return h[k];
}

MultiPoly chain_complete(const ChainAlphabet& a, int k) {
    if (k == 0) return MultiPoly::one();
    if (a.m == 0) return MultiPoly();
    return range_complete(a.var, 0, a.m - 1, k);
}

MultiPoly chain_elementary(const ChainAlphabet& a, int k) {
    if (k == 0) return MultiPoly::one();
    if (k > a.m) return MultiPoly();
    std::vector<MultiPoly> e(k + 1);
    e[0] = MultiPoly::one();
    for (int letter = 0; letter < a.m; ++letter) {
        const MultiPoly v = a.value(letter);
        for (int d = std::min(k, letter + 1); d >= 1; --d) e[d] += v * e[d - 1];
    }
    return e[k];
}

MultiPoly classical_bessel(int nu, int order) {
    MultiPoly out;
    for (int m = 0; 2 * m + nu <= order; ++m) {
        const Rational c(1, factorial(m) * factorial(m + nu));
        out += MultiPoly::variable(Var::x, 2 * m + nu) * Rational(m % 2 == 0 ? c : -c);
    }
    return out;
}

MultiPoly classical_bessel_via_tensor(int nu, int order) {
    const TensorElement J = bessel_J(nu, order);  // m <= order keeps x^{2m-nu} well past order
    MultiPoly out;
    for (const auto& [k, c] : J.terms()) {
        const int deg = k.first.degree() + k.second.degree();
        if (deg > order) continue;
        const MultiPoly left =
            spec_exponential(NsymElement::term(Basis::R, k.first), Var::x);
        const MultiPoly right =
            spec_exponential(NsymElement::term(Basis::R, k.second), Var::x);
        out += c * left * right;
    }
    // The tensor series specializes to J_{-nu}(2x); the classical index is
    // restored by (-1)^nu, the normalization the J^{(i,j)} notation uses.
    return nu % 2 == 0 ? out : -out;
}

CsvA csv_a(int n, int bound) {
    if (n > bound) throw std::domain_error("csv_a: n beyond the configured oracle bound");
    CsvA out;

    std::vector<std::uint32_t> masks;
    Permutation::for_each(n, [&](const Permutation& s) { masks.push_back(s.descent_mask()); });
    for (std::uint32_t a : masks)
        for (std::uint32_t b : masks)
            if ((a & ~b) == 0) ++out.brute;

    for (const Composition& D : compositions_of(n)) {
        const Int bd = ribbon_number(D);
        const std::uint32_t dm = D.descent_mask();
        for (const Composition& E : compositions_of(n)) {
            if ((dm & ~E.descent_mask()) == 0) out.descent_sum += bd * ribbon_number(E);
        }
    }

    // 1/J_0(2 sqrt t) = (sum_m (-1)^m t^m/(m!)^2)^{-1}
    const Truncation cap = Truncation::cap(Var::t, n);
    MultiPoly f = MultiPoly::zero(cap);
    for (int m = 0; m <= n; ++m)
        f += MultiPoly::variable(Var::t, m, cap) *
             Rational(m % 2 == 0 ? 1 : -1, factorial(m) * factorial(m));
    const Rational coeff = geometric_inverse(f).coeff_of(Var::t, n).constant_term();
    const Rational scaled = coeff * Rational(factorial(n) * factorial(n));
    if (denominator(scaled) != 1)
        throw VerificationError("csv_a: series coefficient is not an integer");
    out.series = numerator(scaled);
    return out;
}

CsvC csv_c(int n, int bound) {
    if (n < 1) throw std::domain_error("csv_c: n must be positive");
    if (n > bound) throw std::domain_error("csv_c: n beyond the configured oracle bound");
    CsvC out;

    std::vector<std::uint32_t> masks_all, masks_fixed;
    Permutation::for_each(n, [&](const Permutation& s) {
        masks_all.push_back(s.descent_mask());
        if (s(n) == n) masks_fixed.push_back(s.descent_mask());
    });
    for (std::uint32_t a : masks_all)
        for (std::uint32_t b : masks_fixed)
            if ((a & ~b) == 0) ++out.brute;

    // J_0^{-1} J_{-1} via tensor inversion, specialized exponentially.
    const TensorElement inv = tensor_invert(bessel_J(0, n), n, n);
    const TensorElement prod = inv * bessel_J(-1, n);
    MultiPoly series;
    for (const auto& [k, c] : prod.terms()) {
        if (k.first.degree() != n || k.second.degree() != n - 1) continue;
        series += c * spec_exponential(NsymElement::term(Basis::R, k.first), Var::x) *
                  spec_exponential(NsymElement::term(Basis::R, k.second), Var::x);
    }
    const Rational coeff = series.coeff_of(Var::x, 2 * n - 1).constant_term();
    const Rational scaled = coeff * Rational(factorial(n) * factorial(n - 1));
    if (denominator(scaled) != 1)
        throw VerificationError("csv_c: series coefficient is not an integer");
    out.series = numerator(scaled);
    return out;
}

namespace {

MultiPoly t_minus_one_pow(int k) {
    const MultiPoly tm1 = MultiPoly::variable(Var::t) - MultiPoly::one();
    MultiPoly out = MultiPoly::one();
    for (int i = 0; i < k; ++i) out *= tm1;
    return out;
}

// (1 - sum_{m=1..n} z^m (t-1)^{m-1} e_m(A_i) h_m(B_j))^{-1}, z-truncated at n.
MultiPoly fr_ratio(int i, int j, int n) {
    const Truncation cap = Truncation::cap(Var::z, n);
    const ChainAlphabet A{i + 1, Var::q}, B{j + 1, Var::p};
    MultiPoly f = MultiPoly::one(cap);
    for (int m = 1; m <= n; ++m) {
        const MultiPoly em = chain_elementary(A, m);
        if (em.is_zero()) break;  // m exceeds the alphabet size
        f -= MultiPoly::variable(Var::z, m, cap) * t_minus_one_pow(m - 1) * em *
             chain_complete(B, m);
    }
    return geometric_inverse(f);
}

}  // namespace

MultiPoly fr_stat_sum(int n, bool second) {
    std::vector<std::uint32_t> des, des_inv;
    std::vector<int> coim;
    std::vector<bool> fixes_n;
    Permutation::for_each(n, [&](const Permutation& s) {
        des.push_back(s.descent_mask());
        des_inv.push_back(s.inverse().descent_mask());
        coim.push_back(s.coimaj());
        fixes_n.push_back(n == 0 || s(n) == n);
    });
    MultiPoly out;
    for (size_t a = 0; a < des.size(); ++a) {
        for (size_t b = 0; b < des.size(); ++b) {
            if (second && !fixes_n[b]) continue;
            Monomial m = kUnitMonomial;
            m[static_cast<int>(Var::t)] = std::popcount(des[a] & ~des[b]);
            m[static_cast<int>(Var::x)] = std::popcount(des_inv[a]);
            m[static_cast<int>(Var::y)] = std::popcount(des_inv[b]);
            m[static_cast<int>(Var::q)] = coim[a];
            m[static_cast<int>(Var::p)] = coim[b];
            out += MultiPoly::monomial(m, 1);
        }
    }
    return out;
}

MultiPoly fr_first_formula(int i, int j, int n) {
    return fr_ratio(i, j, n).coeff_of(Var::z, n);
}

MultiPoly fr_first_statistic(int i, int j, int n) {
    // 1/(x;q)_{n+1} and 1/(y;p)_{n+1}: values q^0..q^n and p^0..p^n.
    MultiPoly out;
    const MultiPoly stat = fr_stat_sum(n, false);
    for (int i2 = 0; i2 <= i; ++i2)
        for (int j2 = 0; j2 <= j; ++j2) {
            const MultiPoly c = stat.coeff_of(Var::x, i2).coeff_of(Var::y, j2);
            if (c.is_zero()) continue;
            out += c * range_complete(Var::q, 0, n, i - i2) *
                   range_complete(Var::p, 0, n, j - j2);
        }
    return out;
}

MultiPoly fr_second_formula(int i, int j, int n) {
    const ChainAlphabet A{i + 1, Var::q}, B{j + 1, Var::p};
    const Truncation cap = Truncation::cap(Var::z, n);
    MultiPoly numer = MultiPoly::zero(cap);
    for (int m = 1; m <= n; ++m) {
        const MultiPoly em = chain_elementary(A, m);
        if (em.is_zero()) break;
        numer += MultiPoly::variable(Var::z, m, cap) * t_minus_one_pow(m - 1) * em *
                 chain_complete(B, m - 1);
    }
    numer *= MultiPoly::variable(Var::p, j);  // the re-appended top letter of B_j
    return (fr_ratio(i, j, n) * numer).coeff_of(Var::z, n);
}

MultiPoly fr_second_statistic(int i, int j, int n, bool shifted) {
    const MultiPoly stat = fr_stat_sum(n, true);
    MultiPoly out;
    for (int i2 = 0; i2 <= i; ++i2)
        for (int j2 = 0; j2 <= j; ++j2) {
            const MultiPoly c = stat.coeff_of(Var::x, i2).coeff_of(Var::y, j2);
            if (c.is_zero()) continue;
            const MultiPoly pside = shifted ? range_complete(Var::p, 1, n, j - j2)
                                            : range_complete(Var::p, 0, n - 1, j - j2);
            out += c * range_complete(Var::q, 0, n, i - i2) * pside;
        }
    return out;
}

MultiPoly fr_series_side(FrSide side, int series, int i, int j, int n) {
    if (series != 1 && series != 2)
        throw std::domain_error("fr_series_side: series must be 1 or 2");
    if (side == FrSide::formula)
        return series == 1 ? fr_first_formula(i, j, n) : fr_second_formula(i, j, n);
    return series == 1 ? fr_first_statistic(i, j, n) : fr_second_statistic(i, j, n);
}

FrCheck fr_check(int maxi, int maxj, int n, int qtrunc, int ptrunc) {
    // The formula sides reach q-degree n*maxi and p-degree n*maxj; refuse
    // windows that would silently truncate the comparison.
    if (qtrunc < n * maxi || ptrunc < n * maxj)
        throw std::domain_error("fr_check: q/p truncation below the certified window");
    const Truncation cap =
        Truncation::cap(Var::q, qtrunc).with(Var::p, ptrunc);

    FrCheck out;
    for (int i = 0; i <= maxi; ++i) {
        for (int j = 0; j <= maxj; ++j) {
            const MultiPoly f1 = fr_first_formula(i, j, n).with_truncation(cap);
            const MultiPoly s1 = fr_first_statistic(i, j, n).with_truncation(cap);
            if (!(f1 == s1)) out.first_ok = false;
            if (n >= 1) {
                const MultiPoly f2 = fr_second_formula(i, j, n).with_truncation(cap);
                if (!(f2 == fr_second_statistic(i, j, n, true).with_truncation(cap)))
                    out.second_ok = false;
                if (!(f2 == fr_second_statistic(i, j, n, false).with_truncation(cap)))
                    out.second_plain_ok = false;
            }
        }
    }
    return out;
}

}  // namespace ncsf
