#include "ncsf/nsym.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace ncsf {

char basis_char(Basis b) {
    switch (b) {
        case Basis::S: return 'S';
        case Basis::L: return 'L';
        case Basis::R: return 'R';
    }
    return '?';
}

Basis parse_basis(const std::string& s) {
    if (s == "S" || s == "s") return Basis::S;
    if (s == "L" || s == "l" || s == "Lambda" || s == "lambda") return Basis::L;
    if (s == "R" || s == "r") return Basis::R;
    throw std::invalid_argument("unknown basis: '" + s + "'");
}

NsymElement NsymElement::unit(Basis b, const MultiPoly& c) {
    return term(b, Composition(), c);
}

NsymElement NsymElement::term(Basis b, const Composition& I, const MultiPoly& c) {
    NsymElement f(b);
    f.add_term(I, c);
    return f;
}

MultiPoly NsymElement::coeff(const Composition& I) const {
    auto it = terms_.find(I);
    return it == terms_.end() ? MultiPoly() : it->second;
}

int NsymElement::max_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

NsymElement NsymElement::component(int degree) const {
    NsymElement out(basis_);
    for (const auto& [I, c] : terms_)
        if (I.degree() == degree) out.add_term(I, c);
    return out;
}

void NsymElement::add_term(const Composition& I, const MultiPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(I, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NsymElement& NsymElement::operator+=(const NsymElement& o) {
    const NsymElement& rhs = o.basis_ == basis_ ? o : convert(o, basis_);
    for (const auto& [I, c] : rhs.terms_) add_term(I, c);
    return *this;
}

NsymElement& NsymElement::operator-=(const NsymElement& o) {
    const NsymElement& rhs = o.basis_ == basis_ ? o : convert(o, basis_);
    for (const auto& [I, c] : rhs.terms_) add_term(I, -c);
    return *this;
}

NsymElement NsymElement::operator*(const NsymElement& o) const {
    const NsymElement rhs = o.basis_ == basis_ ? o : convert(o, basis_);
    NsymElement out(basis_);
    for (const auto& [I, a] : terms_) {
        for (const auto& [J, b] : rhs.terms_) {
            const MultiPoly c = a * b;
            if (I.empty() || J.empty()) {
                out.add_term(I.empty() ? J : I, c);
                continue;
            }
            switch (basis_) {
                case Basis::S:
                case Basis::L:
                    out.add_term(concat(I, J), c);
                    break;
                case Basis::R:
                    // R_I R_J = R_{I.J} + R_{I |> J}
                    out.add_term(concat(I, J), c);
                    out.add_term(near_concat(I, J), c);
                    break;
            }
        }
    }
    return out;
}

NsymElement NsymElement::operator*(const MultiPoly& c) const {
    NsymElement out(basis_);
    for (const auto& [I, a] : terms_) out.add_term(I, a * c);
    return out;
}

NsymElement NsymElement::operator-() const {
    NsymElement out(basis_);
    for (const auto& [I, c] : terms_) out.add_term(I, -c);
    return out;
}

bool NsymElement::operator==(const NsymElement& o) const {
    if (basis_ == o.basis_) return terms_ == o.terms_;
    return terms_ == convert(o, basis_).terms_;
}

std::string NsymElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [I, c] : terms_)
        append_rendered_term(out, c, std::string(1, basis_char(basis_)) + '[' + I.to_string() + ']');
    return out;
}

namespace {

// S^I in the ribbon basis: all descent subsets.
void s_term_to_r(const Composition& I, const MultiPoly& c, NsymElement& out) {
    const std::uint32_t des = I.descent_mask();
    const int n = I.degree();
    std::uint32_t sub = des;
    while (true) {
        out.add_term(Composition::from_descent_mask(sub, n), c);
        if (sub == 0) break;
        sub = (sub - 1) & des;
    }
}

// R_I in the S basis: inclusion-exclusion over descent subsets.
void r_term_to_s(const Composition& I, const MultiPoly& c, NsymElement& out) {
    const std::uint32_t des = I.descent_mask();
    const int n = I.degree();
    std::uint32_t sub = des;
    while (true) {
        const int sign = (std::popcount(des & ~sub) % 2 == 0) ? 1 : -1;
        out.add_term(Composition::from_descent_mask(sub, n), c * Rational(sign));
        if (sub == 0) break;
        sub = (sub - 1) & des;
    }
}

// One generator of degree n expanded in the opposite multiplicative basis:
// S_n = sum_{J of n} (-1)^{n-l(J)} Lambda^J and symmetrically. Returned as a
// bare element in the target basis.
NsymElement generator_flip(int n, Basis target) {
    NsymElement out(target);
    for (const Composition& J : compositions_of(n)) {
        const int sign = ((n - J.length()) % 2 == 0) ? 1 : -1;
        out.add_term(J, MultiPoly::constant(sign));
    }
    return out;
}

// Expand a product basis element (S^I or Lambda^I) into the other product
// basis by flipping each generator and concatenating.
NsymElement product_basis_flip(const Composition& I, const MultiPoly& c, Basis target) {
    NsymElement acc = NsymElement::unit(target, c);
    for (int part : I.parts()) acc = acc * generator_flip(part, target);
    return acc;
}

}  // namespace

NsymElement convert(const NsymElement& f, Basis target) {
    if (f.basis() == target) return f;
    NsymElement out(target);
    for (const auto& [I, c] : f.terms()) {
        switch (f.basis()) {
            case Basis::S:
                if (target == Basis::R) {
                    s_term_to_r(I, c, out);
                } else {
                    out += product_basis_flip(I, c, Basis::L);
                }
                break;
            case Basis::L:
                if (target == Basis::S) {
                    out += product_basis_flip(I, c, Basis::S);
                } else {
                    NsymElement s = product_basis_flip(I, c, Basis::S);
                    for (const auto& [J, d] : s.terms()) s_term_to_r(J, d, out);
                }
                break;
            case Basis::R:
                if (target == Basis::S) {
                    r_term_to_s(I, c, out);
                } else {
                    NsymElement s(Basis::S);
                    r_term_to_s(I, c, s);
                    out += convert(s, Basis::L);
                }
                break;
        }
    }
    return out;
}

NsymElement omega(const NsymElement& f) {
    // omega(S^{i_1...i_r}) = Lambda_{i_r} ... Lambda_{i_1}
    const NsymElement s = convert(f, Basis::S);
    NsymElement out(Basis::L);
    for (const auto& [I, c] : s.terms()) out.add_term(I.reversed(), c);
    return convert(out, f.basis());
}

NsymElement partial_right(const NsymElement& f) {
    NsymElement out(f.basis());
    switch (f.basis()) {
        case Basis::S:
            for (const auto& [I, c] : f.terms()) {
                if (I.empty()) continue;
                std::vector<int> p = I.parts();
                if (--p.back() == 0) p.pop_back();
                out.add_term(Composition(std::move(p)), c);
            }
            return out;
        case Basis::R:
            for (const auto& [I, c] : f.terms()) {
                if (I.empty()) continue;
                if (I.parts().back() == 1) {
                    // A final part 1 kills the ribbon, except R_{(1)} d = 1:
                    // the extension forced by S^{(1)} d = S^{()} and the
                    // Leibniz rule.
                    if (I.length() == 1) out.add_term(Composition(), c);
                    continue;
                }
                std::vector<int> p = I.parts();
                --p.back();
                out.add_term(Composition(std::move(p)), c);
            }
            return out;
        case Basis::L:
            return convert(partial_right(convert(f, Basis::S)), Basis::L);
    }
    return out;
}

NsymSeries::NsymSeries(NsymElement e, int n) : order(n) {
    elem = NsymElement(e.basis());
    for (const auto& [I, c] : e.terms())
        if (I.degree() <= n) elem.add_term(I, c);
}

NsymSeries NsymSeries::operator*(const NsymSeries& o) const {
    const int n = std::min(order, o.order);
    return NsymSeries(elem * o.elem, n);
}

NsymSeries series_invert(const NsymSeries& f) {
    const MultiPoly c0 = f.elem.coeff(Composition());
    if (c0.is_zero() || !c0.is_constant())
        throw std::domain_error("series_invert: constant term is not an invertible scalar");
    const Rational c = c0.constant_term();
    const Rational cinv = Rational(denominator(c), numerator(c));

    // g_0 = 1/c ; g_n = -(1/c) * sum_{k=1..n} f_k g_{n-k}
    std::vector<NsymElement> fk(f.order + 1, NsymElement::zero(f.elem.basis()));
    for (const auto& [I, coef] : f.elem.terms()) fk[I.degree()].add_term(I, coef);

    std::vector<NsymElement> gk(f.order + 1, NsymElement::zero(f.elem.basis()));
    gk[0] = NsymElement::unit(f.elem.basis(), MultiPoly::constant(cinv));
    for (int n = 1; n <= f.order; ++n) {
        NsymElement acc(f.elem.basis());
        for (int k = 1; k <= n; ++k) acc += fk[k] * gk[n - k];
        gk[n] = acc * MultiPoly::constant(-cinv);
    }
    NsymElement g(f.elem.basis());
    for (const auto& comp : gk) g += comp;
    return NsymSeries(g, f.order);
}

NsymSeries sigma_series(int order) {
    NsymElement f(Basis::S);
    for (int k = 0; k <= order; ++k)
        f.add_term(k == 0 ? Composition() : Composition({k}), MultiPoly::one());
    return NsymSeries(f, order);
}

NsymSeries lambda_series(int order, bool alternating) {
    NsymElement f(Basis::L);
    for (int k = 0; k <= order; ++k) {
        const int sign = (alternating && k % 2 == 1) ? -1 : 1;
        f.add_term(k == 0 ? Composition() : Composition({k}),
                   MultiPoly::constant(sign));
    }
    return NsymSeries(f, order);
}

}  // namespace ncsf
