#include "ncsf/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace ncsf {

TensorElement TensorElement::unit(const MultiPoly& c) {
    TensorElement f;
    f.add_term(Composition(), Composition(), c);
    return f;
}

TensorElement TensorElement::term(Basis ba, Basis bb, const Composition& I,
                                  const Composition& J, const MultiPoly& c) {
    TensorElement f(ba, bb);
    f.add_term(I, J, c);
    return f;
}

MultiPoly TensorElement::coeff(const Composition& I, const Composition& J) const {
    auto it = terms_.find({I, J});
    return it == terms_.end() ? MultiPoly() : it->second;
}

void TensorElement::add_term(const Composition& I, const Composition& J,
                             const MultiPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(Key{I, J}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement TensorElement::bicomponent(int deg_a, int deg_b) const {
    TensorElement out(basis_a_, basis_b_);
    for (const auto& [k, c] : terms_)
        if (k.first.degree() == deg_a && k.second.degree() == deg_b)
            out.add_term(k.first, k.second, c);
    return out;
}

TensorElement TensorElement::truncated(int total_cap) const {
    TensorElement out(basis_a_, basis_b_);
    for (const auto& [k, c] : terms_)
        if (k.first.degree() + k.second.degree() <= total_cap)
            out.add_term(k.first, k.second, c);
    return out;
}

int TensorElement::max_total_degree() const {
    int d = 0;
    for (const auto& [k, c] : terms_)
        d = std::max(d, k.first.degree() + k.second.degree());
    return d;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    const TensorElement rhs =
        (o.basis_a_ == basis_a_ && o.basis_b_ == basis_b_) ? o : canonicalize(o);
    if (!(rhs.basis_a_ == basis_a_ && rhs.basis_b_ == basis_b_))
        *this = canonicalize(*this);
    for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    TensorElement neg = o * MultiPoly::constant(-1);
    return *this += neg;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
    const TensorElement a = canonicalize(*this);
    const TensorElement b = canonicalize(o);
    TensorElement out;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            const MultiPoly c = ca * cb;
            // ribbon products sidewise; each side yields one or two terms
            const NsymElement left =
                NsymElement::term(Basis::R, ka.first) * NsymElement::term(Basis::R, kb.first);
            const NsymElement right =
                NsymElement::term(Basis::R, ka.second) * NsymElement::term(Basis::R, kb.second);
            for (const auto& [I, ci] : left.terms())
                for (const auto& [J, cj] : right.terms())
                    out.add_term(I, J, c * ci * cj);
        }
    }
    return out;
}

TensorElement TensorElement::operator*(const MultiPoly& c) const {
    TensorElement out(basis_a_, basis_b_);
    for (const auto& [k, v] : terms_) out.add_term(k.first, k.second, v * c);
    return out;
}

bool TensorElement::operator==(const TensorElement& o) const {
    if (basis_a_ == o.basis_a_ && basis_b_ == o.basis_b_) return terms_ == o.terms_;
    return canonicalize(*this).terms() == canonicalize(o).terms();
}

std::string TensorElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        std::string sym;
        sym += basis_char(basis_a_);
        sym += '[' + k.first.to_string() + "](x)";
        sym += basis_char(basis_b_);
        sym += '[' + k.second.to_string() + ']';
        append_rendered_term(out, c, sym);
    }
    return out;
}

TensorElement canonicalize(const TensorElement& f) {
    if (f.basis_a() == Basis::R && f.basis_b() == Basis::R) return f;
    TensorElement out;
    for (const auto& [k, c] : f.terms()) {
        const NsymElement left = convert(NsymElement::term(f.basis_a(), k.first), Basis::R);
        const NsymElement right = convert(NsymElement::term(f.basis_b(), k.second), Basis::R);
        for (const auto& [I, ci] : left.terms())
            for (const auto& [J, cj] : right.terms()) out.add_term(I, J, c * ci * cj);
    }
    return out;
}

TensorElement gamma_meet(const NsymElement& f) {
    const NsymElement r = convert(f, Basis::R);
    TensorElement out;
    for (const auto& [I, c] : r.terms()) {
        const int n = I.degree();
        const std::uint32_t des = I.descent_mask();
        const std::uint32_t count = n >= 1 ? 1u << (n - 1) : 1u;
        for (std::uint32_t h = 0; h < count; ++h) {
            for (std::uint32_t k = 0; k < count; ++k) {
                if ((h & k) != des) continue;
                out.add_term(Composition::from_descent_mask(h, n),
                             Composition::from_descent_mask(k, n), c);
            }
        }
    }
    return out;
}

TensorElement j_embed(const NsymElement& f) {
    const NsymElement lam = convert(f, Basis::L);
    TensorElement out;
    for (const auto& [I, c] : lam.terms()) {
        TensorElement acc = TensorElement::unit(c);
        for (int part : I.parts()) {
            // Lambda_k = R_{1^k}, S_k = R_{(k)}
            const Composition col = Composition(std::vector<int>(part, 1));
            const Composition row = Composition({part});
            acc = acc * TensorElement::term(Basis::R, Basis::R, col, row);
        }
        out += acc;
    }
    return out;
}

TensorElement ribbon_image(const Composition& K) {
    const int n = K.degree();
    const std::uint32_t des = K.descent_mask();
    const std::uint32_t count = n >= 1 ? 1u << (n - 1) : 1u;
    TensorElement out;
    for (std::uint32_t i = 0; i < count; ++i) {
        for (std::uint32_t j = 0; j < count; ++j) {
            if ((i & ~j) != des) continue;
            out.add_term(Composition::from_descent_mask(i, n),
                         Composition::from_descent_mask(j, n), MultiPoly::one());
        }
    }
    return out;
}

TensorElement bessel_J(int nu, int max_m) {
    TensorElement out;
    for (int m = std::max(nu, 0); m <= max_m; ++m) {
        const int k = m - nu;  // Lambda index; negative indices vanish
        if (k < 0) continue;
        const Composition col = Composition(std::vector<int>(k, 1));
        const Composition row = m == 0 ? Composition() : Composition({m});
        out.add_term(col, row, MultiPoly::constant(m % 2 == 0 ? 1 : -1));
    }
    return out;
}

TensorElement tensor_invert(const TensorElement& f, int max_a, int max_b) {
    const TensorElement a = canonicalize(f);
    const MultiPoly c0 = a.coeff(Composition(), Composition());
    if (c0.is_zero() || !c0.is_constant())
        throw std::domain_error("tensor_invert: constant term is not an invertible scalar");
    const Rational c = c0.constant_term();
    const Rational cinv = Rational(denominator(c), numerator(c));

    const int cap = max_a + max_b;
    std::vector<TensorElement> fd(cap + 1);
    for (const auto& [k, v] : a.terms()) {
        const int da = k.first.degree(), db = k.second.degree();
        if (da > max_a || db > max_b || da + db > cap) continue;
        if (da + db > 0) fd[da + db].add_term(k.first, k.second, v);
    }

    std::vector<TensorElement> gd(cap + 1);
    gd[0] = TensorElement::unit(MultiPoly::constant(cinv));
    for (int d = 1; d <= cap; ++d) {
        TensorElement acc;
        for (int e = 1; e <= d; ++e) {
            if (fd[e].is_zero() || gd[d - e].is_zero()) continue;
            acc += fd[e] * gd[d - e];
        }
        TensorElement bounded;
        for (const auto& [k, v] : acc.terms())
            if (k.first.degree() <= max_a && k.second.degree() <= max_b)
                bounded.add_term(k.first, k.second, v * (-cinv));
        gd[d] = bounded;
    }
    TensorElement out;
    for (const auto& comp : gd) out += comp;
    return out;
}

TensorElement apply_second(const TensorElement& f, SecondOp op) {
    const TensorElement a = canonicalize(f);
    TensorElement out;
    for (const auto& [k, c] : a.terms()) {
        const NsymElement rhs = NsymElement::term(Basis::R, k.second);
        const NsymElement img =
            op == SecondOp::omega ? omega(rhs) : partial_right(rhs);
        for (const auto& [J, cj] : img.terms()) out.add_term(k.first, J, c * cj);
    }
    return out;
}

MultiPoly tensor_pairing(const TensorElement& f, const QsymElement& g,
                         const QsymElement& h) {
    const TensorElement a = canonicalize(f);
    const QsymElement gf = convert_q(g, QBasis::F);
    const QsymElement hf = convert_q(h, QBasis::F);
    MultiPoly out;
    for (const auto& [k, c] : a.terms()) {
        auto ig = gf.terms().find(k.first);
        if (ig == gf.terms().end()) continue;
        auto ih = hf.terms().find(k.second);
        if (ih == hf.terms().end()) continue;
        out += c * ig->second * ih->second;
    }
    return out;
}

}  // namespace ncsf
