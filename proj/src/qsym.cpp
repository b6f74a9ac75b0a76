#include "ncsf/qsym.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace ncsf {

char qbasis_char(QBasis b) { return b == QBasis::M ? 'M' : 'F'; }

QBasis parse_qbasis(const std::string& s) {
    if (s == "M" || s == "m") return QBasis::M;
    if (s == "F" || s == "f") return QBasis::F;
    throw std::invalid_argument("unknown QSym basis: '" + s + "'");
}

QsymElement QsymElement::term(QBasis b, const Composition& I, const MultiPoly& c) {
    QsymElement f(b);
    f.add_term(I, c);
    return f;
}

MultiPoly QsymElement::coeff(const Composition& I) const {
    auto it = terms_.find(I);
    return it == terms_.end() ? MultiPoly() : it->second;
}

void QsymElement::add_term(const Composition& I, const MultiPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(I, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QsymElement& QsymElement::operator+=(const QsymElement& o) {
    const QsymElement& rhs = o.basis_ == basis_ ? o : convert_q(o, basis_);
    for (const auto& [I, c] : rhs.terms_) add_term(I, c);
    return *this;
}

QsymElement& QsymElement::operator-=(const QsymElement& o) {
    const QsymElement& rhs = o.basis_ == basis_ ? o : convert_q(o, basis_);
    for (const auto& [I, c] : rhs.terms_) add_term(I, -c);
    return *this;
}

QsymElement QsymElement::operator*(const MultiPoly& c) const {
    QsymElement out(basis_);
    for (const auto& [I, a] : terms_) out.add_term(I, a * c);
    return out;
}

bool QsymElement::operator==(const QsymElement& o) const {
    if (basis_ == o.basis_) return terms_ == o.terms_;
    return terms_ == convert_q(o, basis_).terms_;
}

std::string QsymElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [I, c] : terms_)
        append_rendered_term(out, c,
                             std::string(1, qbasis_char(basis_)) + '[' + I.to_string() + ']');
    return out;
}

namespace {

// Visit all supersets of `mask` inside {0,...,full}.
template <typename Fn>
void for_each_supermask(std::uint32_t mask, std::uint32_t full, Fn fn) {
    const std::uint32_t free_bits = full & ~mask;
    std::uint32_t sub = free_bits;
    while (true) {
        fn(mask | sub);
        if (sub == 0) break;
        sub = (sub - 1) & free_bits;
    }
}

}  // namespace

QsymElement convert_q(const QsymElement& f, QBasis target) {
    if (f.basis() == target) return f;
    QsymElement out(target);
    for (const auto& [I, c] : f.terms()) {
        const int n = I.degree();
        const std::uint32_t full = n >= 1 ? (1u << (n - 1)) - 1u : 0u;
        const std::uint32_t des = I.descent_mask();
        if (f.basis() == QBasis::F) {
            // F_I = sum over refinements of M_J
            for_each_supermask(des, full, [&](std::uint32_t j) {
                out.add_term(Composition::from_descent_mask(j, n), c);
            });
        } else {
            // M_I = sum over refinements of (-1)^{|Des J| - |Des I|} F_J
            for_each_supermask(des, full, [&](std::uint32_t j) {
                const int sign = (std::popcount(j & ~des) % 2 == 0) ? 1 : -1;
                out.add_term(Composition::from_descent_mask(j, n), c * Rational(sign));
            });
        }
    }
    return out;
}

QsymElement internal_product(const QsymElement& f, const QsymElement& g, DescentOp mode) {
    const QsymElement a = convert_q(f, QBasis::F);
    const QsymElement b = convert_q(g, QBasis::F);
    QsymElement out(QBasis::F);
    for (const auto& [H, ch] : a.terms()) {
        for (const auto& [K, ck] : b.terms()) {
            if (H.degree() != K.degree()) continue;  // cross-degree terms vanish
            out.add_term(descent_op(H, K, mode), ch * ck);
        }
    }
    return convert_q(out, f.basis());
}

QsymElement concat_product(const QsymElement& f, const QsymElement& g) {
    const QsymElement a = convert_q(f, QBasis::F);
    const QsymElement b = convert_q(g, QBasis::F);
    QsymElement out(QBasis::F);
    for (const auto& [I, ci] : a.terms())
        for (const auto& [J, cj] : b.terms()) out.add_term(concat(I, J), ci * cj);
    return convert_q(out, f.basis());
}

MultiPoly pairing(const NsymElement& f, const QsymElement& g) {
    const NsymElement a = convert(f, Basis::R);
    const QsymElement b = convert_q(g, QBasis::F);
    MultiPoly out;
    for (const auto& [I, c] : a.terms()) {
        auto it = b.terms().find(I);
        if (it != b.terms().end()) out += c * it->second;
    }
    return out;
}

}  // namespace ncsf
