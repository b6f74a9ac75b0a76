#pragma once

#include <map>
#include <string>

#include "ncsf/nsym.hpp"

namespace ncsf {

// Quasi-symmetric functions in the monomial (M_I) and fundamental (F_I)
// bases, dual to (S^I) and (R_I) respectively. Carries the two internal
// products induced by 0-Hecke tensor products, acting on F indices through
// the descent-set lattice, and the concatenation product.

enum class QBasis { M, F };

char qbasis_char(QBasis b);
QBasis parse_qbasis(const std::string& s);

class QsymElement {
public:
    QsymElement() : basis_(QBasis::F) {}
    explicit QsymElement(QBasis b) : basis_(b) {}

    static QsymElement zero(QBasis b) { return QsymElement(b); }
    static QsymElement term(QBasis b, const Composition& I,
                            const MultiPoly& c = MultiPoly::one());

    QBasis basis() const { return basis_; }
    const std::map<Composition, MultiPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    MultiPoly coeff(const Composition& I) const;

    void add_term(const Composition& I, const MultiPoly& c);

    QsymElement& operator+=(const QsymElement& o);
    QsymElement& operator-=(const QsymElement& o);
    friend QsymElement operator+(QsymElement a, const QsymElement& b) { return a += b; }
    friend QsymElement operator-(QsymElement a, const QsymElement& b) { return a -= b; }
    QsymElement operator*(const MultiPoly& c) const;

    bool operator==(const QsymElement& o) const;

    std::string to_string() const;

private:
    QBasis basis_;
    std::map<Composition, MultiPoly> terms_;
};

// Basis change by the refinement-order triangular matrices:
//   F_I = sum over Des(J) superset Des(I) of M_J, and its Moebius inverse.
QsymElement convert_q(const QsymElement& f, QBasis target);

// F_H ^ F_K = F_{H meet K} and F_H v F_K = F_{H join K} on equal degrees;
// components of different degrees multiply to zero.
QsymElement internal_product(const QsymElement& f, const QsymElement& g, DescentOp mode);

// F_I (.)_0 F_J = F_{I.J}.
QsymElement concat_product(const QsymElement& f, const QsymElement& g);

// <S^I, M_J> = delta_{I,J} = <R_I, F_J>, extended bilinearly.
MultiPoly pairing(const NsymElement& f, const QsymElement& g);

}  // namespace ncsf
