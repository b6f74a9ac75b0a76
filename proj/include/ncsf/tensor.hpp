#pragma once

#include <map>
#include <string>
#include <utility>

#include "ncsf/nsym.hpp"
#include "ncsf/qsym.hpp"

namespace ncsf {

// The bigraded tensor algebra Sym(A) (x) Sym(B): sparse maps keyed by pairs
// of compositions, with a basis tag per side. Multiplication is sidewise,
// (F (x) G)(F' (x) G') = FF' (x) GG'. Operations that mix terms canonicalize
// to the ribbon basis on both sides first.

class TensorElement {
public:
    TensorElement() : basis_a_(Basis::R), basis_b_(Basis::R) {}
    TensorElement(Basis a, Basis b) : basis_a_(a), basis_b_(b) {}

    using Key = std::pair<Composition, Composition>;

    static TensorElement unit(const MultiPoly& c = MultiPoly::one());
    static TensorElement term(Basis ba, Basis bb, const Composition& I,
                              const Composition& J, const MultiPoly& c = MultiPoly::one());

    Basis basis_a() const { return basis_a_; }
    Basis basis_b() const { return basis_b_; }
    const std::map<Key, MultiPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    MultiPoly coeff(const Composition& I, const Composition& J) const;

    void add_term(const Composition& I, const Composition& J, const MultiPoly& c);

    // Terms with the exact bidegree (deg_a, deg_b).
    TensorElement bicomponent(int deg_a, int deg_b) const;
    // Terms with total degree <= cap.
    TensorElement truncated(int total_cap) const;
    int max_total_degree() const;

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    TensorElement operator*(const TensorElement& o) const;  // ribbon basis, sidewise
    TensorElement operator*(const MultiPoly& c) const;

    bool operator==(const TensorElement& o) const;

    std::string to_string() const;  // "R[2](x)R[1,1] + ..."

private:
    Basis basis_a_, basis_b_;
    std::map<Key, MultiPoly> terms_;
};

// Both sides converted to the ribbon basis.
TensorElement canonicalize(const TensorElement& f);

// gamma_meet R_I = sum over pairs (H, K) with Des(H) cap Des(K) = Des(I)
// of R_H (x) R_K, extended linearly. The coproduct dual to the internal
// product ^ on QSym.
TensorElement gamma_meet(const NsymElement& f);

// The algebra embedding determined by Lambda_n |-> Lambda_n(A) (x) S_n(B).
TensorElement j_embed(const NsymElement& f);

// sum over pairs (I, J) of |K| with Des(I) \ Des(J) = Des(K) of R_I (x) R_J.
// Must agree with j_embed(R_K).
TensorElement ribbon_image(const Composition& K);

// J_nu = sum_{m >= max(nu,0)} (-1)^m Lambda_{m-nu}(A) (x) S_m(B), terms kept
// for m <= max_m. Returned in ribbon form.
TensorElement bessel_J(int nu, int max_m);

// Graded inverse by total bidegree; per-side degrees capped at (max_a, max_b).
// Requires an invertible scalar constant term.
TensorElement tensor_invert(const TensorElement& f, int max_a, int max_b);

enum class SecondOp { omega, partial };

// Applies omega or the right derivation to the B side of every term.
TensorElement apply_second(const TensorElement& f, SecondOp op);

// <f, g (x) h> with both pairings taken sidewise.
MultiPoly tensor_pairing(const TensorElement& f, const QsymElement& g, const QsymElement& h);

}  // namespace ncsf
