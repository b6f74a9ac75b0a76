#pragma once

#include <map>
#include <string>

#include "ncsf/composition.hpp"
#include "ncsf/multipoly.hpp"

namespace ncsf {

// Noncommutative symmetric functions in the complete (S^I), elementary
// (Lambda^I) and ribbon (R_I) bases, with MultiPoly coefficients. Elements are
// sparse maps keyed by Composition in canonical order; degrees may be mixed.
//
// Conversion relations:
//   S^I      = sum over Des(J) subset Des(I) of R_J
//   R_I      = sum over Des(J) subset Des(I) of (-1)^{|Des(I)\Des(J)|} S^J
//   S_n      = sum over J of n of (-1)^{n-l(J)} Lambda^J, and symmetrically.

enum class Basis { S, L, R };

char basis_char(Basis b);
Basis parse_basis(const std::string& s);

class NsymElement {
public:
    NsymElement() : basis_(Basis::S) {}
    explicit NsymElement(Basis b) : basis_(b) {}

    static NsymElement zero(Basis b) { return NsymElement(b); }
    static NsymElement unit(Basis b, const MultiPoly& c = MultiPoly::one());
    // The basis element with index I (S^I, Lambda^I or R_I).
    static NsymElement term(Basis b, const Composition& I,
                            const MultiPoly& c = MultiPoly::one());

    Basis basis() const { return basis_; }
    const std::map<Composition, MultiPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    MultiPoly coeff(const Composition& I) const;
    int max_degree() const;
    // Terms of the given degree only.
    NsymElement component(int degree) const;

    void add_term(const Composition& I, const MultiPoly& c);

    NsymElement& operator+=(const NsymElement& o);  // converts o if bases differ
    NsymElement& operator-=(const NsymElement& o);
    friend NsymElement operator+(NsymElement a, const NsymElement& b) { return a += b; }
    friend NsymElement operator-(NsymElement a, const NsymElement& b) { return a -= b; }
    NsymElement operator*(const NsymElement& o) const;
    NsymElement operator*(const MultiPoly& c) const;
    NsymElement operator-() const;

    bool operator==(const NsymElement& o) const;  // compares in a common basis

    std::string to_string() const;  // "R[2,1] + 3/2*R[3]", canonical order

private:
    Basis basis_;
    std::map<Composition, MultiPoly> terms_;
};

NsymElement convert(const NsymElement& f, Basis target);

// The anti-automorphism determined by omega(S_n) = Lambda_n; reverses products
// of generators. Satisfies omega(R_I) = R_{conjugate(I)}.
NsymElement omega(const NsymElement& f);

// The right derivation: S^{(i_1,...,i_r)} |-> S^{(i_1,...,i_r - 1)}, a part
// reaching 0 is deleted. On ribbons: decrement the last part, or kill the term
// when the last part is 1.
NsymElement partial_right(const NsymElement& f);

// Graded series f with truncation order N (components 0..N retained).
struct NsymSeries {
    NsymElement elem;
    int order = 0;

    NsymSeries() = default;
    NsymSeries(NsymElement e, int n);

    NsymSeries operator*(const NsymSeries& o) const;
};

// Graded inverse up to the truncation order. Requires an invertible scalar
// constant term; throws std::domain_error otherwise.
NsymSeries series_invert(const NsymSeries& f);

// sum_{k=0..n} t^k S_k resp. Lambda_k with unit coefficients (sigma_1 and
// lambda_1 truncated); handy building blocks for tests and the CLI.
NsymSeries sigma_series(int order);
NsymSeries lambda_series(int order, bool alternating = false);

}  // namespace ncsf
