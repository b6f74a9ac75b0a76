#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <string>

#include "ncsf/rational.hpp"

namespace ncsf {

// Truncated multivariate polynomials in the fixed variable set {t,q,p,x,y,z}
// with exact rational coefficients. Truncation bounds are part of the value:
// arithmetic drops any term whose exponent exceeds a bound, so a MultiPoly is
// an element of the corresponding quotient ring and equality is well defined
// inside the declared window.

inline constexpr int kNumVars = 6;

enum class Var : int { t = 0, q = 1, p = 2, x = 3, y = 4, z = 5 };

inline constexpr std::array<char, kNumVars> kVarNames = {'t', 'q', 'p', 'x', 'y', 'z'};

using Monomial = std::array<int, kNumVars>;

inline constexpr Monomial kUnitMonomial = {0, 0, 0, 0, 0, 0};

struct Truncation {
    static constexpr int kUnbounded = std::numeric_limits<int>::max();

    std::array<int, kNumVars> bound{kUnbounded, kUnbounded, kUnbounded,
                                    kUnbounded, kUnbounded, kUnbounded};

    static Truncation none() { return {}; }
    static Truncation cap(Var v, int b) {
        Truncation t;
        t.bound[static_cast<int>(v)] = b;
        return t;
    }
    Truncation& with(Var v, int b) {
        bound[static_cast<int>(v)] = b;
        return *this;
    }
    int at(Var v) const { return bound[static_cast<int>(v)]; }
    bool bounded(Var v) const { return at(v) != kUnbounded; }

    // Pointwise minimum: the window both operands certify.
    Truncation merged(const Truncation& o) const {
        Truncation t;
        for (int i = 0; i < kNumVars; ++i) t.bound[i] = std::min(bound[i], o.bound[i]);
        return t;
    }
    bool admits(const Monomial& m) const {
        for (int i = 0; i < kNumVars; ++i)
            if (m[i] > bound[i]) return false;
        return true;
    }
    friend bool operator==(const Truncation&, const Truncation&) = default;
};

class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(Truncation t) : trunc_(t) {}

    static MultiPoly zero(Truncation t = Truncation::none()) { return MultiPoly(t); }
    static MultiPoly constant(const Rational& c, Truncation t = Truncation::none());
    static MultiPoly one(Truncation t = Truncation::none()) { return constant(1, t); }
    static MultiPoly variable(Var v, int exp = 1, Truncation t = Truncation::none());
    static MultiPoly monomial(const Monomial& m, const Rational& c,
                              Truncation t = Truncation::none());

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coeff(const Monomial& m) const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    const Truncation& truncation() const { return trunc_; }

    // Re-truncates: terms outside the new window are dropped.
    MultiPoly with_truncation(const Truncation& t) const;
    // Coefficient of v^k, as a polynomial in the remaining variables.
    MultiPoly coeff_of(Var v, int k) const;
    int max_degree(Var v) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    MultiPoly operator-() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }

    // Sorted monomial sum, exponent-lex order over (t,q,p,x,y,z): "1 - q^2 + 3/2*t*q".
    std::string to_string() const;
    static std::string monomial_string(const Monomial& m);

private:
    void insert(const Monomial& m, const Rational& c);

    std::map<Monomial, Rational> terms_;
    Truncation trunc_;
};

// Appends "coeff*symbol" to a sum under construction, folding the sign of
// constant coefficients into the separator and dropping unit coefficients.
void append_rendered_term(std::string& out, const MultiPoly& c, const std::string& symbol);

// Multiplicative inverse up to truncation, by geometric-series expansion.
// Requires a nonzero constant term, and every non-constant monomial must carry
// a positive exponent on some truncated variable (otherwise the expansion
// cannot terminate). Throws std::domain_error when not invertible.
MultiPoly geometric_inverse(const MultiPoly& f);

// (v;v)_n = (1-v)(1-v^2)...(1-v^n), exact.
MultiPoly qpochhammer(int n, Var v = Var::q);

// Pochhammer with an offset base: prod_{k=0}^{n-1} (1 - base*step^k) where
// base and step are monomials in the given variables, e.g. (x;q)_n.
MultiPoly pochhammer(Var base, Var step, int n, Truncation t = Truncation::none());

}  // namespace ncsf
