#pragma once

#include <vector>

#include "ncsf/errors.hpp"
#include "ncsf/nsym.hpp"
#include "ncsf/tensor.hpp"

namespace ncsf {

// Scalar specializations of Sym: the exponential alphabet (S_n |-> v^n/n!),
// the q-alphabet 1/(1-q) (S_n |-> 1/(q)_n), and finite geometric chains
// 1, v, ..., v^{m-1}. Plus the enumerative oracles these specializations are
// checked against: classical Bessel coefficients, pair-of-permutation counts,
// and the Fedou-Rawlings double series.

struct ChainAlphabet {
    int m = 0;           // number of letters
    Var var = Var::q;    // letter k carries var^k

    MultiPoly value(int letter) const { return MultiPoly::variable(var, letter); }
};

// Algebra morphism S_n |-> var^n / n!.
MultiPoly spec_exponential(const NsymElement& f, Var var = Var::x);

// Algebra morphism S_n |-> 1/(q)_n, truncated at q^qtrunc.
MultiPoly spec_q(const NsymElement& f, int qtrunc);

// Commutative evaluation on the chain: R_I goes to the sum, over all words
// w in {0..m-1}^n whose strict-descent set is exactly Des(I), of the product
// of letter values. Equivalently the image of the word realization of R_I,
// so that S^I evaluates to a product of complete homogeneous sums.
MultiPoly spec_chain(const NsymElement& f, const ChainAlphabet& a);

// h_k and e_k of the chain values (exact polynomials in a.var).
MultiPoly chain_complete(const ChainAlphabet& a, int k);
MultiPoly chain_elementary(const ChainAlphabet& a, int k);
// h_k of the values var^lo, ..., var^hi.
MultiPoly range_complete(Var var, int lo, int hi, int k);

// Taylor series of J_nu(2x): sum_m (-1)^m x^{2m+nu} / (m! (m+nu)!), kept
// through x^order.
MultiPoly classical_bessel(int nu, int order);
// The same series obtained by specializing both tensor sides of bessel_J
// exponentially in x.
MultiPoly classical_bessel_via_tensor(int nu, int order);

struct CsvA {
    Int brute = 0;        // pairs (sigma,tau) with Des(sigma) subset Des(tau)
    Int descent_sum = 0;  // sum over D subset E of beta(D) beta(E)
    Int series = 0;       // (n!)^2 [t^n] 1/J_0(2 sqrt t)
    bool agree() const { return brute == descent_sum && brute == series; }
};
CsvA csv_a(int n, int bound = 7);

struct CsvC {
    Int brute = 0;   // pairs with Des(alpha) subset Des(beta), beta(n) = n
    Int series = 0;  // (n-1)! n! [x^{2n-1}] of J_0^{-1} J_{-1} specialized
    bool agree() const { return brute == series; }
};
CsvC csv_c(int n, int bound = 7);

// --- Fedou-Rawlings double generating series -------------------------------
//
// First series: for alphabets A_i = (1,q,...,q^i), B_j = (1,p,...,p^j),
//   [z^n] (1 - sum_{m>=1} z^m (t-1)^{m-1} e_m(A_i) h_m(B_j))^{-1}
//     = sum_{i'<=i, j'<=j} h_{i-i'}(1..q^n) h_{j-j'}(1..p^n)
//                          [x^{i'} y^{j'}] StatSum_n,
// with StatSum_n the five-parameter sum over pairs of permutations of
//   t^{desris} x^{des(alpha^{-1})} y^{des(beta^{-1})} q^{coimaj(alpha)}
//   p^{coimaj(beta)}.
//
// Second series (beta(n) = n): the closed form carries the extra factor
//   sum_{m>=1} z^m (t-1)^{m-1} e_m(A_i) h_{m-1}(B_j) p^j
// and the B-side Pochhammer shifts to values p^1..p^n.

enum class FrSide { formula, statistic };

// Dispatcher over the four assembled sides; series is 1 or 2.
MultiPoly fr_series_side(FrSide side, int series, int i, int j, int n);

MultiPoly fr_first_formula(int i, int j, int n);
MultiPoly fr_first_statistic(int i, int j, int n);
MultiPoly fr_second_formula(int i, int j, int n);
// variant "shifted" uses values p^1..p^n (the reading that holds); variant
// "plain" uses p^0..p^{n-1} (kept for the reported comparison).
MultiPoly fr_second_statistic(int i, int j, int n, bool shifted = true);

// Five-parameter statistic sum over pairs of S_n; second = restrict to
// beta(n) = n.
MultiPoly fr_stat_sum(int n, bool second);

struct FrCheck {
    bool first_ok = true;
    bool second_ok = true;          // shifted Pochhammer reading
    bool second_plain_ok = true;    // literal reading, reported for comparison
};
// Verifies both series coefficientwise for all i <= maxi, j <= maxj at the
// given degree. q/p truncations guard the window: the formula sides need
// q,p-degrees up to n*maxi resp. n*maxj; smaller truncations throw.
FrCheck fr_check(int maxi, int maxj, int n, int qtrunc, int ptrunc);

}  // namespace ncsf
