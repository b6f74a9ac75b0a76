#pragma once

#include "ncsf/composition.hpp"
#include "ncsf/errors.hpp"
#include "ncsf/word.hpp"

namespace ncsf {

// Realizations of Sym in word algebras over a finite alphabet carrying a
// binary relation theta:
//   Lambda_n(A;theta) = sum of length-n words whose adjacent letters are all
//                       theta-related,
//   S_n(A;theta)      = Lambda_n(A;complement of theta),
//   R_I(A;theta)      = sum of words whose theta-adjacency set is exactly
//                       Des(I).

WordPoly theta_lambda(int n, const Relation& th);
WordPoly theta_complete(int n, const Relation& th);
WordPoly theta_ribbon(const Composition& I, const Relation& th);

// sum_{k=0..n} (-1)^k Lambda_k(A;theta) Lambda_{n-k}(A;complement) == 0,
// evaluated word-exactly in the concatenation algebra.
bool koszul_check(int n, const Relation& th);

// Length-n component of sum_w t^{theta-adj(w)} w, computed by direct
// enumeration and by the closed form
//   (1 - sum_{theta-chains w, w nonempty} (t-1)^{l(w)-1} w)^{-1}.
// Returns the enumeration; throws VerificationError when the routes differ.
WordPoly theta_eulerian(int n, const Relation& th);
WordPoly theta_eulerian_closed_form(int n, const Relation& th);

// Restriction of the Eulerian series to words ending with a letter of C:
// enumeration against (1-F)^{-1} (F restricted to words ending in C), the
// image of the closed form under sum_{c in C} d_c . c.
bool theta_ending_check(int n, const Relation& th, const std::vector<int>& letters);

// Length-n component of sum_w q^{theta-maj(w)} w, by enumeration and by
//   (q)_n * [z^n] prod_{k>=0} sigma_{z q^k}(A;theta),
// the ordered product truncated at k = qtrunc + 1 (factors beyond contribute
// 1 + O(q^{qtrunc+1})). Requires qtrunc >= n(n-1)/2 so the certified window
// covers every enumerated statistic. Throws VerificationError on mismatch.
WordPoly theta_maj(int n, const Relation& th, int qtrunc);
WordPoly theta_maj_closed_form(int n, const Relation& th, int qtrunc);

// The product alphabet A x B with (a,b) theta (a',b') <=> a > a' and b <= b'.
struct BiAlphabet {
    int ma = 0, mb = 0;

    BiAlphabet(int a, int b) : ma(a), mb(b) {}
    int letters() const { return ma * mb; }
    int letter(int a, int b) const { return a * mb + b; }
    std::pair<int, int> split(int id) const { return {id / mb, id % mb}; }
    Word top(const Word& w) const;     // the A-row u of a biword [u,v]
    Word bottom(const Word& w) const;  // the B-row v
    Relation relation() const;

    std::string biword_string(const Word& w) const;  // "[2 1 2 / 2 3 2]"
};

// n-th double Eulerian polynomial component: biword enumeration of
// t^{theta-adj}, verified against the closed form built from the product
// relation; also checks theta-Adj([u,v]) = Des(u) \ Des(v) on every biword.
WordPoly double_eulerian(int n, const BiAlphabet& ab);

// Exponential specialization of the closed form:
// (n!)^2 [z^n] (1-t) / (J_0((1-t)z; E, E) - t), a polynomial in t.
MultiPoly double_eulerian_exponential(int n);
// Brute force: sum over pairs of permutations of t^{|Des(alpha)\Des(beta)|}.
MultiPoly desris_distribution(int n);

// Visits all words of the given length over m letters, lexicographically.
void for_each_word(int m, int len, const std::function<void(const Word&)>& fn);

}  // namespace ncsf
