#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ncsf/rational.hpp"

namespace ncsf {

// Compositions of n and their descent sets. A composition is interchangeable
// with the pair (n, Des) where Des is a subset of {1,...,n-1}, stored here as
// a bitmask (bit i-1 set <=> i is a descent). The empty composition is the
// unique composition of 0.
//
// Canonical order everywhere: degree first, then descent mask read as a
// binary number, ascending. All emitted tables follow it.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    // Parts are the gaps of the sorted sequence 0 < d_1 < ... < d_k < n.
    static Composition from_descent_mask(std::uint32_t mask, int n);
    static Composition from_descents(const std::vector<int>& descents, int n);

    const std::vector<int>& parts() const { return parts_; }
    int degree() const { return degree_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    std::uint32_t descent_mask() const;
    std::vector<int> descents() const;
    int maj() const;  // sum of descent positions

    Composition complement() const;  // Des -> {1..n-1} \ Des
    Composition conjugate() const;   // Des(I~) = { n-d : d not in Des(I) }
    Composition reversed() const;    // parts in reverse order

    std::string to_string() const;  // "2,1"; the empty composition renders as ""
    static Composition parse(const std::string& s);

    friend bool operator==(const Composition&, const Composition&) = default;
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
        if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
        return a.descent_mask() <=> b.descent_mask();
    }

private:
    std::vector<int> parts_;
    int degree_ = 0;
};

enum class DescentOp { meet, join, diff };

// Composition whose descent set is Des(H) op Des(K); degrees must agree.
Composition descent_op(const Composition& h, const Composition& k, DescentOp op);

Composition concat(const Composition& a, const Composition& b);
// a |> b: the last part of a merged with the first part of b.
Composition near_concat(const Composition& a, const Composition& b);

// All compositions of n in canonical order.
std::vector<Composition> compositions_of(int n);

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }  // 1-based
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    std::uint32_t descent_mask() const;  // { i : sigma(i) > sigma(i+1) }
    Composition descent_composition() const;
    int coimaj() const;  // sum over d in Des(sigma^{-1}) of (n - d)

    // Visits all of S_n in lexicographic order.
    static void for_each(int n, const std::function<void(const Permutation&)>& fn);

private:
    std::vector<int> images_;
};

// Descent composition of a word over an ordered alphabet (strict descents).
Composition descent_composition(const std::vector<int>& word);

// beta_I = #{ sigma : descent composition of sigma is I }.
// Inclusion-exclusion over descent subsets; exact.
Int ribbon_number(const Composition& I);
// Independent oracle: direct enumeration of S_n (intended for n <= 8).
Int ribbon_number_brute(const Composition& I);
// n! / (i_1! ... i_r!) = #{ sigma : Des(sigma) subset of Des(I) }.
Int descent_class_multinomial(const Composition& I);

}  // namespace ncsf
