#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ncsf/multipoly.hpp"

namespace ncsf {

using Word = std::vector<int>;  // letter ids 0..m-1

std::string word_string(const Word& w);  // "[2 0 1]"; the empty word is "[]"

// An arbitrary binary relation theta on an alphabet of m letters;
// rel[a][b] <=> a theta b.
class Relation {
public:
    Relation() = default;
    Relation(int m, bool value);
    static Relation greater(int m);   // a > b
    static Relation geq(int m);       // a >= b
    static Relation equal(int m);     // a == b
    static Relation random(int m, std::uint64_t seed);
    static Relation from_matrix(const std::vector<std::vector<bool>>& rows);

    int size() const { return m_; }
    bool operator()(int a, int b) const { return rel_[a * m_ + b]; }
    void set(int a, int b, bool v) { rel_[a * m_ + b] = v; }
    Relation complement() const;

    // True when every adjacent pair of w is related.
    bool chain(const Word& w) const;
    // { i : w_i theta w_{i+1} } as a bitmask (bit i-1 for position i).
    std::uint32_t adjacency_mask(const Word& w) const;
    int adjacency_count(const Word& w) const;
    int theta_maj(const Word& w) const;  // sum of adjacency positions

private:
    int m_ = 0;
    std::vector<bool> rel_;
};

// Noncommutative polynomials over a finite alphabet: maps word -> MultiPoly
// under the concatenation product, with an optional maximum word length that
// acts like a truncation order.
class WordPoly {
public:
    static constexpr int kUnbounded = std::numeric_limits<int>::max();

    WordPoly() = default;
    explicit WordPoly(int max_len) : max_len_(max_len) {}

    static WordPoly zero(int max_len = kUnbounded) { return WordPoly(max_len); }
    static WordPoly unit(const MultiPoly& c = MultiPoly::one(), int max_len = kUnbounded);
    static WordPoly term(const Word& w, const MultiPoly& c = MultiPoly::one(),
                         int max_len = kUnbounded);

    const std::map<Word, MultiPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_len() const { return max_len_; }
    MultiPoly coeff(const Word& w) const;
    WordPoly length_component(int len) const;

    void add_term(const Word& w, const MultiPoly& c);

    WordPoly& operator+=(const WordPoly& o);
    WordPoly& operator-=(const WordPoly& o);
    friend WordPoly operator+(WordPoly a, const WordPoly& b) { return a += b; }
    friend WordPoly operator-(WordPoly a, const WordPoly& b) { return a -= b; }
    WordPoly operator*(const WordPoly& o) const;  // concatenation, truncated
    WordPoly operator*(const MultiPoly& c) const;

    friend bool operator==(const WordPoly& a, const WordPoly& b) {
        return a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    std::map<Word, MultiPoly> terms_;
    int max_len_ = kUnbounded;
};

// w d_c = u if w = uc, else 0, extended linearly.
WordPoly partial_letter(const WordPoly& f, int c);
// sum_{c in C} d_c . c : the projection onto words ending with a letter of C.
WordPoly ending_projection(const WordPoly& f, const std::vector<int>& letters);

// Inverse of a series with invertible scalar constant term, up to max_len.
WordPoly word_invert(const WordPoly& f, int max_len);

// Specialize each word to a commutative monomial: the image of the algebra
// morphism sending letter a to value(a).
MultiPoly word_specialize(const WordPoly& f,
                          const std::function<MultiPoly(int)>& value);

}  // namespace ncsf
