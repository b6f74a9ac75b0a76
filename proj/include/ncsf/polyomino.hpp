#pragma once

#include <set>
#include <vector>

#include "ncsf/errors.hpp"
#include "ncsf/multipoly.hpp"
#include "ncsf/word.hpp"

namespace ncsf {

// Parallelogram polyominoes encoded as biwords of columns (i_k, j_k):
// j_k is the height of column k and i_k the overlap with column k+1, with
// i_k <= j_{k+1} for k < n (adjacency) and i_n = 1 (ending). Heaps of
// segments provide the generating-series route; direct geometric enumeration
// is the oracle.

struct Segment {
    int lo = 1, hi = 1;  // the interval [lo, hi], lo <= hi

    friend bool operator==(const Segment&, const Segment&) = default;
    friend auto operator<=>(const Segment&, const Segment&) = default;
    bool disjoint(const Segment& o) const { return hi < o.lo || o.hi < lo; }
};

using HeapWord = std::vector<Segment>;

struct PolyominoCode {
    std::vector<std::pair<int, int>> columns;  // (i_k, j_k)

    int width() const { return static_cast<int>(columns.size()); }
    int area() const;
    // Number of distinct rows of the cell-set reconstruction (columns placed
    // by overlap counts); independent of the exponent bookkeeping.
    int height() const;
    std::vector<std::pair<int, int>> cells() const;  // (column, row), rows from 1

    bool valid() const;          // letters, adjacency and ending conditions
    std::string biword() const;  // two-row form "[2 1 / 2 3]"
    static PolyominoCode parse_biword(const std::string& s);
    static PolyominoCode from_rows(const std::vector<int>& overlaps,
                                   const std::vector<int>& heights);

    friend bool operator==(const PolyominoCode&, const PolyominoCode&) = default;
};

struct PolyominoStats {
    PolyominoCode code;
    int width = 0, height = 0, area = 0;
};

// All parallelogram polyominoes with width <= max_width and area <= max_area,
// in lexicographic column order.
std::vector<PolyominoStats> enumerate_polyominoes(int max_width, int max_area);

// The width/height/area generating series from the heap construction:
// invert the alternating trivial-heap series over the segment alphabet
// (theta-bar: i_k > j_{k+1}), restrict to words ending at a segment with
// i = 1, and specialize a_{ij} -> x y^{j-i} q^j. The empty polyomino
// contributes 1. Requires max_j >= max_area (column heights above max_j
// would fall outside the certified window).
MultiPoly polyomino_series(int max_width, int max_area, int max_j);

// Segment alphabet {a_{ij} : 1 <= i <= j <= max_j} with the heap relation
// a_{ij} theta a_{kl} <=> i <= l; letters ordered lexicographically.
std::vector<Segment> segment_alphabet(int max_j);
Relation segment_relation(int max_j);

// The full commutation class of w (disjoint adjacent segments may swap).
std::set<HeapWord> heap_class(const HeapWord& w, int max_len = 6);
// The unique class member with i_k <= j_{k+1} for all adjacent pairs.
// Throws VerificationError when zero or several members qualify.
HeapWord heap_normal_form(const HeapWord& w, int max_len = 6);

// Checks that every commutation class of length-n segment words has exactly
// one representative satisfying the adjacency condition.
bool heap_uniqueness_check(int n, int max_j);

// Cartier-Foata specialization: the alternating convolution
// sum_k (-1)^k Lambda_k(theta) Lambda_{n-k}(theta-bar) vanishes over the
// segment alphabet, and Lambda_n(theta-bar) is exactly the set of strictly
// decreasing sequences of pairwise disjoint segments (the trivial heaps).
bool cartier_foata_check(int n, int max_j);

std::string heap_word_string(const HeapWord& w);

}  // namespace ncsf
