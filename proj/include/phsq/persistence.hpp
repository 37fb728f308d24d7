#pragma once

#include <limits>
#include <span>

#include "phsq/cochain_columns.hpp"

namespace phsq {

inline constexpr index_t minus_infinity = std::numeric_limits<index_t>::min();

// Half-open stage interval (left, right]; left may be minus_infinity. A stage
// s belongs to the interval iff left < s <= right.
struct extended_interval {
    index_t left;
    index_t right;

    bool contains(index_t stage) const { return left < stage && stage <= right; }
    bool contains_window(index_t i, index_t j) const { return left < i && j <= right; }

    friend bool operator==(const extended_interval& a, const extended_interval& b) {
        return a.left == b.left && a.right == b.right;
    }
    friend bool operator<(const extended_interval& a, const extended_interval& b) {
        return a.left != b.left ? a.left < b.left : a.right < b.right;
    }
};

std::ostream& operator<<(std::ostream& os, const extended_interval& iv);

// Cocycle representative paired with its extended interval. The rows of rep
// are the filtration stages of X; its support is homogeneous of the stated
// degree. Restricted to any stage inside the interval the representative is a
// nonzero cocycle of the prefix complex representing the bar's class.
struct graded_triple {
    f2_column rep;
    int degree;
    extended_interval interval;
    bool essential;  // class of the final complex (interval reaches stage n)
};

struct bar {
    int degree;
    extended_interval interval;
    std::size_t count;
};

// Per-degree multiset of extended intervals, sorted by (degree, left, right).
class barcode {
public:
    barcode() = default;

    void add(int degree, const extended_interval& iv);
    void finalize();  // sort and merge multiplicities

    std::span<const bar> bars() const { return bars_; }
    std::size_t count_containing(int degree, index_t i, index_t j) const;

private:
    std::vector<bar> bars_;
};

// The coboundary incidence matrix in reversed coordinates: entry (r, c) is 1
// iff the simplex at stage n+1-c is a facet of the simplex at stage n+1-r.
// Strictly upper triangular for any valid filtration.
f2_matrix build_antitransposed_coboundary(const filtered_complex& x);

struct phcol_result {
    f2_matrix r;
    f2_matrix v;
};

// Column reduction: returns R reduced (nonzero columns have distinct pivots)
// and V unit upper triangular with R = M * V exactly. Pivot collisions are
// resolved left to right, adding the earlier column into the later one, so
// the output is deterministic.
phcol_result phcol(f2_matrix m);

// Reads the reduced pair off into graded triples, converting the matrix
// (reversed) coordinates back to filtration stages.
std::vector<graded_triple> extract_triples(const phcol_result& rv, const filtered_complex& x);

// build + phcol + extract in one step.
std::vector<graded_triple> persistence_triples(const filtered_complex& x);

barcode barcode_of(std::span<const graded_triple> z);

// Rank of the restriction map H^d(X_j) -> H^d(X_i), computed directly by
// elimination with no reduction data; the independent oracle pinning the
// barcode semantics.
std::size_t restriction_rank_oracle(const filtered_complex& x, int d, index_t i, index_t j);

}  // namespace phsq
