#pragma once

#include <map>

#include "phsq/cochain_columns.hpp"

namespace phsq {

// Partition of a vertex subset u of a simplex c by the parity of
// position(v, u) + position(v, c): u_minus holds the odd vertices, u_plus the
// even ones.
struct index_partition {
    std::vector<vertex_t> u_minus;
    std::vector<vertex_t> u_plus;
};

index_partition partition_by_index(const simplex& u, const simplex& c);

// Representative of Sq^k at cochain level. For a degree-d input the result
// has degree d+k and is empty whenever k > d. The pair enumeration runs in
// parallel for large supports.
cochain stsq(unsigned k, const cochain& s, const filtered_complex& x);

// Plain-loop reference implementation kept for testing and benchmarks.
cochain stsq_serial(unsigned k, const cochain& s, const filtered_complex& x);

// Direct evaluation of the cup-(d-k) square: the coefficient at each
// (d+k)-simplex c is the sum over all u in c with |u| = 2k of
// s(c \ u_minus) * s(c \ u_plus). Independent brute-force oracle for stsq.
cochain cup_square_oracle(unsigned k, const cochain& s, const filtered_complex& x);

// Alexander-Whitney front/back cup product.
cochain cup_product(const cochain& a, const cochain& b, const filtered_complex& x);

bool is_cocycle(const cochain& a, const filtered_complex& x);

// Lazily echelonized coboundary spans of one complex; reuse one instance when
// many class-level comparisons run against the same complex. Not thread-safe.
class coboundary_cache {
public:
    explicit coboundary_cache(const filtered_complex& x) : x_(&x) {}

    const filtered_complex& complex() const { return *x_; }
    // Span of the degree-(d-1) coboundaries, as degree-d columns.
    const f2_solver& solver_into_degree(int d);

private:
    const filtered_complex* x_;
    std::map<int, f2_solver> solvers_;
};

// True iff the cocycles a and b differ by a coboundary.
bool cohomologous(const cochain& a, const cochain& b, const filtered_complex& x);
bool cohomologous(const cochain& a, const cochain& b, coboundary_cache& cache);

namespace detail {

// Acceptance test for one unordered support pair {a, b}: the pair adds one to
// the coefficient of a-union-b iff the union is a (d+k)-simplex of x and the
// index function is constant on a\b and on b\a with distinct values. On
// acceptance *union_out receives the union.
bool stsq_pair_contributes(const simplex& a, const simplex& b, unsigned k,
                           const filtered_complex& x, simplex* union_out);

// The raw pair enumeration without the k > d shortcut; used to confirm that
// the k = d+1 case comes out empty rather than assuming it.
cochain stsq_enumerate(unsigned k, const cochain& s, const filtered_complex& x);

}  // namespace detail

}  // namespace phsq
