#pragma once

#include "phsq/persistence.hpp"
#include "phsq/steenrod.hpp"

namespace phsq {

// Query window for rho(k, d, i, j); i may be minus_infinity, j is a finite
// stage, and i <= j.
struct rank_query {
    unsigned k;
    int d;
    index_t i;
    index_t j;
};

struct rank_table_entry {
    index_t i;
    index_t j;
    std::size_t rank;
};

// rho(k, d, i, j) over the full domain with j finite: the minus_infinity row
// first, then i = 1..n with j = i..n, each ascending.
struct rank_table {
    unsigned k = 0;
    int d = 0;
    index_t n = 0;
    std::vector<rank_table_entry> entries;

    std::size_t at(index_t i, index_t j) const;
};

// rho(k, d, i, j) from the reduced data: selects the degree-d triples whose
// interval contains the window, applies stsq to each representative, expresses
// the results over the degree-(d+k) representatives alive at stage i together
// with the stage-i coboundaries, drops the coboundary coordinates, and returns
// the rank of the assembled coefficient matrix. Returns 0 when i is
// minus_infinity. A representative square that fails to solve signals a broken
// reduction and raises internal_error(solve_failed).
std::size_t rank_inv(std::span<const graded_triple> z, const filtered_complex& x,
                     const rank_query& q);

// Direct computation with no reduction data: a cohomology basis of H^d(X_j)
// by elimination, stsq applied within X_j, the image dimension measured in
// H^{d+k}(X_i).
std::size_t rank_inv_oracle(const filtered_complex& x, const rank_query& q);

// Full-domain sweep reusing one reduction, cached stsq results per triple and
// one solve basis per stage i; stages run in parallel.
rank_table rank_inv_table(std::span<const graded_triple> z, const filtered_complex& x,
                          unsigned k, int d);
rank_table rank_inv_table(const filtered_complex& x, unsigned k, int d);

}  // namespace phsq
