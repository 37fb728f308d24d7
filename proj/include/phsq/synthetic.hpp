#pragma once

#include <random>

#include "phsq/simplicial.hpp"

namespace phsq {

// Canonical complexes in closure order (all faces before cofaces, dimensions
// ascending, lexicographic within a dimension).

// Six-vertex triangulation of the real projective plane; 31 simplices.
filtered_complex rp2_complex();

// The degree-1 cocycle {14, 15, 23, 24, 35} generating H^1 of rp2_complex().
cochain rp2_cocycle();

// Seven-vertex triangulation of the torus: the full 1-skeleton of K7 plus the
// 14 triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7; 42 simplices.
filtered_complex torus7_complex();

// Circle with m vertices and m edges, all vertices first.
filtered_complex circle_complex(int m);

// Boundary of the full simplex on (dim + 2) vertices: a triangulated
// dim-sphere.
filtered_complex sphere_boundary_complex(int dim);

// Random valid simplexwise filtration with at most max_simplices simplices of
// dimension at most max_dim, grown by repeatedly closing random cofaces.
filtered_complex random_filtered_complex(std::mt19937& rng, std::size_t max_simplices,
                                         int max_dim, int n_vertices);

// Uniformly random degree-d cochain (not necessarily a cocycle).
cochain random_cochain(std::mt19937& rng, const filtered_complex& x, int d);

// Random element of the degree-d cocycle space, possibly empty.
cochain random_cocycle(std::mt19937& rng, const filtered_complex& x, int d);

// Coboundary of a random degree-(d-1) cochain.
cochain random_coboundary(std::mt19937& rng, const filtered_complex& x, int d);

}  // namespace phsq
