#pragma once

#include <optional>
#include <vector>

#include "phsq/f2.hpp"
#include "phsq/simplicial.hpp"

namespace phsq {

// Homogeneous cochains of a complex interchange freely with columns whose
// rows are the filtration stages 1..n of X.

f2_column column_from_cochain(const filtered_complex& x, const cochain& a);

// The degree is read off the support; it must be homogeneous. A zero column
// needs the explicit degree hint.
cochain cochain_from_column(const filtered_complex& x, const f2_column& col,
                            std::optional<int> degree = std::nullopt);

// Columns delta(1_s) for the d-simplices s of X with stage <= `stage`, in
// stage order; rows above `stage` are zero, so these are the coboundary
// columns of the prefix complex X_stage embedded in length-n coordinates.
f2_matrix coboundary_columns(const filtered_complex& x, int d, index_t stage);

// Basis of the degree-d cocycles of the prefix complex X_stage.
std::vector<cochain> cocycle_basis(const filtered_complex& x, int d, index_t stage);

// Cocycle representatives of a basis of H^d(X_stage): a cocycle basis reduced
// modulo the span of the degree-(d-1) coboundaries.
std::vector<cochain> cohomology_basis(const filtered_complex& x, int d, index_t stage);

}  // namespace phsq
