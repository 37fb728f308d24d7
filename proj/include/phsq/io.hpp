#pragma once

#include <string>
#include <string_view>

#include "phsq/rank_invariant.hpp"

namespace phsq {

struct point_cloud {
    std::vector<std::vector<double>> points;  // nonempty, uniform dimension
};

struct rips_config {
    double threshold = 0;  // maximum edge diameter
    int max_dim = 1;
};

// One simplex per non-comment line as ascending whitespace-separated
// integers; '#' starts a comment; line order is the filtration order.
filtered_complex parse_complex_file(std::string_view text);

// Same line syntax; every line must name a member simplex and all lines must
// share one dimension. An empty file needs the explicit degree.
cochain parse_cochain_file(std::string_view text, const filtered_complex& x,
                           std::optional<int> degree = std::nullopt);

// One point per line, comma-separated coordinates; a non-numeric first line
// is treated as a header.
point_cloud parse_points_csv(std::string_view text);

// All simplices of dimension <= max_dim whose vertex sets have pairwise
// distance <= threshold, ordered by (diameter, dimension, lexicographic).
// Vertex i is the i-th input point, 0-based.
filtered_complex rips_filtration(const point_cloud& cloud, const rips_config& cfg);

std::string emit_complex(const filtered_complex& x);
std::string emit_cochain(const cochain& a);  // one simplex per line

std::string barcode_json(const barcode& bc);
std::string barcode_svg(const barcode& bc, index_t n);
std::string cochain_json(const cochain& a);
std::string rank_json(const rank_query& q, std::size_t rank_value);
std::string rank_table_csv(const rank_table& table);
std::string rank_table_json(const rank_table& table);

}  // namespace phsq
