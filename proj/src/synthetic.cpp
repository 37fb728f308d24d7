#include "phsq/synthetic.hpp"

#include <algorithm>
#include <set>

#include "phsq/cochain_columns.hpp"

namespace phsq {

namespace {

// all faces of the given top cells, dimensions ascending, lexicographic
filtered_complex closure_of(const std::vector<std::vector<vertex_t>>& top_cells) {
    std::set<std::vector<vertex_t>> faces;
    for (const auto& cell : top_cells) {
        const std::size_t m = cell.size();
        for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
            std::vector<vertex_t> f;
            for (std::size_t b = 0; b < m; ++b)
                if (mask & (std::size_t(1) << b)) f.push_back(cell[b]);
            faces.insert(std::move(f));
        }
    }
    std::vector<std::vector<vertex_t>> ordered(faces.begin(), faces.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<simplex> simplices;
    simplices.reserve(ordered.size());
    for (auto& f : ordered) simplices.push_back(simplex(std::move(f)));
    return filtered_complex::build(std::move(simplices));
}

}  // namespace

filtered_complex rp2_complex() {
    return closure_of({{1, 2, 4},
                       {1, 2, 6},
                       {1, 3, 5},
                       {1, 3, 6},
                       {1, 4, 5},
                       {2, 3, 4},
                       {2, 3, 5},
                       {2, 5, 6},
                       {3, 4, 6},
                       {4, 5, 6}});
}

cochain rp2_cocycle() {
    return cochain(1, {{1, 4}, {1, 5}, {2, 3}, {2, 4}, {3, 5}});
}

filtered_complex torus7_complex() {
    std::vector<std::vector<vertex_t>> triangles;
    for (int i = 0; i < 7; ++i) {
        std::vector<vertex_t> a = {static_cast<vertex_t>(i), static_cast<vertex_t>((i + 1) % 7),
                                   static_cast<vertex_t>((i + 3) % 7)};
        std::vector<vertex_t> b = {static_cast<vertex_t>(i), static_cast<vertex_t>((i + 2) % 7),
                                   static_cast<vertex_t>((i + 3) % 7)};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        triangles.push_back(a);
        triangles.push_back(b);
    }
    return closure_of(triangles);
}

filtered_complex circle_complex(int m) {
    std::vector<simplex> simplices;
    for (int v = 1; v <= m; ++v) simplices.push_back(simplex({v}));
    for (int v = 1; v < m; ++v) simplices.push_back(simplex({v, v + 1}));
    simplices.push_back(simplex({1, m}));
    return filtered_complex::build(std::move(simplices));
}

filtered_complex sphere_boundary_complex(int dim) {
    std::vector<std::vector<vertex_t>> facets;
    const int n_verts = dim + 2;
    for (int skip = 0; skip < n_verts; ++skip) {
        std::vector<vertex_t> f;
        for (int v = 1; v <= n_verts; ++v)
            if (v != skip + 1) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return closure_of(facets);
}

filtered_complex random_filtered_complex(std::mt19937& rng, std::size_t max_simplices,
                                         int max_dim, int n_vertices) {
    std::vector<simplex> order;
    std::set<std::vector<vertex_t>> present;
    auto push = [&](std::vector<vertex_t> verts) {
        if (present.count(verts)) return;
        present.insert(verts);
        order.push_back(simplex(std::move(verts)));
    };

    std::uniform_int_distribution<int> vert(1, n_vertices);
    push({vert(rng)});
    std::size_t attempts = 4 * max_simplices + 64;
    while (order.size() < max_simplices && attempts-- > 0) {
        if (std::uniform_real_distribution<double>(0, 1)(rng) < 0.2) {
            push({vert(rng)});
            continue;
        }
        const simplex& base = order[std::uniform_int_distribution<std::size_t>(
            0, order.size() - 1)(rng)];
        if (base.dimension() >= max_dim) continue;
        vertex_t v = vert(rng);
        if (base.contains(v)) continue;
        auto bv = base.vertices();
        std::vector<vertex_t> cand(bv.begin(), bv.end());
        cand.insert(std::upper_bound(cand.begin(), cand.end(), v), v);
        if (present.count(cand)) continue;
        // close the candidate: its missing proper faces first, small to large
        std::vector<std::vector<vertex_t>> missing;
        const std::size_t m = cand.size();
        for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << m); ++mask) {
            std::vector<vertex_t> f;
            for (std::size_t b = 0; b < m; ++b)
                if (mask & (std::size_t(1) << b)) f.push_back(cand[b]);
            if (!present.count(f)) missing.push_back(std::move(f));
        }
        if (order.size() + missing.size() + 1 > max_simplices) continue;
        std::stable_sort(missing.begin(), missing.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
        for (auto& f : missing) push(std::move(f));
        push(std::move(cand));
    }
    return filtered_complex::build(std::move(order));
}

cochain random_cochain(std::mt19937& rng, const filtered_complex& x, int d) {
    std::vector<simplex> support;
    for (index_t stage : x.stages_of_dimension(d))
        if (rng() & 1) support.push_back(x.at(stage));
    return cochain(d, std::move(support));
}

cochain random_cocycle(std::mt19937& rng, const filtered_complex& x, int d) {
    cochain out(d);
    for (const cochain& basis : cocycle_basis(x, d, x.size()))
        if (rng() & 1) out = out + basis;
    return out;
}

cochain random_coboundary(std::mt19937& rng, const filtered_complex& x, int d) {
    if (d < 1) return cochain(d < 0 ? 0 : d);
    return coboundary(x, random_cochain(rng, x, d - 1));
}

}  // namespace phsq
