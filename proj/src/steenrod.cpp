#include "phsq/steenrod.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace phsq {

index_partition partition_by_index(const simplex& u, const simplex& c) {
    index_partition out;
    std::size_t pos_in_c = 0;
    auto cv = c.vertices();
    for (std::size_t pos_in_u = 0; pos_in_u < u.cardinality(); ++pos_in_u) {
        vertex_t v = u[pos_in_u];
        while (pos_in_c < cv.size() && cv[pos_in_c] < v) ++pos_in_c;
        if (pos_in_c >= cv.size() || cv[pos_in_c] != v) {
            std::ostringstream os;
            os << u << " is not a subset of " << c;
            throw input_error(errc::not_subset, os.str());
        }
        if ((pos_in_u + pos_in_c) & 1)
            out.u_minus.push_back(v);
        else
            out.u_plus.push_back(v);
    }
    return out;
}

namespace {

bool matches(const std::vector<vertex_t>& part, const simplex& s) {
    auto sv = s.vertices();
    return std::equal(part.begin(), part.end(), sv.begin(), sv.end());
}

void validate_stsq_args(unsigned k, const cochain& s, const filtered_complex& x) {
    if (k < 1) throw input_error(errc::invalid_k, "stsq requires k >= 1");
    if (!is_supported_on(x, s))
        throw input_error(errc::unsupported_cochain, "cochain not supported on the complex");
}

cochain collect_odd(int degree, std::unordered_map<simplex, unsigned, simplex_hash>& parity) {
    std::vector<simplex> support;
    for (auto& [c, p] : parity)
        if (p & 1) support.push_back(c);
    return cochain(degree, std::move(support));
}

constexpr std::size_t parallel_pair_threshold = 4096;

}  // namespace

namespace detail {

bool stsq_pair_contributes(const simplex& a, const simplex& b, unsigned k,
                           const filtered_complex& x, simplex* union_out) {
    simplex c = simplex_union(a, b);
    if (c.cardinality() != a.cardinality() + k) return false;
    if (!x.contains(c)) return false;
    simplex a_bar = simplex_difference(a, b);
    simplex b_bar = simplex_difference(b, a);
    simplex u = simplex_union(a_bar, b_bar);
    index_partition part = partition_by_index(u, c);
    bool accept = (matches(part.u_minus, a_bar) && matches(part.u_plus, b_bar)) ||
                  (matches(part.u_minus, b_bar) && matches(part.u_plus, a_bar));
    if (accept && union_out) *union_out = std::move(c);
    return accept;
}

cochain stsq_enumerate(unsigned k, const cochain& s, const filtered_complex& x) {
    std::unordered_map<simplex, unsigned, simplex_hash> parity;
    auto sup = s.support();
    simplex c;
    for (std::size_t i = 0; i < sup.size(); ++i)
        for (std::size_t j = i + 1; j < sup.size(); ++j)
            if (stsq_pair_contributes(sup[i], sup[j], k, x, &c)) parity[c] ^= 1;
    return collect_odd(s.degree() + static_cast<int>(k), parity);
}

}  // namespace detail

cochain stsq_serial(unsigned k, const cochain& s, const filtered_complex& x) {
    validate_stsq_args(k, s, x);
    if (static_cast<int>(k) > s.degree()) return cochain(s.degree() + static_cast<int>(k));
    return detail::stsq_enumerate(k, s, x);
}

cochain stsq(unsigned k, const cochain& s, const filtered_complex& x) {
    validate_stsq_args(k, s, x);
    const int d = s.degree();
    if (static_cast<int>(k) > d) return cochain(d + static_cast<int>(k));

    auto sup = s.support();
    const std::size_t m = sup.size();
    if (m * (m - 1) / 2 < parallel_pair_threshold) return detail::stsq_enumerate(k, s, x);

    std::unordered_map<simplex, unsigned, simplex_hash> parity;
#pragma omp parallel
    {
        std::unordered_map<simplex, unsigned, simplex_hash> local;
        simplex c;
#pragma omp for schedule(dynamic, 16) nowait
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(m); ++i)
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < m; ++j)
                if (detail::stsq_pair_contributes(sup[static_cast<std::size_t>(i)], sup[j], k, x, &c))
                    local[c] ^= 1;
#pragma omp critical(phsq_stsq_merge)
        for (auto& [key, p] : local) parity[key] ^= p;
    }
    return collect_odd(d + static_cast<int>(k), parity);
}

cochain cup_square_oracle(unsigned k, const cochain& s, const filtered_complex& x) {
    validate_stsq_args(k, s, x);
    const int d = s.degree();
    const std::size_t u_size = 2 * static_cast<std::size_t>(k);
    std::vector<simplex> hits;
    for (index_t stage : x.stages_of_dimension(d + static_cast<int>(k))) {
        const simplex& c = x.at(stage);
        const std::size_t card = c.cardinality();
        if (u_size > card) continue;
        unsigned coeff = 0;
        // walk all subsets u of c with |u| = 2k
        std::vector<std::size_t> idx(u_size);
        for (std::size_t i = 0; i < u_size; ++i) idx[i] = i;
        while (true) {
            std::vector<vertex_t> uv(u_size);
            for (std::size_t i = 0; i < u_size; ++i) uv[i] = c[idx[i]];
            index_partition part = partition_by_index(simplex(std::move(uv)), c);

            auto strip = [&](const std::vector<vertex_t>& cut) {
                std::vector<vertex_t> rest;
                auto cv = c.vertices();
                std::set_difference(cv.begin(), cv.end(), cut.begin(), cut.end(),
                                    std::back_inserter(rest));
                return rest;
            };
            std::vector<vertex_t> left = strip(part.u_minus);
            std::vector<vertex_t> right = strip(part.u_plus);
            if (!left.empty() && !right.empty() && s.contains(simplex(std::move(left))) &&
                s.contains(simplex(std::move(right))))
                coeff ^= 1;

            // next combination
            bool advanced = false;
            for (std::size_t i = u_size; i-- > 0;) {
                if (idx[i] + (u_size - i) < card) {
                    ++idx[i];
                    for (std::size_t t = i + 1; t < u_size; ++t) idx[t] = idx[t - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
        if (coeff) hits.push_back(c);
    }
    return cochain(d + static_cast<int>(k), std::move(hits));
}

cochain cup_product(const cochain& a, const cochain& b, const filtered_complex& x) {
    if (!is_supported_on(x, a) || !is_supported_on(x, b))
        throw input_error(errc::unsupported_cochain, "cochain not supported on the complex");
    const int p = a.degree();
    const int q = b.degree();
    std::vector<simplex> hits;
    for (index_t stage : x.stages_of_dimension(p + q)) {
        const simplex& c = x.at(stage);
        if (a.contains(c.front_face(static_cast<std::size_t>(p))) &&
            b.contains(c.back_face(static_cast<std::size_t>(q))))
            hits.push_back(c);
    }
    return cochain(p + q, std::move(hits));
}

bool is_cocycle(const cochain& a, const filtered_complex& x) {
    return coboundary(x, a).empty();
}

const f2_solver& coboundary_cache::solver_into_degree(int d) {
    auto it = solvers_.find(d);
    if (it == solvers_.end())
        it = solvers_.emplace(d, f2_solver(coboundary_columns(*x_, d - 1, x_->size()))).first;
    return it->second;
}

bool cohomologous(const cochain& a, const cochain& b, const filtered_complex& x) {
    coboundary_cache cache(x);
    return cohomologous(a, b, cache);
}

bool cohomologous(const cochain& a, const cochain& b, coboundary_cache& cache) {
    const filtered_complex& x = cache.complex();
    if (a.degree() != b.degree())
        throw input_error(errc::degree_mismatch, "cocycle degrees differ");
    if (!is_cocycle(a, x) || !is_cocycle(b, x))
        throw input_error(errc::not_cocycle, "cohomologous requires cocycles");
    cochain diff = a + b;
    if (diff.empty()) return true;
    return cache.solver_into_degree(a.degree()).in_span(column_from_cochain(x, diff));
}

}  // namespace phsq
