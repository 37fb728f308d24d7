#include "phsq/cochain_columns.hpp"

#include <sstream>

namespace phsq {

f2_column column_from_cochain(const filtered_complex& x, const cochain& a) {
    f2_column out(static_cast<std::size_t>(x.size()));
    for (const simplex& s : a.support()) {
        auto st = x.stage_of(s);
        if (!st) {
            std::ostringstream os;
            os << "simplex " << s << " not in the complex";
            throw input_error(errc::unsupported_cochain, os.str());
        }
        out.set(static_cast<std::size_t>(*st), true);
    }
    return out;
}

cochain cochain_from_column(const filtered_complex& x, const f2_column& col,
                            std::optional<int> degree) {
    if (col.size() != static_cast<std::size_t>(x.size()))
        throw input_error(errc::length_mismatch, "column length differs from complex size");
    std::vector<simplex> support;
    int d = -1;
    for (std::size_t row : col.support()) {
        const simplex& s = x.at(static_cast<index_t>(row));
        if (d < 0)
            d = s.dimension();
        else if (s.dimension() != d)
            throw input_error(errc::mixed_degrees, "column support mixes dimensions");
        support.push_back(s);
    }
    if (d < 0) {
        if (!degree)
            throw input_error(errc::missing_degree, "zero column needs an explicit degree");
        return cochain(*degree);
    }
    if (degree && *degree != d)
        throw input_error(errc::degree_mismatch, "column degree differs from the hint");
    return cochain(d, std::move(support));
}

f2_matrix coboundary_columns(const filtered_complex& x, int d, index_t stage) {
    const std::size_t n = static_cast<std::size_t>(x.size());
    if (stage < 0 || stage > x.size())
        throw input_error(errc::stage_out_of_range, "stage outside 0..n");
    std::vector<index_t> sources;
    for (index_t s : x.stages_of_dimension(d)) {
        if (s > stage) break;
        sources.push_back(s);
    }
    f2_matrix out(n, sources.size());
    if (sources.empty()) return out;

    std::unordered_map<index_t, std::size_t> col_of;
    col_of.reserve(sources.size() * 2);
    for (std::size_t j = 0; j < sources.size(); ++j) col_of.emplace(sources[j], j + 1);

    for (index_t t : x.stages_of_dimension(d + 1)) {
        if (t > stage) break;
        for (const simplex& f : x.at(t).facets()) {
            index_t fs = *x.stage_of(f);  // present by closure
            auto it = col_of.find(fs);
            if (it != col_of.end()) out.col(it->second).flip(static_cast<std::size_t>(t));
        }
    }
    return out;
}

std::vector<cochain> cocycle_basis(const filtered_complex& x, int d, index_t stage) {
    std::vector<index_t> ds;
    for (index_t s : x.stages_of_dimension(d)) {
        if (s > stage) break;
        ds.push_back(s);
    }
    if (ds.empty()) return {};
    f2_solver delta(coboundary_columns(x, d, stage));
    std::vector<cochain> out;
    for (const f2_column& combo : delta.kernel_basis()) {
        std::vector<simplex> support;
        for (std::size_t idx : combo.support()) support.push_back(x.at(ds[idx - 1]));
        out.push_back(cochain(d, std::move(support)));
    }
    return out;
}

std::vector<cochain> cohomology_basis(const filtered_complex& x, int d, index_t stage) {
    std::vector<cochain> cocycles = cocycle_basis(x, d, stage);
    if (cocycles.empty()) return {};
    // one echelon seeded with the coboundary span; a cocycle is kept exactly
    // when it falls outside the span of the coboundaries and the cocycles
    // already kept
    f2_echelon seen(static_cast<std::size_t>(x.size()));
    f2_matrix cob = coboundary_columns(x, d - 1, stage);
    for (std::size_t j = 1; j <= cob.cols(); ++j) seen.insert(cob.col(j));
    std::vector<cochain> out;
    for (cochain& z : cocycles)
        if (seen.insert(column_from_cochain(x, z))) out.push_back(std::move(z));
    return out;
}

}  // namespace phsq
