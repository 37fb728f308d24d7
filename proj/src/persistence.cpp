#include "phsq/persistence.hpp"

#include <algorithm>
#include <ostream>

namespace phsq {

std::ostream& operator<<(std::ostream& os, const extended_interval& iv) {
    os << '(';
    if (iv.left == minus_infinity)
        os << "-inf";
    else
        os << iv.left;
    return os << ',' << iv.right << ']';
}

void barcode::add(int degree, const extended_interval& iv) {
    bars_.push_back({degree, iv, 1});
}

void barcode::finalize() {
    std::sort(bars_.begin(), bars_.end(), [](const bar& a, const bar& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.interval < b.interval;
    });
    std::vector<bar> merged;
    for (bar& b : bars_) {
        if (!merged.empty() && merged.back().degree == b.degree &&
            merged.back().interval == b.interval)
            merged.back().count += b.count;
        else
            merged.push_back(b);
    }
    bars_ = std::move(merged);
}

std::size_t barcode::count_containing(int degree, index_t i, index_t j) const {
    std::size_t total = 0;
    for (const bar& b : bars_)
        if (b.degree == degree && b.interval.contains_window(i, j)) total += b.count;
    return total;
}

f2_matrix build_antitransposed_coboundary(const filtered_complex& x) {
    const index_t n = x.size();
    f2_matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (index_t j = 1; j <= n; ++j) {
        for (const simplex& f : x.at(j).facets()) {
            index_t fi = *x.stage_of(f);
            // D_{fi,j} = 1 lands at row n+1-j, column n+1-fi of the anti-transpose
            m.set(static_cast<std::size_t>(n + 1 - j), static_cast<std::size_t>(n + 1 - fi), true);
        }
    }
    return m;
}

phcol_result phcol(f2_matrix m) {
    if (m.rows() != m.cols())
        throw input_error(errc::length_mismatch, "phcol requires a square matrix");
    const std::size_t n = m.cols();
    f2_matrix v = f2_matrix::identity(n);
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(n + 1, npos);
    for (std::size_t j = 1; j <= n; ++j) {
        while (auto p = m.col(j).pivot()) {
            std::size_t i = owner[*p];
            if (i == npos) {
                owner[*p] = j;
                break;
            }
            m.col(j).add(m.col(i));
            v.col(j).add(v.col(i));
        }
    }
    return {std::move(m), std::move(v)};
}

std::vector<graded_triple> extract_triples(const phcol_result& rv, const filtered_complex& x) {
    const index_t n = x.size();
    const std::size_t un = static_cast<std::size_t>(n);
    if (rv.r.rows() != un || rv.r.cols() != un || rv.v.rows() != un || rv.v.cols() != un)
        throw internal_error(errc::inconsistent_input,
                             "reduction shape differs from the complex size");
    std::vector<bool> is_pivot_row(un + 1, false);
    for (std::size_t j = 1; j <= un; ++j) {
        if (auto p = rv.r.col(j).pivot()) {
            if (is_pivot_row[*p])
                throw internal_error(errc::inconsistent_input, "R is not reduced");
            is_pivot_row[*p] = true;
        }
        if (rv.v.col(j).pivot() != j)
            throw internal_error(errc::inconsistent_input, "V is not unit upper triangular");
    }

    // matrix (reversed) row r corresponds to filtration stage n+1-r
    auto to_filtration = [&](const f2_column& col) {
        f2_column out(un);
        for (std::size_t r : col.support()) out.set(un + 1 - r, true);
        return out;
    };

    std::vector<graded_triple> out;
    for (std::size_t j = 1; j <= un; ++j) {
        auto p = rv.r.col(j).pivot();
        bool essential = false;
        if (!p) {
            if (is_pivot_row[j]) continue;  // paired away, no class
            essential = true;
        }
        f2_column rep = to_filtration(rv.v.col(j));
        const simplex& birth = x.at(n + 1 - static_cast<index_t>(j));
        for (std::size_t row : rep.support())
            if (x.at(static_cast<index_t>(row)).dimension() != birth.dimension())
                throw internal_error(errc::inconsistent_input,
                                     "representative support mixes dimensions");
        index_t left = n - static_cast<index_t>(j);
        if (left == 0) left = minus_infinity;
        index_t right = essential ? n : n - static_cast<index_t>(*p);
        out.push_back({std::move(rep), birth.dimension(), {left, right}, essential});
    }
    return out;
}

std::vector<graded_triple> persistence_triples(const filtered_complex& x) {
    if (x.empty()) return {};
    return extract_triples(phcol(build_antitransposed_coboundary(x)), x);
}

barcode barcode_of(std::span<const graded_triple> z) {
    barcode bc;
    for (const graded_triple& t : z) bc.add(t.degree, t.interval);
    bc.finalize();
    return bc;
}

std::size_t restriction_rank_oracle(const filtered_complex& x, int d, index_t i, index_t j) {
    if (i < 1 || j > x.size() || i > j)
        throw input_error(errc::stage_out_of_range, "window outside 1 <= i <= j <= n");
    if (d < 0) return 0;
    std::vector<cochain> reps = cohomology_basis(x, d, j);
    if (reps.empty()) return 0;
    // image dimension in H^d(X_i): rank of the restricted basis over the
    // stage-i coboundary span, measured in one combined echelon
    f2_echelon image(static_cast<std::size_t>(x.size()));
    f2_matrix cob_i = coboundary_columns(x, d - 1, i);
    for (std::size_t c = 1; c <= cob_i.cols(); ++c) image.insert(cob_i.col(c));
    std::size_t rank_count = 0;
    for (const cochain& rep : reps) {
        f2_column restricted = column_from_cochain(x, rep).masked_to(static_cast<std::size_t>(i));
        if (image.insert(std::move(restricted))) ++rank_count;
    }
    return rank_count;
}

}  // namespace phsq
