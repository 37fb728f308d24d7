#include "phsq/rank_invariant.hpp"

#include <algorithm>
#include <string>

namespace phsq {

namespace {

void validate_query(const rank_query& q, index_t n) {
    if (q.k < 1)
        throw input_error(errc::query_out_of_range, "rank query requires k >= 1");
    if (q.j < 1 || q.j > n)
        throw input_error(errc::query_out_of_range,
                          "rank query stage j outside 1.." + std::to_string(n));
    if (q.i != minus_infinity && (q.i < 1 || q.i > q.j))
        throw input_error(errc::query_out_of_range, "rank query requires i <= j");
}

// Solve basis at one stage: the degree-`deg` representatives alive at stage i
// (restricted to X_i), followed by the stage-i coboundary columns.
struct stage_basis {
    std::vector<std::size_t> alive;  // indices into z
    std::size_t alive_count = 0;
    f2_solver solver;

    stage_basis(std::span<const graded_triple> z, const filtered_complex& x, int deg,
                index_t i)
        : solver(assemble(z, x, deg, i, alive)) {
        alive_count = alive.size();
    }

    static f2_matrix assemble(std::span<const graded_triple> z, const filtered_complex& x,
                              int deg, index_t i, std::vector<std::size_t>& alive) {
        const std::size_t n = static_cast<std::size_t>(x.size());
        f2_matrix basis(n, 0);
        for (std::size_t t = 0; t < z.size(); ++t) {
            if (z[t].degree != deg || !z[t].interval.contains(i)) continue;
            if (z[t].rep.size() != n)
                throw internal_error(errc::inconsistent_input,
                                     "triple representative length differs from n");
            alive.push_back(t);
            basis.append(z[t].rep.masked_to(static_cast<std::size_t>(i)));
        }
        f2_matrix cob = coboundary_columns(x, deg - 1, i);
        for (std::size_t j = 1; j <= cob.cols(); ++j) basis.append(cob.col(j));
        return basis;
    }

    // Coefficients of w over the alive representatives, coboundary
    // coordinates discarded.
    f2_column coordinates(const f2_column& w) const {
        auto sol = solver.solve(w);
        if (!sol)
            throw internal_error(errc::solve_failed,
                                 "square of a representative is outside the reduced span");
        f2_column coords(alive_count);
        for (std::size_t t = 1; t <= alive_count; ++t)
            if (sol->get(t)) coords.set(t, true);
        return coords;
    }
};

f2_column stsq_column(std::span<const graded_triple> z, std::size_t t, unsigned k,
                      const filtered_complex& x) {
    const graded_triple& v = z[t];
    if (v.rep.size() != static_cast<std::size_t>(x.size()))
        throw internal_error(errc::inconsistent_input,
                             "triple representative length differs from n");
    cochain s = cochain_from_column(x, v.rep, v.degree);
    return column_from_cochain(x, stsq(k, s, x));
}

}  // namespace

std::size_t rank_inv(std::span<const graded_triple> z, const filtered_complex& x,
                     const rank_query& q) {
    validate_query(q, x.size());
    if (q.i == minus_infinity) return 0;

    std::vector<std::size_t> selected;
    for (std::size_t t = 0; t < z.size(); ++t)
        if (z[t].degree == q.d && z[t].interval.contains_window(q.i, q.j)) selected.push_back(t);
    if (selected.empty()) return 0;

    stage_basis basis(z, x, q.d + static_cast<int>(q.k), q.i);
    f2_echelon coords(basis.alive_count);
    std::size_t out = 0;
    for (std::size_t t : selected) {
        f2_column w = stsq_column(z, t, q.k, x).masked_to(static_cast<std::size_t>(q.i));
        if (coords.insert(basis.coordinates(w))) ++out;
    }
    return out;
}

std::size_t rank_inv_oracle(const filtered_complex& x, const rank_query& q) {
    validate_query(q, x.size());
    if (q.i == minus_infinity) return 0;
    if (q.d < 0) return 0;

    filtered_complex xj = x.prefix(q.j);
    std::vector<cochain> reps = cohomology_basis(xj, q.d, xj.size());
    if (reps.empty()) return 0;

    f2_echelon image(static_cast<std::size_t>(xj.size()));
    f2_matrix cob_i = coboundary_columns(xj, q.d + static_cast<int>(q.k) - 1, q.i);
    for (std::size_t c = 1; c <= cob_i.cols(); ++c) image.insert(cob_i.col(c));
    std::size_t rank_count = 0;
    for (const cochain& rep : reps) {
        cochain t = stsq(q.k, rep, xj);
        f2_column col = column_from_cochain(xj, t).masked_to(static_cast<std::size_t>(q.i));
        if (image.insert(std::move(col))) ++rank_count;
    }
    return rank_count;
}

rank_table rank_inv_table(std::span<const graded_triple> z, const filtered_complex& x,
                          unsigned k, int d) {
    const index_t n = x.size();
    if (k < 1)
        throw input_error(errc::query_out_of_range, "rank table requires k >= 1");

    rank_table table;
    table.k = k;
    table.d = d;
    table.n = n;
    if (n == 0) return table;

    // row offsets: the minus_infinity row, then i = 1..n with j = i..n
    auto offset = [n](index_t i) {
        return static_cast<std::size_t>(n + (i - 1) * (n + 1) - i * (i - 1) / 2);
    };
    table.entries.resize(offset(n) + 1);
    for (index_t j = 1; j <= n; ++j)
        table.entries[static_cast<std::size_t>(j - 1)] = {minus_infinity, j, 0};

    // squares of the degree-d representatives, shared across all windows
    std::vector<std::size_t> tagged;
    for (std::size_t t = 0; t < z.size(); ++t)
        if (z[t].degree == d) tagged.push_back(t);
    std::vector<f2_column> squares(tagged.size());
    for (std::size_t s = 0; s < tagged.size(); ++s)
        squares[s] = stsq_column(z, tagged[s], k, x);

    std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (index_t i = 1; i <= n; ++i) {
        try {
            stage_basis basis(z, x, d + static_cast<int>(k), i);

            // triples usable at stage i, ordered by descending right endpoint
            std::vector<std::pair<index_t, std::size_t>> usable;
            for (std::size_t s = 0; s < tagged.size(); ++s) {
                const graded_triple& t = z[tagged[s]];
                if (t.interval.left < i && t.interval.right >= i)
                    usable.push_back({t.interval.right, s});
            }
            std::sort(usable.begin(), usable.end(), std::greater<>());

            // widen j downward so the selection only ever grows
            f2_echelon coords(basis.alive_count);
            std::vector<std::size_t> ranks(static_cast<std::size_t>(n - i + 1));
            std::size_t next = 0;
            std::size_t current = 0;
            for (index_t j = n; j >= i; --j) {
                while (next < usable.size() && usable[next].first >= j) {
                    f2_column w = squares[usable[next].second].masked_to(static_cast<std::size_t>(i));
                    if (coords.insert(basis.coordinates(w))) ++current;
                    ++next;
                }
                ranks[static_cast<std::size_t>(j - i)] = current;
            }
            for (index_t j = i; j <= n; ++j)
                table.entries[offset(i) + static_cast<std::size_t>(j - i)] = {
                    i, j, ranks[static_cast<std::size_t>(j - i)]};
        } catch (...) {
#pragma omp critical(phsq_rank_table_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return table;
}

rank_table rank_inv_table(const filtered_complex& x, unsigned k, int d) {
    std::vector<graded_triple> z = persistence_triples(x);
    return rank_inv_table(z, x, k, d);
}

std::size_t rank_table::at(index_t i, index_t j) const {
    if (j < 1 || j > n || (i != minus_infinity && (i < 1 || i > j)))
        throw input_error(errc::query_out_of_range, "table lookup outside the domain");
    std::size_t idx;
    if (i == minus_infinity)
        idx = static_cast<std::size_t>(j - 1);
    else
        idx = static_cast<std::size_t>(n + (i - 1) * (n + 1) - i * (i - 1) / 2 + (j - i));
    return entries[idx].rank;
}

}  // namespace phsq
