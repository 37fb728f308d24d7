#include "phsq/f2.hpp"

#include <bit>
#include <ostream>

namespace phsq {

bool f2_column::is_zero() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

std::size_t f2_column::popcount() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::optional<std::size_t> f2_column::pivot() const {
    for (std::size_t wi = words_.size(); wi-- > 0;) {
        if (words_[wi])
            return wi * 64 + (63 - static_cast<std::size_t>(std::countl_zero(words_[wi]))) + 1;
    }
    return std::nullopt;
}

void f2_column::add(const f2_column& other) {
    if (other.size_ != size_)
        throw input_error(errc::length_mismatch, "column lengths differ in add");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
}

f2_column f2_column::masked_to(std::size_t max_row) const {
    f2_column out = *this;
    if (max_row >= size_) return out;
    std::size_t keep_words = max_row / 64;
    std::size_t rem = max_row % 64;
    for (std::size_t i = keep_words; i < out.words_.size(); ++i) {
        if (i == keep_words && rem)
            out.words_[i] &= (std::uint64_t(1) << rem) - 1;
        else
            out.words_[i] = 0;
    }
    return out;
}

std::vector<std::size_t> f2_column::support() const {
    std::vector<std::size_t> out;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w) {
            std::size_t bit = static_cast<std::size_t>(std::countr_zero(w));
            out.push_back(wi * 64 + bit + 1);
            w &= w - 1;
        }
    }
    return out;
}

std::optional<std::size_t> pivot(const f2_column& c) { return c.pivot(); }

void add_into(const f2_column& src, f2_column& dst) { dst.add(src); }

std::ostream& operator<<(std::ostream& os, const f2_column& c) {
    for (std::size_t r = 1; r <= c.size(); ++r) os << (c.get(r) ? '1' : '0');
    return os;
}

f2_column& f2_matrix::col(std::size_t j) {
    if (j < 1 || j > cols_.size())
        throw input_error(errc::stage_out_of_range, "matrix column index out of range");
    return cols_[j - 1];
}

const f2_column& f2_matrix::col(std::size_t j) const {
    if (j < 1 || j > cols_.size())
        throw input_error(errc::stage_out_of_range, "matrix column index out of range");
    return cols_[j - 1];
}

void f2_matrix::append(f2_column c) {
    if (cols_.empty() && rows_ == 0) rows_ = c.size();
    if (c.size() != rows_)
        throw input_error(errc::length_mismatch, "appended column length differs");
    cols_.push_back(std::move(c));
}

f2_matrix f2_matrix::identity(std::size_t n) {
    f2_matrix m(n, n);
    for (std::size_t j = 1; j <= n; ++j) m.set(j, j, true);
    return m;
}

std::size_t rank(const f2_matrix& m) {
    f2_solver solver(m);
    return solver.rank();
}

f2_matrix transpose(const f2_matrix& m) {
    f2_matrix out(m.cols(), m.rows());
    for (std::size_t j = 1; j <= m.cols(); ++j)
        for (std::size_t r : m.col(j).support()) out.set(j, r, true);
    return out;
}

f2_column multiply(const f2_matrix& a, const f2_column& x) {
    if (x.size() != a.cols())
        throw input_error(errc::length_mismatch, "vector length differs from column count");
    f2_column out(a.rows());
    for (std::size_t j : x.support()) out.add(a.col(j));
    return out;
}

f2_matrix multiply(const f2_matrix& a, const f2_matrix& b) {
    if (b.rows() != a.cols())
        throw input_error(errc::length_mismatch, "inner dimensions differ in product");
    f2_matrix out(a.rows(), b.cols());
    for (std::size_t j = 1; j <= b.cols(); ++j) out.col(j) = multiply(a, b.col(j));
    return out;
}

f2_solver::f2_solver(const f2_matrix& basis)
    : rows_(basis.rows()), basis_cols_(basis.cols()), pivot_slot_(basis.rows() + 1, npos) {
    for (std::size_t j = 1; j <= basis_cols_; ++j) {
        f2_column cur = basis.col(j);
        f2_column combo(basis_cols_);
        combo.set(j, true);
        while (auto p = cur.pivot()) {
            std::size_t slot = pivot_slot_[*p];
            if (slot == npos) break;
            cur.add(echelon_[slot]);
            combo.add(combo_[slot]);
        }
        if (auto p = cur.pivot()) {
            pivot_slot_[*p] = echelon_.size();
            echelon_.push_back(std::move(cur));
            combo_.push_back(std::move(combo));
        } else {
            kernel_.push_back(std::move(combo));
        }
    }
}

f2_column f2_solver::residue(f2_column w) const {
    if (w.size() != rows_)
        throw input_error(errc::length_mismatch, "vector length differs from basis rows");
    while (auto p = w.pivot()) {
        std::size_t slot = pivot_slot_[*p];
        if (slot == npos) break;
        w.add(echelon_[slot]);
    }
    return w;
}

std::optional<f2_column> f2_solver::solve(const f2_column& w) const {
    if (w.size() != rows_)
        throw input_error(errc::length_mismatch, "vector length differs from basis rows");
    f2_column cur = w;
    f2_column x(basis_cols_);
    while (auto p = cur.pivot()) {
        std::size_t slot = pivot_slot_[*p];
        if (slot == npos) return std::nullopt;
        cur.add(echelon_[slot]);
        x.add(combo_[slot]);
    }
    return x;
}

std::optional<f2_column> solve_in_span(const f2_matrix& basis, const f2_column& w) {
    if (w.size() != basis.rows())
        throw input_error(errc::length_mismatch, "vector length differs from basis rows");
    return f2_solver(basis).solve(w);
}

f2_column f2_echelon::reduce(f2_column w) const {
    if (w.size() != rows_)
        throw input_error(errc::length_mismatch, "vector length differs from echelon rows");
    while (auto p = w.pivot()) {
        std::size_t slot = pivot_slot_[*p];
        if (slot == npos) break;
        w.add(cols_[slot]);
    }
    return w;
}

bool f2_echelon::insert(f2_column w) {
    w = reduce(std::move(w));
    auto p = w.pivot();
    if (!p) return false;
    pivot_slot_[*p] = cols_.size();
    cols_.push_back(std::move(w));
    return true;
}

}  // namespace phsq
