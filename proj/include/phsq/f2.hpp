#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "phsq/errors.hpp"

namespace phsq {

// Bit-packed column over the two-element field, rows indexed 1..size().
class f2_column {
public:
    f2_column() = default;
    explicit f2_column(std::size_t size)
        : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool get(std::size_t row) const {
        check_row(row);
        return (words_[(row - 1) >> 6] >> ((row - 1) & 63)) & 1u;
    }
    void set(std::size_t row, bool value) {
        check_row(row);
        std::uint64_t mask = std::uint64_t(1) << ((row - 1) & 63);
        if (value)
            words_[(row - 1) >> 6] |= mask;
        else
            words_[(row - 1) >> 6] &= ~mask;
    }
    void flip(std::size_t row) {
        check_row(row);
        words_[(row - 1) >> 6] ^= std::uint64_t(1) << ((row - 1) & 63);
    }

    bool is_zero() const;
    std::size_t popcount() const;

    // Largest row index with a nonzero entry; absent for the zero column.
    std::optional<std::size_t> pivot() const;

    // Entrywise sum mod 2 into this column; lengths must match.
    void add(const f2_column& other);

    // Copy with all rows above max_row zeroed (restriction to a prefix complex).
    f2_column masked_to(std::size_t max_row) const;

    std::vector<std::size_t> support() const;  // ascending set rows

    friend bool operator==(const f2_column& a, const f2_column& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    void check_row(std::size_t row) const {
        if (row < 1 || row > size_)
            throw input_error(errc::stage_out_of_range, "column row index out of range");
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

std::optional<std::size_t> pivot(const f2_column& c);
void add_into(const f2_column& src, f2_column& dst);

std::ostream& operator<<(std::ostream& os, const f2_column& c);

// Rectangular matrix stored as equal-length columns; rows and columns 1-based.
class f2_matrix {
public:
    f2_matrix() = default;
    f2_matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols, f2_column(rows)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_.size(); }

    f2_column& col(std::size_t j);
    const f2_column& col(std::size_t j) const;

    bool get(std::size_t row, std::size_t col_index) const { return col(col_index).get(row); }
    void set(std::size_t row, std::size_t col_index, bool v) { col(col_index).set(row, v); }

    void append(f2_column c);

    static f2_matrix identity(std::size_t n);

    friend bool operator==(const f2_matrix& a, const f2_matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_;
    }

private:
    std::size_t rows_ = 0;
    std::vector<f2_column> cols_;
};

// Rank over F2; the input is copied, not mutated.
std::size_t rank(const f2_matrix& m);

f2_matrix transpose(const f2_matrix& m);
f2_column multiply(const f2_matrix& a, const f2_column& x);
f2_matrix multiply(const f2_matrix& a, const f2_matrix& b);

// One-time column echelonization of a basis with recorded transformations, so
// repeated solves and membership tests against the same span are cheap.
class f2_solver {
public:
    explicit f2_solver(const f2_matrix& basis);

    std::size_t rows() const { return rows_; }
    std::size_t basis_cols() const { return basis_cols_; }
    std::size_t rank() const { return echelon_.size(); }

    // w reduced by the echelon columns; zero iff w lies in the span.
    f2_column residue(f2_column w) const;
    bool in_span(const f2_column& w) const { return residue(w).is_zero(); }

    // Coefficient column x (length = basis_cols()) with basis * x == w, or
    // absent when w is outside the span.
    std::optional<f2_column> solve(const f2_column& w) const;

    // Combinations of the basis columns summing to zero.
    const std::vector<f2_column>& kernel_basis() const { return kernel_; }

private:
    std::size_t rows_ = 0;
    std::size_t basis_cols_ = 0;
    std::vector<f2_column> echelon_;
    std::vector<f2_column> combo_;          // combo_[t] produces echelon_[t]
    std::vector<f2_column> kernel_;
    std::vector<std::size_t> pivot_slot_;   // row -> echelon slot, npos when free
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// Coefficient column x with basis * x == w, or absent when w is not in the
// span of the basis columns.
std::optional<f2_column> solve_in_span(const f2_matrix& basis, const f2_column& w);

// Incrementally grown echelon set, for greedy independence filtering.
class f2_echelon {
public:
    explicit f2_echelon(std::size_t rows)
        : rows_(rows), pivot_slot_(rows + 1, npos) {}

    std::size_t rows() const { return rows_; }
    std::size_t rank() const { return cols_.size(); }

    f2_column reduce(f2_column w) const;
    // Reduce w by the current set; keep it when a nonzero residue remains.
    bool insert(f2_column w);

private:
    std::size_t rows_ = 0;
    std::vector<f2_column> cols_;
    std::vector<std::size_t> pivot_slot_;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

}  // namespace phsq
