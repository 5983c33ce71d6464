#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "funl/rational.hpp"

namespace funl {

/// Dense matrix of exact rationals, row-major. Zero-by-n and n-by-zero
/// shapes are legal and show up routinely (dimension-0 weighted
/// automata).
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }

    void set_row(std::size_t r, const std::vector<Rational>& values) {
        for (std::size_t c = 0; c < cols_; ++c) at(r, c) = values[c];
    }

    void append_row(const std::vector<Rational>& values) {
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    RatMatrix reduced;                  ///< row-reduced echelon form, pivots are 1
    std::size_t rank = 0;               ///< number of nonzero rows
    std::vector<std::size_t> pivot_columns;
};

/// Exact Gauss-Jordan elimination.
RrefResult rref(RatMatrix m);

std::size_t rank(const RatMatrix& m);

/// Identity matrix of size n.
RatMatrix identity_matrix(std::size_t n);

/// a * b with exact arithmetic; dimensions must agree.
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);

/// row (1 x n) * m (n x k) -> 1 x k.
std::vector<Rational> multiply_row(const std::vector<Rational>& row, const RatMatrix& m);

/// m (n x k) * col (k x 1) -> n x 1.
std::vector<Rational> multiply_col(const RatMatrix& m, const std::vector<Rational>& col);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

bool is_zero_vector(const std::vector<Rational>& v);

/// Coordinates c with c * basis_rows == target, or nullopt when target
/// is outside the row span. basis_rows need not be square.
std::optional<std::vector<Rational>> coordinates_in_row_span(const RatMatrix& basis_rows,
                                                             const std::vector<Rational>& target);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Incremental row-space basis: feed candidate rows one at a time;
/// insert() reports whether the row was independent of everything
/// accepted so far. Accepted rows are kept verbatim in members(), in
/// insertion order.
class RowSpaceBasis {
public:
    explicit RowSpaceBasis(std::size_t cols)
        : cols_(cols), members_(0, cols), echelon_(0, cols) {}

    std::size_t size() const { return members_.rows(); }
    std::size_t cols() const { return cols_; }
    const RatMatrix& members() const { return members_; }

    bool contains(const std::vector<Rational>& row) const { return !reduce(row); }

    /// Adds row to the basis if independent; returns true when added.
    bool insert(const std::vector<Rational>& row) {
        auto reduced = reduce(row);
        if (!reduced) return false;
        members_.append_row(row);
        echelon_.append_row(reduced->first);
        pivots_.push_back(reduced->second);
        return true;
    }

private:
    /// Reduces row against the echelon rows; nullopt when dependent,
    /// otherwise the normalized remainder and its pivot column.
    std::optional<std::pair<std::vector<Rational>, std::size_t>>
    reduce(std::vector<Rational> row) const {
        for (std::size_t i = 0; i < echelon_.rows(); ++i) {
            std::size_t p = pivots_[i];
            if (!row[p].is_zero()) {
                Rational f = row[p];
                for (std::size_t c = 0; c < cols_; ++c)
                    row[c] -= f * echelon_.at(i, c);
            }
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            if (row[c].is_zero()) continue;
            Rational f = row[c].inverse();
            for (std::size_t k = c; k < cols_; ++k) row[k] *= f;
            return std::make_pair(std::move(row), c);
        }
        return std::nullopt;
    }

    std::size_t cols_;
    RatMatrix members_;
    RatMatrix echelon_;
    std::vector<std::size_t> pivots_;
};

} // namespace funl
