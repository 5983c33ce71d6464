#include "funl/matrix.hpp"

#include "funl/errors.hpp"

namespace funl {

RrefResult rref(RatMatrix m) {
    RrefResult out;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m.at(sel, c), m.at(pivot_row, c));
        Rational inv = m.at(pivot_row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m.at(pivot_row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pivot_row || m.at(r, col).is_zero()) continue;
            Rational f = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m.at(r, c) -= f * m.at(pivot_row, c);
        }
        out.pivot_columns.push_back(col);
        ++pivot_row;
    }
    out.rank = pivot_row;
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

RatMatrix identity_matrix(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw InternalError("matrix product shape mismatch");
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

std::vector<Rational> multiply_row(const std::vector<Rational>& row, const RatMatrix& m) {
    if (row.size() != m.rows()) throw InternalError("row-matrix product shape mismatch");
    std::vector<Rational> out(m.cols());
    for (std::size_t k = 0; k < m.rows(); ++k) {
        if (row[k].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += row[k] * m.at(k, j);
    }
    return out;
}

std::vector<Rational> multiply_col(const RatMatrix& m, const std::vector<Rational>& col) {
    if (col.size() != m.cols()) throw InternalError("matrix-col product shape mismatch");
    std::vector<Rational> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k) {
            if (m.at(i, k).is_zero()) continue;
            out[i] += m.at(i, k) * col[k];
        }
    return out;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw InternalError("dot product shape mismatch");
    Rational out;
    for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
    return out;
}

bool is_zero_vector(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<std::vector<Rational>> coordinates_in_row_span(const RatMatrix& basis_rows,
                                                             const std::vector<Rational>& target) {
    if (target.size() != basis_rows.cols())
        throw InternalError("coordinate solve shape mismatch");
    // Solve c * basis_rows = target as the column system basis^T c = target^T.
    std::size_t n = basis_rows.rows();
    RatMatrix aug(basis_rows.cols(), n + 1);
    for (std::size_t r = 0; r < basis_rows.cols(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = basis_rows.at(c, r);
        aug.at(r, n) = target[r];
    }
    RrefResult red = rref(std::move(aug));
    std::vector<Rational> coords(n);
    for (std::size_t i = 0; i < red.pivot_columns.size(); ++i) {
        if (red.pivot_columns[i] == n) return std::nullopt; // inconsistent system
        coords[red.pivot_columns[i]] = red.reduced.at(i, n);
    }
    return coords;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw InternalError("inverse of non-square matrix");
    std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = Rational(1);
    }
    RrefResult red = rref(std::move(aug));
    for (std::size_t i = 0; i < n; ++i)
        if (i >= red.pivot_columns.size() || red.pivot_columns[i] != i) return std::nullopt;
    RatMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out.at(r, c) = red.reduced.at(r, n + c);
    return out;
}

} // namespace funl
