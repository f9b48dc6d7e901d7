#include "ruledgw/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace exactalg {

namespace {

// Forward elimination on a working copy; returns the pivot count. When
// `augmented` is true the last column is the right-hand side and is never
// chosen as a pivot column.
int eliminate(std::vector<std::vector<Rational>>& m, bool augmented) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    const std::size_t pivot_cols = augmented && cols > 0 ? cols - 1 : cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col].is_zero())
                continue;
            Rational f = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] -= f * m[row][c];
        }
        ++row;
    }
    return static_cast<int>(row);
}

}  // namespace

int QMatrix::rank() const {
    std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m[r][c] = at(r, c);
    return eliminate(m, false);
}

Rational QMatrix::determinant() const {
    if (rows_ != cols_)
        throw std::invalid_argument("determinant: matrix is not square");
    std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m[r][c] = at(r, c);
    Rational det(1);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && m[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows_)
            return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < rows_; ++r) {
            if (m[r][col].is_zero())
                continue;
            Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < cols_; ++c)
                m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

std::optional<std::vector<Rational>> QMatrix::solve(const std::vector<Rational>& rhs) const {
    if (rhs.size() != rows_)
        throw std::invalid_argument("solve: right-hand side has wrong length");
    std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            m[r][c] = at(r, c);
        m[r][cols_] = rhs[r];
    }
    int pivots = eliminate(m, true);
    // Inconsistent when a zero row has nonzero rhs; underdetermined when
    // there are fewer pivots than unknowns.
    for (std::size_t r = static_cast<std::size_t>(pivots); r < rows_; ++r)
        if (!m[r][cols_].is_zero())
            return std::nullopt;
    if (static_cast<std::size_t>(pivots) < cols_)
        return std::nullopt;
    // Jordan elimination above left each pivot row with a single nonzero
    // pivot entry; read the solution off by locating it.
    std::vector<Rational> x(cols_);
    for (std::size_t r = 0; r < static_cast<std::size_t>(pivots); ++r) {
        std::size_t col = 0;
        while (col < cols_ && m[r][col].is_zero())
            ++col;
        if (col == cols_)
            continue;
        x[col] = m[r][cols_] / m[r][col];
    }
    return x;
}

}  // namespace exactalg
