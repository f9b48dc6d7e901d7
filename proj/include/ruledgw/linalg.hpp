#pragma once

#include "ruledgw/rational.hpp"

#include <optional>
#include <vector>

namespace exactalg {

/// Dense matrix over Q with exact elimination. Small sizes only; the dense
/// rank is the reference semantics for every dimension count.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    int rank() const;

    /// Square matrices only.
    Rational determinant() const;

    /// Unique solution of Ax = b, or nullopt when the system is
    /// inconsistent or underdetermined.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& rhs) const;

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

}  // namespace exactalg
