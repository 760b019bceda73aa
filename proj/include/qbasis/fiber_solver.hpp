#pragma once

// Exact linear algebra on single fibers (K^m), used to decide membership of
// a fiber in the span of other fibers atom by atom. No tolerances: a rank
// decision is an exact comparison with zero.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qbasis/field.hpp"
#include "qbasis/module.hpp"

namespace qbasis {

/// Reduced row echelon form of the m×l matrix whose columns are the given
/// fibers, optionally augmented with one extra column.
template <ExactField F>
class FiberEchelon {
public:
    FiberEchelon(std::span<const Fiber<F>> columns, std::size_t rows, const Fiber<F>* rhs = nullptr)
        : rows_(rows), cols_(columns.size()), width_(cols_ + (rhs ? 1 : 0)), a_(rows_, std::vector<F>(width_, F{0})) {
        for (std::size_t j = 0; j < cols_; ++j) {
            for (std::size_t r = 0; r < rows_; ++r) a_[r][j] = columns[j][r];
        }
        if (rhs) {
            for (std::size_t r = 0; r < rows_; ++r) a_[r][cols_] = (*rhs)[r];
        }
        reduce();
    }

    std::size_t rank() const { return pivots_.size(); }
    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

    /// With an augmented column: the solution with every free variable set
    /// to zero, or nullopt if the system is inconsistent.
    std::optional<std::vector<F>> particular_solution() const {
        if (width_ == cols_) return std::vector<F>(cols_, F{0});
        for (std::size_t r = pivots_.size(); r < rows_; ++r) {
            if (!is_zero(a_[r][cols_])) return std::nullopt;
        }
        std::vector<F> x(cols_, F{0});
        for (std::size_t r = 0; r < pivots_.size(); ++r) x[pivots_[r]] = a_[r][cols_];
        return x;
    }

private:
    // Gauss-Jordan on the coefficient columns only; the augmented column is
    // carried along but never chosen as a pivot.
    void reduce() {
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t p = row;
            while (p < rows_ && is_zero(a_[p][col])) ++p;
            if (p == rows_) continue;
            std::swap(a_[p], a_[row]);
            const F inv = F{1} / a_[row][col];
            for (std::size_t c = col; c < width_; ++c) a_[row][c] = a_[row][c] * inv;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row || is_zero(a_[r][col])) continue;
                const F factor = a_[r][col];
                for (std::size_t c = col; c < width_; ++c) a_[r][c] = a_[r][c] - factor * a_[row][c];
            }
            pivots_.push_back(col);
            ++row;
        }
    }

    std::size_t rows_;
    std::size_t cols_;
    std::size_t width_;
    std::vector<std::vector<F>> a_;
    std::vector<std::size_t> pivots_;
};

/// Coefficients c with Σ c_j·columns[j] = target, free variables zero;
/// nullopt if target is outside the span.
template <ExactField F>
std::optional<std::vector<F>> solve_fiber(std::span<const Fiber<F>> columns, const Fiber<F>& target) {
    return FiberEchelon<F>(columns, target.size(), &target).particular_solution();
}

template <ExactField F>
std::size_t fiber_rank(std::span<const Fiber<F>> columns, std::size_t rows) {
    return FiberEchelon<F>(columns, rows).rank();
}

}  // namespace qbasis
