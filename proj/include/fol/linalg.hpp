#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fol/rational.hpp"

namespace fol {

// Dense rational matrix. Everything in the artifact that is linear (the
// integrating-factor operator, tangent-space operators, eigenspace
// conditions, parameterization differentials) ends up here.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    // Rows that are identically zero contribute nothing to rank or kernel;
    // the big operator matrices here are mostly zero rows.
    RatMatrix without_zero_rows() const;

    static RatMatrix identity(std::size_t n);

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

using RatVector = std::vector<Rational>;

// Rank over the rationals, fraction-free (Bareiss) elimination with
// deterministic pivoting (first row of maximal absolute numerator).
std::size_t rank(const RatMatrix& m);

// Basis of the right null space; size is cols - rank. Each vector has a 1 in
// its free column and 0 in the other free columns, so coordinates of kernel
// elements can be read off. When free_cols is given it receives the free
// column of each basis vector, in order.
std::vector<RatVector> kernel_basis(const RatMatrix& m,
                                    std::vector<std::size_t>* free_cols = nullptr);

// One exact solution of m x = b if the system is consistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

RatVector mat_vec(const RatMatrix& m, const RatVector& v);

}  // namespace fol
