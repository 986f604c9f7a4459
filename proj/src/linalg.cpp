#include "fol/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace fol {

RatMatrix RatMatrix::without_zero_rows() const {
    std::vector<std::size_t> keep;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (at(r, c) != 0) {
                keep.push_back(r);
                break;
            }
        }
    }
    RatMatrix out(keep.size(), cols_);
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c) out.at(i, c) = at(keep[i], c);
    return out;
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

namespace {

// Integer row-echelon state produced by Bareiss elimination. Rows are
// content-stripped on entry; from then on all divisions are exact.
struct Echelon {
    std::vector<std::vector<Integer>> rows;
    std::vector<std::size_t> pivot_col;  // per echelon row, increasing
    std::size_t cols = 0;
};

std::vector<std::vector<Integer>> integerize(const RatMatrix& m) {
    std::vector<std::vector<Integer>> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer den(1);
        for (std::size_t c = 0; c < m.cols(); ++c)
            den = lcm(den, denominator(m.at(r, c)));
        std::vector<Integer> row(m.cols());
        Integer content(0);
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row[c] = numerator(m.at(r, c)) * (den / denominator(m.at(r, c)));
            content = gcd(content, row[c]);
        }
        if (content > 1)
            for (auto& e : row) e /= content;
        rows.push_back(std::move(row));
    }
    return rows;
}

Echelon bareiss(const RatMatrix& m) {
    Echelon e;
    e.cols = m.cols();
    auto rows = integerize(m);
    std::size_t nrows = rows.size();
    std::size_t lead = 0;  // next echelon row
    Integer prev(1);
    for (std::size_t col = 0; col < e.cols && lead < nrows; ++col) {
        // first maximal-absolute-value pivot in this column
        std::size_t piv = nrows;
        for (std::size_t r = lead; r < nrows; ++r) {
            if (rows[r][col] == 0) continue;
            if (piv == nrows ||
                mpz_cmpabs(rows[r][col].get_mpz_t(), rows[piv][col].get_mpz_t()) > 0)
                piv = r;
        }
        if (piv == nrows) continue;
        std::swap(rows[lead], rows[piv]);
        const Integer p = rows[lead][col];
        for (std::size_t r = lead + 1; r < nrows; ++r) {
            Integer f = rows[r][col];
            for (std::size_t c = col + 1; c < e.cols; ++c) {
                if (f == 0) {
                    if (rows[r][c] != 0) rows[r][c] = rows[r][c] * p / prev;
                } else {
                    rows[r][c] = (rows[r][c] * p - f * rows[lead][c]) / prev;
                }
            }
            rows[r][col] = 0;
        }
        prev = p;
        e.pivot_col.push_back(col);
        ++lead;
    }
    rows.resize(lead);
    e.rows = std::move(rows);
    return e;
}

// Back-substitution against the echelon rows: express the dependent (pivot)
// coordinates of a vector whose free coordinates are prescribed.
RatVector back_substitute(const Echelon& e, const RatVector& seed) {
    RatVector x = seed;
    for (std::size_t i = e.rows.size(); i-- > 0;) {
        std::size_t pc = e.pivot_col[i];
        Rational acc(0);
        for (std::size_t c = pc + 1; c < e.cols; ++c) {
            if (e.rows[i][c] != 0 && x[c] != 0) acc += Rational(e.rows[i][c]) * x[c];
        }
        x[pc] = -acc / Rational(e.rows[i][pc]);
    }
    return x;
}

}  // namespace

std::size_t rank(const RatMatrix& m) { return bareiss(m.without_zero_rows()).pivot_col.size(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m, std::vector<std::size_t>* free_cols) {
    Echelon e = bareiss(m.without_zero_rows());
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t pc : e.pivot_col) is_pivot[pc] = true;
    std::vector<RatVector> basis;
    if (free_cols) free_cols->clear();
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVector seed(m.cols(), Rational(0));
        seed[free] = 1;
        basis.push_back(back_substitute(e, seed));
        if (free_cols) free_cols->push_back(free);
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: length of b != rows");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    Echelon e = bareiss(aug.without_zero_rows());
    for (std::size_t pc : e.pivot_col)
        if (pc == m.cols()) return std::nullopt;  // pivot in the b column: inconsistent
    // particular solution: free variables zero, augmented column -1 so that
    // [M | b] (x, -1) = 0 gives M x = b
    RatVector seed(m.cols() + 1, Rational(0));
    seed[m.cols()] = -1;
    RatVector x = back_substitute(e, seed);
    x.resize(m.cols());
    return x;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("mat_vec: size mismatch");
    RatVector out(m.rows(), Rational(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0 && v[c] != 0) out[r] += m.at(r, c) * v[c];
    return out;
}

}  // namespace fol
