#include <doctest.h>

#include "fol/linalg.hpp"
#include "fol/rng.hpp"

using namespace fol;

namespace {

RatMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Rational(rows[r][c]);
    return m;
}

RatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Rational(rng.uniform(-9, 9));
    return m;
}

bool is_zero_vector(const RatVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(RatMatrix::identity(2)) == 2);
    CHECK(rank(RatMatrix(3, 5)) == 0);
    CHECK(rank(from_rows({{1, 2}, {2, 4}}, 2)) == 1);
}

TEST_CASE("kernel basics") {
    CHECK(kernel_basis(RatMatrix::identity(3)).empty());
    CHECK(kernel_basis(RatMatrix(2, 3)).size() == 3);

    RatMatrix m = from_rows({{1, 1, 0}}, 3);
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 2);
    for (const auto& v : k) CHECK(is_zero_vector(mat_vec(m, v)));
}

TEST_CASE("solve basics") {
    RatVector b{Rational(3), Rational(-5)};
    auto x = solve(RatMatrix::identity(2), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    auto y = solve(from_rows({{1, 1}}, 2), {Rational(2)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] + (*y)[1] == Rational(2));

    CHECK(!solve(from_rows({{1}, {1}}, 1), {Rational(0), Rational(1)}).has_value());
}

TEST_CASE("rank + kernel size = cols, kernel vectors annihilated") {
    Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng.uniform(0, 6);
        std::size_t cols = 1 + rng.uniform(0, 6);
        RatMatrix m = random_matrix(rng, rows, cols);
        auto k = kernel_basis(m);
        CHECK(rank(m) + k.size() == cols);
        for (const auto& v : k) CHECK(is_zero_vector(mat_vec(m, v)));
    }
}

TEST_CASE("rank invariant under permutations and row scaling") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 2 + rng.uniform(0, 4);
        std::size_t cols = 2 + rng.uniform(0, 4);
        RatMatrix m = random_matrix(rng, rows, cols);
        std::size_t rk = rank(m);

        RatMatrix perm(rows, cols);
        std::vector<std::size_t> rp(rows), cp(cols);
        for (std::size_t i = 0; i < rows; ++i) rp[i] = i;
        for (std::size_t i = 0; i < cols; ++i) cp[i] = i;
        for (std::size_t i = rows; i > 1; --i) std::swap(rp[i - 1], rp[rng.uniform(0, i - 1)]);
        for (std::size_t i = cols; i > 1; --i) std::swap(cp[i - 1], cp[rng.uniform(0, i - 1)]);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) perm.at(r, c) = m.at(rp[r], cp[c]);
        CHECK(rank(perm) == rk);

        RatMatrix scaled = m;
        for (std::size_t r = 0; r < rows; ++r) {
            Rational s(rng.uniform(1, 5), rng.uniform(1, 5));
            s.canonicalize();
            for (std::size_t c = 0; c < cols; ++c) scaled.at(r, c) *= s;
        }
        CHECK(rank(scaled) == rk);
    }
}

TEST_CASE("solve returns exact solutions on random consistent systems") {
    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = 1 + rng.uniform(0, 5);
        std::size_t cols = 1 + rng.uniform(0, 5);
        RatMatrix m = random_matrix(rng, rows, cols);
        RatVector x0(cols);
        for (auto& v : x0) v = Rational(rng.uniform(-5, 5));
        RatVector b = mat_vec(m, x0);
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(mat_vec(m, *x) == b);
    }
}
