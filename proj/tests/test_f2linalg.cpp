#include <doctest.h>

#include <kocalc/f2linalg.hpp>

#include <random>

using namespace kocalc;

namespace {

F2Matrix from_rows(std::size_t cols, const std::vector<std::vector<int>>& rows)
{
    F2Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c : rows[r])
            m.set(r, std::size_t(c));
    return m;
}

F2Matrix identity(std::size_t n)
{
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

F2Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols)
{
    F2Matrix m(rows, cols);
    std::bernoulli_distribution bit(0.4);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng))
                m.set(r, c);
    return m;
}

} // namespace

TEST_CASE("rank")
{
    CHECK(rank(identity(3)) == 3);
    CHECK(rank(from_rows(2, {{0, 1}, {0, 1}})) == 1);  /* duplicate rows cancel */
    CHECK(rank(F2Matrix(4, 3)) == 0);
    CHECK(rank(F2Matrix(0, 5)) == 0);
    CHECK(rank(F2Matrix(5, 0)) == 0);
}

TEST_CASE("kernel_basis")
{
    CHECK(kernel_basis(F2Matrix(2, 3)).size() == 3);

    std::vector<F2Vector> k = kernel_basis(from_rows(2, {{0, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0].get(0));
    CHECK(k[0].get(1));

    CHECK(kernel_basis(identity(4)).empty());
}

TEST_CASE("row_echelon")
{
    EchelonForm e = row_echelon(identity(3));
    CHECK(e.matrix == identity(3));
    CHECK(e.pivots == std::vector<std::size_t>{0, 1, 2});

    e = row_echelon(from_rows(2, {{1}, {1}}));
    CHECK(e.pivots == std::vector<std::size_t>{1});
    CHECK(e.matrix.get(0, 1));
    CHECK(e.matrix.row(1).is_zero());
}

TEST_CASE("properties on random matrices")
{
    std::mt19937 rng(20110846);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + std::size_t(rng() % 10);
        std::size_t cols = 1 + std::size_t(rng() % 10);
        F2Matrix m = random_matrix(rng, rows, cols);

        std::size_t r = rank(m);
        std::vector<F2Vector> kernel = kernel_basis(m);
        CHECK(r + kernel.size() == cols);

        for (const F2Vector& v : kernel)
            CHECK(m.apply(v).is_zero());

        EchelonForm e = row_echelon(m);
        CHECK(rank(e.matrix) == r);
        CHECK(e.pivots.size() == r);
        for (std::size_t i = 1; i < e.pivots.size(); ++i)
            CHECK(e.pivots[i - 1] < e.pivots[i]);

        /* idempotent */
        EchelonForm e2 = row_echelon(e.matrix);
        CHECK(e2.matrix == e.matrix);
        CHECK(e2.pivots == e.pivots);

        /* reduced: pivot columns have a single 1 */
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            for (std::size_t row = 0; row < e.matrix.rows(); ++row)
                CHECK(e.matrix.get(row, e.pivots[i]) == (row == i));
    }
}

TEST_CASE("matrix product")
{
    std::mt19937 rng(4255);
    F2Matrix a = random_matrix(rng, 5, 7);
    F2Matrix b = random_matrix(rng, 7, 4);
    F2Matrix ab = a * b;
    REQUIRE(ab.rows() == 5);
    REQUIRE(ab.cols() == 4);
    for (std::size_t r = 0; r < 5; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            bool expect = false;
            for (std::size_t k = 0; k < 7; ++k)
                expect ^= a.get(r, k) && b.get(k, c);
            CHECK(ab.get(r, c) == expect);
        }
    }
}
