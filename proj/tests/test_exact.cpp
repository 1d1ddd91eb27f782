#include "doctest.h"

#include <random>
#include <stdexcept>

#include "walkmat/exact.hpp"

#include "oracles.hpp"

using walkmat::Int;
using walkmat::IntMatrix;
using walkmat::Rat;

namespace {

IntMatrix random_matrix(int rows, int cols, std::mt19937& rng, int span = 9) {
    std::uniform_int_distribution<int> entry(-span, span);
    IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = entry(rng);
    return m;
}

IntMatrix product(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < b.cols; ++c) {
            Int acc = 0;
            for (int k = 0; k < a.cols; ++k) acc += a.at(r, k) * b.at(k, c);
            m.at(r, c) = acc;
        }
    return m;
}

} // namespace

TEST_CASE("identity and hstack shapes") {
    IntMatrix id = IntMatrix::identity(3);
    CHECK(id.rows == 3);
    CHECK(id.cols == 3);
    CHECK(id.at(1, 1) == 1);
    CHECK(id.at(1, 2) == 0);

    IntMatrix m(3, 2);
    m.at(0, 0) = 5;
    IntMatrix st = walkmat::hstack(id, m);
    CHECK(st.rows == 3);
    CHECK(st.cols == 5);
    CHECK(st.at(0, 0) == 1);
    CHECK(st.at(0, 3) == 5);
    CHECK(st.column(3).at(0, 0) == 5);
}

TEST_CASE("rank agrees with naive rational elimination on random matrices") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 7);
        int cols = 1 + static_cast<int>(rng() % 7);
        IntMatrix m = random_matrix(rows, cols, rng, trial % 2 ? 2 : 40);
        CHECK(walkmat::int_rank(m) == oracles::naive_rational_rank(m));
    }
}

TEST_CASE("rank of engineered low-rank products") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        int inner = 1 + static_cast<int>(rng() % 3);
        IntMatrix m = product(random_matrix(6, inner, rng),
                              random_matrix(inner, 5, rng));
        int r = walkmat::int_rank(m);
        CHECK(r <= inner);
        CHECK(r == oracles::naive_rational_rank(m));
    }
    CHECK(walkmat::int_rank(IntMatrix(4, 3)) == 0);
    CHECK(walkmat::int_rank(IntMatrix::identity(5)) == 5);
}

TEST_CASE("solve recovers a planted rational solution") {
    std::mt19937 rng(47);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = 3 + static_cast<int>(rng() % 4);
        int cols = 1 + static_cast<int>(rng() % rows);
        IntMatrix a = random_matrix(rows, cols, rng);
        if (walkmat::int_rank(a) < cols) continue;
        std::vector<Rat> x(cols);
        for (auto& v : x) v = Rat(num(rng), den(rng));
        IntMatrix b(rows, 1);
        // b = a x, scaled by the common denominator to stay integral.
        Int scale = 1;
        for (const auto& v : x) scale *= denominator(v);
        for (int r = 0; r < rows; ++r) {
            Rat acc = 0;
            for (int c = 0; c < cols; ++c) acc += Rat(a.at(r, c)) * x[c];
            acc *= scale;
            REQUIRE(denominator(acc) == 1);
            b.at(r, 0) = numerator(acc);
        }
        auto sol = walkmat::solve_rational(a, b);
        REQUIRE(sol.has_value());
        REQUIRE(sol->size() == x.size());
        for (size_t c = 0; c < x.size(); ++c) CHECK((*sol)[c] == x[c] * scale);
    }
}

TEST_CASE("solve reports vectors outside the column space") {
    IntMatrix a(3, 1);
    a.at(0, 0) = 1;
    a.at(1, 0) = 1;
    a.at(2, 0) = 1;
    IntMatrix b(3, 1);
    b.at(0, 0) = 1;
    b.at(1, 0) = 2;
    b.at(2, 0) = 1;
    CHECK(!walkmat::solve_rational(a, b).has_value());
    b.at(1, 0) = 1;
    auto sol = walkmat::solve_rational(a, b);
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 1);
}

TEST_CASE("solve requires full column rank") {
    IntMatrix a(3, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 2;
    a.at(1, 0) = 2;
    a.at(1, 1) = 4;
    a.at(2, 0) = 3;
    a.at(2, 1) = 6;
    IntMatrix b(3, 1);
    CHECK_THROWS_AS(static_cast<void>(walkmat::solve_rational(a, b)),
                    std::invalid_argument);
}

TEST_CASE("column space equality is invariant under column operations") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix m = random_matrix(6, 3, rng);
        // Unimodular column mix: c0 += 2 c1, swap c1/c2, negate c2.
        IntMatrix mixed = m;
        for (int r = 0; r < 6; ++r) {
            mixed.at(r, 0) = m.at(r, 0) + 2 * m.at(r, 1);
            mixed.at(r, 1) = m.at(r, 2);
            mixed.at(r, 2) = -m.at(r, 1);
        }
        CHECK(walkmat::column_space_equal(m, mixed));
    }
}

TEST_CASE("column space equality distinguishes genuinely different spaces") {
    IntMatrix a(3, 1), b(3, 1);
    a.at(0, 0) = 1;
    b.at(1, 0) = 1;
    CHECK(!walkmat::column_space_equal(a, b));
    CHECK(walkmat::column_space_equal(a, a));

    // Same rank, different span.
    IntMatrix c(3, 2), d(3, 2);
    c.at(0, 0) = 1;
    c.at(1, 1) = 1;
    d.at(0, 0) = 1;
    d.at(2, 1) = 1;
    CHECK(!walkmat::column_space_equal(c, d));

    IntMatrix e(4, 1);
    CHECK_THROWS_AS(static_cast<void>(walkmat::column_space_equal(a, e)),
                    std::invalid_argument);
}
