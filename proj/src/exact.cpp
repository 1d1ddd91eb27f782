#include "walkmat/exact.hpp"

#include <stdexcept>
#include <utility>

namespace walkmat {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::column(int c) const {
    IntMatrix m(rows, 1);
    for (int i = 0; i < rows; ++i) m.at(i, 0) = at(i, c);
    return m;
}

IntMatrix hstack(const IntMatrix& m1, const IntMatrix& m2) {
    if (m1.rows != m2.rows)
        throw std::invalid_argument("hstack: row count mismatch");
    IntMatrix m(m1.rows, m1.cols + m2.cols);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m1.cols; ++j) m.at(i, j) = m1.at(i, j);
        for (int j = 0; j < m2.cols; ++j) m.at(i, m1.cols + j) = m2.at(i, j);
    }
    return m;
}

int int_rank(const IntMatrix& m) {
    IntMatrix w = m;
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < w.cols && r < w.rows; ++c) {
        int piv = -1;
        for (int i = r; i < w.rows; ++i) {
            if (w.at(i, c) != 0) { piv = i; break; }
        }
        // A column with no pivot is zero below row r and stays zero: later
        // update loops only touch columns right of their pivot.
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = c; j < w.cols; ++j) std::swap(w.at(r, j), w.at(piv, j));
        }
        for (int i = r + 1; i < w.rows; ++i) {
            for (int j = c + 1; j < w.cols; ++j) {
                // Exact by Sylvester's identity: entries are minors of the
                // pivot-column submatrix, each divisible by the previous pivot.
                w.at(i, j) = (w.at(r, c) * w.at(i, j) - w.at(i, c) * w.at(r, j)) / prev;
            }
            w.at(i, c) = 0;
        }
        prev = w.at(r, c);
        ++r;
    }
    return r;
}

std::optional<RatVector> solve_rational(const IntMatrix& a, const IntMatrix& b) {
    if (b.rows != a.rows || b.cols != 1)
        throw std::invalid_argument("solve_rational: b must be a matching column");

    const int n = a.rows, m = a.cols;
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(m + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) w[i][j] = Rat(a.at(i, j));
        w[i][m] = Rat(b.at(i, 0));
    }

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < m && r < n; ++c) {
        int piv = -1;
        for (int i = r; i < n; ++i) {
            if (w[i][c] != 0) { piv = i; break; }
        }
        if (piv < 0) continue;
        std::swap(w[piv], w[r]);
        for (int i = r + 1; i < n; ++i) {
            if (w[i][c] == 0) continue;
            Rat f = w[i][c] / w[r][c];
            w[i][c] = 0;
            for (int j = c + 1; j <= m; ++j) w[i][j] -= f * w[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r < m)
        throw std::invalid_argument("solve_rational: matrix is column rank deficient");

    for (int i = r; i < n; ++i) {
        if (w[i][m] != 0) return std::nullopt; // b not in the column space
    }

    RatVector x(m);
    for (int k = m - 1; k >= 0; --k) {
        int c = pivot_col[k]; // full column rank: pivot_col[k] == k
        Rat s = w[k][m];
        for (int j = c + 1; j < m; ++j) s -= w[k][j] * x[j];
        x[c] = s / w[k][c];
    }
    return x;
}

bool column_space_equal(const IntMatrix& m1, const IntMatrix& m2) {
    if (m1.rows != m2.rows)
        throw std::invalid_argument("column_space_equal: row count mismatch");
    int r1 = int_rank(m1);
    int r2 = int_rank(m2);
    if (r1 != r2) return false;
    return int_rank(hstack(m1, m2)) == r1;
}

} // namespace walkmat
