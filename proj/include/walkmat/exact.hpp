#ifndef WALKMAT_EXACT_HPP
#define WALKMAT_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace walkmat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/* Dense arbitrary-precision integer matrix, row-major. Small (<= 64 rows)
   and exact; everything rank/solve related goes through here so that the
   walk-matrix predicates carry no floating-point error at all. */
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static IntMatrix identity(int n);
    IntMatrix column(int c) const;

    bool operator==(const IntMatrix&) const = default;
};

// Rational vector with entries kept normalized (lowest terms, positive
// denominator); cpp_rational maintains that invariant itself.
using RatVector = std::vector<Rat>;

IntMatrix hstack(const IntMatrix& m1, const IntMatrix& m2);

// Rank over Q, computed by fraction-free (Bareiss) elimination with row
// pivoting by nonzero search. Intermediate entries stay integral.
int int_rank(const IntMatrix& m);

// Unique rational solution x of a x = b, where b is a rows x 1 column.
// Returns nullopt when b lies outside the column space of a.
// Throws std::invalid_argument unless a has full column rank.
std::optional<RatVector> solve_rational(const IntMatrix& a, const IntMatrix& b);

// True iff the column spaces of m1 and m2 coincide, decided exactly via
// rank(m1) = rank(m2) = rank([m1 | m2]).
// Throws std::invalid_argument on row count mismatch.
bool column_space_equal(const IntMatrix& m1, const IntMatrix& m2);

} // namespace walkmat

#endif
