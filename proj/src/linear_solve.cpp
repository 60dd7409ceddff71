#include "graphtensor/linear_solve.hpp"

#include "graphtensor/errors.hpp"

#include <utility>

namespace graphtensor {

std::optional<std::vector<Rational>> solve_linear_exact(RationalMatrix m, std::vector<Rational> b) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw ArgumentError("solve_linear_exact: matrix is not square");
    }
    if (b.size() != n) throw ArgumentError("solve_linear_exact: right-hand side has wrong length");

    for (std::size_t col = 0; col < n; ++col) {
        // Any nonzero pivot is exact; prefer the one with the smallest
        // numerator+denominator size to slow coefficient growth.
        std::size_t pivot = n;
        std::size_t best_bits = 0;
        for (std::size_t row = col; row < n; ++row) {
            const Rational& v = m[row][col];
            if (v == 0) continue;
            const std::size_t bits = mpz_sizeinbase(v.get_num_mpz_t(), 2) + mpz_sizeinbase(v.get_den_mpz_t(), 2);
            if (pivot == n || bits < best_bits) {
                pivot = row;
                best_bits = bits;
            }
        }
        if (pivot == n) return std::nullopt;
        std::swap(m[col], m[pivot]);
        std::swap(b[col], b[pivot]);

        const Rational inv = Rational(1) / m[col][col];
        for (std::size_t k = col; k < n; ++k) m[col][k] *= inv;
        b[col] *= inv;

        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rational factor = m[row][col];
            for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
            b[row] -= factor * b[col];
        }
    }
    return b;
}

}  // namespace graphtensor
