#pragma once

// Shared helpers for the test suites: deterministic RNG, random matrix and
// group generators, and small independent oracles (kept separate from the
// library code paths they check).

#include <random>
#include <vector>

#include "g2inv/exactalg.hpp"

namespace testutil {

using g2inv::Int;
using g2inv::IntMatrix;
using g2inv::Rat;
using g2inv::RatMatrix;

using Rng = std::mt19937_64;

inline long rand_in(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntMatrix rand_int_matrix(Rng& rng, int rows, int cols, long bound) {
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rand_in(rng, -bound, bound);
    return m;
}

// Random unimodular matrix as a product of elementary row operations.
inline IntMatrix rand_unimodular(Rng& rng, int n, int ops = 0, long bound = 3) {
    if (ops == 0) ops = 4 * n;
    IntMatrix u = IntMatrix::identity(n);
    for (int s = 0; s < ops; ++s) {
        int i = static_cast<int>(rand_in(rng, 0, n - 1));
        int j = static_cast<int>(rand_in(rng, 0, n - 1));
        if (i == j) {
            if (rand_in(rng, 0, 1)) {
                for (int c = 0; c < n; ++c) u(i, c) = -u(i, c);
            }
            continue;
        }
        Int f = rand_in(rng, -bound, bound);
        for (int c = 0; c < n; ++c) u(i, c) += f * u(j, c);
    }
    return u;
}

// Fraction-free determinant (Bareiss); independent of the library's
// elimination code.
inline Int bareiss_det(IntMatrix m) {
    if (m.rows != m.cols) return 0;
    const int n = m.rows;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (m(r, k) != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

// Determinant of a rational matrix via a common-denominator lift of each row.
inline Rat rat_det_oracle(const RatMatrix& m) {
    IntMatrix lifted(m.rows, m.cols);
    Rat scale = 1;
    for (int i = 0; i < m.rows; ++i) {
        Int den = 1;
        for (int j = 0; j < m.cols; ++j) den = g2inv::lcm(den, m(i, j).get_den());
        scale /= Rat(den);
        for (int j = 0; j < m.cols; ++j) {
            Rat v = m(i, j) * Rat(den);
            lifted(i, j) = v.get_num();
        }
    }
    return Rat(bareiss_det(lifted)) * scale;
}

inline std::vector<Rat> leading_principal_minors(const RatMatrix& m) {
    std::vector<Rat> out;
    for (int k = 1; k <= m.rows; ++k) {
        RatMatrix sub(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub(i, j) = m(i, j);
        out.push_back(rat_det_oracle(sub));
    }
    return out;
}

}  // namespace testutil
