#pragma once

// Shared helpers for the test suites: deterministic random matrices and a
// few reference (oracle) computations kept independent of the library's
// main code paths.

#include <random>

#include "mukailat/int_matrix.hpp"
#include "mukailat/lattice.hpp"

namespace mukailat::testing {

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                               int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

/// Determinant by cofactor expansion; independent of the Bareiss routine.
inline Int cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                minor(i - 1, cc++) = m(i, k);
            }
        }
        const Int term = m(0, j) * cofactor_det(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

/// Brute-force box enumeration of vectors of a given norm; the independent
/// oracle for the Fincke-Pohst path on small definite lattices.
inline std::vector<IntVec> box_norm_oracle(const Lattice& l, const Int& n, long box) {
    std::vector<IntVec> out;
    const std::size_t rank = l.rank();
    IntVec v(rank, Int(-box));
    for (;;) {
        if (l.norm(v) == n) out.push_back(v);
        std::size_t i = rank;
        while (i > 0 && v[i - 1] == box) v[--i] = Int(-box);
        if (i == 0) break;
        ++v[i - 1];
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mukailat::testing
