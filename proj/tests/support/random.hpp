#pragma once

#include "ci2/exact/matrix.hpp"

#include <random>

namespace testing_support {

/// Random matrix with nonzero determinant.
inline ci2::Matrix random_invertible(ci2::Field f, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        ci2::Matrix a = ci2::random_matrix(f, n, n, rng);
        if (a.rank() == n) return a;
    }
}

/// P^T diag(d) P with the given number of nonzero diagonal entries.
inline ci2::Matrix random_symmetric_of_rank(ci2::Field f, std::size_t n, std::size_t r, std::mt19937_64& rng) {
    ci2::Matrix d(f, n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = ci2::Scalar::zero(f);
    for (std::size_t i = 0; i < r; ++i) {
        ci2::Scalar s = ci2::random_scalar(f, rng);
        while (s.is_zero()) s = ci2::random_scalar(f, rng);
        d(i, i) = s;
    }
    const ci2::Matrix p = random_invertible(f, n, rng);
    return p.transpose() * d * p;
}

}  // namespace testing_support
