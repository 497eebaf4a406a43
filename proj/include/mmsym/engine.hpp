#pragma once

#include <cstddef>
#include <utility>

#include "mmsym/algebra.hpp"

namespace mmsym {

/// Operation counters for one execution.  Multiplications by coefficients
/// other than ±1 are scalar_mults; the r algorithm products (and products
/// inside naive base cases) are nonscalar_mults.
struct OpCount {
    unsigned long long nonscalar_mults = 0;
    unsigned long long scalar_mults = 0;
    unsigned long long additions = 0;

    OpCount& operator+=(const OpCount& other)
    {
        nonscalar_mults += other.nonscalar_mults;
        scalar_mults += other.scalar_mults;
        additions += other.additions;
        return *this;
    }
};

/// One level of the algorithm on scalar entries: X is m×n, Y is n×p.
/// Counts the literal three-phase evaluation (left combinations, r products,
/// output combinations) without expression optimization.
std::pair<ExactMatrix, OpCount> multiply_once(const BilinearAlgorithm& alg,
                                              const ExactMatrix& x, const ExactMatrix& y);

/// Recursive application of a square-format (q,q,q) algorithm to N×N
/// matrices; pads N up to the next power of q and switches to naive
/// multiplication at sizes ≤ cutoff.
std::pair<ExactMatrix, OpCount> multiply_recursive(const BilinearAlgorithm& alg,
                                                   const ExactMatrix& x, const ExactMatrix& y,
                                                   std::size_t cutoff = 1);

/// The complexity exponent 3·ln(r)/ln(mnp).
double exponent_estimate(const BilinearAlgorithm& alg);

} // namespace mmsym
