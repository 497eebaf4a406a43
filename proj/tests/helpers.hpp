#pragma once

#include <random>

#include "mmsym/matrix.hpp"
#include "mmsym/symmetry.hpp"

namespace testutil {

using mmsym::ExactMatrix;
using mmsym::Rational;

inline Rational random_rational(std::mt19937& rng, int max_abs = 9, int max_den = 5)
{
    std::uniform_int_distribution<int> num(-max_abs, max_abs);
    std::uniform_int_distribution<int> den(1, max_den);
    Rational value(num(rng), den(rng));
    value.canonicalize();
    return value;
}

inline ExactMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                 int max_abs = 9, int max_den = 5)
{
    ExactMatrix mat(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            mat.at(i, j) = random_rational(rng, max_abs, max_den);
    return mat;
}

/// Random invertible integer matrix (small entries, retry until nonsingular).
inline ExactMatrix random_invertible(std::mt19937& rng, std::size_t n, int max_abs = 3)
{
    std::uniform_int_distribution<int> entry(-max_abs, max_abs);
    while (true) {
        ExactMatrix mat(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                mat.at(i, j) = entry(rng);
        if (mmsym::mat_rank(mat) == n)
            return mat;
    }
}

/// Independent action oracle: applies the element to a decomposable tensor
/// given by its three factors, straight from the defining formulas, without
/// going through the library's normal-form composition.
struct Decomposable {
    ExactMatrix x, y, z;
};

inline Decomposable oracle_apply(const mmsym::IsotropyElement& g, const Decomposable& u)
{
    using mmsym::FactorPermutation;
    using mmsym::mat_inverse;
    using mmsym::mat_mul;
    using mmsym::mat_transpose;
    Decomposable v = u;
    switch (g.sigma) {
    case FactorPermutation::e:
        break;
    case FactorPermutation::s12:
        v = {mat_transpose(u.y), mat_transpose(u.x), mat_transpose(u.z)};
        break;
    case FactorPermutation::s13:
        v = {mat_transpose(u.z), mat_transpose(u.y), mat_transpose(u.x)};
        break;
    case FactorPermutation::s23:
        v = {mat_transpose(u.x), mat_transpose(u.z), mat_transpose(u.y)};
        break;
    case FactorPermutation::c123:
        v = {u.z, u.x, u.y};
        break;
    case FactorPermutation::c132:
        v = {u.y, u.z, u.x};
        break;
    }
    return {mat_mul(mat_mul(g.a, v.x), mat_inverse(g.b)),
            mat_mul(mat_mul(g.b, v.y), mat_inverse(g.c)),
            mat_mul(mat_mul(g.c, v.z), mat_inverse(g.a))};
}

/// Compare two decomposable tensors as tensors: x1⊗y1⊗z1 = x2⊗y2⊗z2 iff all
/// coefficient products agree.
inline bool same_tensor(const Decomposable& lhs, const Decomposable& rhs)
{
    for (std::size_t i1 = 0; i1 < lhs.x.rows() * lhs.x.cols(); ++i1)
        for (std::size_t i2 = 0; i2 < lhs.y.rows() * lhs.y.cols(); ++i2)
            for (std::size_t i3 = 0; i3 < lhs.z.rows() * lhs.z.cols(); ++i3) {
                Rational a = lhs.x.at(i1 / lhs.x.cols(), i1 % lhs.x.cols()) *
                             lhs.y.at(i2 / lhs.y.cols(), i2 % lhs.y.cols()) *
                             lhs.z.at(i3 / lhs.z.cols(), i3 % lhs.z.cols());
                Rational b = rhs.x.at(i1 / rhs.x.cols(), i1 % rhs.x.cols()) *
                             rhs.y.at(i2 / rhs.y.cols(), i2 % rhs.y.cols()) *
                             rhs.z.at(i3 / rhs.z.cols(), i3 % rhs.z.cols());
                if (a != b)
                    return false;
            }
    return true;
}

} // namespace testutil
