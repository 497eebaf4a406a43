#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "mmsym/engine.hpp"
#include "mmsym/errors.hpp"

using namespace mmsym;

namespace {

ExactMatrix plain_product(const ExactMatrix& x, const ExactMatrix& y)
{
    return mat_mul(x, y);
}

} // namespace

TEST_CASE("one level of Strassen on the identity")
{
    ExactMatrix i2 = ExactMatrix::identity(2);
    auto [product, ops] = multiply_once(strassen(), i2, i2);
    CHECK(product == i2);
    CHECK(ops.nonscalar_mults == 7);
    CHECK(ops.scalar_mults == 0); // all coefficients are ±1
    CHECK(ops.additions == 18);   // 10 input combinations + 8 output combinations
}

TEST_CASE("one level of the rectangular algorithm")
{
    std::mt19937 rng(11);
    ExactMatrix x = testutil::random_matrix(rng, 3, 2);
    ExactMatrix y = testutil::random_matrix(rng, 2, 3);
    auto [product, ops] = multiply_once(hopcroft(), x, y);
    CHECK(product == plain_product(x, y));
    CHECK(ops.nonscalar_mults == 15);
    CHECK(ops.scalar_mults == 0);

    CHECK_THROWS_AS(multiply_once(hopcroft(), y, x), shape_error);
}

TEST_CASE("one level of Laderman on a dense example")
{
    ExactMatrix ones(3, 3), threes(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            ones.at(i, j) = 1;
            threes.at(i, j) = 3;
        }
    auto [product, ops] = multiply_once(laderman(), ones, ones);
    CHECK(product == threes);
    CHECK(ops.nonscalar_mults == 23);
}

TEST_CASE("one level matches plain multiplication on random inputs")
{
    std::mt19937 rng(987);
    for (const BilinearAlgorithm& alg :
         {strassen(), laderman(), hopcroft(), naive(2, 3, 4)}) {
        for (int trial = 0; trial < 500; ++trial) {
            ExactMatrix x = testutil::random_matrix(rng, alg.m, alg.n);
            ExactMatrix y = testutil::random_matrix(rng, alg.n, alg.p);
            auto [product, ops] = multiply_once(alg, x, y);
            CHECK(product == plain_product(x, y));
            CHECK(ops.nonscalar_mults == alg.r());
        }
    }
}

TEST_CASE("recursive Strassen: correctness and multiplication counts")
{
    std::mt19937 rng(2718);
    // full recursion to scalars: 7^k nonscalar multiplications for N = 2^k
    for (std::size_t k = 0; k <= 5; ++k) {
        std::size_t n = std::size_t{1} << k;
        ExactMatrix x = testutil::random_matrix(rng, n, n, 4, 2);
        ExactMatrix y = testutil::random_matrix(rng, n, n, 4, 2);
        auto [product, ops] = multiply_recursive(strassen(), x, y, 1);
        CHECK(product == plain_product(x, y));
        unsigned long long expected = 1;
        for (std::size_t i = 0; i < k; ++i)
            expected *= 7;
        CHECK(ops.nonscalar_mults == expected);
    }

    // non-power-of-two size pads up: N=3 behaves like N=4
    ExactMatrix x = testutil::random_matrix(rng, 3, 3);
    ExactMatrix y = testutil::random_matrix(rng, 3, 3);
    auto [product, ops] = multiply_recursive(strassen(), x, y, 1);
    CHECK(product == plain_product(x, y));
    CHECK(ops.nonscalar_mults == 49);

    // 1x1 input needs exactly one multiplication
    ExactMatrix a(1, 1), b(1, 1);
    a.at(0, 0) = Rational(3, 2);
    b.at(0, 0) = Rational(-4, 5);
    auto [scalar, one_op] = multiply_recursive(strassen(), a, b, 1);
    CHECK(scalar.at(0, 0) == Rational(-6, 5));
    CHECK(one_op.nonscalar_mults == 1);
    CHECK(one_op.additions == 0);
}

TEST_CASE("recursive execution is correct for every cutoff")
{
    std::mt19937 rng(31415);
    for (std::size_t n : {5, 8, 9}) {
        ExactMatrix x = testutil::random_matrix(rng, n, n, 4, 2);
        ExactMatrix y = testutil::random_matrix(rng, n, n, 4, 2);
        ExactMatrix expected = plain_product(x, y);
        for (std::size_t cutoff : {1, 2, 4, 16}) {
            auto [product, ops] = multiply_recursive(strassen(), x, y, cutoff);
            CHECK(product == expected);
        }
        auto [p3, ops3] = multiply_recursive(laderman(), x, y, 1);
        CHECK(p3 == expected);
    }
    // larger cutoff means fewer recursion levels, so fewer multiplications
    // are saved: at cutoff >= N the count is the naive N^3 (after padding)
    ExactMatrix x = testutil::random_matrix(rng, 4, 4);
    ExactMatrix y = testutil::random_matrix(rng, 4, 4);
    CHECK(multiply_recursive(strassen(), x, y, 4).second.nonscalar_mults == 64);
    CHECK(multiply_recursive(strassen(), x, y, 2).second.nonscalar_mults == 7 * 8);
    CHECK(multiply_recursive(strassen(), x, y, 1).second.nonscalar_mults == 49);

    // rectangular algorithms are rejected by the recursive driver
    CHECK_THROWS_AS(multiply_recursive(hopcroft(), x, y, 1), shape_error);
}

TEST_CASE("complexity exponents")
{
    CHECK(exponent_estimate(strassen()) ==
          doctest::Approx(std::log(7.0) / std::log(2.0)).epsilon(1e-12));
    CHECK(exponent_estimate(naive(2, 2, 2)) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(exponent_estimate(laderman()) ==
          doctest::Approx(3.0 * std::log(23.0) / std::log(27.0)).epsilon(1e-12));
    CHECK(exponent_estimate(hopcroft()) ==
          doctest::Approx(3.0 * std::log(15.0) / std::log(18.0)).epsilon(1e-12));
    CHECK(exponent_estimate(strassen()) < 2.807354925);
    CHECK(exponent_estimate(strassen()) > 2.807354920);

    CHECK_THROWS_AS(exponent_estimate(naive(1, 1, 1)), domain_error);
}
