#include "mmsym/engine.hpp"

#include <cmath>

#include "mmsym/errors.hpp"

namespace mmsym {

namespace {

bool is_plus_minus_one(const Rational& v)
{
    return v == 1 || v == -1;
}

} // namespace

std::pair<ExactMatrix, OpCount> multiply_once(const BilinearAlgorithm& alg,
                                              const ExactMatrix& x, const ExactMatrix& y)
{
    alg.validate();
    if (x.rows() != alg.m || x.cols() != alg.n || y.rows() != alg.n || y.cols() != alg.p)
        throw shape_error("operand shapes do not match the algorithm format");
    OpCount count;
    const std::size_t r = alg.r();
    std::vector<Rational> products(r);
    for (std::size_t l = 0; l < r; ++l) {
        const Triple& t = alg.triples[l];
        Rational d = 0, f = 0;
        std::size_t terms;
        terms = 0;
        for (std::size_t u = 0; u < alg.m; ++u)
            for (std::size_t v = 0; v < alg.n; ++v) {
                const Rational& coeff = t.a.at(u, v);
                if (coeff == 0)
                    continue;
                d += coeff * x.at(u, v);
                if (!is_plus_minus_one(coeff))
                    ++count.scalar_mults;
                ++terms;
            }
        if (terms > 0)
            count.additions += terms - 1;
        terms = 0;
        for (std::size_t v = 0; v < alg.n; ++v)
            for (std::size_t w = 0; w < alg.p; ++w) {
                const Rational& coeff = t.b.at(v, w);
                if (coeff == 0)
                    continue;
                f += coeff * y.at(v, w);
                if (!is_plus_minus_one(coeff))
                    ++count.scalar_mults;
                ++terms;
            }
        if (terms > 0)
            count.additions += terms - 1;
        products[l] = d * f;
        ++count.nonscalar_mults;
    }
    ExactMatrix z(alg.m, alg.p);
    for (std::size_t i = 0; i < alg.m; ++i)
        for (std::size_t k = 0; k < alg.p; ++k) {
            std::size_t terms = 0;
            for (std::size_t l = 0; l < r; ++l) {
                const Rational& coeff = alg.triples[l].c.at(i, k);
                if (coeff == 0)
                    continue;
                z.at(i, k) += coeff * products[l];
                if (!is_plus_minus_one(coeff))
                    ++count.scalar_mults;
                ++terms;
            }
            if (terms > 0)
                count.additions += terms - 1;
        }
    return {z, count};
}

namespace {

ExactMatrix block_of(const ExactMatrix& mat, std::size_t bi, std::size_t bj, std::size_t size)
{
    ExactMatrix block(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            block.at(i, j) = mat.at(bi * size + i, bj * size + j);
    return block;
}

void add_scaled_block(ExactMatrix& acc, const ExactMatrix& block, const Rational& coeff,
                      bool first_term, OpCount& count)
{
    const std::size_t cells = block.rows() * block.cols();
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) {
            if (first_term)
                acc.at(i, j) = coeff * block.at(i, j);
            else
                acc.at(i, j) += coeff * block.at(i, j);
        }
    if (!is_plus_minus_one(coeff))
        count.scalar_mults += cells;
    if (!first_term)
        count.additions += cells;
}

ExactMatrix naive_multiply(const ExactMatrix& x, const ExactMatrix& y, OpCount& count)
{
    const std::size_t size = x.rows();
    ExactMatrix z(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t k = 0; k < size; ++k)
            for (std::size_t j = 0; j < size; ++j)
                z.at(i, k) += x.at(i, j) * y.at(j, k);
    count.nonscalar_mults += size * size * size;
    count.additions += size * size * (size - 1);
    return z;
}

ExactMatrix recurse(const BilinearAlgorithm& alg, const ExactMatrix& x, const ExactMatrix& y,
                    std::size_t cutoff, OpCount& count)
{
    const std::size_t size = x.rows();
    if (size <= cutoff)
        return naive_multiply(x, y, count);
    const std::size_t q = alg.m;
    const std::size_t sub = size / q;
    std::vector<std::vector<ExactMatrix>> xb(q, std::vector<ExactMatrix>(q));
    std::vector<std::vector<ExactMatrix>> yb(q, std::vector<ExactMatrix>(q));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            xb[i][j] = block_of(x, i, j, sub);
            yb[i][j] = block_of(y, i, j, sub);
        }
    std::vector<ExactMatrix> products(alg.r());
    for (std::size_t l = 0; l < alg.r(); ++l) {
        const Triple& t = alg.triples[l];
        ExactMatrix d(sub, sub), f(sub, sub);
        bool first = true;
        for (std::size_t u = 0; u < q; ++u)
            for (std::size_t v = 0; v < q; ++v) {
                const Rational& coeff = t.a.at(u, v);
                if (coeff == 0)
                    continue;
                add_scaled_block(d, xb[u][v], coeff, first, count);
                first = false;
            }
        first = true;
        for (std::size_t v = 0; v < q; ++v)
            for (std::size_t w = 0; w < q; ++w) {
                const Rational& coeff = t.b.at(v, w);
                if (coeff == 0)
                    continue;
                add_scaled_block(f, yb[v][w], coeff, first, count);
                first = false;
            }
        products[l] = recurse(alg, d, f, cutoff, count);
    }
    ExactMatrix z(size, size);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t k = 0; k < q; ++k) {
            ExactMatrix acc(sub, sub);
            bool first = true;
            for (std::size_t l = 0; l < alg.r(); ++l) {
                const Rational& coeff = alg.triples[l].c.at(i, k);
                if (coeff == 0)
                    continue;
                add_scaled_block(acc, products[l], coeff, first, count);
                first = false;
            }
            for (std::size_t bi = 0; bi < sub; ++bi)
                for (std::size_t bj = 0; bj < sub; ++bj)
                    z.at(i * sub + bi, k * sub + bj) = acc.at(bi, bj);
        }
    return z;
}

} // namespace

std::pair<ExactMatrix, OpCount> multiply_recursive(const BilinearAlgorithm& alg,
                                                   const ExactMatrix& x, const ExactMatrix& y,
                                                   std::size_t cutoff)
{
    alg.validate();
    if (alg.m != alg.n || alg.n != alg.p)
        throw shape_error("recursive multiplication needs a square-format algorithm");
    if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows())
        throw shape_error("recursive multiplication needs square operands of equal size");
    const std::size_t n = x.rows();
    if (n == 0)
        throw shape_error("operands must be nonempty");
    if (cutoff == 0)
        cutoff = 1;
    const std::size_t q = alg.m;
    std::size_t padded = 1;
    while (padded < n)
        padded *= q;
    OpCount count;
    ExactMatrix xp(padded, padded), yp(padded, padded);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            xp.at(i, j) = x.at(i, j);
            yp.at(i, j) = y.at(i, j);
        }
    ExactMatrix zp = recurse(alg, xp, yp, cutoff, count);
    ExactMatrix z(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            z.at(i, j) = zp.at(i, j);
    return {z, count};
}

double exponent_estimate(const BilinearAlgorithm& alg)
{
    const std::size_t mnp = alg.m * alg.n * alg.p;
    if (mnp < 2)
        throw domain_error("exponent estimate needs mnp >= 2");
    long double value = 3.0L * std::log(static_cast<long double>(alg.r())) /
                        std::log(static_cast<long double>(mnp));
    return static_cast<double>(value);
}

} // namespace mmsym
