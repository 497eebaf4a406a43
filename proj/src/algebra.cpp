#include "mmsym/algebra.hpp"

#include <sstream>

#include "mmsym/errors.hpp"

namespace mmsym {

bool Triple::operator<(const Triple& other) const
{
    if (a != other.a)
        return a < other.a;
    if (b != other.b)
        return b < other.b;
    return c < other.c;
}

std::string Triple::to_key() const
{
    return a.to_key() + "|" + b.to_key() + "|" + c.to_key();
}

Triple Triple::canonical() const
{
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw contract_error("triple with a zero factor cannot be canonicalized");
    Rational la = a.leading_entry();
    Rational lb = b.leading_entry();
    return Triple{a.scaled(1 / la), b.scaled(1 / lb), c.scaled(la * lb)};
}

void BilinearAlgorithm::validate() const
{
    if (m == 0 || n == 0 || p == 0)
        throw contract_error("algorithm format must be positive");
    if (triples.empty())
        throw contract_error("algorithm must have at least one triple");
    for (std::size_t l = 0; l < triples.size(); ++l) {
        const Triple& t = triples[l];
        std::ostringstream where;
        where << "triple " << (l + 1);
        if (t.a.rows() != m || t.a.cols() != n ||
            t.b.rows() != n || t.b.cols() != p ||
            t.c.rows() != m || t.c.cols() != p)
            throw shape_error(where.str() + " does not conform to the algorithm format");
        if (t.a.is_zero() || t.b.is_zero() || t.c.is_zero())
            throw contract_error(where.str() + " has a zero factor");
    }
}

std::size_t TensorElement::nonzero_count() const
{
    std::size_t count = 0;
    for (const Rational& v : coeff)
        if (v != 0)
            ++count;
    return count;
}

TensorElement mmp_tensor(std::size_t m, std::size_t n, std::size_t p)
{
    if (m == 0 || n == 0 || p == 0)
        throw domain_error("structure tensor requires positive dimensions");
    TensorElement t(m, n, p);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < p; ++k)
                t.at(i * n + j, j * p + k, k * m + i) = 1;
    return t;
}

TensorElement triple_tensor(const Triple& t, std::size_t m, std::size_t n, std::size_t p)
{
    TensorElement result(m, n, p);
    ExactMatrix ct = mat_transpose(t.c); // p×m third factor
    for (std::size_t i1 = 0; i1 < m * n; ++i1) {
        const Rational& va = t.a.at(i1 / n, i1 % n);
        if (va == 0)
            continue;
        for (std::size_t i2 = 0; i2 < n * p; ++i2) {
            const Rational& vb = t.b.at(i2 / p, i2 % p);
            if (vb == 0)
                continue;
            Rational vab = va * vb;
            for (std::size_t i3 = 0; i3 < p * m; ++i3) {
                const Rational& vc = ct.at(i3 / m, i3 % m);
                if (vc != 0)
                    result.at(i1, i2, i3) += vab * vc;
            }
        }
    }
    return result;
}

TensorElement algorithm_tensor(const BilinearAlgorithm& alg)
{
    alg.validate();
    TensorElement sum(alg.m, alg.n, alg.p);
    for (const Triple& t : alg.triples) {
        TensorElement part = triple_tensor(t, alg.m, alg.n, alg.p);
        for (std::size_t i = 0; i < sum.coeff.size(); ++i)
            sum.coeff[i] += part.coeff[i];
    }
    return sum;
}

VerificationReport brent_check(const BilinearAlgorithm& alg)
{
    alg.validate();
    const std::size_t m = alg.m, n = alg.n, p = alg.p;
    VerificationReport report;
    report.equations = (m * n * p) * (m * n * p);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t j1 = 0; j1 < n; ++j1)
                for (std::size_t k = 0; k < p; ++k)
                    for (std::size_t i1 = 0; i1 < m; ++i1)
                        for (std::size_t k1 = 0; k1 < p; ++k1) {
                            Rational sum = 0;
                            for (const Triple& t : alg.triples) {
                                const Rational& va = t.a.at(i, j);
                                if (va == 0)
                                    continue;
                                const Rational& vb = t.b.at(j1, k);
                                if (vb == 0)
                                    continue;
                                const Rational& vc = t.c.at(i1, k1);
                                if (vc != 0)
                                    sum += va * vb * vc;
                            }
                            if (i == i1 && j == j1 && k == k1)
                                sum -= 1;
                            if (sum != 0) {
                                ++report.violations;
                                if (report.first_violations.size() < 10)
                                    report.first_violations.push_back(
                                        BrentViolation{{i, j, j1, k, i1, k1}, sum});
                            }
                        }
    report.pass = (report.violations == 0);
    return report;
}

VerificationReport tensor_sum_check(const BilinearAlgorithm& alg)
{
    TensorElement sum = algorithm_tensor(alg);
    TensorElement target = mmp_tensor(alg.m, alg.n, alg.p);
    VerificationReport report;
    report.equations = sum.coeff.size();
    for (std::size_t i = 0; i < sum.coeff.size(); ++i)
        if (sum.coeff[i] != target.coeff[i])
            ++report.violations;
    report.pass = (report.violations == 0);
    return report;
}

namespace {

ExactMatrix M2(std::initializer_list<int> v) { return ExactMatrix::from_ints(2, 2, v); }
ExactMatrix M3(std::initializer_list<int> v) { return ExactMatrix::from_ints(3, 3, v); }

/// Triple given by its tensor-form factors (x, y, z): the stored c is zᵗ.
Triple from_tensor_factors(const ExactMatrix& x, const ExactMatrix& y, const ExactMatrix& z)
{
    return Triple{x, y, mat_transpose(z)};
}

} // namespace

BilinearAlgorithm strassen()
{
    BilinearAlgorithm alg;
    alg.m = alg.n = alg.p = 2;
    alg.name = "strassen";
    alg.triples = {
        {M2({1, 0, 0, 0}), M2({0, 1, 0, 1}), M2({0, 1, 0, -1})},
        {M2({1, -1, 0, 0}), M2({0, 0, 0, 1}), M2({-1, -1, 0, 0})},
        {M2({0, 0, -1, 1}), M2({1, 0, 0, 0}), M2({0, 0, -1, -1})},
        {M2({0, 0, 0, 1}), M2({1, 0, 1, 0}), M2({-1, 0, 1, 0})},
        {M2({1, 0, 0, 1}), M2({1, 0, 0, 1}), M2({1, 0, 0, 1})},
        {M2({1, 0, 1, 0}), M2({1, -1, 0, 0}), M2({0, 0, 0, -1})},
        {M2({0, 1, 0, 1}), M2({0, 0, 1, -1}), M2({1, 0, 0, 0})},
    };
    return alg;
}

BilinearAlgorithm laderman()
{
    BilinearAlgorithm alg;
    alg.m = alg.n = alg.p = 3;
    alg.name = "laderman";
    auto t = [](std::initializer_list<int> x, std::initializer_list<int> y,
                std::initializer_list<int> z) {
        return from_tensor_factors(M3(x), M3(y), M3(z));
    };
    alg.triples = {
        t({1, 1, 1, -1, -1, 0, 0, -1, -1}, {0, 0, 0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 0, 0}),
        t({1, 0, 0, -1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 1, 0, 0, 0, 0}, {0, 1, 0, 0, 1, 0, 0, 0, 0}),
        t({0, 0, 0, 0, 1, 0, 0, 0, 0}, {-1, 1, 0, 1, -1, -1, -1, 0, 1}, {0, 1, 0, 0, 0, 0, 0, 0, 0}),
        t({-1, 0, 0, 1, 1, 0, 0, 0, 0}, {1, -1, 0, 0, 1, 0, 0, 0, 0}, {0, 1, 0, 1, 1, 0, 0, 0, 0}),
        t({0, 0, 0, 1, 1, 0, 0, 0, 0}, {-1, 1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 0, 0, 0, 0}),
        t({1, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 0, 1, 0, 1}),
        t({-1, 0, 0, 0, 0, 0, 1, 1, 0}, {1, 0, -1, 0, 0, 1, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 1, 0, 1}),
        t({-1, 0, 0, 0, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 0, -1, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0, 1}),
        t({0, 0, 0, 0, 0, 0, 1, 1, 0}, {-1, 0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 0, 1}),
        t({1, 1, 1, 0, -1, -1, -1, -1, 0}, {0, 0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 0, 0}),
        t({0, 0, 0, 0, 0, 0, 0, 1, 0}, {-1, 0, 1, 1, -1, -1, -1, 1, 0}, {0, 0, 1, 0, 0, 0, 0, 0, 0}),
        t({0, 0, -1, 0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 1, 0, 1, -1, 0}, {0, 0, 1, 1, 0, 1, 0, 0, 0}),
        t({0, 0, 1, 0, 0, 0, 0, 0, -1}, {0, 0, 0, 0, 1, 0, 0, -1, 0}, {0, 0, 1, 0, 0, 1, 0, 0, 0}),
        t({0, 0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 0, 0}, {1, 1, 1, 1, 0, 1, 1, 1, 0}),
        t({0, 0, 0, 0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 0, -1, 1, 0}, {0, 0, 0, 1, 0, 1, 0, 0, 0}),
        t({0, 0, -1, 0, 1, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 1, 0, -1}, {0, 1, 0, 0, 0, 0, 1, 1, 0}),
        t({0, 0, 1, 0, 0, -1, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0, -1}, {0, 1, 0, 0, 0, 0, 0, 1, 0}),
        t({0, 0, 0, 0, 1, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, -1, 0, 1}, {0, 0, 0, 0, 0, 0, 1, 1, 0}),
        t({0, 1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0, 0}),
        t({0, 0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 1, 0, 0, 0, 0}),
        t({0, 0, 0, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 1, 0}),
        t({0, 0, 0, 0, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0, 0}),
        t({0, 0, 0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 1}),
    };
    return alg;
}

BilinearAlgorithm hopcroft()
{
    BilinearAlgorithm alg;
    alg.m = 3;
    alg.n = 2;
    alg.p = 3;
    alg.name = "hopcroft";
    auto t = [](std::initializer_list<int> x, std::initializer_list<int> y,
                std::initializer_list<int> z) {
        return from_tensor_factors(ExactMatrix::from_ints(3, 2, x),
                                   ExactMatrix::from_ints(2, 3, y), M3(z));
    };
    alg.triples = {
        t({1, -1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {1, -1, 0, 0, 0, 0, -1, 0, 0}),
        t({0, 1, 0, 0, 0, 0}, {1, 0, 0, 1, 0, 0}, {1, 0, -1, -1, 0, 0, 0, 0, 0}),
        t({0, 0, 1, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, -1, 1, 0, 0, -1, 0}),
        t({0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, -1, 0, 0, 1, -1, 0, 0, 0}),
        t({0, 0, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}, {0, 0, 0, 0, 0, -1, -1, 0, 1}),
        t({0, 0, 0, 0, -1, 1}, {0, 0, 0, 0, 0, 1}, {0, 0, -1, 0, 0, 0, 0, -1, 1}),
        t({1, 0, 1, 0, 0, 0}, {1, 1, 0, 1, 1, 0}, {0, 0, 0, 1, 0, 0, 0, 0, 0}),
        t({1, -1, 1, 0, 0, 0}, {1, 0, 0, 1, 1, 0}, {0, 1, 0, -1, 0, 0, 0, 0, 0}),
        t({1, -1, 1, -1, 0, 0}, {0, 0, 0, 1, 1, 0}, {0, -1, 0, 0, 0, 0, 0, 0, 0}),
        t({0, 0, 0, 1, 0, 1}, {0, 1, 1, 0, 1, 1}, {0, 0, 0, 0, 0, 1, 0, 0, 0}),
        t({0, 0, 0, 1, -1, 1}, {0, 1, 1, 0, 0, 1}, {0, 0, 0, 0, 0, -1, 0, 1, 0}),
        t({0, 0, -1, 1, -1, 1}, {0, 1, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, -1, 0}),
        t({0, 1, 0, 0, 1, 0}, {1, 0, 0, 0, 0, -1}, {0, 0, 1, 0, 0, 0, -1, 0, 0}),
        t({0, 1, 0, 0, 0, 1}, {0, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 0, 0, 0, 0, 0}),
        t({1, 0, 0, 0, 1, 0}, {1, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 0, 0}),
    };
    return alg;
}

BilinearAlgorithm naive(std::size_t m, std::size_t n, std::size_t p)
{
    if (m == 0 || n == 0 || p == 0)
        throw domain_error("naive algorithm requires positive dimensions");
    BilinearAlgorithm alg;
    alg.m = m;
    alg.n = n;
    alg.p = p;
    std::ostringstream label;
    label << "naive:" << m << "x" << n << "x" << p;
    alg.name = label.str();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < p; ++k)
                alg.triples.push_back(Triple{ExactMatrix::unit(m, n, i, j),
                                             ExactMatrix::unit(n, p, j, k),
                                             ExactMatrix::unit(m, p, i, k)});
    return alg;
}

TripleType triple_type(const Triple& t)
{
    return {mat_rank(t.a), mat_rank(t.b), mat_rank(t.c)};
}

std::map<TripleType, std::size_t> type_census(const BilinearAlgorithm& alg)
{
    std::map<TripleType, std::size_t> census;
    for (const Triple& t : alg.triples)
        ++census[triple_type(t)];
    return census;
}

FineFactorization fine_factorization(const Triple& t)
{
    TripleType type = triple_type(t);
    if (type != TripleType{1, 1, 1})
        throw rank_error("fine factorization requires a type-(1,1,1) triple");
    auto [d, e_prime] = rank_one_factor(t.a);
    auto [e, f_prime] = rank_one_factor(t.b);
    auto [f, d_prime] = rank_one_factor(mat_transpose(t.c));
    return FineFactorization{d, e_prime, e, f_prime, f, d_prime};
}

} // namespace mmsym
