#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mmsym/matrix.hpp"

namespace mmsym {

/// One summand of a bilinear algorithm: a is m×n, b is n×p, c is m×p.
/// The tensor form of the summand is a ⊗ b ⊗ cᵗ.
struct Triple {
    ExactMatrix a, b, c;

    bool operator==(const Triple& other) const
    {
        return a == other.a && b == other.b && c == other.c;
    }
    bool operator<(const Triple& other) const;

    std::string to_key() const;

    /// Canonical scaling: a and b scaled to lead entry 1, with the scalar
    /// residue pushed into c.  The represented tensor a⊗b⊗cᵗ is unchanged.
    Triple canonical() const;
};

/// A bilinear algorithm for the m×n by n×p matrix product, given as r
/// triples.  The list order is kept for presentation, but comparisons under
/// group actions use multiset semantics.
struct BilinearAlgorithm {
    std::size_t m = 0, n = 0, p = 0;
    std::vector<Triple> triples;
    std::string name;

    std::size_t r() const { return triples.size(); }

    /// Throws shape_error / contract_error when a triple has wrong shape or
    /// a zero factor.
    void validate() const;
};

/// Element of M_{mn} ⊗ M_{np} ⊗ M_{pm} as a dense coefficient array.
/// The factor bases are the matrix units e_{ij}, e_{jk}, e_{ki}, flattened
/// row-major.
struct TensorElement {
    std::size_t m = 0, n = 0, p = 0;
    std::vector<Rational> coeff;

    TensorElement() = default;
    TensorElement(std::size_t m_, std::size_t n_, std::size_t p_)
        : m(m_), n(n_), p(p_), coeff(m_ * n_ * n_ * p_ * p_ * m_) {}

    std::size_t dim1() const { return m * n; }
    std::size_t dim2() const { return n * p; }
    std::size_t dim3() const { return p * m; }

    Rational& at(std::size_t i1, std::size_t i2, std::size_t i3)
    {
        return coeff[(i1 * dim2() + i2) * dim3() + i3];
    }
    const Rational& at(std::size_t i1, std::size_t i2, std::size_t i3) const
    {
        return coeff[(i1 * dim2() + i2) * dim3() + i3];
    }

    std::size_t nonzero_count() const;

    bool operator==(const TensorElement& other) const
    {
        return m == other.m && n == other.n && p == other.p && coeff == other.coeff;
    }
};

/// Rank triple (rk a, rk b, rk c) of a Triple.
using TripleType = std::array<std::size_t, 3>;

/// One Brent-equation violation: the (i,j,j1,k,i1,k1) index combination and
/// the nonzero residual.
struct BrentViolation {
    std::array<std::size_t, 6> index; // (i, j, j1, k, i1, k1), zero-based
    Rational residual;
};

struct VerificationReport {
    bool pass = false;
    std::size_t equations = 0;
    std::size_t violations = 0;
    std::vector<BrentViolation> first_violations; // at most 10
};

/// The structure tensor of the m×n by n×p matrix product:
/// sum of e_{ij} ⊗ e_{jk} ⊗ e_{ki} over all i, j, k.
TensorElement mmp_tensor(std::size_t m, std::size_t n, std::size_t p);

/// Tensor form of the whole algorithm: sum of a_l ⊗ b_l ⊗ (c_l)ᵗ.
TensorElement algorithm_tensor(const BilinearAlgorithm& alg);

/// Tensor form of one triple, as an element of the same space.
TensorElement triple_tensor(const Triple& t, std::size_t m, std::size_t n, std::size_t p);

/// Checks all (mnp)² Brent equations
///   Σ_l a_l[i][j] · b_l[j1][k] · c_l[i1][k1] = δ_{i,i1} δ_{j,j1} δ_{k,k1}.
VerificationReport brent_check(const BilinearAlgorithm& alg);

/// Checks Σ_l a_l ⊗ b_l ⊗ (c_l)ᵗ = ⟨m,n,p⟩ coefficientwise.
VerificationReport tensor_sum_check(const BilinearAlgorithm& alg);

/// Builtin algorithms.
BilinearAlgorithm strassen();       // (2,2,2), r = 7
BilinearAlgorithm laderman();       // (3,3,3), r = 23
BilinearAlgorithm hopcroft();       // (3,2,3), r = 15
BilinearAlgorithm naive(std::size_t m, std::size_t n, std::size_t p); // r = mnp

TripleType triple_type(const Triple& t);

/// Histogram of triple types.
std::map<TripleType, std::size_t> type_census(const BilinearAlgorithm& alg);

/// Rank-one factorization of a type-(1,1,1) triple into six vectors
/// (d, e', e, f', f, d') with a = d·e', b = e·f', cᵗ = f·d'.  The column
/// vectors d, e, f are canonically scaled (lead entry 1); the scalar residue
/// sits in the paired row vectors.
struct FineFactorization {
    ExactMatrix d, e_prime, e, f_prime, f, d_prime;
};

FineFactorization fine_factorization(const Triple& t);

} // namespace mmsym
