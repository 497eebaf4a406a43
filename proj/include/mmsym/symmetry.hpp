#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mmsym/algebra.hpp"

namespace mmsym {

/// Format of an algorithm / tensor space.
struct Format {
    std::size_t m = 0, n = 0, p = 0;
    bool operator==(const Format&) const = default;
};

/// Permutation of the three tensor factors.  Values name the permutation in
/// cycle notation; composition is right-to-left ((στ)(i) = σ(τ(i))).
enum class FactorPermutation {
    e,
    s12, // swap factors 1,2
    s13, // swap factors 1,3
    s23, // swap factors 2,3
    c123, // 1→2→3→1
    c132, // 1→3→2→1
};

const char* sigma_name(FactorPermutation sigma);
FactorPermutation parse_sigma(const std::string& name);
FactorPermutation sigma_compose(FactorPermutation lhs, FactorPermutation rhs);
FactorPermutation sigma_inverse(FactorPermutation sigma);
bool sigma_is_odd(FactorPermutation sigma);

/// Image array: image_of(sigma)[i] is where factor i (zero-based) goes.
std::array<std::size_t, 3> sigma_images(FactorPermutation sigma);

/// True when the factor permutation preserves dimensions of the format:
/// (12) needs m=p, (13) needs n=p, (23) needs m=n, 3-cycles need m=n=p.
bool sigma_admissible(FactorPermutation sigma, const Format& format);

/// Element of the isotropy group of the structure tensor, in the normal form
/// g = T(a,b,c) ∘ ρ_σ where T(a,b,c)(x⊗y⊗z) = axb⁻¹ ⊗ byc⁻¹ ⊗ cza⁻¹ and
/// ρ_σ permutes factors (with transposes on odd σ).  The matrices are stored
/// canonically scaled (lead entry 1), which makes scalar-equivalent elements
/// compare equal bitwise.
struct IsotropyElement {
    Format format;
    FactorPermutation sigma = FactorPermutation::e;
    ExactMatrix a, b, c; // m×m, n×n, p×p, invertible, lead entry 1

    bool operator==(const IsotropyElement& other) const
    {
        return format == other.format && sigma == other.sigma &&
               a == other.a && b == other.b && c == other.c;
    }
    bool operator<(const IsotropyElement& other) const;

    std::string to_key() const;
};

/// Partition of triple indices (1-based in output, stored zero-based).
struct OrbitPartition {
    std::vector<std::vector<std::size_t>> blocks; // each sorted; blocks sorted by first element
};

/// Canonicalized element with the given factor permutation and matrices.
/// Throws singular_error / shape_error / admissibility_error.
IsotropyElement make_element(FactorPermutation sigma, const ExactMatrix& a,
                             const ExactMatrix& b, const ExactMatrix& c,
                             const Format& format);

/// T(a,b,c) with identity factor permutation.
IsotropyElement make_T(const ExactMatrix& a, const ExactMatrix& b,
                       const ExactMatrix& c, const Format& format);

/// ρ_σ with identity matrices.
IsotropyElement make_rho(FactorPermutation sigma, const Format& format);

IsotropyElement identity_element(const Format& format);

/// Image of a triple under the element, read back in canonical triple
/// scaling.  The triple is interpreted through its tensor form a⊗b⊗cᵗ.
Triple apply_to_triple(const IsotropyElement& g, const Triple& t);

/// Image of a general tensor under the element (linear extension over the
/// basis of decomposable matrix-unit tensors).
TensorElement apply_to_tensor(const IsotropyElement& g, const TensorElement& t);

/// Group operations in normal form; σ-twisting is resolved through the
/// conjugation formulas ρ_σ T(a,b,c) ρ_σ⁻¹ = T(...) (contragredients on odd
/// σ, cyclic shifts on even σ).
IsotropyElement compose(const IsotropyElement& g, const IsotropyElement& h);
IsotropyElement inverse(const IsotropyElement& g);

BilinearAlgorithm act_on_algorithm(const IsotropyElement& g, const BilinearAlgorithm& alg);

/// True iff g maps the algorithm's triple multiset onto itself.
bool is_automorphism(const IsotropyElement& g, const BilinearAlgorithm& alg);

/// Closure of the generators under composition (BFS, deterministic order).
/// Throws resource_error when the closure would exceed cap.
std::vector<IsotropyElement> group_closure(const Format& format,
                                           const std::vector<IsotropyElement>& generators,
                                           std::size_t cap = 10000);

/// Orbit partition of the algorithm's triples under the given automorphisms.
/// Every element must be an automorphism of alg (contract_error otherwise).
OrbitPartition orbits(const std::vector<IsotropyElement>& group,
                      const BilinearAlgorithm& alg);

/// Report for check_relations.
struct RelationReport {
    struct Entry {
        std::string word;
        bool holds = false;
    };
    std::vector<Entry> entries;
    bool all_hold = true;
};

/// Named assignment of generators.
struct NamedElement {
    std::string name;
    IsotropyElement element;
};

/// Each relation is a word "x y^-1 z^2 ..." asserted equal to the identity.
RelationReport check_relations(const std::vector<NamedElement>& assignment,
                               const std::vector<std::string>& relations);

/// Result of the bounded automorphism search.
struct SearchResult {
    std::vector<IsotropyElement> elements; // verified automorphisms, sorted
    bool complete = true;                  // false when the budget ran out
    unsigned long long candidates_tried = 0;
};

/// Bounded search for automorphisms g = T(a,b,c)∘ρ_σ with a, b, c drawn
/// from the pool of invertible matrices over the given entry set, pruned by
/// preservation of the tensor-projection line multisets of the type-(1,1,1)
/// triples.
SearchResult search_automorphisms(const BilinearAlgorithm& alg,
                                  const std::vector<Rational>& pool_entries = {-1, 0, 1},
                                  unsigned long long budget = 10000000ULL);

} // namespace mmsym
