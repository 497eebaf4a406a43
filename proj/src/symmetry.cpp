#include "mmsym/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "mmsym/errors.hpp"

namespace mmsym {

namespace {

constexpr std::size_t kNumSigmas = 6;

const FactorPermutation kAllSigmas[kNumSigmas] = {
    FactorPermutation::e,   FactorPermutation::s12,  FactorPermutation::s13,
    FactorPermutation::s23, FactorPermutation::c123, FactorPermutation::c132,
};

// image arrays, zero-based: images[sigma][i] = sigma(i)
constexpr std::size_t kImages[kNumSigmas][3] = {
    {0, 1, 2}, // e
    {1, 0, 2}, // (12)
    {2, 1, 0}, // (13)
    {0, 2, 1}, // (23)
    {1, 2, 0}, // (123): 1→2, 2→3, 3→1
    {2, 0, 1}, // (132)
};

std::size_t sigma_index(FactorPermutation sigma) { return static_cast<std::size_t>(sigma); }

FactorPermutation sigma_from_images(const std::array<std::size_t, 3>& images)
{
    for (std::size_t s = 0; s < kNumSigmas; ++s)
        if (kImages[s][0] == images[0] && kImages[s][1] == images[1] && kImages[s][2] == images[2])
            return static_cast<FactorPermutation>(s);
    throw domain_error("invalid permutation images");
}

} // namespace

const char* sigma_name(FactorPermutation sigma)
{
    switch (sigma) {
    case FactorPermutation::e: return "e";
    case FactorPermutation::s12: return "(12)";
    case FactorPermutation::s13: return "(13)";
    case FactorPermutation::s23: return "(23)";
    case FactorPermutation::c123: return "(123)";
    case FactorPermutation::c132: return "(132)";
    }
    throw domain_error("invalid factor permutation");
}

FactorPermutation parse_sigma(const std::string& name)
{
    for (FactorPermutation sigma : kAllSigmas)
        if (name == sigma_name(sigma))
            return sigma;
    throw parse_error("unknown factor permutation: \"" + name + "\"");
}

std::array<std::size_t, 3> sigma_images(FactorPermutation sigma)
{
    const std::size_t* row = kImages[sigma_index(sigma)];
    return {row[0], row[1], row[2]};
}

FactorPermutation sigma_compose(FactorPermutation lhs, FactorPermutation rhs)
{
    auto l = sigma_images(lhs);
    auto r = sigma_images(rhs);
    return sigma_from_images({l[r[0]], l[r[1]], l[r[2]]});
}

FactorPermutation sigma_inverse(FactorPermutation sigma)
{
    auto im = sigma_images(sigma);
    std::array<std::size_t, 3> inv{};
    for (std::size_t i = 0; i < 3; ++i)
        inv[im[i]] = i;
    return sigma_from_images(inv);
}

bool sigma_is_odd(FactorPermutation sigma)
{
    return sigma == FactorPermutation::s12 || sigma == FactorPermutation::s13 ||
           sigma == FactorPermutation::s23;
}

bool sigma_admissible(FactorPermutation sigma, const Format& format)
{
    switch (sigma) {
    case FactorPermutation::e: return true;
    case FactorPermutation::s12: return format.m == format.p;
    case FactorPermutation::s13: return format.n == format.p;
    case FactorPermutation::s23: return format.m == format.n;
    case FactorPermutation::c123:
    case FactorPermutation::c132:
        return format.m == format.n && format.n == format.p;
    }
    return false;
}

bool IsotropyElement::operator<(const IsotropyElement& other) const
{
    if (sigma != other.sigma)
        return sigma < other.sigma;
    if (a != other.a)
        return a < other.a;
    if (b != other.b)
        return b < other.b;
    return c < other.c;
}

std::string IsotropyElement::to_key() const
{
    std::ostringstream out;
    out << sigma_name(sigma) << ";" << a.to_key() << ";" << b.to_key() << ";" << c.to_key();
    return out.str();
}

namespace {

ExactMatrix canonical_scale(const ExactMatrix& mat)
{
    return mat.scaled(1 / mat.leading_entry());
}

void require_invertible(const ExactMatrix& mat, const char* which)
{
    mat_inverse(mat); // throws singular_error if singular
    (void)which;
}

/// Degenerate formats where two or more factor spaces are one-dimensional
/// make the factor-permutation decomposition ambiguous; only the identity
/// permutation is accepted there.
bool format_is_degenerate(const Format& format)
{
    int ones = 0;
    if (format.m * format.n == 1) ++ones;
    if (format.n * format.p == 1) ++ones;
    if (format.p * format.m == 1) ++ones;
    return ones >= 2;
}

} // namespace

IsotropyElement make_element(FactorPermutation sigma, const ExactMatrix& a,
                             const ExactMatrix& b, const ExactMatrix& c,
                             const Format& format)
{
    if (a.rows() != format.m || a.cols() != format.m ||
        b.rows() != format.n || b.cols() != format.n ||
        c.rows() != format.p || c.cols() != format.p)
        throw shape_error("element matrices do not match the format");
    if (!sigma_admissible(sigma, format))
        throw admissibility_error(std::string("factor permutation ") + sigma_name(sigma) +
                                  " is not admissible for this format");
    if (sigma != FactorPermutation::e && format_is_degenerate(format))
        throw admissibility_error("non-identity factor permutations are rejected on "
                                  "degenerate formats with two one-dimensional factors");
    require_invertible(a, "a");
    require_invertible(b, "b");
    require_invertible(c, "c");
    IsotropyElement g;
    g.format = format;
    g.sigma = sigma;
    g.a = canonical_scale(a);
    g.b = canonical_scale(b);
    g.c = canonical_scale(c);
    return g;
}

IsotropyElement make_T(const ExactMatrix& a, const ExactMatrix& b,
                       const ExactMatrix& c, const Format& format)
{
    return make_element(FactorPermutation::e, a, b, c, format);
}

IsotropyElement make_rho(FactorPermutation sigma, const Format& format)
{
    return make_element(sigma, ExactMatrix::identity(format.m),
                        ExactMatrix::identity(format.n),
                        ExactMatrix::identity(format.p), format);
}

IsotropyElement identity_element(const Format& format)
{
    return make_rho(FactorPermutation::e, format);
}

namespace {

struct Factors {
    ExactMatrix x, y, z; // m×n, n×p, p×m
};

/// ρ_σ on a decomposable tensor: permutes factors, transposing each on odd σ.
Factors apply_rho(FactorPermutation sigma, const Factors& f)
{
    switch (sigma) {
    case FactorPermutation::e:
        return f;
    case FactorPermutation::s12:
        return {mat_transpose(f.y), mat_transpose(f.x), mat_transpose(f.z)};
    case FactorPermutation::s13:
        return {mat_transpose(f.z), mat_transpose(f.y), mat_transpose(f.x)};
    case FactorPermutation::s23:
        return {mat_transpose(f.x), mat_transpose(f.z), mat_transpose(f.y)};
    case FactorPermutation::c123:
        return {f.z, f.x, f.y};
    case FactorPermutation::c132:
        return {f.y, f.z, f.x};
    }
    throw domain_error("invalid factor permutation");
}

/// Full element action on a decomposable tensor.
Factors apply_element(const IsotropyElement& g, const Factors& f)
{
    Factors p = apply_rho(g.sigma, f);
    ExactMatrix ai = mat_inverse(g.a);
    ExactMatrix bi = mat_inverse(g.b);
    ExactMatrix ci = mat_inverse(g.c);
    return {mat_mul(mat_mul(g.a, p.x), bi),
            mat_mul(mat_mul(g.b, p.y), ci),
            mat_mul(mat_mul(g.c, p.z), ai)};
}

} // namespace

Triple apply_to_triple(const IsotropyElement& g, const Triple& t)
{
    if (t.a.rows() != g.format.m || t.a.cols() != g.format.n ||
        t.b.rows() != g.format.n || t.b.cols() != g.format.p ||
        t.c.rows() != g.format.m || t.c.cols() != g.format.p)
        throw shape_error("triple does not match the element's format");
    Factors image = apply_element(g, Factors{t.a, t.b, mat_transpose(t.c)});
    return Triple{image.x, image.y, mat_transpose(image.z)}.canonical();
}

TensorElement apply_to_tensor(const IsotropyElement& g, const TensorElement& t)
{
    if (t.m != g.format.m || t.n != g.format.n || t.p != g.format.p)
        throw shape_error("tensor does not match the element's format");
    const std::size_t m = t.m, n = t.n, p = t.p;
    TensorElement result(m, n, p);
    for (std::size_t i1 = 0; i1 < t.dim1(); ++i1)
        for (std::size_t i2 = 0; i2 < t.dim2(); ++i2)
            for (std::size_t i3 = 0; i3 < t.dim3(); ++i3) {
                const Rational& coeff = t.at(i1, i2, i3);
                if (coeff == 0)
                    continue;
                Factors basis{ExactMatrix::unit(m, n, i1 / n, i1 % n),
                              ExactMatrix::unit(n, p, i2 / p, i2 % p),
                              ExactMatrix::unit(p, m, i3 / m, i3 % m)};
                Factors image = apply_element(g, basis);
                for (std::size_t u1 = 0; u1 < t.dim1(); ++u1) {
                    const Rational& vx = image.x.at(u1 / n, u1 % n);
                    if (vx == 0)
                        continue;
                    for (std::size_t u2 = 0; u2 < t.dim2(); ++u2) {
                        const Rational& vy = image.y.at(u2 / p, u2 % p);
                        if (vy == 0)
                            continue;
                        Rational vxy = coeff * vx * vy;
                        for (std::size_t u3 = 0; u3 < t.dim3(); ++u3) {
                            const Rational& vz = image.z.at(u3 / m, u3 % m);
                            if (vz != 0)
                                result.at(u1, u2, u3) += vxy * vz;
                        }
                    }
                }
            }
    return result;
}

namespace {

/// Conjugation ρ_σ T(a,b,c) ρ_σ⁻¹ = T(a'',b'',c''): cyclic shift on even σ,
/// contragredient twist on odd σ.
void conjugate_by_sigma(FactorPermutation sigma, ExactMatrix& a, ExactMatrix& b, ExactMatrix& c)
{
    switch (sigma) {
    case FactorPermutation::e:
        return;
    case FactorPermutation::s12: {
        ExactMatrix na = contragredient(c), nb = contragredient(b), nc = contragredient(a);
        a = na; b = nb; c = nc;
        return;
    }
    case FactorPermutation::s13: {
        ExactMatrix na = contragredient(a), nb = contragredient(c), nc = contragredient(b);
        a = na; b = nb; c = nc;
        return;
    }
    case FactorPermutation::s23: {
        ExactMatrix na = contragredient(b), nb = contragredient(a), nc = contragredient(c);
        a = na; b = nb; c = nc;
        return;
    }
    case FactorPermutation::c123: {
        ExactMatrix na = c, nb = a, nc = b;
        a = na; b = nb; c = nc;
        return;
    }
    case FactorPermutation::c132: {
        ExactMatrix na = b, nb = c, nc = a;
        a = na; b = nb; c = nc;
        return;
    }
    }
    throw domain_error("invalid factor permutation");
}

} // namespace

IsotropyElement compose(const IsotropyElement& g, const IsotropyElement& h)
{
    if (!(g.format == h.format))
        throw shape_error("cannot compose elements of different formats");
    // g∘h = T_g ρ_σ T_h ρ_τ = T_g (ρ_σ T_h ρ_σ⁻¹) ρ_στ
    ExactMatrix a = h.a, b = h.b, c = h.c;
    conjugate_by_sigma(g.sigma, a, b, c);
    return make_element(sigma_compose(g.sigma, h.sigma),
                        mat_mul(g.a, a), mat_mul(g.b, b), mat_mul(g.c, c), g.format);
}

IsotropyElement inverse(const IsotropyElement& g)
{
    // g⁻¹ = ρ_σ⁻¹ T(a⁻¹,b⁻¹,c⁻¹) = (ρ_σ⁻¹ T(a⁻¹,b⁻¹,c⁻¹) ρ_σ) ρ_σ⁻¹
    FactorPermutation inv_sigma = sigma_inverse(g.sigma);
    ExactMatrix a = mat_inverse(g.a), b = mat_inverse(g.b), c = mat_inverse(g.c);
    conjugate_by_sigma(inv_sigma, a, b, c);
    return make_element(inv_sigma, a, b, c, g.format);
}

BilinearAlgorithm act_on_algorithm(const IsotropyElement& g, const BilinearAlgorithm& alg)
{
    if (g.format.m != alg.m || g.format.n != alg.n || g.format.p != alg.p)
        throw shape_error("element format does not match the algorithm");
    BilinearAlgorithm image;
    image.m = alg.m;
    image.n = alg.n;
    image.p = alg.p;
    image.name = alg.name;
    image.triples.reserve(alg.triples.size());
    for (const Triple& t : alg.triples)
        image.triples.push_back(apply_to_triple(g, t));
    return image;
}

namespace {

std::vector<std::string> canonical_triple_keys(const BilinearAlgorithm& alg)
{
    std::vector<std::string> keys;
    keys.reserve(alg.triples.size());
    for (const Triple& t : alg.triples)
        keys.push_back(t.canonical().to_key());
    return keys;
}

} // namespace

bool is_automorphism(const IsotropyElement& g, const BilinearAlgorithm& alg)
{
    BilinearAlgorithm image = act_on_algorithm(g, alg);
    std::vector<std::string> lhs = canonical_triple_keys(alg);
    std::vector<std::string> rhs = canonical_triple_keys(image);
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    return lhs == rhs;
}

std::vector<IsotropyElement> group_closure(const Format& format,
                                           const std::vector<IsotropyElement>& generators,
                                           std::size_t cap)
{
    for (const IsotropyElement& g : generators)
        if (!(g.format == format))
            throw shape_error("generator format mismatch in group closure");
    std::vector<IsotropyElement> elements;
    std::set<std::string> seen;
    std::queue<std::size_t> frontier;
    auto push = [&](const IsotropyElement& g) {
        if (seen.insert(g.to_key()).second) {
            if (elements.size() >= cap)
                throw resource_error("group closure exceeded the element cap");
            elements.push_back(g);
            frontier.push(elements.size() - 1);
        }
    };
    push(identity_element(format));
    for (const IsotropyElement& g : generators)
        push(g);
    while (!frontier.empty()) {
        std::size_t idx = frontier.front();
        frontier.pop();
        for (const IsotropyElement& gen : generators)
            push(compose(elements[idx], gen));
    }
    return elements;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n)
    {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t i)
    {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    }
    void unite(std::size_t i, std::size_t j) { parent[find(i)] = find(j); }
};

} // namespace

OrbitPartition orbits(const std::vector<IsotropyElement>& group, const BilinearAlgorithm& alg)
{
    const std::size_t r = alg.triples.size();
    std::map<std::string, std::vector<std::size_t>> index_of;
    std::vector<std::string> keys = canonical_triple_keys(alg);
    for (std::size_t i = 0; i < r; ++i)
        index_of[keys[i]].push_back(i);
    UnionFind uf(r);
    // Identical triples are indistinguishable under multiset semantics.
    for (const auto& [key, idxs] : index_of)
        for (std::size_t i = 1; i < idxs.size(); ++i)
            uf.unite(idxs[0], idxs[i]);
    for (const IsotropyElement& g : group)
        for (std::size_t i = 0; i < r; ++i) {
            Triple image = apply_to_triple(g, alg.triples[i].canonical());
            auto it = index_of.find(image.to_key());
            if (it == index_of.end())
                throw contract_error("orbit computation requires automorphisms only");
            uf.unite(i, it->second.front());
        }
    std::map<std::size_t, std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < r; ++i)
        blocks[uf.find(i)].push_back(i);
    OrbitPartition partition;
    for (auto& [root, members] : blocks) {
        std::sort(members.begin(), members.end());
        partition.blocks.push_back(members);
    }
    std::sort(partition.blocks.begin(), partition.blocks.end(),
              [](const auto& lhs, const auto& rhs) { return lhs.front() < rhs.front(); });
    return partition;
}

RelationReport check_relations(const std::vector<NamedElement>& assignment,
                               const std::vector<std::string>& relations)
{
    if (assignment.empty())
        throw contract_error("relation check needs at least one assigned element");
    std::map<std::string, IsotropyElement> by_name;
    for (const NamedElement& named : assignment)
        by_name.emplace(named.name, named.element);
    const Format format = assignment.front().element.format;
    const IsotropyElement id = identity_element(format);
    RelationReport report;
    for (const std::string& word : relations) {
        IsotropyElement value = id;
        std::istringstream tokens(word);
        std::string token;
        while (tokens >> token) {
            std::string name = token;
            long exponent = 1;
            std::size_t caret = token.find('^');
            if (caret != std::string::npos) {
                name = token.substr(0, caret);
                try {
                    exponent = std::stol(token.substr(caret + 1));
                } catch (const std::exception&) {
                    throw parse_error("malformed exponent in relation token \"" + token + "\"");
                }
            }
            auto it = by_name.find(name);
            if (it == by_name.end())
                throw lookup_error("unknown generator name \"" + name + "\" in relation");
            IsotropyElement base = exponent < 0 ? inverse(it->second) : it->second;
            long count = exponent < 0 ? -exponent : exponent;
            for (long i = 0; i < count; ++i)
                value = compose(value, base);
        }
        bool holds = (value == id);
        report.entries.push_back({word, holds});
        report.all_hold = report.all_hold && holds;
    }
    return report;
}

namespace {

/// Canonical key of a line (nonzero vector up to scaling).
std::string line_key(const ExactMatrix& vec)
{
    return vec.scaled(1 / vec.leading_entry()).to_key();
}

std::vector<std::string> sorted_keys(std::vector<std::string> keys)
{
    std::sort(keys.begin(), keys.end());
    return keys;
}

struct PoolMatrix {
    ExactMatrix mat, inv;
};

/// All invertible s×s matrices with entries from the given set.
std::vector<PoolMatrix> build_pool(std::size_t s, const std::vector<Rational>& entries)
{
    std::vector<PoolMatrix> pool;
    const std::size_t cells = s * s;
    std::vector<std::size_t> digits(cells, 0);
    while (true) {
        ExactMatrix candidate(s, s);
        for (std::size_t i = 0; i < cells; ++i)
            candidate.at(i / s, i % s) = entries[digits[i]];
        if (mat_rank(candidate) == s)
            pool.push_back({candidate, mat_inverse(candidate)});
        std::size_t pos = 0;
        while (pos < cells && ++digits[pos] == entries.size()) {
            digits[pos] = 0;
            ++pos;
        }
        if (pos == cells)
            break;
    }
    return pool;
}

struct SlotLines {
    // Column lines (U side) and row lines (V side) per tensor slot, as
    // canonical keys plus the raw vectors for applying candidate maps.
    std::vector<ExactMatrix> u_vecs[3], v_vecs[3];
    std::vector<std::string> u_sorted[3], v_sorted[3];
};

bool maps_columns_onto(const ExactMatrix& map, const std::vector<ExactMatrix>& sources,
                       const std::vector<std::string>& target_sorted)
{
    std::vector<std::string> images;
    images.reserve(sources.size());
    for (const ExactMatrix& u : sources)
        images.push_back(line_key(mat_mul(map, u)));
    return sorted_keys(std::move(images)) == target_sorted;
}

bool maps_rows_onto(const ExactMatrix& right_inv, const std::vector<ExactMatrix>& sources,
                    const std::vector<std::string>& target_sorted)
{
    std::vector<std::string> images;
    images.reserve(sources.size());
    for (const ExactMatrix& v : sources)
        images.push_back(line_key(mat_mul(v, right_inv)));
    return sorted_keys(std::move(images)) == target_sorted;
}

std::vector<ExactMatrix> transposed_all(const std::vector<ExactMatrix>& vecs)
{
    std::vector<ExactMatrix> out;
    out.reserve(vecs.size());
    for (const ExactMatrix& v : vecs)
        out.push_back(mat_transpose(v));
    return out;
}

} // namespace

SearchResult search_automorphisms(const BilinearAlgorithm& alg,
                                  const std::vector<Rational>& pool_entries,
                                  unsigned long long budget)
{
    if (!brent_check(alg).pass)
        throw contract_error("automorphism search requires a valid algorithm");
    const Format format{alg.m, alg.n, alg.p};

    // Tensor-projection lines of the type-(1,1,1) triples, per slot.
    SlotLines lines;
    for (const Triple& t : alg.triples) {
        if (triple_type(t) != TripleType{1, 1, 1})
            continue;
        FineFactorization ff = fine_factorization(t);
        lines.u_vecs[0].push_back(ff.d);
        lines.v_vecs[0].push_back(ff.e_prime);
        lines.u_vecs[1].push_back(ff.e);
        lines.v_vecs[1].push_back(ff.f_prime);
        lines.u_vecs[2].push_back(ff.f);
        lines.v_vecs[2].push_back(ff.d_prime);
    }
    for (int s = 0; s < 3; ++s) {
        std::vector<std::string> u, v;
        for (const ExactMatrix& vec : lines.u_vecs[s])
            u.push_back(line_key(vec));
        for (const ExactMatrix& vec : lines.v_vecs[s])
            v.push_back(line_key(vec));
        lines.u_sorted[s] = sorted_keys(std::move(u));
        lines.v_sorted[s] = sorted_keys(std::move(v));
    }
    const bool prune = !lines.u_vecs[0].empty();

    std::map<std::size_t, std::vector<PoolMatrix>> pools;
    for (std::size_t s : {alg.m, alg.n, alg.p})
        if (!pools.count(s))
            pools[s] = build_pool(s, pool_entries);

    SearchResult result;
    std::set<std::string> seen;
    auto spend = [&](unsigned long long amount) {
        result.candidates_tried += amount;
        if (result.candidates_tried > budget) {
            result.complete = false;
            return false;
        }
        return true;
    };

    for (FactorPermutation sigma : kAllSigmas) {
        if (!sigma_admissible(sigma, format))
            continue;
        if (sigma != FactorPermutation::e && format_is_degenerate(format))
            continue;
        auto images = sigma_images(sigma);
        std::array<std::size_t, 3> src{};
        for (std::size_t i = 0; i < 3; ++i)
            src[images[i]] = i;
        const bool odd = sigma_is_odd(sigma);

        // Source lines feeding each target slot: on odd σ the source factor
        // arrives transposed, swapping its column and row lines.
        std::vector<ExactMatrix> src_u[3], src_v[3];
        for (std::size_t slot = 0; slot < 3; ++slot) {
            src_u[slot] = odd ? transposed_all(lines.v_vecs[src[slot]]) : lines.u_vecs[src[slot]];
            src_v[slot] = odd ? transposed_all(lines.u_vecs[src[slot]]) : lines.v_vecs[src[slot]];
        }

        // Slot 1 of the image is A·x'·B⁻¹, slot 2 is B·y'·C⁻¹, slot 3 is
        // C·z'·A⁻¹: A acts on columns of slot 1 and rows of slot 3, etc.
        auto filter = [&](const std::vector<PoolMatrix>& pool, std::size_t col_slot,
                          std::size_t row_slot, bool& within_budget) {
            std::vector<const PoolMatrix*> kept;
            for (const PoolMatrix& cand : pool) {
                if (!spend(1)) {
                    within_budget = false;
                    return kept;
                }
                if (prune) {
                    if (!maps_columns_onto(cand.mat, src_u[col_slot], lines.u_sorted[col_slot]))
                        continue;
                    if (!maps_rows_onto(cand.inv, src_v[row_slot], lines.v_sorted[row_slot]))
                        continue;
                }
                kept.push_back(&cand);
            }
            return kept;
        };

        bool within_budget = true;
        auto cand_a = filter(pools[alg.m], 0, 2, within_budget);
        if (!within_budget)
            break;
        auto cand_b = filter(pools[alg.n], 1, 0, within_budget);
        if (!within_budget)
            break;
        auto cand_c = filter(pools[alg.p], 2, 1, within_budget);
        if (!within_budget)
            break;

        for (const PoolMatrix* pa : cand_a) {
            for (const PoolMatrix* pb : cand_b)
                for (const PoolMatrix* pc : cand_c) {
                    if (!spend(1)) {
                        within_budget = false;
                        break;
                    }
                    IsotropyElement g = make_element(sigma, pa->mat, pb->mat, pc->mat, format);
                    if (is_automorphism(g, alg) && seen.insert(g.to_key()).second)
                        result.elements.push_back(g);
                }
            if (!within_budget)
                break;
        }
        if (!within_budget)
            break;
    }
    std::sort(result.elements.begin(), result.elements.end());
    return result;
}

} // namespace mmsym
