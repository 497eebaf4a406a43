#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "mmsym/errors.hpp"
#include "mmsym/groupid.hpp"

using namespace mmsym;

namespace {

ExactMatrix perm_matrix(const std::vector<std::size_t>& image)
{
    ExactMatrix p(image.size(), image.size());
    for (std::size_t j = 0; j < image.size(); ++j)
        p.at(image[j], j) = 1;
    return p;
}

// Embeds a permutation group on s points as scaling transformations
// T(P, 1, 1) in format (s,s,s); permutation matrices have no nontrivial
// scalar multiples in the pool, so the embedding is faithful.
std::vector<IsotropyElement> perm_group(const std::vector<std::vector<std::size_t>>& generators)
{
    std::size_t s = generators.at(0).size();
    Format format{s, s, s};
    std::vector<IsotropyElement> gens;
    for (const auto& image : generators)
        gens.push_back(make_T(perm_matrix(image), ExactMatrix::identity(s),
                              ExactMatrix::identity(s), format));
    return group_closure(format, gens);
}

std::vector<std::size_t> cycle(std::size_t s, std::vector<std::size_t> support)
{
    std::vector<std::size_t> image(s);
    std::iota(image.begin(), image.end(), 0);
    for (std::size_t i = 0; i + 1 < support.size(); ++i)
        image[support[i]] = support[i + 1];
    image[support.back()] = support.front();
    return image;
}

GroupFingerprint table_fingerprint(const std::string& name)
{
    for (const GroupTableEntry& entry : group_table())
        if (entry.name == name)
            return entry.fp;
    throw lookup_error("no table entry named " + name);
}

IsotropyElement lad_phi1()
{
    ExactMatrix p23 = ExactMatrix::from_ints(3, 3, {1, 0, 0, 0, 0, 1, 0, 1, 0});
    ExactMatrix p13 = ExactMatrix::from_ints(3, 3, {0, 0, 1, 0, 1, 0, 1, 0, 0});
    return make_T(p23, p13, ExactMatrix::identity(3), Format{3, 3, 3});
}

IsotropyElement lad_phi2()
{
    ExactMatrix p23 = ExactMatrix::from_ints(3, 3, {1, 0, 0, 0, 0, 1, 0, 1, 0});
    return make_T(p23, ExactMatrix::identity(3), p23, Format{3, 3, 3});
}

} // namespace

TEST_CASE("fingerprint of the trivial group")
{
    GroupFingerprint fp = fingerprint({identity_element(Format{2, 2, 2})});
    CHECK(fp.order == 1);
    CHECK(fp.element_order_histogram == std::map<std::size_t, std::size_t>{{1, 1}});
    CHECK(fp.is_abelian);
    CHECK(fp.center_size == 1);
    CHECK(identify(fp) == "trivial");
}

TEST_CASE("fingerprint rejects non-groups")
{
    // no identity
    CHECK_THROWS_AS(fingerprint({lad_phi1()}), contract_error);
    // not closed: missing the product of the two involutions
    CHECK_THROWS_AS(fingerprint({identity_element(Format{3, 3, 3}), lad_phi1(), lad_phi2()}),
                    contract_error);
}

TEST_CASE("cyclic group fingerprints match the table")
{
    for (std::size_t d : {2u, 3u, 4u, 5u, 6u, 7u, 8u, 9u, 10u, 12u}) {
        std::vector<std::size_t> points(d);
        std::iota(points.begin(), points.end(), 0);
        std::vector<IsotropyElement> group = perm_group({cycle(d, points)});
        GroupFingerprint fp = fingerprint(group);
        INFO("Z", d);
        CHECK(fp.order == d);
        CHECK(fp.is_abelian);
        CHECK(fp.center_size == d);
        CHECK(fp == table_fingerprint("Z" + std::to_string(d)));
        CHECK(identify(fp) == "Z" + std::to_string(d));
    }

    // Z36 realized as a 4-cycle times a 9-cycle on 13 points
    std::vector<std::size_t> image = cycle(13, {0, 1, 2, 3});
    std::vector<std::size_t> nine = cycle(13, {4, 5, 6, 7, 8, 9, 10, 11, 12});
    for (std::size_t j = 4; j < 13; ++j)
        image[j] = nine[j];
    std::vector<IsotropyElement> z36 = perm_group({image});
    GroupFingerprint fp = fingerprint(z36);
    CHECK(fp.order == 36);
    CHECK(fp == table_fingerprint("Z36"));
    CHECK(identify(fp) == "Z36");
}

TEST_CASE("non-cyclic reference groups match the table")
{
    struct Sample {
        std::string name;
        std::vector<std::vector<std::size_t>> generators;
        std::size_t order;
    };
    std::vector<Sample> samples = {
        {"Z2xZ2", {cycle(4, {0, 1}), cycle(4, {2, 3})}, 4},
        {"S3", {cycle(3, {0, 1, 2}), cycle(3, {0, 1})}, 6},
        {"D4", {cycle(4, {0, 1, 2, 3}), cycle(4, {0, 2})}, 8},
        {"A4", {cycle(4, {0, 1, 2}), {1, 0, 3, 2}}, 12}, // (012) and (01)(23)
        {"S3xZ2", {cycle(5, {0, 1, 2}), cycle(5, {0, 1}), cycle(5, {3, 4})}, 12},
        {"S4", {cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1})}, 24},
        {"S3xS3",
         {cycle(6, {0, 1, 2}), cycle(6, {0, 1}), cycle(6, {3, 4, 5}), cycle(6, {3, 4})},
         36},
    };
    for (const Sample& sample : samples) {
        std::vector<IsotropyElement> group = perm_group(sample.generators);
        GroupFingerprint fp = fingerprint(group);
        INFO(sample.name);
        CHECK(group.size() == sample.order);
        CHECK(fp == table_fingerprint(sample.name));
        CHECK(identify(fp) == sample.name);
    }
}

TEST_CASE("quaternion group via its regular permutation representation")
{
    // indices: 1, -1, i, -i, j, -j, k, -k; generators are left multiplication
    // by i and by j
    std::vector<std::size_t> left_i = {2, 3, 1, 0, 6, 7, 5, 4};
    std::vector<std::size_t> left_j = {4, 5, 7, 6, 1, 0, 2, 3};
    std::vector<IsotropyElement> q8 = perm_group({left_i, left_j});
    GroupFingerprint fp = fingerprint(q8);
    CHECK(fp.order == 8);
    CHECK(fp.element_order_histogram ==
          std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {4, 6}});
    CHECK(fp.center_size == 2);
    CHECK_FALSE(fp.is_abelian);
    CHECK(fp == table_fingerprint("Q8"));
    CHECK(identify(fp) == "Q8");
    // D4 has the same order but a different order histogram
    CHECK(fp != table_fingerprint("D4"));
}

TEST_CASE("fingerprint is independent of element order in the list")
{
    std::vector<IsotropyElement> s4 =
        perm_group({cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1})});
    GroupFingerprint reference = fingerprint(s4);
    std::mt19937 rng(77);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(s4.begin(), s4.end(), rng);
        CHECK(fingerprint(s4) == reference);
    }
}

TEST_CASE("identify reports unrecognized fingerprints")
{
    GroupFingerprint bogus;
    bogus.order = 5;
    bogus.element_order_histogram = {{1, 1}, {2, 4}};
    bogus.is_abelian = true;
    bogus.center_size = 5;
    CHECK(identify(bogus) == "unrecognized");
}

TEST_CASE("automorphism groups of the builtin 3x3 algorithms")
{
    ExactMatrix i3 = ExactMatrix::identity(3);
    ExactMatrix p12 = ExactMatrix::from_ints(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1});
    ExactMatrix p13 = ExactMatrix::from_ints(3, 3, {0, 0, 1, 0, 1, 0, 1, 0, 0});
    ExactMatrix p23 = ExactMatrix::from_ints(3, 3, {1, 0, 0, 0, 0, 1, 0, 1, 0});
    ExactMatrix eps1 = ExactMatrix::from_ints(3, 3, {-1, 0, 0, 0, 1, 0, 0, 0, 1});
    ExactMatrix eps2 = ExactMatrix::from_ints(3, 3, {1, 0, 0, 0, -1, 0, 0, 0, 1});
    Format f333{3, 3, 3};
    std::vector<IsotropyElement> lad_group = group_closure(
        f333, {make_T(p23, p13, i3, f333), make_T(p23, i3, p23, f333),
               make_element(FactorPermutation::s12, i3, eps2, i3, f333),
               make_element(FactorPermutation::c123, eps1, p12, mat_mul(eps1, p12), f333)});
    GroupFingerprint lad_fp = fingerprint(lad_group);
    CHECK(lad_fp.order == 24);
    CHECK(lad_fp.element_order_histogram ==
          std::map<std::size_t, std::size_t>{{1, 1}, {2, 9}, {3, 8}, {4, 6}});
    CHECK(lad_fp.center_size == 1);
    CHECK(identify(lad_fp) == "S4");

    Format f323{3, 2, 3};
    ExactMatrix p123 = ExactMatrix::from_ints(3, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0});
    ExactMatrix d = ExactMatrix::from_ints(2, 2, {0, -1, 1, -1});
    ExactMatrix swap2 = ExactMatrix::from_ints(2, 2, {0, 1, 1, 0});
    ExactMatrix rot2 = ExactMatrix::from_ints(2, 2, {0, -1, 1, 0});
    std::vector<IsotropyElement> hop_group = group_closure(
        f323, {make_T(p123, d, p123, f323), make_T(p13, swap2, p13, f323),
               make_element(FactorPermutation::s12, i3, rot2, i3, f323)});
    GroupFingerprint hop_fp = fingerprint(hop_group);
    CHECK(hop_fp.order == 12);
    CHECK(hop_fp.element_order_histogram ==
          std::map<std::size_t, std::size_t>{{1, 1}, {2, 7}, {3, 2}, {6, 2}});
    CHECK(hop_fp.center_size == 2);
    CHECK(identify(hop_fp) == "S3xZ2");
    CHECK(hop_fp != table_fingerprint("A4"));
}

TEST_CASE("table entries are pairwise distinct")
{
    const auto& table = group_table();
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = i + 1; j < table.size(); ++j) {
            INFO(table[i].name, " vs ", table[j].name);
            CHECK(!(table[i].fp == table[j].fp));
        }
}
