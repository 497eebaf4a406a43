#include "mmsym/groupid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mmsym/errors.hpp"

namespace mmsym {

GroupFingerprint fingerprint(const std::vector<IsotropyElement>& elements)
{
    if (elements.empty())
        throw contract_error("fingerprint of an empty element list");
    const std::size_t order = elements.size();
    std::map<std::string, std::size_t> index_of;
    for (std::size_t i = 0; i < order; ++i)
        if (!index_of.emplace(elements[i].to_key(), i).second)
            throw contract_error("duplicate element in group list");

    // Composition table; a product outside the list means the list is not
    // closed, hence not a group.
    std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) {
            auto it = index_of.find(compose(elements[i], elements[j]).to_key());
            if (it == index_of.end())
                throw contract_error("element list is not closed under composition");
            table[i][j] = it->second;
        }

    std::size_t identity_idx = order;
    for (std::size_t i = 0; i < order; ++i) {
        bool is_identity = true;
        for (std::size_t j = 0; j < order && is_identity; ++j)
            is_identity = (table[i][j] == j && table[j][i] == j);
        if (is_identity) {
            identity_idx = i;
            break;
        }
    }
    if (identity_idx == order)
        throw contract_error("element list has no identity");

    GroupFingerprint fp;
    fp.order = order;
    for (std::size_t i = 0; i < order; ++i) {
        std::size_t power = i, element_order = 1;
        while (power != identity_idx) {
            power = table[power][i];
            ++element_order;
            if (element_order > order)
                throw contract_error("element order exceeds group order; not a group");
        }
        ++fp.element_order_histogram[element_order];
    }
    fp.is_abelian = true;
    fp.center_size = 0;
    for (std::size_t i = 0; i < order; ++i) {
        bool central = true;
        for (std::size_t j = 0; j < order; ++j)
            if (table[i][j] != table[j][i]) {
                central = false;
                fp.is_abelian = false;
            }
        if (central)
            ++fp.center_size;
    }
    return fp;
}

namespace {

GroupFingerprint make_fp(std::size_t order, std::initializer_list<std::pair<std::size_t, std::size_t>> hist,
                         bool abelian, std::size_t center)
{
    GroupFingerprint fp;
    fp.order = order;
    for (auto [k, v] : hist)
        fp.element_order_histogram[k] = v;
    fp.is_abelian = abelian;
    fp.center_size = center;
    return fp;
}

std::size_t euler_phi(std::size_t n)
{
    std::size_t result = n;
    for (std::size_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    if (n > 1)
        result -= result / n;
    return result;
}

GroupFingerprint cyclic_fp(std::size_t n)
{
    GroupFingerprint fp;
    fp.order = n;
    for (std::size_t d = 1; d <= n; ++d)
        if (n % d == 0)
            fp.element_order_histogram[d] = euler_phi(d);
    fp.is_abelian = true;
    fp.center_size = n;
    return fp;
}

std::vector<GroupTableEntry> build_table()
{
    std::vector<GroupTableEntry> table;
    table.push_back({"trivial", cyclic_fp(1)});
    for (std::size_t n = 2; n <= 36; ++n) {
        std::ostringstream name;
        name << "Z" << n;
        table.push_back({name.str(), cyclic_fp(n)});
    }
    table.push_back({"Z2xZ2", make_fp(4, {{1, 1}, {2, 3}}, true, 4)});
    table.push_back({"S3", make_fp(6, {{1, 1}, {2, 3}, {3, 2}}, false, 1)});
    table.push_back({"D4", make_fp(8, {{1, 1}, {2, 5}, {4, 2}}, false, 2)});
    table.push_back({"Q8", make_fp(8, {{1, 1}, {2, 1}, {4, 6}}, false, 2)});
    table.push_back({"A4", make_fp(12, {{1, 1}, {2, 3}, {3, 8}}, false, 1)});
    table.push_back({"S3xZ2", make_fp(12, {{1, 1}, {2, 7}, {3, 2}, {6, 2}}, false, 2)});
    table.push_back({"S4", make_fp(24, {{1, 1}, {2, 9}, {3, 8}, {4, 6}}, false, 1)});
    table.push_back({"S3xS3", make_fp(36, {{1, 1}, {2, 15}, {3, 8}, {6, 12}}, false, 1)});
    return table;
}

} // namespace

const std::vector<GroupTableEntry>& group_table()
{
    static const std::vector<GroupTableEntry> table = build_table();
    return table;
}

std::string identify(const GroupFingerprint& fp)
{
    std::vector<std::string> matches;
    for (const GroupTableEntry& entry : group_table())
        if (entry.fp == fp)
            matches.push_back(entry.name);
    if (matches.empty())
        return "unrecognized";
    if (matches.size() == 1)
        return matches.front();
    std::ostringstream out;
    out << "ambiguous:";
    for (std::size_t i = 0; i < matches.size(); ++i) {
        if (i != 0)
            out << ",";
        out << matches[i];
    }
    return out.str();
}

} // namespace mmsym
