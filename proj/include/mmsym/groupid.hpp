#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mmsym/symmetry.hpp"

namespace mmsym {

/// Isomorphism-invariant summary of a small finite group.
struct GroupFingerprint {
    std::size_t order = 0;
    std::map<std::size_t, std::size_t> element_order_histogram;
    bool is_abelian = false;
    std::size_t center_size = 0;

    bool operator==(const GroupFingerprint&) const = default;
};

/// Fingerprint of a concrete group given as a closed element list.
/// Throws contract_error when the list is not closed under composition or
/// lacks the identity.
GroupFingerprint fingerprint(const std::vector<IsotropyElement>& elements);

/// Table entry used by identify().
struct GroupTableEntry {
    std::string name;
    GroupFingerprint fp;
};

/// The built-in recognition table: cyclic groups up to order 36 plus the
/// non-cyclic groups relevant here (Z2xZ2, S3, D4, Q8, A4, S3xZ2, S4, S3xS3).
const std::vector<GroupTableEntry>& group_table();

/// Name of the unique table entry matching the fingerprint, or
/// "ambiguous:<name,...>" when several entries share it, or "unrecognized".
std::string identify(const GroupFingerprint& fp);

} // namespace mmsym
