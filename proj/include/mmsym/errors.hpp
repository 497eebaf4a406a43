#pragma once

#include <stdexcept>
#include <string>

namespace mmsym {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Dimension mismatch between operands.
class shape_error : public error {
public:
    explicit shape_error(const std::string& msg) : error(msg) {}
};

/// Inversion (or contragredient) of a singular matrix.
class singular_error : public error {
public:
    explicit singular_error(const std::string& msg) : error(msg) {}
};

/// Operation requires a specific rank (e.g. rank-one factorization).
class rank_error : public error {
public:
    explicit rank_error(const std::string& msg) : error(msg) {}
};

/// Factor permutation not admissible for the given format.
class admissibility_error : public error {
public:
    explicit admissibility_error(const std::string& msg) : error(msg) {}
};

/// Malformed input document.
class parse_error : public error {
public:
    explicit parse_error(const std::string& msg) : error(msg) {}
};

/// A documented precondition was violated by the caller.
class contract_error : public error {
public:
    explicit contract_error(const std::string& msg) : error(msg) {}
};

/// A configured resource limit (closure cap, search budget) was exceeded.
class resource_error : public error {
public:
    explicit resource_error(const std::string& msg) : error(msg) {}
};

/// Argument outside the mathematical domain of an operation.
class domain_error : public error {
public:
    explicit domain_error(const std::string& msg) : error(msg) {}
};

/// Unknown name in a lookup (e.g. relation word references).
class lookup_error : public error {
public:
    explicit lookup_error(const std::string& msg) : error(msg) {}
};

} // namespace mmsym
