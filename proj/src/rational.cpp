#include "mmsym/rational.hpp"

#include <cctype>

namespace mmsym {

namespace {

// Accepts: '-'? digits ( '/' '-'? digits )?  with at least one digit in each
// integer part.  A leading '+' is rejected to keep the format unambiguous.
bool is_well_formed(const std::string& text)
{
    std::size_t pos = 0;
    auto digits = [&]() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        return pos > start;
    };
    if (pos < text.size() && text[pos] == '-')
        ++pos;
    if (!digits())
        return false;
    if (pos < text.size()) {
        if (text[pos] != '/')
            return false;
        ++pos;
        if (!digits()) // denominator is an unsigned positive integer
            return false;
    }
    return pos == text.size();
}

} // namespace

Rational parse_rational(const std::string& text)
{
    if (!is_well_formed(text))
        throw parse_error("malformed rational literal: \"" + text + "\"");
    mpq_class value;
    if (value.set_str(text, 10) != 0)
        throw parse_error("malformed rational literal: \"" + text + "\"");
    if (value.get_den() == 0)
        throw parse_error("zero denominator in rational literal: \"" + text + "\"");
    value.canonicalize();
    return value;
}

std::string rational_to_string(const Rational& value)
{
    return value.get_str();
}

} // namespace mmsym
