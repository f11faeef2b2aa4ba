#pragma once

#include <string>

#include "compirr/field.hpp"

namespace compirr::detail {

/// Appends `c*mono` to a sum being printed, folding signs into the
/// separator and dropping unit coefficients. Empty `mono` means a
/// constant term.
inline void append_term(std::string & out, Field const & field, FieldElement const & c,
                        std::string const & mono)
{
    std::string cs = field.to_string(c);
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative)
        cs.erase(0, 1);
    if (out.empty())
        out = negative ? "-" : "";
    else
        out += negative ? " - " : " + ";
    if (mono.empty())
        out += cs;
    else if (cs == "1")
        out += mono;
    else
        out += cs + "*" + mono;
}

inline std::string power_text(std::string const & var, unsigned long k)
{
    if (k == 0)
        return {};
    return k == 1 ? var : var + "^" + std::to_string(k);
}

}  // namespace compirr::detail
