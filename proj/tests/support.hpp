#pragma once

#include <ostream>
#include <string_view>

#include "compirr/bipoly.hpp"
#include "compirr/multipoly.hpp"
#include "compirr/parser.hpp"

namespace compirr {

// Readable failure messages in doctest.
inline std::ostream & operator<<(std::ostream & os, UniPoly const & u) { return os << u.to_string(); }
inline std::ostream & operator<<(std::ostream & os, BiPoly const & b) { return os << b.to_string(); }
inline std::ostream & operator<<(std::ostream & os, MultiPoly const & m) { return os << m.to_string(); }
inline std::ostream & operator<<(std::ostream & os, Degree d) { return os << d.to_string(); }

}  // namespace compirr

namespace support {

using namespace compirr;

inline FieldRef Q() { return Field::rationals(); }
inline FieldRef GF(std::uint64_t p) { return Field::prime_field(p); }

inline UniPoly U(FieldRef const & f, std::string_view text) { return parse_uni(text, f); }
inline BiPoly B(FieldRef const & f, std::string_view text) { return parse_bi(text, f); }
inline MultiPoly M(FieldRef const & f, std::size_t r, std::string_view text) { return parse_multi(text, f, r); }

}  // namespace support
