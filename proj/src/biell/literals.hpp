#pragma once

#include <string>
#include <string_view>

#include "biell/isometry.hpp"

namespace biell {

/// Wire formats shared by the C API and the CLI. All parsers are strict:
/// integers are minimal decimal ("0", "-12", no leading '+', zeros or spaces),
/// class and matrix literals are comma-separated with no whitespace, and word
/// literals are whitespace-separated letter tokens. format(parse(s)) == s for
/// every accepted literal, and parse(format(v)) == v for every value.

Int parse_int(std::string_view s);  // throws std::invalid_argument
std::string format_int(const Int& v);

/// "r,x,y,s"
NumClass parse_class(SurfaceType t, std::string_view s);
std::string format_class(const NumClass& v);

/// 16 row-major comma-separated entries.
Mat4 parse_matrix16(std::string_view s);
std::string format_matrix16(const Mat4& m);

/// Letters: "shift", "tlb(mx,my)", "fma(c,a,d,b)", "fmb(c,a,d,b)", each
/// optionally suffixed "^-1". An empty (or all-whitespace) literal is the
/// empty word.
GeneratorWord parse_word(SurfaceType t, std::string_view s);
std::string format_word(const GeneratorWord& w);
std::string format_letter(const GeneratorLetter& l);

/// Human-readable form "(r, <divisor>, s)" with the divisor written in the
/// fiber classes A and B, e.g. "(0, (1/2)A, 0)" or "(2, A + B, 1)".
std::string format_class_ab(const NumClass& v);

}  // namespace biell
