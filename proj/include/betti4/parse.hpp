#pragma once

#include <string_view>

#include "betti4/monomial.hpp"

namespace betti4 {

inline constexpr Exponent kDefaultExponentCap = 64;

/// Parses a comma-separated list of monomials into a minimalized ideal.
///
///   monomial := factor ('*' factor)* | '1'
///   factor   := var ('^' positive-integer)?
///   var      := 'x' ('1'..'4') | 'a' | 'b' | 'c' | 'd'
///
/// Whitespace around tokens is ignored and '#' starts a comment. Repeated
/// factors multiply. Text with no generators parses to the zero ideal.
///
/// Throws ParseError, VariableOutOfRange (x0, x5, ...) or ExponentCapExceeded
/// (an exponent of the resulting monomial above `max_exponent`).
MonomialIdeal parse_ideal(std::string_view text, Exponent max_exponent = kDefaultExponentCap);

Monomial parse_monomial(std::string_view text, Exponent max_exponent = kDefaultExponentCap);

/// True when the line holds nothing but whitespace and comments.
bool is_blank_line(std::string_view text);

}  // namespace betti4
