#ifndef MOTIVIC_PARSER_HPP
#define MOTIVIC_PARSER_HPP

#include <string>

#include <motivic/duality.hpp>
#include <motivic/variety.hpp>

namespace motivic {

/// Parses the surface syntax of the variety language:
///   empty | pt | A(n) | P(n) | T(n) | Gr(k,n) | vb(X, r) | pb(X, r)
///   | bl(X; Y; d) | sym(name, dim, flags) | X * Y | X + Y | X \ Y | (X)
/// Precedence, loosest first: \ , + , * (all left-associative). Flags are a
/// word over {s, c, n} (smooth, complete, connected) or "-" for none.
/// Positions in diagnostics are 1-based line/column.
ExprPtr parse_expr(const std::string& src);

/// Parses the canonical Laurent rendering (e.g. "L^-2 + 3 + 2*L", "0").
Laurent parse_laurent(const std::string& src);

/// Parses an SNC data file:
///   interior = <expr>
///   ambient  = <expr>
///   levels   = [ <expr>, <expr>, ... ]
/// '#' starts a comment; the levels list may span multiple lines. The parsed
/// data is validated before being returned.
SNCData parse_snc_file(const std::string& text);

} // namespace motivic

#endif
