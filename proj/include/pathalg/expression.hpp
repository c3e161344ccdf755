#pragma once

// Text syntax for algebra elements:
//
//   expr     := ['-'] term (('+' | '-') term)*
//   term     := [rational ['*']] factor+
//   factor   := ident ['*'] | '(' expr ')'
//   rational := int ['/' int]
//
// An identifier names a vertex (P_v) or an edge (S_e); a postfix '*' on an
// edge gives S_e*. Juxtaposition multiplies. The optional leading sign lets
// printed normal forms such as "-e" be read back.

#include <string>
#include <string_view>

#include "pathalg/algebra.hpp"

namespace pathalg {

/// Throws ParseError (with column) or UnknownIdentifier; StarInPathMode for a
/// starred edge in the path algebra.
AlgebraElement parse_expression(const ContextPtr& ctx, std::string_view text);

}  // namespace pathalg
