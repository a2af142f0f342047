#pragma once

#include <string>

#include "slicecalc/slice_fn.hpp"

namespace slicecalc {

/// Expression text to a stem; `*` is the slice product and `a/b` means a·recip(b).
/// Throws ParseError with the byte offset of the offending token.
StemExpr parse_stem(const std::string& text, AlgebraKind kind);

/// parse_stem, then a sampled stemness check and the natural domain.
SliceFunction parse_expr(const std::string& text, AlgebraKind kind);

/// Fully parenthesised text that parse_stem maps back to the same tree.
std::string render(const StemExpr& e);
std::string render_constant(const ComplexifiedElement& w);

/// "[...]" constants; also used by the CLI for --at points.
ComplexifiedElement parse_constant(const std::string& text, AlgebraKind kind);

}  // namespace slicecalc
