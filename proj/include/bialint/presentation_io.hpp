#pragma once

#include <string>
#include <string_view>

#include "bialint/presentation.hpp"

namespace bialint {

/// Parses "2 x.y - 1/2 y + 3". Throws MalformedInput.
NcPoly parse_poly(std::string_view text, const Alphabet& alphabet);
/// Parses "x (x) y + (1 - x) (x) y". A bare number before "(x)" is a scalar
/// multiple of the unit. Throws MalformedInput.
TensorPoly parse_tensor(std::string_view text, const Alphabet& alphabet);

/// Reads the line-oriented presentation format:
///
///   bialgebra <name>
///   q = <rational>
///   gens g1 g2 ...
///   order deglex g1 < g2 < ...
///   rule <word> -> <poly>
///   delta <g> = <tensor sum>
///   counit <g> = <rational>
///   antipode <g> = <poly>
///   flags commutative cocommutative finite
///
/// A `structure` line switches to structure constants, where basis elements
/// get labels (`basis b1 = x.y`) and `mult b1.b2 = ...`, `delta`, `counit`
/// and `antipode` are written in labels. Lines starting with '#' are comments.
///
/// Syntax errors throw ParseError with the line number. When `validate` is
/// set the result must also pass confluence and check_axioms (up to degree 4,
/// or the top degree when finite); otherwise ValidationError lists the
/// failures.
Presentation parse_presentation(std::string_view text, bool validate = true);

/// Inverse of parse_presentation.
std::string serialize_presentation(const Presentation& p);

/// Reads a file and parses it. Throws MalformedInput if it cannot be read.
Presentation load_presentation_file(const std::string& path, bool validate = true);

}  // namespace bialint
