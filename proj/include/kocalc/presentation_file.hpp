#pragma once

#include <kocalc/space_data.hpp>
#include <kocalc/space_spec.hpp>

#include <iosfwd>
#include <string>

namespace kocalc {

/* Line-based presentation format:
 *
 *   space NAME
 *   dimc D
 *   gen NAME DEGREE
 *   rel POLY
 *   sq2 NAME = POLY
 *   twist NAME = POLY
 *
 * POLY is `+`-separated terms, each term a `*`-separated product of factors
 * `gen` or `gen^exp`; `1` is the empty product and `0` the empty sum.  `#`
 * starts a comment; blank lines are ignored.  Degrees must be even and
 * positive, polynomials homogeneous, and every generator needs exactly one
 * sq2 line.  The trivial twist "O" is implicit. */

Polynomial parse_polynomial(std::string_view text, const std::vector<Generator>& gens);
std::string polynomial_to_string(const Polynomial& p, const std::vector<Generator>& gens);
std::string element_to_string(const Element& e, const Presentation& p);

SpaceData parse_presentation_file(std::istream& in, const std::string& source_name);
SpaceData parse_presentation_text(const std::string& text,
                                  const std::string& source_name = "<string>");
SpaceData load_presentation_file(const std::string& path);

/* Canonical writer; parsing the output reproduces the same space. */
std::string write_presentation_file(const SpaceData& space);

/* Build the SpaceData for any spec, catalog or file. */
SpaceData realize(const SpaceSpec& spec);

} // namespace kocalc
