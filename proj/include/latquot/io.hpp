#ifndef LATQUOT_IO_HPP
#define LATQUOT_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "latquot/congruence.hpp"
#include "latquot/lattice.hpp"

namespace latquot {

/**
 * Reads the lattice text format:
 *
 *   # comment
 *   elements: 0 a b c 1
 *   covers: 0<b b<a a<1 0<c c<1
 *
 * Blank lines and '#' lines are ignored. The covers line may be repeated or
 * omitted. Throws SyntaxError (byte offset) plus anything from_covers throws.
 */
Lattice parse_lattice_text(std::string_view text);

/// Writes the format above with covers ordered by lower, then upper, element
/// position. Parsing the output reproduces the lattice exactly.
std::string format_lattice_text(const Lattice& lattice);

/// Hasse diagram in Graphviz DOT, drawn bottom to top. With a congruence,
/// each block of two or more elements becomes a coloured cluster.
std::string to_dot(const Lattice& lattice,
                   const std::optional<Congruence>& highlight = std::nullopt);

}  // namespace latquot

#endif  // LATQUOT_IO_HPP
