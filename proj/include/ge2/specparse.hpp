#pragma once

#include "ge2/words.hpp"

namespace ge2 {

// "Q", "Qi:<d>" (d > 0 squarefree), "quat:<u>,<v>" (u, v < 0)
AlgebraRef parse_algebra_descriptor(std::string const &s);

// Builtin names (Z, I1, I2, I3, I7, I11, Zsqrt:<d>, L, O2, O3, O5),
// "Iq:<d>" for the ring of integers of Q(sqrt -d), or
// "custom:{descriptor, basis: [["p/q", ...], ...]}" as JSON.
Order parse_order_spec(std::string const &s);

// Builtin group name, "perm:<json permutation list>", or
// "table:<json multiplication table>".
FiniteGroup parse_group_spec(std::string const &s);

// Semicolon-separated letters: E(c,...), D(c,...), [(c,...),(c,...)],
// each optionally wrapped in inv(...).  Coordinates are integers in the
// order basis.
Word parse_word(Order const &o, std::string const &s);
std::string word_str(Word const &w);

} // namespace ge2
