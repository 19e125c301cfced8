#pragma once

#include <string>
#include <string_view>

#include "stonelat/semilattice.hpp"

namespace stonelat {

// Line-oriented semilattice format, `#` starts a comment:
//
//   elements: 0 a b 1
//   order: 0<a 0<b a<1 b<1
//   meet: a b = 0
//
// `order:` takes generating strict pairs (chains like `0<a<1` are allowed) and
// may repeat. `meet:` lines declare table entries; each contributes its order
// consequences and must agree with the resulting table. Throws Error with
// code Parse for malformed text and the from_order codes for bad structure.
Semilattice parse_semilattice(std::string_view text);
Semilattice read_semilattice_file(const std::string& path);

// Serializes as `elements:` plus the covering pairs, in index order. The
// output parses back to an identical semilattice.
std::string to_text(const Semilattice& s);

}  // namespace stonelat
