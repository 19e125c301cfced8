#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stonelat/pathlat.hpp"
#include "stonelat/semilattice.hpp"
#include "stonelat/text_format.hpp"

namespace fixtures {

inline stonelat::Semilattice two() { return stonelat::parse_semilattice("elements: 0 1\norder: 0<1\n"); }

inline stonelat::Semilattice vee() {
  return stonelat::parse_semilattice("elements: 0 a b 1\norder: 0<a<1 0<b<1\n");
}

inline stonelat::Semilattice chain3() { return stonelat::parse_semilattice("elements: 0 a 1\norder: 0<a<1\n"); }

inline stonelat::Semilattice chain4() {
  return stonelat::parse_semilattice("elements: 0 a b 1\norder: 0<a<b<1\n");
}

inline stonelat::RootedGraph two_loops() {
  return stonelat::parse_graph("vertices: t\nroot: t\nedge a t t\nedge b t t\n");
}

inline stonelat::RootedGraph single_edge() {
  return stonelat::parse_graph("vertices: t v\nroot: t\nedge x v t\n");
}

// Element index of a label, for terse assertions.
inline stonelat::Element el(const stonelat::Semilattice& s, const std::string& label) { return s.at(label); }

inline stonelat::ElementSet set(const stonelat::Semilattice& s, const std::vector<std::string>& labels) {
  stonelat::ElementSet out(s.size());
  for (const auto& l : labels) out.insert(s.at(l));
  return out;
}

inline std::string data_path(const std::string& name) { return std::string(STONELAT_TEST_DATA) + "/" + name; }

}  // namespace fixtures
