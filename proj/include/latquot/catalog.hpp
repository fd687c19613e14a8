#ifndef LATQUOT_CATALOG_HPP
#define LATQUOT_CATALOG_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "latquot/lattice.hpp"

namespace latquot {

/// A lattice with a name and labelled elements of interest (generators,
/// distinguished atoms, ...).
struct NamedLattice {
  std::string name;
  Lattice lattice;
  std::map<std::string, Index, std::less<>> distinguished;

  /// Index of a distinguished element. Throws UnknownElement.
  Index at(std::string_view label) const;
};

/// Chain 0 < 1 < ... < n-1. Requires n >= 1.
NamedLattice chain(std::size_t n);

/// Subsets of n atoms, identifiers are bit strings with atom i at position i
/// ("0" for n = 0). Requires n <= 6.
NamedLattice boolean(std::size_t n);

/// Bottom 0, atoms p, q, r, top 1.
NamedLattice m3();

/// 0 < b < a < 1 and 0 < c < 1; distinguished a, b, c.
NamedLattice n5();

/// Free distributive lattice on n <= 3 generators x, y, z: the nonconstant
/// monotone Boolean functions, named by the antichain of their minimal true
/// sets, e.g. "{x}{y,z}". Throws UnsupportedRank for n > 3.
NamedLattice free_distributive(std::size_t n);

/// Free modular lattice on x, y, z, realized as the sublattice of
/// free_distributive(3) x m3() generated by (x,p), (y,q), (z,r).
/// Distinguished: x, y, z and
///   u = (y \/ z) /\ (z \/ x) /\ (x \/ y),
///   v = (y /\ z) \/ (z /\ x) \/ (x /\ y).
NamedLattice free_modular_3();

/// Free lattice on n <= 2 generators. Throws UnsupportedRank for n >= 3.
NamedLattice free_lattice_small(std::size_t n);

/// chain-k, boolean-k, m3, n5, fd-1..fd-3, fm-3, f-1, f-2.
/// Throws InvalidArgument for an unknown name.
NamedLattice catalog_lookup(std::string_view name);

/// The named lattices used by the test suites, in a fixed order.
std::vector<std::string> catalog_names();

}  // namespace latquot

#endif  // LATQUOT_CATALOG_HPP
