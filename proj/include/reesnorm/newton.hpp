#pragma once

#include <vector>

#include "reesnorm/arith.hpp"

namespace reesnorm {

// One facet inequality w . x >= q of a Newton polyhedron NP = conv(G) + R>=0^n,
// with w >= 0 componentwise, w != 0, q >= 0, and gcd(w, q) = 1.  The
// coordinate halfspaces x_i >= 0 appear as w = e_i, q = 0 when they are
// facets.
struct Facet {
  Vec w;
  Int q;
};

// Computes the full, irredundant facet list of conv(gens) + R>=0^n for a
// nonempty set of points in N^n, sorted lexicographically by (w, q).
//
// Method: the valid inequalities form the pointed (n+1)-dimensional dual cone
//   D = { (w, q) : w >= 0,  w . b - q >= 0 for every generator b },
// whose extreme rays are exactly the facet inequalities plus the trivial ray
// (0, -1).  The rays are built by the incremental double description method
// with the combinatorial adjacency test, starting from the simplicial cone
// cut out by the n coordinate constraints and the first generator constraint.
std::vector<Facet> newton_facets(int n, const std::vector<Vec>& gens);

}  // namespace reesnorm
