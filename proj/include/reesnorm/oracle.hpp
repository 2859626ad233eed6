#pragma once

#include <optional>
#include <vector>

#include "reesnorm/arith.hpp"
#include "reesnorm/ideal.hpp"
#include "reesnorm/lambda.hpp"
#include "reesnorm/lattice.hpp"

namespace reesnorm {

// Cross-checking oracles built on first principles.  They share no search
// machinery with the main implementations: no Newton facets, no minimal
// generator candidates, no memoization.  They exist to validate the fast
// paths on small inputs.

enum class ScalingVerdict {
  yes,               // s*alpha dominates a sum of s*m generators for the reported s
  no_witness_found,  // no scale up to m_max produced a witness
  out_of_budget      // some scale's search table exceeded the size budget
};

struct ScalingResult {
  ScalingVerdict verdict = ScalingVerdict::no_witness_found;
  Int s;  // the witnessing scale when verdict == yes
};

// Tests alpha in m*NP(I) through the scaling characterization: alpha lies in
// m*NP(I) iff s*alpha in Gamma(I^{s*m}) for some integer s >= 1.  For each
// scale s = 1, ..., m_max a dynamic program over the box [0, s*alpha]
// computes, for every beta, the largest r such that beta dominates a sum of
// r generators; the scale succeeds when that count at s*alpha reaches s*m.
// A `yes` is definitive; `no_witness_found` only reports that no scale in
// range worked.
ScalingResult np_contains_scaling(const MonomialIdeal& ideal, const Vec& alpha, const Int& m,
                                  const Int& m_max);

// A generous default scale budget: the product of (1 + max generator
// exponent) over the coordinates.
Int default_scaling_budget(const MonomialIdeal& ideal);

// Exhaustive counterpart of decompose_gamma: backtracking over all elements
// of Gamma(I(lambda)) below alpha (not just minimal generators), in
// lex-descending order, summing exactly to alpha, with no memoization.
// Guarded by ResourceError when the candidate list or box is too large.
std::optional<GammaDecomposition> decompose_exhaustive(const LambdaSystem& sys,
                                                       const Vec& alpha, const Int& p);

// Exhaustive counterpart of is_quasinormal: checks every semigroup value
// s in <omega> with s < n*L against every part count 1 <= p < n with
// s >= p*L, splitting by plain recursion over all first parts.  Agrees with
// the box-restricted main check: a value with no box representation peels
// off a summand equal to L, reducing to smaller part counts.
bool quasinormal_bounded(const LambdaSystem& sys);

}  // namespace reesnorm
