#pragma once

#include <vector>

#include "reesnorm/arith.hpp"
#include "reesnorm/ideal.hpp"

namespace reesnorm {

// A weighting of the variables by positive integers, with w = lcm(weights).
struct WeightedGrading {
  Vec weights;
  Int w;
  int n = 0;
};

// Validates (nonempty, all positive; std::invalid_argument otherwise) and
// computes the lcm.
WeightedGrading make_weighted_grading(const Vec& weights);

// The ideal generated by all monomials of weighted degree >= d, for d >= 1.
// Its minimal generators are the minimal points of the halfspace
// weights . alpha >= d, and the ideal is always integrally closed.
MonomialIdeal ideal_at_least(const WeightedGrading& grading, const Int& d);

// Comparison of I^p and A_{>= p*k*w} for I = A_{>= k*w}.
struct PowerEqualityReport {
  // I^p equals the degree ideal A_{>= p*k*w}.
  bool power_equal = true;
  // closure(I^p) equals A_{>= p*k*w}; this holds for every k and p because
  // the threshold k*w is a multiple of every weight, making the Newton
  // polyhedron of I a single halfspace with integral vertices.
  bool closure_equal = true;
  bool has_witness = false;
  // When power_equal is false: the lex-least minimal generator of
  // A_{>= p*k*w} that is not a product of p monomials of I.
  Vec witness;
};

// Tests I^p == A_{>= p*k*w} (membership of each degree-ideal generator in
// Gamma(I^p), without materializing the power) and the closure identity.
// Requires k >= 1 and p >= 1.
PowerEqualityReport verify_power_equality(const WeightedGrading& grading, const Int& k,
                                          const Int& p);

// Outcome of the graded normality criterion for I = A_{>= k*w}.
struct FaridiVerdict {
  // True: I is certified normal.  False: the power equality failed at
  // failing_p, which leaves normality undecided (not refuted).
  bool certified_normal = true;
  Int failing_p;
  Vec witness;
  bool has_witness = false;
};

// I = A_{>= k*w} is normal if I^p = A_{>= p*k*w} for every
// p <= floor((n-2)/k) + 1; larger exponents follow automatically.  In
// particular k >= n-1 certifies normality with no power checks at all.
FaridiVerdict faridi_check(const WeightedGrading& grading, const Int& k);

}  // namespace reesnorm
