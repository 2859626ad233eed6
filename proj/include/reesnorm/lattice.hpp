#pragma once

#include <vector>

#include "reesnorm/arith.hpp"

namespace reesnorm {

// A tuple lambda of positive integers together with the derived data used
// throughout the library:
//   L      = lcm(lambda_1, ..., lambda_n)
//   omega  = (L/lambda_1, ..., L/lambda_n)
//   ell    = lcm(lambda_1, ..., lambda_{n-1})   (1 when n = 1)
//   lambda' = (lambda_1, ..., lambda_{n-1}, lambda_n + ell)
// Invariants: lambda_i * omega_i = L for all i, and L = gcd(lambda) * lcm(omega).
struct LambdaSystem {
  Vec lambda;
  int n = 0;
  Int L;
  Vec omega;
  Int ell;
  Vec lambda_prime;
};

// Builds a LambdaSystem.  Throws std::invalid_argument on an empty sequence
// or a nonpositive entry.
LambdaSystem make_lambda_system(const Vec& lambda);

// Membership in the numerical semigroup <generators>: is `target` a
// nonnegative integer combination of the generators?  0 is always contained.
// Throws std::invalid_argument if `generators` is empty or has a nonpositive
// entry.  Negative targets return false.
//
// Algorithm: shortest-path table over residues modulo the smallest generator
// (dist[r] = least semigroup element congruent to r), so arbitrary large
// targets are answered after one table build.  Guarded by ResourceError when
// the smallest generator exceeds the table limit.
bool semigroup_contains(const Vec& generators, const Int& target);

// The <=_pr-minimal points of { alpha in N^n : weights . alpha >= threshold },
// returned as a lex-sorted antichain.  Every minimal point alpha satisfies
// alpha_i <= ceil(threshold / weights_i).  For threshold <= 0 the answer is
// { 0 }.  Throws std::invalid_argument if weights is empty or has a
// nonpositive entry.
std::vector<Vec> minimal_points_halfspace(const Vec& weights, const Int& threshold);

// The <=_pr-minimal subset of `points` (duplicates removed), lex-sorted.
std::vector<Vec> minimalize(std::vector<Vec> points);

// True iff no element of `points` dominates another (duplicates count as
// domination).
bool is_antichain(const std::vector<Vec>& points);

}  // namespace reesnorm
