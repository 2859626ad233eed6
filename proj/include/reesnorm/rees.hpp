#pragma once

#include <utility>
#include <vector>

#include "reesnorm/arith.hpp"
#include "reesnorm/lattice.hpp"

namespace reesnorm {

// A minimal generator x^a t^d of the normalized Rees algebra of I(lambda),
// classified as:
//   type 1: (e_i, 0)            — the variables
//   type 2: (lambda_i e_i, 1)   — the pure powers in degree 1
//   type 3: d >= 1, a_n = 0, mixed support among the first n-1 coordinates
//   type 4: d >= 1, a_n > 0 and some other a_i > 0
struct ReesGenerator {
  Vec a;
  Int d;
  int gen_type = 0;

  bool operator==(const ReesGenerator& o) const {
    return a == o.a && d == o.d && gen_type == o.gen_type;
  }
  bool operator!=(const ReesGenerator& o) const { return !(*this == o); }
};

// omega . a >= d * L, the membership condition for x^a t^d in the normalized
// Rees algebra.  Vectors with negative entries (or d < 0) are never members.
bool condition_A(const LambdaSystem& sys, const Vec& a, const Int& d);

// Is x^a t^d a minimal generator of the normalized Rees algebra?  For d = 0
// this means a is a unit vector; for d >= 1 it means
//   (A) omega . a >= d * L,
//   (B) omega . (a - e_i) < d * L for every i with a_i > 0, and
//   (C) no split (a, d) = (b, d_1) + (a - b, d - d_1) with 1 <= d_1 <= d-1
//       and both summands satisfying (A).
bool is_minimal_generator(const LambdaSystem& sys, const Vec& a, const Int& d);

// The full minimal generating set of the normalized Rees algebra, ordered as
// type 1 (i ascending), type 2 (i ascending), then the type-3/4 generators in
// lex order of a (each such a determines d = floor(omega.a / L)).  Every
// type-3/4 generator satisfies a_i < lambda_i for all i and 1 <= d <= n-1.
std::vector<ReesGenerator> minimal_generators(const LambdaSystem& sys);

// Outcome of the Rees-algebra normality criterion: I(lambda) is normal iff
// no type-3/4 minimal generator has d >= 2.  When `normal` is false the
// witness is the generator with d >= 2 whose vector a is lex-least.
struct ReesNormalityVerdict {
  bool normal = true;
  ReesGenerator witness;
};

// Decides normality by scanning the box prod_i [0, lambda_i) for minimal
// generators with d >= 2.  Condition (B) confines their values to the narrow
// windows [d*L, d*L + max{omega_i : lambda_i >= 2}) for d = 2, ..., n-1, so
// the expensive split check (C) only runs on window hits.
ReesNormalityVerdict is_normal_via_rees(const LambdaSystem& sys);

// A bidegree (a, d) with a in Z^n, d in Z, as mapped by the transfer.
struct TransferVector {
  Vec a;
  Int d;

  bool operator==(const TransferVector& o) const { return a == o.a && d == o.d; }
};

// The transfer map between the Rees data of lambda and of
// lambda' = (lambda_1, ..., lambda_{n-1}, lambda_n + ell):
//   f(u, d)  = (u_1, ..., u_{n-1}, u_n + d*ell - sum_{i<n} (ell/lambda_i) u_i, d).
// Both directions are total on Z^{n+1} and mutually inverse; `sys` is the
// base system lambda.
TransferVector transfer_forward(const LambdaSystem& sys, const TransferVector& u);
TransferVector transfer_backward(const LambdaSystem& sys, const TransferVector& u);

// All minimal generators with d = 1 and a_n > 0, i.e. (lambda_n e_n, 1)
// together with the degree-one type-4 generators.  Requires lambda_n >=
// lambda_i for every i (std::invalid_argument otherwise).  Each prefix
// (a_1, ..., a_{n-1}) in prod_{i<n} [0, lambda_i) with
// sum_{i<n} omega_i a_i < L contributes exactly one generator, with
// a_n = ceil((L - sum_{i<n} omega_i a_i) / omega_n); prefixes are emitted in
// lex order.
std::vector<ReesGenerator> enumerate_d1(const LambdaSystem& sys);

// One transferred generator: the type-4 source and its image under f.
using TransferImage = std::pair<ReesGenerator, TransferVector>;

// Everything checked about the relationship between lambda and lambda'.
struct CongruenceReport {
  LambdaSystem sys;
  LambdaSystem sys_prime;
  bool normal = false;        // I(lambda) normal
  bool normal_prime = false;  // I(lambda') normal
  bool lambda_n_ge_ell = false;

  // normality of I(lambda') implies normality of I(lambda)
  bool forward_ok = false;
  // when lambda_n >= ell: the two verdicts coincide
  bool equivalence_ok = true;

  std::vector<ReesGenerator> type4;        // type-4 generators of lambda
  std::vector<ReesGenerator> type4_prime;  // type-4 generators of lambda'
  std::vector<TransferImage> images;       // f applied to type4

  // every image is a type-4 minimal generator for lambda', same d, distinct
  bool injection_ok = false;
  // when lambda_n >= ell: the images are exactly type4_prime
  bool bijection_ok = true;

  bool consistent = false;
};

// Runs the full transfer verification for lambda and lambda'.
CongruenceReport verify_congruence(const LambdaSystem& sys);

}  // namespace reesnorm
