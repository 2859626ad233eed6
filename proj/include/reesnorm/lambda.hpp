#pragma once

#include <optional>
#include <vector>

#include "reesnorm/arith.hpp"
#include "reesnorm/ideal.hpp"
#include "reesnorm/lattice.hpp"

namespace reesnorm {

// I(lambda): the integral closure of (x_1^{lambda_1}, ..., x_n^{lambda_n}).
// Its exponent set is { alpha in N^n : omega . alpha >= L } and its minimal
// generators are the minimal points of that halfspace.
MonomialIdeal ideal_of_lambda(const LambdaSystem& sys);

// alpha in Gamma(I(lambda)), i.e. omega . alpha >= L with alpha in N^n.
bool gamma_contains(const LambdaSystem& sys, const Vec& alpha);

// A decomposition alpha = parts[0] + ... + parts[p-1] with every part in
// Gamma(I(lambda)); the parts sum to alpha exactly.
struct GammaDecomposition {
  std::vector<Vec> parts;
};

// Searches for a decomposition of alpha into exactly p parts of
// Gamma(I(lambda)).  Returns std::nullopt when none exists; in particular
// immediately when omega . alpha < p * L, which is necessary.  Requires
// p >= 1 and alpha of length n (std::invalid_argument otherwise); vectors
// with negative entries have no decomposition.
//
// Search order: the first p-1 parts are chosen among the minimal generators
// of I(lambda) in lex-descending order (restricting to minimal generators
// loses no decompositions, since any part may be shrunk to a generator below
// it with the slack pushed into the final part); the final part absorbs the
// remainder.  Failed (remainder, parts-left) states are memoized.
std::optional<GammaDecomposition> decompose_gamma(const LambdaSystem& sys, const Vec& alpha,
                                                  const Int& p);

// Outcome of the normality check for I(lambda).  When `normal` is false,
// alpha lies in the box prod_i [0, lambda_i) with omega . alpha >= p * L but
// admits no decomposition into p parts of Gamma(I(lambda)); alpha is the
// lex-least such point and p the smallest failing count for it.
struct LambdaNormalityVerdict {
  bool normal = true;
  Vec alpha;
  Int p;
};

// I(lambda) is normal iff every alpha in prod_i [0, lambda_i) with
// omega . alpha >= p * L, 2 <= p <= n-1, decomposes into p parts of
// Gamma(I(lambda)).  (For n <= 2 the condition is vacuous and I(lambda) is
// always normal.)
LambdaNormalityVerdict is_normal_lambda(const LambdaSystem& sys);

// Outcome of the quasinormality check.  When `quasinormal` is false, s is an
// achievable box value (s = omega . alpha for some alpha in prod_i
// [0, lambda_i)) with s >= p * L, 2 <= p <= n-1, that cannot be written as
// s_1 + ... + s_p with every s_i in <omega> and s_i >= L; the witness has
// the smallest such s, then the smallest such p.
struct QuasinormalVerdict {
  bool quasinormal = true;
  Int s;
  Int p;
};

// The scalar analogue of the normality test: every achievable box value s
// with s >= p * L (2 <= p <= n-1) must split into p summands from
// <omega> cap [L, infinity).  Vacuously true for n <= 2.
QuasinormalVerdict is_quasinormal(const LambdaSystem& sys);

// L + 1 in <omega_1, ..., omega_n>?
bool lplus1_test(const LambdaSystem& sys);

}  // namespace reesnorm
