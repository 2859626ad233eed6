#pragma once

#include <memory>
#include <set>
#include <tuple>
#include <vector>

#include "reesnorm/arith.hpp"
#include "reesnorm/newton.hpp"

namespace reesnorm {

// A monomial ideal in n variables, represented by its unique minimal
// generating set: a lexicographically sorted antichain of exponent vectors
// in N^n.  The Newton polyhedron facet list is computed lazily and cached.
class MonomialIdeal {
 public:
  // Trusts the caller: `canonical_gens` must already be a nonempty,
  // lex-sorted antichain of nonnegative vectors of length n.  Use
  // from_generators() for unvalidated input.
  MonomialIdeal(int n, std::vector<Vec> canonical_gens);

  int n() const { return n_; }
  const std::vector<Vec>& generators() const { return gens_; }

  // Facets of NP(I) = conv(generators) + R>=0^n, lex-sorted.  Computed on
  // first call and cached; the first call on a shared object is not
  // thread-safe.
  const std::vector<Facet>& facets() const;

  bool operator==(const MonomialIdeal& other) const {
    return n_ == other.n_ && gens_ == other.gens_;
  }
  bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

 private:
  int n_ = 0;
  std::vector<Vec> gens_;
  mutable std::shared_ptr<const std::vector<Facet>> facets_;
};

// Builds the ideal generated by `raw`: validates (n >= 1, nonempty, rows of
// length n, nonnegative entries; throws std::invalid_argument otherwise) and
// reduces to the minimal generating antichain.
MonomialIdeal from_generators(int n, const std::vector<Vec>& raw);

// alpha in Gamma(I), i.e. some generator divides x^alpha.  Vectors with
// negative entries are never contained.
bool gamma_contains(const MonomialIdeal& ideal, const Vec& alpha);

// alpha in m * NP(I) (the Newton polyhedron of I^m).  Requires m >= 1.
// Vectors with negative entries are never contained.
bool np_contains(const MonomialIdeal& ideal, const Vec& alpha, const Int& m);

// I^m for m >= 1 (m = 0 is invalid input).
MonomialIdeal power(const MonomialIdeal& ideal, const Int& m);

// I * J (both in the same number of variables).
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);

// x^gamma * I for gamma in N^n: adds gamma to every generator.
MonomialIdeal scale_by_monomial(const MonomialIdeal& ideal, const Vec& gamma);

// Minimal generators of the integral closure of I^m, i.e. the <=_pr-minimal
// points of m*NP(I) cap N^n, lex-sorted.  Requires m >= 1.
std::vector<Vec> closure_generators(const MonomialIdeal& ideal, const Int& m);

// The integral closure of I.
MonomialIdeal integral_closure(const MonomialIdeal& ideal);

// closure(I) == I.
bool is_integrally_closed(const MonomialIdeal& ideal);

// Outcome of the normality check.  When `normal` is false, x^alpha lies in
// the integral closure of I^m but not in I^m itself; the witness is the
// smallest such m and, for it, the lex-least such alpha among the minimal
// generators of the closure.
struct NormalityVerdict {
  bool normal = true;
  Int m;
  Vec alpha;
};

// I is normal iff closure(I^m) == I^m for m = 1, ..., max(1, n-1);
// equality for those exponents forces it for all m.
NormalityVerdict is_normal(const MonomialIdeal& ideal);

// Membership oracle for Gamma(I^m) that never materializes the power: a
// depth-first search over index-nondecreasing multisets of m generators
// fitting under the queried vector, pruned by the scaled Newton facets, with
// failed (start index, remaining count, remaining budget) states memoized.
// The memo is shared across queries on the same instance.
class PowerMembership {
 public:
  PowerMembership(const MonomialIdeal& ideal, const Int& m);

  // alpha in Gamma(I^m)?  Vectors with negative entries are never contained.
  bool contains(const Vec& alpha) const;

 private:
  bool search(size_t idx, long r, Vec& budget) const;

  MonomialIdeal ideal_;
  long m_;
  std::vector<std::vector<Int>> scaled_q_;  // scaled_q_[r][f] = r * facet q
  mutable std::set<std::tuple<size_t, long, Vec>> failed_;
};

}  // namespace reesnorm
