#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace reesnorm {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, never floating point.  Every decision procedure reduces to
// integer inequalities.
using Int = mpz_class;
using Rat = mpq_class;

// An exponent vector / integer tuple.  Most functions require nonnegative
// entries; the few that work on all of Z^n (the transfer map) say so.
using Vec = std::vector<Int>;

// Thrown when an exact computation would exceed a documented resource guard
// (enumeration boxes, DP tables).  Distinct from std::invalid_argument,
// which signals a violated input contract.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// componentwise partial order: a <=_pr b
inline bool leq_pr(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool all_nonneg(const Vec& a) {
  for (const Int& x : a)
    if (x < 0) return false;
  return true;
}

inline bool is_zero(const Vec& a) {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Int vec_sum(const Vec& a) {
  Int s = 0;
  for (const Int& x : a) s += x;
  return s;
}

// ceil(a / b) for b > 0, exact for any sign of a
inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// floor(a / b) for b > 0, exact for any sign of a
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// lcm over a range of positive integers; empty range -> 1 (neutral element)
inline Int lcm_of(const Vec& v, std::size_t first, std::size_t last) {
  Int r = 1;
  for (std::size_t i = first; i < last; ++i) r = lcm(r, v[i]);
  return r;
}

inline Int gcd_of(const Vec& v) {
  Int r = 0;
  for (const Int& x : v) r = gcd(r, x);
  return r;
}

inline std::string join(const Vec& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i].get_str();
  }
  return s;
}

// Narrow an Int to long, throwing ResourceError when it does not fit.  Used
// where an exact value must index a table or bound a loop.
inline long to_long_checked(const Int& x, const char* what) {
  if (!x.fits_slong_p())
    throw ResourceError(std::string(what) + ": value " + x.get_str() +
                        " exceeds the supported machine range");
  return x.get_si();
}

}  // namespace reesnorm
