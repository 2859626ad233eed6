#include "reesnorm/rees.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace reesnorm {

bool condition_A(const LambdaSystem& sys, const Vec& a, const Int& d) {
  if (a.size() != static_cast<size_t>(sys.n)) {
    throw std::invalid_argument("vector length does not match the number of variables");
  }
  if (d < 0 || !all_nonneg(a)) return false;
  return dot(sys.omega, a) >= d * sys.L;
}

namespace {

constexpr long kSplitBoxLimit = 65'536;
constexpr long kSplitValueLimit = 100'000'000;

// Is there a split (a, d) = (b, d_1) + (a - b, d - d_1) with 1 <= d_1 <= d-1
// and omega.b >= d_1*L, omega.(a-b) >= (d-d_1)*L?  v must equal omega . a.
// Only the value omega.b matters, so for small boxes we enumerate b directly
// and otherwise compute the set of reachable values with a bitset knapsack.
bool condition_C_splittable(const LambdaSystem& sys, const Vec& a, const Int& d, const Int& v) {
  if (d <= 1) return false;
  const size_t n = a.size();

  Int box(1);
  for (const Int& ai : a) box *= ai + 1;

  if (box <= kSplitBoxLimit) {
    Vec b(n, Int(0));
    Int v1(0);
    while (true) {
      // d_1 must satisfy d_1 <= floor(v1/L) and d - d_1 <= floor((v-v1)/L).
      Int hi = v1 / sys.L;
      if (hi > d - 1) hi = d - 1;
      Int lo = d - (v - v1) / sys.L;
      if (lo < 1) lo = 1;
      if (lo <= hi) return true;
      size_t i = n;
      bool done = false;
      while (i > 0) {
        --i;
        if (b[i] < a[i]) {
          b[i] += 1;
          v1 += sys.omega[i];
          break;
        }
        v1 -= b[i] * sys.omega[i];
        b[i] = 0;
        if (i == 0) done = true;
      }
      if (done) return false;
    }
  }

  // Large box: mark every reachable value omega.b for b <= a in a bitset.
  const long vl = to_long_checked(v, "split check value");
  if (vl >= kSplitValueLimit) {
    throw ResourceError("split check: value range too large");
  }
  const long L = to_long_checked(sys.L, "split check threshold");
  const long dl = to_long_checked(d, "split check degree");
  const size_t words = static_cast<size_t>(vl / 64) + 1;
  std::vector<std::uint64_t> reach(words, 0);
  reach[0] = 1;
  for (size_t i = 0; i < n; ++i) {
    const long wi = to_long_checked(sys.omega[i], "split check weight");
    if (a[i] == 0 || wi > vl) continue;
    long reps = vl / wi;
    if (a[i] < reps) reps = to_long_checked(a[i], "split check exponent");
    const size_t ws = static_cast<size_t>(wi) / 64;
    const unsigned bs = static_cast<unsigned>(wi % 64);
    for (long r = 0; r < reps; ++r) {
      if (bs == 0) {
        for (size_t k = words; k-- > ws;) reach[k] |= reach[k - ws];
      } else {
        for (size_t k = words; k-- > ws;) {
          std::uint64_t lowpart = (k > ws) ? (reach[k - ws - 1] >> (64 - bs)) : 0;
          reach[k] |= (reach[k - ws] << bs) | lowpart;
        }
      }
    }
  }
  for (long v1 = L; v1 <= vl - L; ++v1) {
    if (!(reach[static_cast<size_t>(v1) / 64] >> (static_cast<size_t>(v1) % 64) & 1)) continue;
    if (v1 / L + (vl - v1) / L >= dl) return true;
  }
  return false;
}

// Condition (B) at value v = omega . a: removing any variable present in a
// must drop below d*L.
bool condition_B(const LambdaSystem& sys, const Vec& a, const Int& v, const Int& dL) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && v - sys.omega[i] >= dL) return false;
  }
  return true;
}

}  // namespace

bool is_minimal_generator(const LambdaSystem& sys, const Vec& a, const Int& d) {
  if (a.size() != static_cast<size_t>(sys.n)) {
    throw std::invalid_argument("vector length does not match the number of variables");
  }
  if (d < 0 || !all_nonneg(a)) return false;
  if (d == 0) return vec_sum(a) == 1;
  const Int v = dot(sys.omega, a);
  const Int dL = d * sys.L;
  if (v < dL) return false;                       // (A)
  if (!condition_B(sys, a, v, dL)) return false;  // (B)
  return !condition_C_splittable(sys, a, d, v);   // (C)
}

std::vector<ReesGenerator> minimal_generators(const LambdaSystem& sys) {
  const size_t n = static_cast<size_t>(sys.n);
  std::vector<ReesGenerator> out;
  for (size_t i = 0; i < n; ++i) {
    Vec e(n, Int(0));
    e[i] = 1;
    out.push_back(ReesGenerator{std::move(e), Int(0), 1});
  }
  for (size_t i = 0; i < n; ++i) {
    Vec e(n, Int(0));
    e[i] = sys.lambda[i];
    out.push_back(ReesGenerator{std::move(e), Int(1), 2});
  }

  // Any other minimal generator has a_i < lambda_i for every i (otherwise
  // (lambda_i e_i, 1) splits off) and then necessarily d = floor(omega.a / L).
  Int box(1);
  for (const Int& l : sys.lambda) box *= l;
  if (box > 100'000'000) {
    throw ResourceError("minimal_generators: search box too large");
  }

  Vec a(n, Int(0));
  Int v(0);
  while (true) {
    if (v >= sys.L) {
      const Int d = v / sys.L;
      const Int dL = d * sys.L;
      if (condition_B(sys, a, v, dL) && !condition_C_splittable(sys, a, d, v)) {
        out.push_back(ReesGenerator{a, d, a.back() > 0 ? 4 : 3});
      }
    }
    size_t i = n;
    bool done = false;
    while (i > 0) {
      --i;
      if (a[i] + 1 < sys.lambda[i]) {
        a[i] += 1;
        v += sys.omega[i];
        break;
      }
      v -= a[i] * sys.omega[i];
      a[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

ReesNormalityVerdict is_normal_via_rees(const LambdaSystem& sys) {
  if (sys.n <= 2) return ReesNormalityVerdict{};

  // omega_i for i in the support of a box point has lambda_i >= 2, so (B)
  // confines candidate values to [d*L, d*L + wcap).
  Int wcap(0);
  for (size_t i = 0; i < sys.omega.size(); ++i) {
    if (sys.lambda[i] >= 2 && sys.omega[i] > wcap) wcap = sys.omega[i];
  }
  if (wcap == 0) return ReesNormalityVerdict{};  // box is just the origin

  Int box(1);
  for (const Int& l : sys.lambda) box *= l;
  if (box > 200'000'000) {
    throw ResourceError("is_normal_via_rees: search box too large");
  }

  const size_t n = static_cast<size_t>(sys.n);
  const Int twoL = 2 * sys.L;
  Vec a(n, Int(0));
  Int v(0);
  while (true) {
    if (v >= twoL) {
      const Int d = v / sys.L;  // d <= n-1 since v < n*L over the box
      const Int dL = d * sys.L;
      if (v - dL < wcap && condition_B(sys, a, v, dL) &&
          !condition_C_splittable(sys, a, d, v)) {
        return ReesNormalityVerdict{false, ReesGenerator{a, d, a.back() > 0 ? 4 : 3}};
      }
    }
    size_t i = n;
    bool done = false;
    while (i > 0) {
      --i;
      if (a[i] + 1 < sys.lambda[i]) {
        a[i] += 1;
        v += sys.omega[i];
        break;
      }
      v -= a[i] * sys.omega[i];
      a[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  return ReesNormalityVerdict{};
}

TransferVector transfer_forward(const LambdaSystem& sys, const TransferVector& u) {
  if (u.a.size() != static_cast<size_t>(sys.n)) {
    throw std::invalid_argument("vector length does not match the number of variables");
  }
  TransferVector out = u;
  Int shift = u.d * sys.ell;
  for (size_t i = 0; i + 1 < u.a.size(); ++i) {
    shift -= (sys.ell / sys.lambda[i]) * u.a[i];
  }
  out.a.back() += shift;
  return out;
}

TransferVector transfer_backward(const LambdaSystem& sys, const TransferVector& u) {
  if (u.a.size() != static_cast<size_t>(sys.n)) {
    throw std::invalid_argument("vector length does not match the number of variables");
  }
  TransferVector out = u;
  Int shift = u.d * sys.ell;
  for (size_t i = 0; i + 1 < u.a.size(); ++i) {
    shift -= (sys.ell / sys.lambda[i]) * u.a[i];
  }
  out.a.back() -= shift;
  return out;
}

std::vector<ReesGenerator> enumerate_d1(const LambdaSystem& sys) {
  for (const Int& l : sys.lambda) {
    if (l > sys.lambda.back()) {
      throw std::invalid_argument("enumerate_d1 requires lambda_n to be a largest entry");
    }
  }
  const size_t n = static_cast<size_t>(sys.n);
  const size_t dims = n - 1;

  Int box(1);
  for (size_t i = 0; i < dims; ++i) box *= sys.lambda[i];
  if (box > 100'000'000) {
    throw ResourceError("enumerate_d1: search box too large");
  }

  // Each prefix with omega' . p < L extends uniquely to a d = 1 minimal
  // generator with positive last coordinate; since omega_n is smallest,
  // condition (B) holds automatically in the first n-1 coordinates.
  std::vector<ReesGenerator> out;
  Vec p(dims, Int(0));
  Int v(0);
  while (true) {
    if (v < sys.L) {
      Vec a = p;
      a.push_back(ceil_div(sys.L - v, sys.omega.back()));
      out.push_back(ReesGenerator{std::move(a), Int(1), is_zero(p) ? 2 : 4});
    }
    size_t i = dims;
    bool done = (dims == 0);
    while (i > 0) {
      --i;
      if (p[i] + 1 < sys.lambda[i]) {
        p[i] += 1;
        v += sys.omega[i];
        break;
      }
      v -= p[i] * sys.omega[i];
      p[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

CongruenceReport verify_congruence(const LambdaSystem& sys) {
  CongruenceReport rep;
  rep.sys = sys;
  rep.sys_prime = make_lambda_system(sys.lambda_prime);
  rep.normal = is_normal_via_rees(sys).normal;
  rep.normal_prime = is_normal_via_rees(rep.sys_prime).normal;
  rep.lambda_n_ge_ell = sys.lambda.back() >= sys.ell;
  rep.forward_ok = !rep.normal_prime || rep.normal;

  for (const ReesGenerator& g : minimal_generators(sys)) {
    if (g.gen_type == 4) rep.type4.push_back(g);
  }
  for (const ReesGenerator& g : minimal_generators(rep.sys_prime)) {
    if (g.gen_type == 4) rep.type4_prime.push_back(g);
  }

  rep.injection_ok = true;
  std::vector<std::pair<Vec, Int>> image_keys;
  for (const ReesGenerator& g : rep.type4) {
    TransferVector img = transfer_forward(sys, TransferVector{g.a, g.d});
    const bool valid = all_nonneg(img.a) && img.a.back() > 0 &&
                       is_minimal_generator(rep.sys_prime, img.a, img.d);
    if (!valid) rep.injection_ok = false;
    image_keys.emplace_back(img.a, img.d);
    rep.images.emplace_back(g, std::move(img));
  }
  std::sort(image_keys.begin(), image_keys.end());
  for (size_t i = 0; i + 1 < image_keys.size(); ++i) {
    if (image_keys[i] == image_keys[i + 1]) rep.injection_ok = false;
  }

  if (rep.lambda_n_ge_ell) {
    rep.equivalence_ok = (rep.normal == rep.normal_prime);
    std::vector<std::pair<Vec, Int>> prime_keys;
    for (const ReesGenerator& g : rep.type4_prime) prime_keys.emplace_back(g.a, g.d);
    std::sort(prime_keys.begin(), prime_keys.end());
    rep.bijection_ok = (image_keys == prime_keys);
  }
  rep.consistent =
      rep.forward_ok && rep.injection_ok && rep.equivalence_ok && rep.bijection_ok;
  return rep;
}

}  // namespace reesnorm
