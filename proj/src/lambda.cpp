#include "reesnorm/lambda.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace reesnorm {

MonomialIdeal ideal_of_lambda(const LambdaSystem& sys) {
  return MonomialIdeal(sys.n, minimal_points_halfspace(sys.omega, sys.L));
}

bool gamma_contains(const LambdaSystem& sys, const Vec& alpha) {
  if (alpha.size() != static_cast<size_t>(sys.n)) {
    throw std::invalid_argument("vector length does not match the number of variables");
  }
  return all_nonneg(alpha) && dot(sys.omega, alpha) >= sys.L;
}

namespace {

// Shared search state for decompositions of box points into Gamma parts.
// Failed (remainder, parts-left) states are query-independent, so one context
// can serve a whole scan.
struct DecomposeContext {
  const LambdaSystem& sys;
  std::vector<Vec> gens;       // minimal generators of I(lambda), lex ascending
  std::vector<Int> gen_value;  // omega . gen
  std::set<std::pair<Vec, long>> failed;

  explicit DecomposeContext(const LambdaSystem& s)
      : sys(s), gens(minimal_points_halfspace(s.omega, s.L)) {
    gen_value.reserve(gens.size());
    for (const Vec& g : gens) gen_value.push_back(dot(sys.omega, g));
  }

  // On success, appends the chosen parts (generators first, the remainder
  // absorbing all slack last) and leaves `a` consumed; on failure, restores
  // `a` and `parts`.
  bool search(Vec& a, const Int& v, long p, std::vector<Vec>& parts) {
    if (v < p * sys.L) return false;
    if (p == 1) {
      parts.push_back(a);
      return true;
    }
    auto key = std::make_pair(a, p);
    if (failed.count(key)) return false;
    for (size_t j = gens.size(); j-- > 0;) {
      if (!leq_pr(gens[j], a)) continue;
      for (size_t i = 0; i < a.size(); ++i) a[i] -= gens[j][i];
      parts.push_back(gens[j]);
      if (search(a, v - gen_value[j], p - 1, parts)) return true;
      parts.pop_back();
      for (size_t i = 0; i < a.size(); ++i) a[i] += gens[j][i];
    }
    failed.insert(std::move(key));
    return false;
  }
};

}  // namespace

std::optional<GammaDecomposition> decompose_gamma(const LambdaSystem& sys, const Vec& alpha,
                                                  const Int& p) {
  if (alpha.size() != static_cast<size_t>(sys.n)) {
    throw std::invalid_argument("vector length does not match the number of variables");
  }
  if (p < 1) throw std::invalid_argument("part count must be at least 1");
  const long pl = to_long_checked(p, "part count");
  if (!all_nonneg(alpha)) return std::nullopt;
  const Int v = dot(sys.omega, alpha);
  if (v < p * sys.L) return std::nullopt;
  DecomposeContext ctx(sys);
  Vec a = alpha;
  GammaDecomposition result;
  if (!ctx.search(a, v, pl, result.parts)) return std::nullopt;
  return result;
}

LambdaNormalityVerdict is_normal_lambda(const LambdaSystem& sys) {
  if (sys.n <= 2) return LambdaNormalityVerdict{};

  Int box(1);
  for (const Int& l : sys.lambda) box *= l;
  if (box > 100'000'000) {
    throw ResourceError("is_normal_lambda: search box too large");
  }

  DecomposeContext ctx(sys);
  const size_t n = static_cast<size_t>(sys.n);
  Vec alpha(n, Int(0));
  Int v(0);
  std::vector<Vec> parts;
  while (true) {
    for (long p = 2; p < sys.n; ++p) {
      if (v < Int(p) * sys.L) break;
      Vec a = alpha;
      parts.clear();
      if (!ctx.search(a, v, p, parts)) {
        return LambdaNormalityVerdict{false, alpha, Int(p)};
      }
    }
    size_t i = n;
    bool done = false;
    while (i > 0) {
      --i;
      if (alpha[i] + 1 < sys.lambda[i]) {
        alpha[i] += 1;
        v += sys.omega[i];
        break;
      }
      v -= alpha[i] * sys.omega[i];
      alpha[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  return LambdaNormalityVerdict{};
}

QuasinormalVerdict is_quasinormal(const LambdaSystem& sys) {
  if (sys.n <= 2) return QuasinormalVerdict{};

  // Largest value omega . alpha over the box prod_i [0, lambda_i).
  Int smax_z(0);
  for (size_t i = 0; i < sys.omega.size(); ++i) smax_z += sys.omega[i] * (sys.lambda[i] - 1);
  if (smax_z < 2 * sys.L) return QuasinormalVerdict{};  // no value reaches 2L
  if (smax_z > 20'000'000) {
    throw ResourceError("is_quasinormal: value range too large");
  }
  const long smax = smax_z.get_si();
  const long L = sys.L.get_si();  // L <= smax/2 here, so this fits
  std::vector<long> w(sys.omega.size());
  for (size_t i = 0; i < w.size(); ++i) w[i] = sys.omega[i].get_si();

  // member[v]: v lies in the numerical semigroup <omega>.
  std::vector<char> member(static_cast<size_t>(smax) + 1, 0);
  member[0] = 1;
  for (long v = 1; v <= smax; ++v) {
    for (long wi : w) {
      if (wi <= v && member[static_cast<size_t>(v - wi)]) {
        member[static_cast<size_t>(v)] = 1;
        break;
      }
    }
  }

  // achievable[v]: v = omega . alpha for some alpha in the box.
  std::vector<char> achievable(static_cast<size_t>(smax) + 1, 0);
  achievable[0] = 1;
  for (size_t i = 0; i < w.size(); ++i) {
    const long cnt = to_long_checked(sys.lambda[i] - 1, "box side");
    if (cnt == 0) continue;
    std::vector<char> next(static_cast<size_t>(smax) + 1, 0);
    for (long v = 0; v <= smax; ++v) {
      if (!achievable[static_cast<size_t>(v)]) continue;
      const long top = std::min(cnt, (smax - v) / w[i]);
      for (long c = 0; c <= top; ++c) next[static_cast<size_t>(v + c * w[i])] = 1;
    }
    achievable = std::move(next);
  }

  // split[p][v]: v = s_1 + ... + s_p with every s_i in <omega> and s_i >= L.
  // In any such split the first summand can be shrunk into [L, L + max(omega))
  // by moving generators to another summand, so that window suffices.
  const long wmax = *std::max_element(w.begin(), w.end());
  std::vector<long> window;
  for (long a = L; a < L + wmax && a <= smax; ++a) {
    if (member[static_cast<size_t>(a)]) window.push_back(a);
  }
  std::vector<std::vector<char>> split(static_cast<size_t>(sys.n));
  split[1].assign(static_cast<size_t>(smax) + 1, 0);
  for (long v = L; v <= smax; ++v) split[1][static_cast<size_t>(v)] = member[static_cast<size_t>(v)];
  for (long p = 2; p < sys.n; ++p) {
    auto& cur = split[static_cast<size_t>(p)];
    const auto& prev = split[static_cast<size_t>(p - 1)];
    cur.assign(static_cast<size_t>(smax) + 1, 0);
    for (long v = p * L; v <= smax; ++v) {
      for (long a : window) {
        if (a <= v && prev[static_cast<size_t>(v - a)]) {
          cur[static_cast<size_t>(v)] = 1;
          break;
        }
      }
    }
  }

  for (long s = 2 * L; s <= smax; ++s) {
    if (!achievable[static_cast<size_t>(s)]) continue;
    const long pmax = std::min<long>(sys.n - 1, s / L);
    for (long p = 2; p <= pmax; ++p) {
      if (!split[static_cast<size_t>(p)][static_cast<size_t>(s)]) {
        return QuasinormalVerdict{false, Int(s), Int(p)};
      }
    }
  }
  return QuasinormalVerdict{};
}

bool lplus1_test(const LambdaSystem& sys) { return semigroup_contains(sys.omega, sys.L + 1); }

}  // namespace reesnorm
