#include "reesnorm/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace reesnorm {

namespace {

constexpr long kScalingTableLimit = 4'000'000;
constexpr long kExhaustiveListLimit = 200'000;
constexpr long kExhaustiveBoxLimit = 1'000'000;
constexpr long kBoundedValueLimit = 2'000'000;

}  // namespace

Int default_scaling_budget(const MonomialIdeal& ideal) {
  Int budget(1);
  for (size_t i = 0; i < static_cast<size_t>(ideal.n()); ++i) {
    Int mx(0);
    for (const Vec& g : ideal.generators()) {
      if (g[i] > mx) mx = g[i];
    }
    budget *= mx + 1;
  }
  return budget;
}

ScalingResult np_contains_scaling(const MonomialIdeal& ideal, const Vec& alpha, const Int& m,
                                  const Int& m_max) {
  if (alpha.size() != static_cast<size_t>(ideal.n())) {
    throw std::invalid_argument("vector length does not match the number of variables");
  }
  if (m < 1) throw std::invalid_argument("power exponent must be at least 1");
  if (m_max < 1) throw std::invalid_argument("scale budget must be at least 1");
  if (!all_nonneg(alpha)) return ScalingResult{};

  const size_t n = alpha.size();
  const auto& gens = ideal.generators();

  for (Int s(1); s <= m_max; ++s) {
    Int box(1);
    for (size_t i = 0; i < n; ++i) box *= s * alpha[i] + 1;
    if (box > kScalingTableLimit) {
      return ScalingResult{ScalingVerdict::out_of_budget, s};
    }
    const size_t cells = box.get_ui();

    std::vector<long> side(n), target(n);
    for (size_t i = 0; i < n; ++i) {
      target[i] = to_long_checked(s * alpha[i], "scaling target");
      side[i] = target[i] + 1;
    }
    std::vector<size_t> stride(n, 1);
    for (size_t i = n; i-- > 1;) {
      stride[i - 1] = stride[i] * static_cast<size_t>(side[i]);
    }

    // Only generators fitting under the target can ever contribute.
    std::vector<std::vector<long>> usable;
    std::vector<size_t> offset;
    for (const Vec& g : gens) {
      bool fits = true;
      std::vector<long> gl(n);
      for (size_t i = 0; i < n && fits; ++i) {
        if (g[i] > target[i]) {
          fits = false;
        } else {
          gl[i] = to_long_checked(g[i], "scaling generator");
        }
      }
      if (!fits) continue;
      size_t off = 0;
      for (size_t i = 0; i < n; ++i) off += static_cast<size_t>(gl[i]) * stride[i];
      usable.push_back(std::move(gl));
      offset.push_back(off);
    }

    // parts[beta] = largest r with beta dominating a sum of r generators.
    std::vector<std::int32_t> parts(cells, 0);
    std::vector<long> beta(n, 0);
    size_t idx = 0;
    while (true) {
      std::int32_t best = 0;
      for (size_t j = 0; j < usable.size(); ++j) {
        bool below = true;
        for (size_t i = 0; i < n && below; ++i) {
          if (usable[j][i] > beta[i]) below = false;
        }
        if (!below) continue;
        const std::int32_t cand = parts[idx - offset[j]] + 1;
        if (cand > best) best = cand;
      }
      parts[idx] = best;
      size_t i = n;
      bool done = false;
      while (i > 0) {
        --i;
        if (beta[i] < target[i]) {
          beta[i] += 1;
          break;
        }
        beta[i] = 0;
        if (i == 0) done = true;
      }
      if (done) break;
      ++idx;
    }
    if (Int(parts[cells - 1]) >= s * m) {
      return ScalingResult{ScalingVerdict::yes, s};
    }
  }
  return ScalingResult{};
}

namespace {

bool exhaustive_search(const std::vector<Vec>& pool, size_t idx, Vec& rem, long p,
                       std::vector<Vec>& parts) {
  if (p == 0) return is_zero(rem);
  for (size_t j = idx; j < pool.size(); ++j) {
    if (!leq_pr(pool[j], rem)) continue;
    for (size_t i = 0; i < rem.size(); ++i) rem[i] -= pool[j][i];
    parts.push_back(pool[j]);
    if (exhaustive_search(pool, j, rem, p - 1, parts)) return true;
    parts.pop_back();
    for (size_t i = 0; i < rem.size(); ++i) rem[i] += pool[j][i];
  }
  return false;
}

}  // namespace

std::optional<GammaDecomposition> decompose_exhaustive(const LambdaSystem& sys,
                                                       const Vec& alpha, const Int& p) {
  if (alpha.size() != static_cast<size_t>(sys.n)) {
    throw std::invalid_argument("vector length does not match the number of variables");
  }
  if (p < 1) throw std::invalid_argument("part count must be at least 1");
  const long pl = to_long_checked(p, "part count");
  if (!all_nonneg(alpha)) return std::nullopt;
  if (dot(sys.omega, alpha) < p * sys.L) return std::nullopt;

  Int box(1);
  for (const Int& ai : alpha) box *= ai + 1;
  if (box > kExhaustiveBoxLimit) {
    throw ResourceError("decompose_exhaustive: box too large");
  }

  // Every element of Gamma(I(lambda)) below alpha, largest first.
  std::vector<Vec> pool;
  const size_t n = alpha.size();
  Vec g(n, Int(0));
  Int v(0);
  while (true) {
    if (v >= sys.L) {
      pool.push_back(g);
      if (static_cast<long>(pool.size()) > kExhaustiveListLimit) {
        throw ResourceError("decompose_exhaustive: candidate list too large");
      }
    }
    size_t i = n;
    bool done = false;
    while (i > 0) {
      --i;
      if (g[i] < alpha[i]) {
        g[i] += 1;
        v += sys.omega[i];
        break;
      }
      v -= g[i] * sys.omega[i];
      g[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  std::sort(pool.begin(), pool.end(), [](const Vec& a, const Vec& b) { return b < a; });

  Vec rem = alpha;
  GammaDecomposition result;
  if (!exhaustive_search(pool, 0, rem, pl, result.parts)) return std::nullopt;
  return result;
}

namespace {

bool bounded_split(const std::vector<char>& member, long L, long s, long p) {
  if (p == 1) return s >= L && member[static_cast<size_t>(s)];
  for (long a = L; a <= s - (p - 1) * L; ++a) {
    if (member[static_cast<size_t>(a)] && bounded_split(member, L, s - a, p - 1)) return true;
  }
  return false;
}

}  // namespace

bool quasinormal_bounded(const LambdaSystem& sys) {
  if (sys.n <= 2) return true;
  const Int top_z = Int(sys.n) * sys.L;  // exclusive bound on tested values
  const long top = to_long_checked(top_z, "bounded quasinormality range");
  if (top > kBoundedValueLimit) {
    throw ResourceError("quasinormal_bounded: value range too large");
  }
  const long L = sys.L.get_si();
  std::vector<long> w(sys.omega.size());
  for (size_t i = 0; i < w.size(); ++i) w[i] = to_long_checked(sys.omega[i], "weight");

  std::vector<char> member(static_cast<size_t>(top), 0);
  member[0] = 1;
  for (long v = 1; v < top; ++v) {
    for (long wi : w) {
      if (wi <= v && member[static_cast<size_t>(v - wi)]) {
        member[static_cast<size_t>(v)] = 1;
        break;
      }
    }
  }

  for (long s = 0; s < top; ++s) {
    if (!member[static_cast<size_t>(s)]) continue;
    for (long p = 1; p < sys.n && p * L <= s; ++p) {
      if (!bounded_split(member, L, s, p)) return false;
    }
  }
  return true;
}

}  // namespace reesnorm
