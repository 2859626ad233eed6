#include "reesnorm/ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "reesnorm/lattice.hpp"

namespace reesnorm {

MonomialIdeal::MonomialIdeal(int n, std::vector<Vec> canonical_gens)
    : n_(n), gens_(std::move(canonical_gens)) {}

const std::vector<Facet>& MonomialIdeal::facets() const {
  if (!facets_) {
    facets_ = std::make_shared<const std::vector<Facet>>(newton_facets(n_, gens_));
  }
  return *facets_;
}

MonomialIdeal from_generators(int n, const std::vector<Vec>& raw) {
  if (n < 1) {
    throw std::invalid_argument("number of variables must be at least 1");
  }
  if (raw.empty()) {
    throw std::invalid_argument("generator list must be nonempty");
  }
  for (const Vec& g : raw) {
    if (static_cast<int>(g.size()) != n) {
      throw std::invalid_argument("generator length does not match the number of variables");
    }
    for (const Int& e : g) {
      if (e < 0) throw std::invalid_argument("generator exponents must be nonnegative");
    }
  }
  return MonomialIdeal(n, minimalize(raw));
}

bool gamma_contains(const MonomialIdeal& ideal, const Vec& alpha) {
  if (alpha.size() != static_cast<size_t>(ideal.n())) {
    throw std::invalid_argument("vector length does not match the number of variables");
  }
  for (const Vec& g : ideal.generators()) {
    if (leq_pr(g, alpha)) return true;
  }
  return false;
}

bool np_contains(const MonomialIdeal& ideal, const Vec& alpha, const Int& m) {
  if (alpha.size() != static_cast<size_t>(ideal.n())) {
    throw std::invalid_argument("vector length does not match the number of variables");
  }
  if (m < 1) throw std::invalid_argument("power exponent must be at least 1");
  if (!all_nonneg(alpha)) return false;
  for (const Facet& f : ideal.facets()) {
    if (dot(f.w, alpha) < m * f.q) return false;
  }
  return true;
}

namespace {

constexpr long kCombinationLimit = 5'000'000;

void accumulate_sums(const std::vector<Vec>& gens, size_t idx, long r, Vec& acc,
                     std::vector<Vec>& out) {
  if (r == 0) {
    out.push_back(acc);
    return;
  }
  for (size_t j = idx; j < gens.size(); ++j) {
    for (size_t i = 0; i < acc.size(); ++i) acc[i] += gens[j][i];
    accumulate_sums(gens, j, r - 1, acc, out);
    for (size_t i = 0; i < acc.size(); ++i) acc[i] -= gens[j][i];
  }
}

}  // namespace

MonomialIdeal power(const MonomialIdeal& ideal, const Int& m) {
  if (m < 1) throw std::invalid_argument("power exponent must be at least 1");
  const long mm = to_long_checked(m, "power exponent");
  if (mm == 1) return ideal;
  const auto& gens = ideal.generators();
  Int count;
  mpz_bin_uiui(count.get_mpz_t(), gens.size() + static_cast<unsigned long>(mm) - 1,
               static_cast<unsigned long>(mm));
  if (count > kCombinationLimit) {
    throw ResourceError("power: too many generator multisets to enumerate");
  }
  std::vector<Vec> sums;
  sums.reserve(count.get_ui());
  Vec acc(ideal.n(), Int(0));
  accumulate_sums(gens, 0, mm, acc, sums);
  return MonomialIdeal(ideal.n(), minimalize(std::move(sums)));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("product requires ideals in the same number of variables");
  }
  const auto& ga = a.generators();
  const auto& gb = b.generators();
  if (static_cast<long>(ga.size()) * static_cast<long>(gb.size()) > kCombinationLimit) {
    throw ResourceError("product: too many generator pairs to enumerate");
  }
  std::vector<Vec> sums;
  sums.reserve(ga.size() * gb.size());
  for (const Vec& x : ga) {
    for (const Vec& y : gb) {
      sums.push_back(vec_add(x, y));
    }
  }
  return MonomialIdeal(a.n(), minimalize(std::move(sums)));
}

MonomialIdeal scale_by_monomial(const MonomialIdeal& ideal, const Vec& gamma) {
  if (gamma.size() != static_cast<size_t>(ideal.n())) {
    throw std::invalid_argument("vector length does not match the number of variables");
  }
  if (!all_nonneg(gamma)) {
    throw std::invalid_argument("monomial exponents must be nonnegative");
  }
  // Translation preserves both the antichain property and lex order.
  std::vector<Vec> gens;
  gens.reserve(ideal.generators().size());
  for (const Vec& g : ideal.generators()) gens.push_back(vec_add(g, gamma));
  return MonomialIdeal(ideal.n(), std::move(gens));
}

std::vector<Vec> closure_generators(const MonomialIdeal& ideal, const Int& m) {
  if (m < 1) throw std::invalid_argument("power exponent must be at least 1");
  const size_t n = static_cast<size_t>(ideal.n());
  const size_t dims = n - 1;
  const auto& facets = ideal.facets();

  // Every <=_pr-minimal point of m*NP(I) cap N^n is dominated by a convex
  // combination of m-fold generator sums rounded up, hence lies in the box
  // prod_i [0, m*M_i] with M_i the largest i-th exponent among generators.
  Vec maxc(n, Int(0));
  for (const Vec& g : ideal.generators()) {
    for (size_t i = 0; i < n; ++i) {
      if (g[i] > maxc[i]) maxc[i] = g[i];
    }
  }

  std::vector<long> bound(dims);
  Int box(1);
  for (size_t i = 0; i < dims; ++i) {
    bound[i] = to_long_checked(m * maxc[i], "closure search bound");
    box *= bound[i] + 1;
  }
  if (box > 10'000'000) {
    throw ResourceError("closure_generators: search box too large");
  }
  const size_t box_size = box.get_ui();

  std::vector<size_t> stride(dims, 1);
  for (size_t i = dims; i-- > 1;) {
    stride[i - 1] = stride[i] * static_cast<size_t>(bound[i] + 1);
  }

  // Facets with w_n = 0 gate prefix feasibility outright; the rest lower-bound
  // the last coordinate.  Precompute the scaled offsets m*q.
  std::vector<Int> mq(facets.size());
  for (size_t f = 0; f < facets.size(); ++f) mq[f] = m * facets[f].q;

  // cmin[idx] = least feasible last coordinate for the prefix with that
  // mixed-radix index, or -1 when no last coordinate makes it feasible.
  std::vector<long> cmin(box_size, -1);
  std::vector<Vec> out;

  Vec prefix(dims, Int(0));
  std::vector<Int> vals(facets.size(), Int(0));  // vals[f] = w_f[0..dims) . prefix
  size_t idx = 0;
  while (true) {
    bool feasible = true;
    for (size_t f = 0; f < facets.size() && feasible; ++f) {
      if (facets[f].w[n - 1] == 0 && vals[f] < mq[f]) feasible = false;
    }
    if (feasible) {
      Int c(0);
      for (size_t f = 0; f < facets.size(); ++f) {
        const Int& wn = facets[f].w[n - 1];
        if (wn == 0) continue;
        Int need = mq[f] - vals[f];
        if (need > 0) {
          Int cf = ceil_div(need, wn);
          if (cf > c) c = cf;
        }
      }
      const long cl = to_long_checked(c, "closure last coordinate");
      cmin[idx] = cl;
      bool minimal = true;
      for (size_t i = 0; i < dims && minimal; ++i) {
        if (prefix[i] > 0) {
          const long nb = cmin[idx - stride[i]];
          if (nb >= 0 && nb <= cl) minimal = false;
        }
      }
      if (minimal) {
        Vec alpha = prefix;
        alpha.push_back(c);
        out.push_back(std::move(alpha));
      }
    }
    // Advance the odometer (last digit fastest = lex ascending), keeping the
    // facet prefix values in step.
    size_t i = dims;
    bool done = (dims == 0);
    while (i > 0) {
      --i;
      if (prefix[i] < bound[i]) {
        prefix[i] += 1;
        for (size_t f = 0; f < facets.size(); ++f) vals[f] += facets[f].w[i];
        break;
      }
      for (size_t f = 0; f < facets.size(); ++f) vals[f] -= prefix[i] * facets[f].w[i];
      prefix[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
    ++idx;
  }
  return out;
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
  return MonomialIdeal(ideal.n(), closure_generators(ideal, Int(1)));
}

bool is_integrally_closed(const MonomialIdeal& ideal) {
  return closure_generators(ideal, Int(1)) == ideal.generators();
}

NormalityVerdict is_normal(const MonomialIdeal& ideal) {
  const long top = std::max(1, ideal.n() - 1);
  for (long m = 1; m <= top; ++m) {
    const auto closure_gens = closure_generators(ideal, Int(m));
    PowerMembership membership(ideal, Int(m));
    for (const Vec& alpha : closure_gens) {
      if (!membership.contains(alpha)) {
        return NormalityVerdict{false, Int(m), alpha};
      }
    }
  }
  return NormalityVerdict{};
}

PowerMembership::PowerMembership(const MonomialIdeal& ideal, const Int& m)
    : ideal_(ideal), m_(to_long_checked(m, "power exponent")) {
  if (m_ < 1) throw std::invalid_argument("power exponent must be at least 1");
  const auto& fs = ideal_.facets();
  scaled_q_.assign(static_cast<size_t>(m_) + 1, std::vector<Int>(fs.size()));
  for (long r = 0; r <= m_; ++r) {
    for (size_t f = 0; f < fs.size(); ++f) {
      scaled_q_[static_cast<size_t>(r)][f] = Int(r) * fs[f].q;
    }
  }
}

bool PowerMembership::contains(const Vec& alpha) const {
  if (alpha.size() != static_cast<size_t>(ideal_.n())) {
    throw std::invalid_argument("vector length does not match the number of variables");
  }
  if (!all_nonneg(alpha)) return false;
  Vec budget = alpha;
  return search(0, m_, budget);
}

bool PowerMembership::search(size_t idx, long r, Vec& budget) const {
  if (r == 0) return true;
  const auto& fs = ideal_.facets();
  const auto& rq = scaled_q_[static_cast<size_t>(r)];
  for (size_t f = 0; f < fs.size(); ++f) {
    if (dot(fs[f].w, budget) < rq[f]) return false;
  }
  auto key = std::make_tuple(idx, r, budget);
  if (failed_.count(key)) return false;
  const auto& gens = ideal_.generators();
  for (size_t j = idx; j < gens.size(); ++j) {
    if (!leq_pr(gens[j], budget)) continue;
    for (size_t i = 0; i < budget.size(); ++i) budget[i] -= gens[j][i];
    const bool ok = search(j, r - 1, budget);
    for (size_t i = 0; i < budget.size(); ++i) budget[i] += gens[j][i];
    if (ok) return true;
  }
  failed_.insert(std::move(key));
  return false;
}

}  // namespace reesnorm
