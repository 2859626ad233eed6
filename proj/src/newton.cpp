#include "reesnorm/newton.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace reesnorm {

namespace {

// Fixed-width bitset sized at runtime; tracks which constraints a ray
// satisfies with equality.
struct Bits {
  std::vector<std::uint64_t> words;

  explicit Bits(size_t nbits) : words((nbits + 63) / 64, 0) {}

  void set(size_t i) { words[i >> 6] |= std::uint64_t(1) << (i & 63); }

  static Bits intersect(const Bits& a, const Bits& b) {
    Bits out(0);
    out.words.resize(a.words.size());
    for (size_t k = 0; k < a.words.size(); ++k) out.words[k] = a.words[k] & b.words[k];
    return out;
  }

  // a subseteq b
  static bool subset(const Bits& a, const Bits& b) {
    for (size_t k = 0; k < a.words.size(); ++k) {
      if (a.words[k] & ~b.words[k]) return false;
    }
    return true;
  }
};

struct Ray {
  Vec v;  // length n + 1: (w, q)
  Bits act;
};

void gcd_normalize(Vec& v) {
  Int g(0);
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (Int& x : v) x /= g;
  }
}

}  // namespace

std::vector<Facet> newton_facets(int n, const std::vector<Vec>& gens) {
  if (n <= 0 || gens.empty()) {
    throw std::invalid_argument("newton_facets requires a positive dimension and generators");
  }
  const size_t nn = static_cast<size_t>(n);
  const size_t num_constraints = nn + gens.size();

  // Constraint ids: [0, n) are the coordinate constraints w_i >= 0;
  // n + j is the generator constraint w . gens[j] - q >= 0.
  auto constraint_value = [&](size_t id, const Vec& v) -> Int {
    if (id < nn) return v[id];
    const Vec& b = gens[id - nn];
    Int s = -v[nn];
    for (size_t i = 0; i < nn; ++i) s += b[i] * v[i];
    return s;
  };

  // Initial simplicial cone from constraints {0..n-1} and n (first generator):
  // rays (e_i, gens[0][i]) for each i, plus (0, -1).
  std::vector<Ray> rays;
  rays.reserve(nn + 1);
  for (size_t i = 0; i < nn; ++i) {
    Ray r{Vec(nn + 1, Int(0)), Bits(num_constraints)};
    r.v[i] = 1;
    r.v[nn] = gens[0][i];
    for (size_t j = 0; j < nn; ++j) {
      if (j != i) r.act.set(j);
    }
    r.act.set(nn);
    rays.push_back(std::move(r));
  }
  {
    Ray r{Vec(nn + 1, Int(0)), Bits(num_constraints)};
    r.v[nn] = -1;
    for (size_t j = 0; j < nn; ++j) r.act.set(j);
    rays.push_back(std::move(r));
  }

  for (size_t id = nn + 1; id < num_constraints; ++id) {
    std::vector<Int> vals(rays.size());
    bool any_neg = false;
    for (size_t k = 0; k < rays.size(); ++k) {
      vals[k] = constraint_value(id, rays[k].v);
      if (vals[k] < 0) any_neg = true;
    }
    if (!any_neg) {
      for (size_t k = 0; k < rays.size(); ++k) {
        if (vals[k] == 0) rays[k].act.set(id);
      }
      continue;
    }

    std::vector<size_t> pos, neg;
    for (size_t k = 0; k < rays.size(); ++k) {
      if (vals[k] > 0) {
        pos.push_back(k);
      } else if (vals[k] < 0) {
        neg.push_back(k);
      }
    }

    // Build the combination rays first, while every old ray is still intact.
    std::vector<Ray> created;
    for (size_t p : pos) {
      for (size_t m : neg) {
        Bits common = Bits::intersect(rays[p].act, rays[m].act);
        // Combinatorial adjacency: no third extreme ray may be tight on every
        // constraint that both p and m are tight on.
        bool adjacent = true;
        for (size_t k = 0; k < rays.size(); ++k) {
          if (k == p || k == m) continue;
          if (Bits::subset(common, rays[k].act)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        Ray r{Vec(nn + 1), std::move(common)};
        for (size_t i = 0; i <= nn; ++i) {
          r.v[i] = vals[p] * rays[m].v[i] - vals[m] * rays[p].v[i];
        }
        gcd_normalize(r.v);
        r.act.set(id);
        created.push_back(std::move(r));
      }
    }

    std::vector<Ray> next;
    next.reserve(pos.size() + created.size() + rays.size() - pos.size() - neg.size());
    for (size_t k = 0; k < rays.size(); ++k) {
      if (vals[k] < 0) continue;
      Ray r = std::move(rays[k]);
      if (vals[k] == 0) r.act.set(id);
      next.push_back(std::move(r));
    }
    for (Ray& r : created) next.push_back(std::move(r));
    rays = std::move(next);
  }

  std::vector<Facet> facets;
  facets.reserve(rays.size());
  for (const Ray& r : rays) {
    bool w_zero = true;
    for (size_t i = 0; i < nn; ++i) {
      if (r.v[i] != 0) {
        w_zero = false;
        break;
      }
    }
    if (w_zero) continue;  // the trivial ray (0, -1)
    Facet f;
    f.w.assign(r.v.begin(), r.v.begin() + static_cast<long>(nn));
    f.q = r.v[nn];
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
    if (a.w != b.w) return a.w < b.w;
    return a.q < b.q;
  });
  return facets;
}

}  // namespace reesnorm
