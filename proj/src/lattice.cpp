#include "reesnorm/lattice.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <utility>

namespace reesnorm {

LambdaSystem make_lambda_system(const Vec& lambda) {
  if (lambda.empty()) {
    throw std::invalid_argument("lambda must be a nonempty sequence of positive integers");
  }
  for (const Int& v : lambda) {
    if (v <= 0) {
      throw std::invalid_argument("lambda entries must be positive integers");
    }
  }
  LambdaSystem sys;
  sys.lambda = lambda;
  sys.n = static_cast<int>(lambda.size());
  sys.L = lcm_of(lambda, 0, lambda.size());
  sys.omega.reserve(lambda.size());
  for (const Int& v : lambda) {
    sys.omega.push_back(sys.L / v);
  }
  sys.ell = (sys.n == 1) ? Int(1) : lcm_of(lambda, 0, lambda.size() - 1);
  sys.lambda_prime = lambda;
  sys.lambda_prime.back() += sys.ell;
  return sys;
}

namespace {

constexpr long kResidueTableLimit = 1'000'000;

}  // namespace

bool semigroup_contains(const Vec& generators, const Int& target) {
  if (generators.empty()) {
    throw std::invalid_argument("semigroup generators must be nonempty");
  }
  for (const Int& g : generators) {
    if (g <= 0) {
      throw std::invalid_argument("semigroup generators must be positive integers");
    }
  }
  if (target < 0) return false;
  if (target == 0) return true;

  const Int gmin = *std::min_element(generators.begin(), generators.end());
  if (gmin == 1) return true;
  if (gmin > kResidueTableLimit) {
    throw ResourceError("semigroup_contains: smallest generator exceeds residue table limit");
  }
  const long m = gmin.get_si();

  // dist[r] = least element of the semigroup congruent to r mod m
  // (computed by Dijkstra over the residue graph with edges +g).
  std::vector<Int> dist(static_cast<size_t>(m), Int(-1));
  using Node = std::pair<Int, long>;
  auto cmp = [](const Node& a, const Node& b) { return a.first > b.first; };
  std::priority_queue<Node, std::vector<Node>, decltype(cmp)> heap(cmp);
  dist[0] = 0;
  heap.push({Int(0), 0});
  while (!heap.empty()) {
    auto [d, r] = heap.top();
    heap.pop();
    if (dist[static_cast<size_t>(r)] != d) continue;
    for (const Int& g : generators) {
      Int nd = d + g;
      long nr = mpz_class(nd % m).get_si();
      Int& slot = dist[static_cast<size_t>(nr)];
      if (slot < 0 || nd < slot) {
        slot = nd;
        heap.push({nd, nr});
      }
    }
  }

  long r = mpz_class(target % m).get_si();
  const Int& least = dist[static_cast<size_t>(r)];
  return least >= 0 && least <= target;
}

bool is_antichain(const std::vector<Vec>& points) {
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = 0; j < points.size(); ++j) {
      if (i != j && leq_pr(points[i], points[j])) return false;
    }
  }
  return true;
}

std::vector<Vec> minimalize(std::vector<Vec> points) {
  // Sorting by (coordinate sum, lex) guarantees that any strict dominator of
  // a point appears after it, so a single forward sweep suffices.
  std::sort(points.begin(), points.end(), [](const Vec& a, const Vec& b) {
    Int sa = vec_sum(a), sb = vec_sum(b);
    if (sa != sb) return sa < sb;
    return a < b;
  });
  std::vector<Vec> kept;
  for (auto& p : points) {
    bool dominated = false;
    for (const auto& q : kept) {
      if (leq_pr(q, p)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(std::move(p));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<Vec> minimal_points_halfspace(const Vec& weights, const Int& threshold) {
  if (weights.empty()) {
    throw std::invalid_argument("halfspace weights must be nonempty");
  }
  for (const Int& w : weights) {
    if (w <= 0) {
      throw std::invalid_argument("halfspace weights must be positive integers");
    }
  }
  const size_t n = weights.size();
  if (threshold <= 0) {
    return {Vec(n, Int(0))};
  }

  // Any minimal point has alpha_i <= ceil(t / w_i): lowering a coordinate of
  // a feasible point by 1 subtracts w_i from the value, so a minimal point's
  // value lies in the window [t, t + max(w)).  We enumerate the bounding box
  // with an odometer, keep only points whose value lands in that window, and
  // minimalize the survivors.
  Vec bound(n);
  for (size_t i = 0; i < n; ++i) bound[i] = ceil_div(threshold, weights[i]);
  const Int wmax = *std::max_element(weights.begin(), weights.end());
  const Int hi = threshold + wmax;  // exclusive

  std::vector<Vec> window;
  Vec alpha(n, Int(0));
  Int value(0);
  while (true) {
    if (value >= threshold && value < hi) window.push_back(alpha);
    size_t i = n;
    while (i > 0) {
      --i;
      if (alpha[i] < bound[i]) {
        alpha[i] += 1;
        value += weights[i];
        break;
      }
      value -= alpha[i] * weights[i];
      alpha[i] = 0;
      if (i == 0) return minimalize(std::move(window));
    }
  }
}

}  // namespace reesnorm
