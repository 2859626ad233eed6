#include "reesnorm/graded.hpp"

#include <stdexcept>

#include "reesnorm/lattice.hpp"

namespace reesnorm {

WeightedGrading make_weighted_grading(const Vec& weights) {
  if (weights.empty()) {
    throw std::invalid_argument("weights must be a nonempty sequence of positive integers");
  }
  for (const Int& w : weights) {
    if (w <= 0) throw std::invalid_argument("weights must be positive integers");
  }
  WeightedGrading g;
  g.weights = weights;
  g.w = lcm_of(weights, 0, weights.size());
  g.n = static_cast<int>(weights.size());
  return g;
}

MonomialIdeal ideal_at_least(const WeightedGrading& grading, const Int& d) {
  if (d < 1) throw std::invalid_argument("degree threshold must be at least 1");
  return MonomialIdeal(grading.n, minimal_points_halfspace(grading.weights, d));
}

PowerEqualityReport verify_power_equality(const WeightedGrading& grading, const Int& k,
                                          const Int& p) {
  if (k < 1) throw std::invalid_argument("degree multiplier must be at least 1");
  if (p < 1) throw std::invalid_argument("power exponent must be at least 1");

  const MonomialIdeal ideal = ideal_at_least(grading, k * grading.w);
  const std::vector<Vec> degree_gens =
      minimal_points_halfspace(grading.weights, p * k * grading.w);

  PowerEqualityReport rep;
  // I^p is contained in the degree ideal for free (degrees add), so equality
  // comes down to each degree-ideal generator being a product from I.
  PowerMembership membership(ideal, p);
  for (const Vec& g : degree_gens) {
    if (!membership.contains(g)) {
      rep.power_equal = false;
      rep.has_witness = true;
      rep.witness = g;
      break;
    }
  }
  rep.closure_equal = (closure_generators(ideal, p) == degree_gens);
  return rep;
}

FaridiVerdict faridi_check(const WeightedGrading& grading, const Int& k) {
  if (k < 1) throw std::invalid_argument("degree multiplier must be at least 1");
  const Int bound = floor_div(Int(grading.n - 2), k) + 1;
  for (Int p(2); p <= bound; ++p) {
    PowerEqualityReport rep = verify_power_equality(grading, k, p);
    if (!rep.power_equal) {
      FaridiVerdict v;
      v.certified_normal = false;
      v.failing_p = p;
      v.witness = rep.witness;
      v.has_witness = rep.has_witness;
      return v;
    }
  }
  return FaridiVerdict{};
}

}  // namespace reesnorm
