// Acceptance gate: runs the six top-level criteria and prints one PASS/FAIL
// line for each.  The exit code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <sys/wait.h>

#include "corpus.hpp"
#include "reesnorm/graded.hpp"
#include "reesnorm/ideal.hpp"
#include "reesnorm/lambda.hpp"
#include "reesnorm/lattice.hpp"
#include "reesnorm/oracle.hpp"
#include "reesnorm/rees.hpp"

using namespace reesnorm;
using testutil::vec;
using testutil::vecs;

namespace {

struct Criterion {
  std::string name;
  double limit_seconds;
  int violations = 0;
  std::vector<std::string> samples;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  Criterion(std::string n, double limit) : name(std::move(n)), limit_seconds(limit) {}

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++violations;
    if (samples.size() < 5) samples.push_back(what);
  }

  // Prints the PASS/FAIL line; returns true on pass.
  bool finish() {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    const bool in_time = elapsed <= limit_seconds;
    const bool pass = violations == 0 && in_time;
    std::printf("%s  criterion %s  (%.2f s, limit %.0f s)\n", pass ? "PASS" : "FAIL",
                name.c_str(), elapsed, limit_seconds);
    if (!in_time) std::printf("      exceeded the time limit\n");
    for (const auto& s : samples) std::printf("      violation: %s\n", s.c_str());
    if (violations > static_cast<int>(samples.size())) {
      std::printf("      ... %d violations in total\n", violations);
    }
    return pass;
  }
};

struct CliResult {
  std::string out;
  int exit_code = -1;
};

CliResult run_cli(const std::string& args) {
  const char* bin = std::getenv("REESNORM_BIN");
  if (bin == nullptr) return {"", -1};
  const std::string cmd = "\"" + std::string(bin) + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {"", -1};
  CliResult result;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::set<std::string> line_set(const std::string& text) {
  std::set<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.insert(line);
  return out;
}

std::string describe(const Vec& lambda) { return "lambda=(" + join(lambda, ",") + ")"; }

// ---- criterion 1: the three reference tables through the CLI ----

bool criterion_tables() {
  Criterion c("1 (reference tables)", 10.0);
  struct Case {
    const char* lambda;
    std::set<std::string> rows;
  };
  const std::vector<Case> cases = {
      {"2,3,1",
       {"1 0 0 0", "0 1 0 0", "0 0 1 0", "2 0 0 1", "0 3 0 1", "0 0 1 1", "1 2 0 1"}},
      {"2,3,7",
       {"1 0 0 0", "0 1 0 0", "0 0 1 0", "2 0 0 1", "0 3 0 1", "0 0 7 1", "1 0 4 1", "0 1 5 1",
        "1 1 2 1", "0 2 3 1", "1 2 6 2", "1 2 0 1"}},
      {"2,3,13",
       {"1 0 0 0", "0 1 0 0", "0 0 1 0", "2 0 0 1", "0 3 0 1", "0 0 13 1", "1 0 7 1",
        "0 1 9 1", "1 1 3 1", "0 2 5 1", "1 2 11 2", "1 2 0 1"}},
  };
  for (const auto& cs : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto run = run_cli(std::string("rees --lambda ") + cs.lambda);
    const double took =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(run.exit_code == 0, std::string("exit code for ") + cs.lambda);
    c.expect(line_set(run.out) == cs.rows, std::string("row set for ") + cs.lambda);
    c.expect(took < 1.0, std::string("runtime for ") + cs.lambda);
  }
  return c.finish();
}

// ---- criterion 2: six normality verdicts ----

bool criterion_verdicts() {
  Criterion c("2 (normality verdicts)", 30.0);
  const std::vector<std::pair<Vec, bool>> cases = {
      {vec({2, 3, 1}), true},    {vec({2, 3, 7}), false},    {vec({2, 3, 5}), true},
      {vec({2, 3, 13}), false},  {vec({2, 3, 5, 6}), true},  {vec({2, 3, 5, 36}), false},
  };
  for (const auto& [lambda, expected] : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto verdict = is_normal(ideal_of_lambda(make_lambda_system(lambda)));
    const double took =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(verdict.normal == expected, describe(lambda) + " verdict");
    c.expect(took < 5.0, describe(lambda) + " runtime");
    if (lambda == vec({2, 3, 7})) {
      c.expect(verdict.m == 2 && verdict.alpha == vec({1, 2, 6}),
               "witness for lambda=(2,3,7) must be m=2, alpha=(1,2,6)");
    }
  }
  return c.finish();
}

// ---- criterion 3: quasinormality and the L+1 membership facts ----

bool criterion_quasinormal() {
  Criterion c("3 (quasinormality)", 10.0);
  c.expect(!is_quasinormal(make_lambda_system(vec({2, 3, 7}))).quasinormal,
           "Lambda(2,3,7) must not be quasinormal");
  c.expect(!semigroup_contains(vec({21, 14, 6}), Int(43)), "43 must lie outside <21,14,6>");
  c.expect(is_quasinormal(make_lambda_system(vec({2, 3, 5}))).quasinormal,
           "Lambda(2,3,5) must be quasinormal");
  c.expect(semigroup_contains(vec({15, 10, 6}), Int(31)), "31 must lie in <15,10,6>");
  return c.finish();
}

// ---- criterion 4: the transfer map on the reference vectors ----

bool criterion_transfer() {
  Criterion c("4 (transfer map)", 10.0);
  const auto sys7 = make_lambda_system(vec({2, 3, 7}));
  const std::vector<std::pair<TransferVector, TransferVector>> forward = {
      {{vec({1, 0, 4}), Int(1)}, {vec({1, 0, 7}), Int(1)}},
      {{vec({0, 1, 5}), Int(1)}, {vec({0, 1, 9}), Int(1)}},
      {{vec({1, 1, 2}), Int(1)}, {vec({1, 1, 3}), Int(1)}},
      {{vec({0, 2, 3}), Int(1)}, {vec({0, 2, 5}), Int(1)}},
      {{vec({1, 2, 6}), Int(2)}, {vec({1, 2, 11}), Int(2)}},
  };
  for (const auto& [from, to] : forward) {
    c.expect(transfer_forward(sys7, from) == to,
             "f(" + join(from.a, ",") + "," + from.d.get_str() + ") over (2,3,7)");
  }
  const auto sys1 = make_lambda_system(vec({2, 3, 1}));
  c.expect(transfer_backward(sys1, TransferVector{vec({1, 2, 6}), Int(2)}) ==
               TransferVector{vec({1, 2, 1}), Int(2)},
           "f^{-1}(1,2,6,2) over (2,3,1)");
  return c.finish();
}

// ---- criterion 5: the property suite ----

void check_lambda_scan(Criterion& c) {
  std::vector<Vec> corpus;
  for (int n = 2; n <= 4; ++n) {
    for (const Vec& lambda : testutil::all_lambdas(n, 8)) corpus.push_back(lambda);
  }

  auto rng = testutil::seeded_rng(100);
  for (const Vec& lambda : corpus) {
    const auto sys = make_lambda_system(lambda);
    const auto ideal = ideal_of_lambda(sys);

    // (a) the three normality criteria agree
    const bool via_lambda = is_normal_lambda(sys).normal;
    const bool via_ideal = is_normal(ideal).normal;
    const bool via_rees = is_normal_via_rees(sys).normal;
    c.expect(via_lambda == via_ideal && via_lambda == via_rees,
             "(a) route disagreement at " + describe(lambda));

    // (b) on this family the ideal is integrally closed by construction
    c.expect(is_integrally_closed(ideal), "(b) closure not idempotent at " + describe(lambda));

    // (f) normal => quasinormal => L+1 test
    const bool qn = is_quasinormal(sys).quasinormal;
    const bool lp = lplus1_test(sys);
    c.expect(!via_lambda || qn, "(f) normal but not quasinormal at " + describe(lambda));
    c.expect(!qn || lp, "(f) quasinormal but L+1 missing at " + describe(lambda));

    // (g) pairwise coprime: normal iff quasinormal
    if (testutil::pairwise_coprime(lambda)) {
      c.expect(via_lambda == qn, "(g) coprime equivalence fails at " + describe(lambda));
    }

    // (h) large gcd forces normality
    if (testutil::gcd_all(lambda) > sys.n - 2) {
      c.expect(via_lambda, "(h) gcd bound violated at " + describe(lambda));
    }

    // (i) the congruence between lambda and lambda'
    const auto report = verify_congruence(sys);
    c.expect(report.forward_ok, "(i) forward implication fails at " + describe(lambda));
    c.expect(report.injection_ok, "(i) transfer not injective at " + describe(lambda));
    c.expect(report.bijection_ok, "(i) type-4 bijection fails at " + describe(lambda));
    c.expect(report.consistent, "(i) congruence report inconsistent at " + describe(lambda));

    // (k) oracle agreement where the oracle budgets allow
    Int max_entry(0);
    for (const Int& x : lambda) {
      if (x > max_entry) max_entry = x;
    }
    if (sys.n <= 3 && max_entry <= 6) {
      c.expect(quasinormal_bounded(sys) == qn,
               "(k) bounded quasinormality oracle disagrees at " + describe(lambda));
    }
    if (sys.n <= 3 && max_entry <= 5) {
      for (int s = 0; s < 2; ++s) {
        const Vec alpha = testutil::random_vector(rng, sys.n, 10);
        const Int p(2);
        const auto fast = decompose_gamma(sys, alpha, p);
        const auto slow = decompose_exhaustive(sys, alpha, p);
        c.expect(fast.has_value() == slow.has_value(),
                 "(k) decomposition oracle disagrees at " + describe(lambda) + " alpha=(" +
                     join(alpha, ",") + ")");
      }
      // scaling oracle: a closure generator of I^2 lies in 2*NP; a vector
      // just below the facet does not, so a "yes" there would be unsound.
      const auto closure2 = closure_generators(ideal, Int(2));
      const Vec& inside = closure2.front();
      const auto hit = np_contains_scaling(ideal, inside, Int(2), Int(4));
      if (hit.verdict == ScalingVerdict::yes) {
        c.expect(np_contains(ideal, inside, Int(2)),
                 "(k) scaling oracle unsound (inside) at " + describe(lambda));
      }
      Vec outside = lambda;
      for (Int& x : outside) x -= 1;
      if (!gamma_contains(sys, outside)) {
        const auto miss = np_contains_scaling(ideal, outside, Int(1), Int(4));
        c.expect(miss.verdict != ScalingVerdict::yes,
                 "(k) scaling oracle unsound (outside) at " + describe(lambda));
      }
    }
  }

  // (k) the bounded quasinormality oracle on selected 4-variable systems
  for (const Vec& lambda : testutil::all_lambdas(4, 4)) {
    const auto sys = make_lambda_system(lambda);
    c.expect(quasinormal_bounded(sys) == is_quasinormal(sys).quasinormal,
             "(k) bounded quasinormality oracle disagrees at " + describe(lambda));
  }
}

void check_random_ideals(Criterion& c) {
  auto rng = testutil::seeded_rng(101);
  int cases = 0;
  while (cases < 510) {
    const int n = 1 + cases % 3;
    const auto ideal = testutil::random_ideal(rng, n, 6, 4);
    ++cases;
    const std::string tag = "gens[0]=(" + join(ideal.generators().front(), ",") + ") n=" +
                            std::to_string(n) + " case " + std::to_string(cases);

    // (b) idempotence and containment
    const auto closed = integral_closure(ideal);
    c.expect(integral_closure(closed) == closed, "(b) idempotence fails for " + tag);
    bool contained = true;
    for (const Vec& g : ideal.generators()) {
      if (!gamma_contains(closed, g)) contained = false;
    }
    c.expect(contained, "(b) containment fails for " + tag);

    // (e) closedness and normality are scaling-equivariant
    const Vec gamma = testutil::random_vector(rng, n, 4);
    const auto scaled = scale_by_monomial(ideal, gamma);
    c.expect(is_integrally_closed(ideal) == is_integrally_closed(scaled),
             "(e) closedness changes under scaling for " + tag);
    const bool normal = is_normal(ideal).normal;
    c.expect(normal == is_normal(scaled).normal,
             "(e) normality changes under scaling for " + tag);

    // (c) normality extends to powers n..2n
    if (normal) {
      for (long m = n; m <= 2 * n; ++m) {
        PowerMembership membership(ideal, Int(m));
        for (const Vec& alpha : closure_generators(ideal, Int(m))) {
          c.expect(membership.contains(alpha),
                   "(c) power " + std::to_string(m) + " not closed for " + tag);
        }
      }
    }

    // (k) scaling oracle soundness on a sampled point
    const Vec alpha = testutil::random_vector(rng, n, 8);
    const auto probe = np_contains_scaling(ideal, alpha, Int(1), Int(6));
    if (probe.verdict == ScalingVerdict::yes) {
      c.expect(np_contains(ideal, alpha, Int(1)), "(k) scaling oracle unsound for " + tag);
    }
  }

  // (d) Zariski: products of integrally closed ideals in two variables
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = integral_closure(testutil::random_ideal(rng, 2, 6, 4));
    const auto b = integral_closure(testutil::random_ideal(rng, 2, 6, 4));
    c.expect(is_integrally_closed(product(a, b)),
             "(d) Zariski product fails at trial " + std::to_string(trial));
  }
}

void check_weighted_corpus(Criterion& c) {
  auto rng = testutil::seeded_rng(102);
  std::uniform_int_distribution<long> w_dist(1, 6);
  std::uniform_int_distribution<int> n_dist(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = n_dist(rng);
    Vec weights(static_cast<size_t>(n));
    for (auto& x : weights) x = w_dist(rng);
    const auto g = make_weighted_grading(weights);
    const std::string tag = "weights=(" + join(weights, ",") + ")";

    // (j) degree ideals are integrally closed
    std::uniform_int_distribution<long> d_dist(1, to_long_checked(3 * g.w, "degree"));
    c.expect(is_integrally_closed(ideal_at_least(g, Int(d_dist(rng)))),
             "(j) degree ideal not closed for " + tag);

    // (j) closures of powers of degree ideals are again degree ideals
    for (long k = 1; k <= 2; ++k) {
      const auto ideal = ideal_at_least(g, Int(k) * g.w);
      for (long p = 1; p <= 3; ++p) {
        c.expect(closure_generators(ideal, Int(p)) ==
                     ideal_at_least(g, Int(p) * Int(k) * g.w).generators(),
                 "(j) closure of power differs for " + tag + " k=" + std::to_string(k) +
                     " p=" + std::to_string(p));
      }
    }
  }
}

bool criterion_properties() {
  Criterion c("5 (property suite)", 600.0);
  check_lambda_scan(c);
  check_random_ideals(c);
  check_weighted_corpus(c);
  return c.finish();
}

// ---- criterion 6: residue-class behavior of the scan ----

bool criterion_scan() {
  Criterion c("6 (residue classes)", 60.0);
  const auto run = run_cli("scan --fix 2,3 --last 7..49");
  c.expect(run.exit_code == 0, "scan exit code");
  int seen = 0;
  int congruent = 0;
  std::istringstream in(run.out);
  std::string line;
  while (std::getline(in, line)) {
    ++seen;
    const auto tpos = line.find("t=");
    if (tpos == std::string::npos) continue;
    const long t = std::strtol(line.c_str() + tpos + 2, nullptr, 10);
    if (t % 6 == 1) {
      ++congruent;
      c.expect(line.find("normal=no") != std::string::npos,
               "I(2,3," + std::to_string(t) + ") must not be normal");
    }
  }
  c.expect(seen == 43, "scan must cover all 43 values of t");
  c.expect(congruent == 8, "eight values of t are congruent to 1 mod 6");
  return c.finish();
}

}  // namespace

int main() {
  int failed = 0;
  if (!criterion_tables()) ++failed;
  if (!criterion_verdicts()) ++failed;
  if (!criterion_quasinormal()) ++failed;
  if (!criterion_transfer()) ++failed;
  if (!criterion_properties()) ++failed;
  if (!criterion_scan()) ++failed;
  if (failed == 0) {
    std::printf("all acceptance criteria satisfied\n");
  } else {
    std::printf("%d criterion(s) failed\n", failed);
  }
  return failed;
}
