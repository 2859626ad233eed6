#include <atomic>
#include <cstdlib>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "reesnorm/format.hpp"
#include "reesnorm/graded.hpp"
#include "reesnorm/ideal.hpp"
#include "reesnorm/lambda.hpp"
#include "reesnorm/lattice.hpp"
#include "reesnorm/oracle.hpp"
#include "reesnorm/rees.hpp"

namespace {

using namespace reesnorm;

const char* yesno(bool b) { return b ? "yes" : "no"; }

MonomialIdeal load_ideal(const std::string& ideal_path, const std::string& lambda_csv) {
  if (!ideal_path.empty()) {
    auto rows = parse_ideal_file(ideal_path);
    if (rows.empty()) throw std::invalid_argument("ideal file contains no generators");
    return from_generators(static_cast<int>(rows.front().size()), rows);
  }
  if (lambda_csv.empty()) {
    throw std::invalid_argument("one of --ideal or --lambda is required");
  }
  return ideal_of_lambda(make_lambda_system(parse_positive_csv(lambda_csv)));
}

std::pair<Int, Int> parse_range(const std::string& text) {
  const size_t pos = text.find("..");
  if (pos == std::string::npos) {
    throw std::invalid_argument("range must have the form lo..hi");
  }
  Vec lo = parse_positive_csv(text.substr(0, pos));
  Vec hi = parse_positive_csv(text.substr(pos + 2));
  if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0]) {
    throw std::invalid_argument("range must have the form lo..hi with lo <= hi");
  }
  return {lo[0], hi[0]};
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env_format = std::getenv("REESNORM_FORMAT")) {
    const std::string value(env_format);
    if (value != "table" && value != "json" && value != "csv") {
      std::cerr << "error: REESNORM_FORMAT must be one of table, json, csv (got \"" << value
                << "\")\n";
      return 2;
    }
  }

  CLI::App app{"Exact tools for normality of monomial ideals and normalized Rees algebras"};
  app.require_subcommand(1);
  int exit_code = 0;

  // closure ----------------------------------------------------------------
  auto* closure_cmd =
      app.add_subcommand("closure", "Minimal generators of the integral closure of I^m");
  std::string closure_ideal, closure_lambda;
  long closure_m = 1;
  auto* closure_ideal_opt =
      closure_cmd->add_option("--ideal", closure_ideal, "Generator file (one row per generator)");
  auto* closure_lambda_opt =
      closure_cmd->add_option("--lambda", closure_lambda, "Use I(lambda) as the input ideal");
  closure_ideal_opt->excludes(closure_lambda_opt);
  closure_lambda_opt->excludes(closure_ideal_opt);
  closure_cmd->add_option("-m,--power", closure_m, "Power to close (default 1)");
  closure_cmd->callback([&] {
    const MonomialIdeal ideal = load_ideal(closure_ideal, closure_lambda);
    std::cout << render_generators(closure_generators(ideal, Int(closure_m)));
  });

  // power ------------------------------------------------------------------
  auto* power_cmd = app.add_subcommand("power", "Minimal generators of I^m");
  std::string power_ideal, power_lambda;
  long power_m = 1;
  auto* power_ideal_opt = power_cmd->add_option("--ideal", power_ideal, "Generator file");
  auto* power_lambda_opt =
      power_cmd->add_option("--lambda", power_lambda, "Use I(lambda) as the input ideal");
  power_ideal_opt->excludes(power_lambda_opt);
  power_lambda_opt->excludes(power_ideal_opt);
  power_cmd->add_option("-m,--power", power_m, "Exponent m")->required();
  power_cmd->callback([&] {
    const MonomialIdeal ideal = load_ideal(power_ideal, power_lambda);
    std::cout << render_generators(power(ideal, Int(power_m)).generators());
  });

  // is-normal ---------------------------------------------------------------
  auto* normal_cmd = app.add_subcommand("is-normal", "Decide normality");
  std::string normal_ideal, normal_lambda;
  bool normal_check = false;
  auto* normal_ideal_opt = normal_cmd->add_option("--ideal", normal_ideal, "Generator file");
  auto* normal_lambda_opt =
      normal_cmd->add_option("--lambda", normal_lambda, "Check I(lambda) by the box criterion");
  normal_ideal_opt->excludes(normal_lambda_opt);
  normal_lambda_opt->excludes(normal_ideal_opt);
  normal_cmd->add_flag("--check", normal_check, "Exit with status 1 when the ideal is not normal");
  normal_cmd->callback([&] {
    bool normal = true;
    if (!normal_lambda.empty()) {
      const LambdaSystem sys = make_lambda_system(parse_positive_csv(normal_lambda));
      const LambdaNormalityVerdict v = is_normal_lambda(sys);
      normal = v.normal;
      std::cout << "normal: " << yesno(v.normal) << "\n";
      if (!v.normal) {
        std::cout << "witness: alpha=" << render_vec(v.alpha) << " p=" << v.p.get_str() << "\n";
      }
    } else {
      const MonomialIdeal ideal = load_ideal(normal_ideal, normal_lambda);
      const NormalityVerdict v = is_normal(ideal);
      normal = v.normal;
      std::cout << "normal: " << yesno(v.normal) << "\n";
      if (!v.normal) {
        std::cout << "witness: m=" << v.m.get_str() << " alpha=" << render_vec(v.alpha) << "\n";
      }
    }
    if (normal_check && !normal) exit_code = 1;
  });

  // rees ---------------------------------------------------------------------
  auto* rees_cmd =
      app.add_subcommand("rees", "Minimal generators of the normalized Rees algebra of I(lambda)");
  std::string rees_lambda, rees_format = "table";
  rees_cmd->add_option("--lambda", rees_lambda, "Exponents lambda_1,...,lambda_n")->required();
  rees_cmd->add_option("--format", rees_format, "Output format: table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->envname("REESNORM_FORMAT");
  rees_cmd->callback([&] {
    const LambdaSystem sys = make_lambda_system(parse_positive_csv(rees_lambda));
    const auto gens = minimal_generators(sys);
    if (rees_format == "table") {
      std::cout << render_rees_table(gens);
    } else if (rees_format == "csv") {
      std::cout << render_rees_csv(sys.n, gens);
    } else {
      std::cout << rees_report_json(sys, gens, is_normal_via_rees(sys));
    }
  });

  // quasinormal ----------------------------------------------------------------
  auto* quasi_cmd = app.add_subcommand("quasinormal", "Scalar splitting test for I(lambda)");
  std::string quasi_lambda;
  quasi_cmd->add_option("--lambda", quasi_lambda, "Exponents lambda_1,...,lambda_n")->required();
  quasi_cmd->callback([&] {
    const LambdaSystem sys = make_lambda_system(parse_positive_csv(quasi_lambda));
    std::cout << "L: " << sys.L.get_str() << "\n";
    std::cout << "L_plus_1_in_semigroup: " << yesno(lplus1_test(sys)) << "\n";
    const QuasinormalVerdict v = is_quasinormal(sys);
    std::cout << "quasinormal: " << yesno(v.quasinormal) << "\n";
    if (!v.quasinormal) {
      std::cout << "witness: s=" << v.s.get_str() << " p=" << v.p.get_str() << "\n";
    }
  });

  // transfer ---------------------------------------------------------------------
  auto* transfer_cmd =
      app.add_subcommand("transfer", "Map bidegrees between lambda and lambda'");
  std::string transfer_lambda, transfer_vector;
  bool transfer_inverse = false;
  transfer_cmd->add_option("--lambda", transfer_lambda, "Base system lambda")->required();
  transfer_cmd->add_option("--vector", transfer_vector,
                           "Bidegree a_1,...,a_n,d to map (default: all type-4 generators)");
  transfer_cmd->add_flag("--inverse", transfer_inverse, "Apply the inverse map");
  transfer_cmd->callback([&] {
    const LambdaSystem sys = make_lambda_system(parse_positive_csv(transfer_lambda));
    if (!transfer_vector.empty()) {
      const std::vector<Int> entries = parse_int_csv(transfer_vector);
      if (entries.size() != static_cast<size_t>(sys.n) + 1) {
        throw std::invalid_argument("--vector needs exactly n+1 comma-separated integers");
      }
      TransferVector tv{Vec(entries.begin(), entries.end() - 1), entries.back()};
      const TransferVector out =
          transfer_inverse ? transfer_backward(sys, tv) : transfer_forward(sys, tv);
      std::cout << render_vec(out.a) << " " << out.d.get_str() << "\n";
    } else {
      if (transfer_inverse) {
        throw std::invalid_argument("--inverse requires --vector");
      }
      for (const ReesGenerator& g : minimal_generators(sys)) {
        if (g.gen_type != 4) continue;
        const TransferVector img = transfer_forward(sys, TransferVector{g.a, g.d});
        std::cout << render_vec(g.a) << " " << g.d.get_str() << " -> " << render_vec(img.a)
                  << " " << img.d.get_str() << "\n";
      }
    }
  });

  // congruence ---------------------------------------------------------------------
  auto* cong_cmd =
      app.add_subcommand("congruence", "Verify the transfer between lambda and lambda'");
  std::string cong_lambda;
  cong_cmd->add_option("--lambda", cong_lambda, "Base system lambda")->required();
  cong_cmd->callback([&] {
    const LambdaSystem sys = make_lambda_system(parse_positive_csv(cong_lambda));
    const CongruenceReport rep = verify_congruence(sys);
    std::cout << "lambda: " << join(rep.sys.lambda, ",") << "\n";
    std::cout << "lambda_prime: " << join(rep.sys_prime.lambda, ",") << "\n";
    std::cout << "ell: " << rep.sys.ell.get_str() << "\n";
    std::cout << "normal: " << yesno(rep.normal) << "\n";
    std::cout << "normal_prime: " << yesno(rep.normal_prime) << "\n";
    std::cout << "lambda_n_ge_ell: " << yesno(rep.lambda_n_ge_ell) << "\n";
    std::cout << "forward_implication: " << yesno(rep.forward_ok) << "\n";
    std::cout << "type4: " << rep.type4.size() << "\n";
    std::cout << "type4_prime: " << rep.type4_prime.size() << "\n";
    std::cout << "injection: " << yesno(rep.injection_ok) << "\n";
    if (rep.lambda_n_ge_ell) {
      std::cout << "bijection: " << yesno(rep.bijection_ok) << "\n";
      std::cout << "equivalence: " << yesno(rep.equivalence_ok) << "\n";
    }
    std::cout << "consistent: " << yesno(rep.consistent) << "\n";
  });

  // scan ---------------------------------------------------------------------
  auto* scan_cmd =
      app.add_subcommand("scan", "Normality of (fix, t) for t in a range, grouped by t mod ell");
  std::string scan_fix, scan_last;
  long scan_jobs = 1;
  scan_cmd->add_option("--fix", scan_fix, "Fixed prefix lambda_1,...,lambda_{n-1}")->required();
  scan_cmd->add_option("--last", scan_last, "Range lo..hi for the last entry")->required();
  scan_cmd->add_option("--jobs", scan_jobs, "Worker threads (output is identical for any value)")
      ->check(CLI::PositiveNumber);
  scan_cmd->callback([&] {
    const Vec prefix = parse_positive_csv(scan_fix);
    const auto [lo, hi] = parse_range(scan_last);
    const Int count_z = hi - lo + 1;
    if (count_z > 100'000) throw ResourceError("scan: range too large");
    const long count = count_z.get_si();
    const Int ell = lcm_of(prefix, 0, prefix.size());

    std::vector<char> normal(static_cast<size_t>(count), 0);
    std::atomic<long> cursor{0};
    std::vector<std::string> errors(static_cast<size_t>(count));
    auto worker = [&] {
      while (true) {
        const long i = cursor.fetch_add(1);
        if (i >= count) break;
        Vec lam = prefix;
        lam.push_back(lo + i);
        try {
          normal[static_cast<size_t>(i)] =
              is_normal_via_rees(make_lambda_system(lam)).normal ? 1 : 0;
        } catch (const std::exception& e) {
          errors[static_cast<size_t>(i)] = e.what();
        }
      }
    };
    std::vector<std::thread> pool;
    for (long j = 1; j < scan_jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (const std::string& e : errors) {
      if (!e.empty()) throw ResourceError(e);
    }

    std::map<Int, std::vector<long>> by_residue;
    for (long i = 0; i < count; ++i) {
      Int r = (lo + i) % ell;
      by_residue[r].push_back(i);
    }
    for (const auto& [r, idxs] : by_residue) {
      for (const long i : idxs) {
        const Int t = lo + i;
        std::cout << "lambda=" << join(prefix, ",") << "," << t.get_str()
                  << " t=" << t.get_str() << " residue=" << r.get_str()
                  << " normal=" << yesno(normal[static_cast<size_t>(i)] != 0) << "\n";
      }
    }
  });

  // faridi ---------------------------------------------------------------------
  auto* faridi_cmd =
      app.add_subcommand("faridi", "Graded normality certificate for A_{>= k*w}");
  std::string faridi_weights;
  long faridi_k = 1;
  faridi_cmd->add_option("--weights", faridi_weights, "Variable weights w_1,...,w_n")->required();
  faridi_cmd->add_option("-k,--multiplier", faridi_k, "Degree multiplier k")->required();
  faridi_cmd->callback([&] {
    const WeightedGrading grading = make_weighted_grading(parse_positive_csv(faridi_weights));
    std::cout << "w: " << grading.w.get_str() << "\n";
    const Int bound = floor_div(Int(grading.n - 2), Int(faridi_k)) + 1;
    std::cout << "bound: " << bound.get_str() << "\n";
    const FaridiVerdict v = faridi_check(grading, Int(faridi_k));
    if (v.certified_normal) {
      std::cout << "certified_normal: yes\n";
    } else {
      std::cout << "certified_normal: no (undecided)\n";
      std::cout << "failing_p: " << v.failing_p.get_str() << "\n";
      if (v.has_witness) std::cout << "witness: " << render_vec(v.witness) << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
