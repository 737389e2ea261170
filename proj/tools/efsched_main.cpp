// SPDX-License-Identifier: Apache-2.0
//
// efsched: workbench for envy-free makespan scheduling on unrelated
// machines. Subcommands generate the hard instance family, check local
// efficiency, synthesize envy-free payments, run exact desk-scale searches
// and reproduce the cyclic-shift accounting. All machine-readable output is
// exact-rational JSON and byte-deterministic.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "efsched/analysis.hpp"
#include "efsched/efficiency.hpp"
#include "efsched/errors.hpp"
#include "efsched/generators.hpp"
#include "efsched/instance.hpp"
#include "efsched/io.hpp"
#include "efsched/payments.hpp"
#include "efsched/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitGuard = 2;
constexpr int kExitNotLocallyEfficient = 3;
constexpr int kExitNotEnvyFree = 4;
constexpr int kExitValidationFailed = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw efsched::ParseError("cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw efsched::ParseError("cannot write \"" + out_path + "\"");
  out << payload;
}

int default_threads() {
  if (const char* env = std::getenv("EFSCHED_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed >= 1) return parsed;
  }
  return 1;
}

efsched::InstanceDocument load_instance(const std::string& path) {
  return efsched::parse_instance_json(read_file(path));
}

struct GenArgs {
  int k = 0;
  bool random = false;
  int machines = 3;
  int jobs = 3;
  std::uint64_t seed = 1;
  std::string lo = "1/2";
  std::string hi = "2";
  double inf_probability = 0.0;
  std::int64_t size_cap = efsched::kDefaultEntryCap;
  std::string format = "json";
  std::string out;
};

struct FilePairArgs {
  std::string instance;
  std::string alloc;
  std::string out;
};

struct SolveArgs {
  std::string instance;
  std::string mode = "gap";
  int jobs_cap = 16;
  int machine_cap = 10;
  int threads = 0;
  std::string out;
};

struct AnalyzeArgs {
  int k = 0;
  bool threshold = false;
  bool lemma2 = false;
  std::string instance;
  std::string alloc;
  std::string out;
};

struct ValidateArgs {
  int k = 0;
  std::string instance;
  std::string out;
};

int run_gen(const GenArgs& args) {
  if (args.random) {
    const efsched::CostMatrix costs =
        efsched::random_instance(args.machines, args.jobs, args.seed,
                                 efsched::parse_rational(args.lo),
                                 efsched::parse_rational(args.hi), args.inf_probability);
    if (args.format == "csv") {
      write_output(args.out, efsched::instance_to_csv(costs));
    } else {
      write_output(args.out, efsched::instance_to_json(costs));
    }
    return kExitOk;
  }
  if (args.k < 1) throw efsched::ParseError("gen needs --k, or --random with --m/--n/--seed");
  const efsched::FamilyInstance instance = efsched::family_instance(args.k, args.size_cap);
  if (args.format == "csv") {
    write_output(args.out, efsched::instance_to_csv(instance.costs));
  } else {
    write_output(args.out, efsched::instance_to_json(instance.costs, instance.params));
  }
  return kExitOk;
}

int run_validate(const ValidateArgs& args) {
  efsched::FamilyValidationReport report;
  if (!args.instance.empty()) {
    const efsched::InstanceDocument document = load_instance(args.instance);
    if (!document.params) {
      throw efsched::ParseError("instance file lacks the params block needed for validation");
    }
    report = efsched::validate_family_instance(document.costs, *document.params);
  } else if (args.k > 0) {
    const efsched::FamilyInstance instance = efsched::family_instance(args.k);
    report = efsched::validate_family_instance(instance.costs, instance.params);
  } else {
    throw efsched::ParseError("validate needs --instance or --k");
  }
  write_output(args.out, efsched::validation_to_json(report));
  return report.ok ? kExitOk : kExitValidationFailed;
}

int run_check_le(const FilePairArgs& args) {
  const efsched::InstanceDocument document = load_instance(args.instance);
  const efsched::Allocation alloc = efsched::parse_allocation_json(
      read_file(args.alloc), document.costs.machines(), document.costs.jobs());
  const efsched::LocalEfficiencyCheck check =
      efsched::is_locally_efficient(document.costs, alloc);
  write_output(args.out, efsched::local_efficiency_to_json(check));
  return check.locally_efficient ? kExitOk : kExitNotLocallyEfficient;
}

int run_pay(const FilePairArgs& args) {
  const efsched::InstanceDocument document = load_instance(args.instance);
  const efsched::Allocation alloc = efsched::parse_allocation_json(
      read_file(args.alloc), document.costs.machines(), document.costs.jobs());
  efsched::PaymentOutcome outcome = efsched::synthesize_payments(document.costs, alloc);
  if (auto* payments = std::get_if<efsched::PaymentVector>(&outcome)) {
    efsched::Mechanism mech{alloc, std::move(*payments)};
    write_output(args.out, efsched::mechanism_to_json(mech));
    return kExitOk;
  }
  write_output(args.out,
               efsched::negative_cycle_to_json(std::get<efsched::NegativeCycleWitness>(outcome)));
  return kExitNotEnvyFree;
}

int run_verify_ef(const std::string& instance_path, const std::string& mechanism_path,
                  const std::string& out) {
  const efsched::InstanceDocument document = load_instance(instance_path);
  const efsched::Mechanism mech = efsched::parse_mechanism_json(
      read_file(mechanism_path), document.costs.machines(), document.costs.jobs());
  const efsched::EnvyCheck check = efsched::is_envy_free(document.costs, mech);
  write_output(out, efsched::envy_check_to_json(check));
  return check.envy_free ? kExitOk : kExitNotEnvyFree;
}

int run_solve(const SolveArgs& args) {
  const efsched::InstanceDocument document = load_instance(args.instance);
  if (document.costs.jobs() > args.jobs_cap) {
    throw efsched::GuardError("instance has " + std::to_string(document.costs.jobs()) +
                              " jobs, --jobs-cap is " + std::to_string(args.jobs_cap));
  }
  efsched::SearchOptions options;
  options.machine_cap = args.machine_cap;
  options.threads = args.threads >= 1 ? args.threads : default_threads();
  if (args.mode == "opt") {
    write_output(args.out, efsched::opt_result_to_json(efsched::opt_makespan(document.costs,
                                                                             options)));
  } else if (args.mode == "ef") {
    write_output(args.out, efsched::ef_result_to_json(efsched::min_ef_makespan(document.costs,
                                                                               options)));
  } else {
    write_output(args.out, efsched::search_result_to_json(efsched::ef_gap_report(document.costs,
                                                                                 options)));
  }
  return kExitOk;
}

int run_analyze(const AnalyzeArgs& args) {
  if (args.threshold) {
    std::ostringstream out;
    out << "{\n  \"threshold_k\": " << efsched::proof_threshold() << "\n}\n";
    write_output(args.out, out.str());
    return kExitOk;
  }
  if (args.lemma2) {
    if (args.instance.empty() || args.alloc.empty()) {
      throw efsched::ParseError("--lemma2 needs --instance and --alloc");
    }
    const efsched::InstanceDocument document = load_instance(args.instance);
    if (!document.params) {
      throw efsched::ParseError("instance file lacks the params block needed for the job-count check");
    }
    const efsched::Allocation alloc = efsched::parse_allocation_json(
        read_file(args.alloc), document.costs.machines(), document.costs.jobs());
    write_output(args.out, efsched::job_count_to_json(
                               efsched::job_count_check(document.costs, alloc, *document.params)));
    return kExitOk;
  }
  if (args.k < 1) throw efsched::ParseError("analyze needs --k, --threshold or --lemma2");
  write_output(args.out, efsched::accounting_to_json(efsched::proof_accounting(args.k)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"envy-free makespan scheduling workbench"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand(
      "gen", "Generate a hard-family or seeded random instance (JSON or CSV)");
  gen->add_option("--k", gen_args.k, "family exponent; must be a power of two");
  gen->add_flag("--random", gen_args.random, "seeded random instance instead of the family");
  gen->add_option("--m", gen_args.machines, "machines (with --random)");
  gen->add_option("--n", gen_args.jobs, "jobs (with --random)");
  gen->add_option("--seed", gen_args.seed, "random seed (with --random)");
  gen->add_option("--lo", gen_args.lo, "lowest cost, exact rational (default 1/2)");
  gen->add_option("--hi", gen_args.hi, "highest cost, exact rational (default 2)");
  gen->add_option("--inf-prob", gen_args.inf_probability,
                  "per-entry infinity probability in [0,1)");
  gen->add_option("--size-cap", gen_args.size_cap, "max m*n entries (default 10^7)");
  gen->add_option("--format", gen_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  gen->add_option("--out", gen_args.out, "output path (default stdout)");
  gen->footer(
      "Emits {\"m\", \"n\", \"costs\": [[\"p/q\"|\"inf\", ...], ...]}; family instances\n"
      "carry a \"params\" block {k, n_tilde, l, n, m}. Every column keeps at least one\n"
      "finite entry. Identical arguments produce identical bytes.");

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand(
      "validate", "Check the structural identities of a generated instance");
  validate->add_option("--instance", validate_args.instance, "instance JSON with params block");
  validate->add_option("--k", validate_args.k, "generate and validate this exponent");
  validate->add_option("--out", validate_args.out, "output path (default stdout)");
  validate->footer(
      "Exit 0 when all checks pass, 5 otherwise. Reports entries below 1/2, the\n"
      "1/2-equality set, consecutive-difference mismatches, diagonal and infinity defects.");

  FilePairArgs check_args;
  auto* check = app.add_subcommand("check-le", "Decide local efficiency of an allocation");
  check->add_option("--instance", check_args.instance, "instance JSON")->required();
  check->add_option("--alloc", check_args.alloc, "allocation JSON")->required();
  check->add_option("--out", check_args.out, "output path (default stdout)");
  check->footer(
      "Allocation JSON: {\"assignment\": [machine_of_job_1, ...]} (1-based).\n"
      "Exit 0 with {\"locally_efficient\": true}, or 3 with an improving permutation.");

  FilePairArgs pay_args;
  auto* pay = app.add_subcommand("pay", "Synthesize envy-free payments for an allocation");
  pay->add_option("--instance", pay_args.instance, "instance JSON")->required();
  pay->add_option("--alloc", pay_args.alloc, "allocation JSON")->required();
  pay->add_option("--out", pay_args.out, "output path (default stdout)");
  pay->footer(
      "Exit 0 with mechanism JSON {\"assignment\", \"payments\"}; exit 4 with\n"
      "{\"negative_cycle\": [machines...], \"cycle_weight\": \"p/q\"} when impossible.");

  std::string verify_instance, verify_mechanism, verify_out;
  auto* verify = app.add_subcommand("verify-ef", "Check a mechanism for envy-freeness");
  verify->add_option("--instance", verify_instance, "instance JSON")->required();
  verify->add_option("--mechanism", verify_mechanism, "mechanism JSON")->required();
  verify->add_option("--out", verify_out, "output path (default stdout)");
  verify->footer("Exit 0 with {\"envy_free\": true}, or 4 with the violating machine pair.");

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Exact desk-scale searches");
  solve->add_option("--instance", solve_args.instance, "instance JSON")->required();
  solve->add_option("--mode", solve_args.mode, "ef, opt or gap")
      ->check(CLI::IsMember({"ef", "opt", "gap"}));
  solve->add_option("--jobs-cap", solve_args.jobs_cap, "max job count admitted (default 16)");
  solve->add_option("--machine-cap", solve_args.machine_cap,
                    "max machine count admitted (default 10)");
  solve->add_option("--threads", solve_args.threads,
                    "worker threads (default $EFSCHED_THREADS or 1)");
  solve->add_option("--out", solve_args.out, "output path (default stdout)");
  solve->footer(
      "opt: exhaustive minimum makespan. ef: minimum envy-free-implementable\n"
      "makespan with a witnessing mechanism. gap: both plus their ratio.\n"
      "Exit 2 on guard violations. Output bytes do not depend on --threads.");

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "Cyclic-shift accounting and job-count checks");
  analyze->add_option("--k", analyze_args.k, "accounting report for this exponent");
  analyze->add_flag("--threshold", analyze_args.threshold,
                    "smallest exponent where the decrease exceeds the increase");
  analyze->add_flag("--lemma2", analyze_args.lemma2, "job-count properties of an allocation");
  analyze->add_option("--instance", analyze_args.instance, "instance JSON (with --lemma2)");
  analyze->add_option("--alloc", analyze_args.alloc, "allocation JSON (with --lemma2)");
  analyze->add_option("--out", analyze_args.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (validate->parsed()) return run_validate(validate_args);
    if (check->parsed()) return run_check_le(check_args);
    if (pay->parsed()) return run_pay(pay_args);
    if (verify->parsed()) return run_verify_ef(verify_instance, verify_mechanism, verify_out);
    if (solve->parsed()) return run_solve(solve_args);
    if (analyze->parsed()) return run_analyze(analyze_args);
  } catch (const efsched::GuardError& error) {
    std::cerr << "guard violation: " << error.what() << "\n";
    return kExitGuard;
  } catch (const efsched::InherentlyEnviousError& error) {
    std::cerr << "no envy-free payments exist: " << error.what() << "\n";
    return kExitNotEnvyFree;
  } catch (const efsched::ParseError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
