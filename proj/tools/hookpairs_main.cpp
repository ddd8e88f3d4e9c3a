#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hookpairs/identities.hpp"
#include "hookpairs/region.hpp"
#include "hookpairs/staircase.hpp"
#include "hookpairs/sweep.hpp"
#include "hookpairs/text.hpp"

namespace {

using namespace hookpairs;

constexpr int kExitPass = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInvalid = 2;

Region shape_region(const std::string& shape, int n, int k, const Partition& mu) {
  if (shape == "rect") return rectangle(n, k);
  if (shape == "sr") return sr(n, k, mu);
  if (shape == "sr-tilde") return sr_tilde(n, k, mu);
  return sq(n, k, mu);
}

struct ShapeArgs {
  std::string shape;
  int n = 0;
  int k = 0;
  std::string mu_text;

  Partition mu() const { return parse_partition(mu_text); }
};

void add_shape_options(CLI::App* cmd, ShapeArgs& args) {
  cmd->add_option("--shape", args.shape, "rect, sr, sr-tilde or sq")
      ->required()
      ->check(CLI::IsMember({"rect", "sr", "sr-tilde", "sq"}));
  cmd->add_option("--n", args.n, "rows of the base rectangle")->required();
  cmd->add_option("--k", args.k, "columns of the base rectangle")->required();
  cmd->add_option("--mu", args.mu_text,
                  "partition literal, e.g. 5,2,1 (empty for the empty partition)");
}

int run_construct(const ShapeArgs& args, bool render) {
  const Region g = shape_region(args.shape, args.n, args.k, args.mu());
  if (render) {
    std::cout << render_ascii(g) << "\n";
  } else {
    std::cout << region_document(g) << "\n";
  }
  return kExitPass;
}

// Enclosing region and subregion for the hook-pairs subcommand. The
// diagonal-split family (p, q-rect, qA, A2) lives under --shape sq
// with k = n + 1, matching the a x (a+1) setting it comes from; p is
// measured inside mu itself and q-rect inside the bare rectangle.
std::pair<Region, Region> sub_regions(const ShapeArgs& args,
                                      const std::string& sub) {
  const Partition mu = args.mu();
  if (sub == "whole") {
    const Region g = shape_region(args.shape, args.n, args.k, mu);
    return {g, g};
  }
  if (sub == "S1" || sub == "T1") {
    if (args.shape != "rect") {
      throw std::invalid_argument("--sub " + sub + " requires --shape rect");
    }
    const STDecomposition st = s_t_decomposition(args.n, args.k, mu);
    return {rectangle(args.n, args.k), sub == "S1" ? st.s1 : st.t1};
  }
  if (sub == "S2" || sub == "T2") {
    if (args.shape != "sq") {
      throw std::invalid_argument("--sub " + sub + " requires --shape sq");
    }
    const STDecomposition st = s_t_decomposition(args.n, args.k, mu);
    return {sq(args.n, args.k, mu), sub == "S2" ? st.s2 : st.t2};
  }
  if (args.shape != "sq" || args.k != args.n + 1) {
    throw std::invalid_argument("--sub " + sub +
                                " requires --shape sq with k = n + 1");
  }
  const int a = args.n;
  if (sub == "p") return {ferrers(mu), split_p(mu)};
  if (sub == "q-rect") return {rectangle(a, a + 1), split_q_rect(a)};
  const SqSplit split = split_sq(a, mu);
  if (sub == "qA") return {split.whole, split.q_a};
  return {split.whole, split.a2};
}

int run_hook_pairs(const ShapeArgs& args, const std::string& sub,
                   std::optional<int> d) {
  const auto [g, h] = sub_regions(args, sub);
  if (d) {
    std::cout << leg_multiset_document(broken_column_legs(g, h, *d)) << "\n";
  } else {
    std::cout << hook_pair_multiset_document(hook_pairs(g, h)) << "\n";
  }
  return kExitPass;
}

int run_bijection(bool has_legs, const std::string& legs_text, bool has_staircase,
                  const std::string& staircase_text, std::optional<int> d,
                  bool inverse) {
  if (has_legs == has_staircase) {
    throw std::invalid_argument("bijection: give exactly one of --legs, --staircase");
  }
  if (has_legs) {
    const std::vector<int> seq = parse_leg_sequence(legs_text);
    const std::vector<int> out =
        inverse ? inverse_master_bijection(seq) : master_bijection(seq);
    std::cout << format_leg_sequence(out) << "\n";
    return kExitPass;
  }
  if (!d) {
    throw std::invalid_argument("bijection: --staircase requires --d");
  }
  if (inverse) {
    throw std::invalid_argument("bijection: --inverse applies to --legs only");
  }
  const Staircase s = parse_staircase(staircase_text);
  const std::vector<int> left = left_legs(s, *d);
  const std::vector<int> right = right_legs(s, *d);
  const LemmaReport report = verify_lemma(s, *d);
  std::cout << "left: " << format_leg_sequence(left) << "\n";
  std::cout << "right: " << format_leg_sequence(right) << "\n";
  std::cout << "output: " << format_leg_sequence(master_bijection(left)) << "\n";
  std::cout << "lemma: " << (report.pass ? "pass" : "FAIL " + report.detail)
            << "\n";
  return report.pass ? kExitPass : kExitViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructions and exhaustive verifiers for arm-leg hook pair "
               "identities on skew diagrams"};
  app.require_subcommand(1);

  ShapeArgs construct_args;
  bool construct_render = false;
  auto* construct = app.add_subcommand("construct", "Build a diagram");
  add_shape_options(construct, construct_args);
  construct->add_flag("--render", construct_render, "print an ASCII grid");

  ShapeArgs hp_args;
  std::string hp_sub = "whole";
  std::optional<int> hp_d;
  auto* hook_pairs_cmd =
      app.add_subcommand("hook-pairs", "Hook pairs or broken-column legs");
  add_shape_options(hook_pairs_cmd, hp_args);
  hook_pairs_cmd->add_option("--sub", hp_sub, "subregion to measure")
      ->check(CLI::IsMember({"whole", "p", "q-rect", "qA", "A2", "S1", "S2",
                             "T1", "T2"}));
  hook_pairs_cmd->add_option("--d", hp_d,
                             "broken-column distance; prints legs instead");

  std::string bij_legs, bij_staircase;
  std::optional<int> bij_d;
  bool bij_inverse = false;
  auto* bijection =
      app.add_subcommand("bijection", "Run the stack bijection on legs");
  auto* bij_legs_opt = bijection->add_option("--legs", bij_legs,
                                             "leg sequence literal");
  auto* bij_stair_opt = bijection->add_option("--staircase", bij_staircase,
                                              "staircase literal v:...;h:...");
  bijection->add_option("--d", bij_d, "broken-column distance");
  bijection->add_flag("--inverse", bij_inverse, "apply the inverse map");

  int verify_theorem = 0;
  int verify_n = 0, verify_k = 0, verify_a = 0;
  std::string verify_mu, verify_lambda;
  auto* verify = app.add_subcommand("verify", "Verify one identity instance");
  verify->add_option("--theorem", verify_theorem)->required()->check(
      CLI::IsMember({1, 2, 3}));
  auto* verify_n_opt = verify->add_option("--n", verify_n);
  auto* verify_k_opt = verify->add_option("--k", verify_k);
  verify->add_option("--mu", verify_mu);
  auto* verify_a_opt = verify->add_option("--a", verify_a);
  verify->add_option("--lambda", verify_lambda);

  int sweep_theorem_id = 0;
  int sweep_max_n = 0, sweep_max_k = 0, sweep_max_lambda = 0, sweep_a_span = 0;
  int sweep_jobs = 1;
  auto* sweep = app.add_subcommand("sweep", "Verify a bounded family");
  sweep->add_option("--theorem", sweep_theorem_id)->required()->check(
      CLI::IsMember({1, 2, 3}));
  auto* sweep_n_opt = sweep->add_option("--max-n", sweep_max_n);
  auto* sweep_k_opt = sweep->add_option("--max-k", sweep_max_k);
  auto* sweep_l_opt = sweep->add_option("--max-lambda", sweep_max_lambda);
  auto* sweep_s_opt = sweep->add_option("--a-span", sweep_a_span);
  sweep->add_option("--jobs", sweep_jobs, "worker threads (default 1)");

  try {
    app.parse(argc, argv);

    if (construct->parsed()) return run_construct(construct_args, construct_render);
    if (hook_pairs_cmd->parsed()) return run_hook_pairs(hp_args, hp_sub, hp_d);
    if (bijection->parsed()) {
      return run_bijection(bij_legs_opt->count() > 0, bij_legs,
                           bij_stair_opt->count() > 0, bij_staircase, bij_d,
                           bij_inverse);
    }

    if (verify->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      Report report;
      std::string document;
      if (verify_theorem == 3) {
        if (!verify_a_opt->count()) {
          throw std::invalid_argument("verify --theorem 3 needs --a and --lambda");
        }
        const Partition lambda = parse_partition(verify_lambda);
        report = verify_theorem3(verify_a, lambda);
        document = report_document_shifted(verify_a, lambda, report);
      } else {
        if (!verify_n_opt->count() || !verify_k_opt->count()) {
          throw std::invalid_argument("verify --theorem 1|2 needs --n and --k");
        }
        const Partition mu = parse_partition(verify_mu);
        report = verify_theorem == 1 ? verify_theorem1(verify_n, verify_k, mu)
                                     : verify_theorem2(verify_n, verify_k, mu);
        document = report_document_box(verify_theorem, verify_n, verify_k, mu,
                                       report);
      }
      const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start);
      std::cout << document << "\n";
      std::cerr << "elapsed_ms=" << elapsed.count() << "\n";
      return report.pass ? kExitPass : kExitViolated;
    }

    if (sweep->parsed()) {
      if (sweep_jobs < 1) throw std::invalid_argument("sweep: --jobs must be >= 1");
      SweepSummary summary;
      if (sweep_theorem_id == 3) {
        if (!sweep_l_opt->count() || !sweep_s_opt->count()) {
          throw std::invalid_argument(
              "sweep --theorem 3 needs --max-lambda and --a-span");
        }
        summary = sweep_theorem3(sweep_max_lambda, sweep_a_span, sweep_jobs);
      } else {
        if (!sweep_n_opt->count() || !sweep_k_opt->count()) {
          throw std::invalid_argument("sweep --theorem 1|2 needs --max-n and --max-k");
        }
        summary = sweep_box_theorem(sweep_theorem_id, sweep_max_n, sweep_max_k,
                                    sweep_jobs);
      }
      std::cout << sweep_document(summary) << "\n";
      std::cerr << "elapsed_ms=" << summary.elapsed_ms << "\n";
      return summary.failed_instances == 0 ? kExitPass : kExitViolated;
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
