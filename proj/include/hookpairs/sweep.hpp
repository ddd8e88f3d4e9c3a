#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hookpairs/identities.hpp"

namespace hookpairs {

/// Deterministic summary of an exhaustive verification sweep. The
/// content is independent of the worker count: instances are indexed
/// by enumeration order and failures are reported for the smallest
/// failing index. elapsed_ms is diagnostic only and never part of the
/// serialized document.
struct SweepSummary {
  int theorem = 1;
  std::vector<std::pair<std::string, int>> params;  // named bounds
  long long instances_checked = 0;
  long long failed_instances = 0;
  std::vector<IdentityFailure> failures;  // of the minimal counterexample
  long long elapsed_ms = 0;
};

/// Theorem 1 or 2 over every mu in the max_n x max_k box, every
/// n in [len(mu), max_n] and k in [mu_1, max_k].
SweepSummary sweep_box_theorem(int theorem, int max_n, int max_k, int jobs);

/// Theorem 3 over every strict lambda with lambda_1 <= max_lambda and
/// every a in [lambda_1, lambda_1 + a_span].
SweepSummary sweep_theorem3(int max_lambda, int a_span, int jobs);

}  // namespace hookpairs
