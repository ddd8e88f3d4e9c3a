#include "hookpairs/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace hookpairs {

namespace {

struct Instance {
  Partition partition;  // mu for theorems 1-2, lambda for theorem 3
  int n = 0;            // a for theorem 3
  int k = 0;
};

SweepSummary run_sweep(int theorem, std::vector<Instance> instances, int jobs,
                       const std::function<Report(const Instance&)>& verify) {
  if (jobs < 1) throw std::invalid_argument("sweep: jobs must be positive");
  const auto start = std::chrono::steady_clock::now();

  struct IndexedFailure {
    std::size_t index;
    std::vector<IdentityFailure> failures;
  };
  std::vector<IndexedFailure> failed;
  std::mutex failed_mutex;

  const int workers =
      std::min<std::size_t>(jobs, std::max<std::size_t>(instances.size(), 1));
  auto work = [&](int worker) {
    std::vector<IndexedFailure> local;
    for (std::size_t i = worker; i < instances.size();
         i += static_cast<std::size_t>(workers)) {
      Report report = verify(instances[i]);
      if (!report.pass) local.push_back({i, std::move(report.failures)});
    }
    if (!local.empty()) {
      std::lock_guard<std::mutex> lock(failed_mutex);
      for (auto& f : local) failed.push_back(std::move(f));
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  std::sort(failed.begin(), failed.end(),
            [](const IndexedFailure& a, const IndexedFailure& b) {
              return a.index < b.index;
            });

  SweepSummary summary;
  summary.theorem = theorem;
  summary.instances_checked = static_cast<long long>(instances.size());
  summary.failed_instances = static_cast<long long>(failed.size());
  if (!failed.empty()) summary.failures = failed.front().failures;
  summary.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return summary;
}

}  // namespace

SweepSummary sweep_box_theorem(int theorem, int max_n, int max_k, int jobs) {
  if (theorem != 1 && theorem != 2) {
    throw std::invalid_argument("sweep_box_theorem: theorem must be 1 or 2");
  }
  if (max_n < 0 || max_k < 0) {
    throw std::invalid_argument("sweep_box_theorem: negative bounds");
  }
  std::vector<Instance> instances;
  for_each_partition_in_box(max_n, max_k, [&](const Partition& mu) {
    for (int n = mu.length(); n <= max_n; ++n) {
      for (int k = mu.first(); k <= max_k; ++k) {
        instances.push_back({mu, n, k});
      }
    }
  });
  SweepSummary summary = run_sweep(
      theorem, std::move(instances), jobs, [theorem](const Instance& inst) {
        return theorem == 1 ? verify_theorem1(inst.n, inst.k, inst.partition)
                            : verify_theorem2(inst.n, inst.k, inst.partition);
      });
  summary.params = {{"max_k", max_k}, {"max_n", max_n}};
  return summary;
}

SweepSummary sweep_theorem3(int max_lambda, int a_span, int jobs) {
  if (max_lambda < 0 || a_span < 0) {
    throw std::invalid_argument("sweep_theorem3: negative bounds");
  }
  std::vector<Instance> instances;
  for_each_strict_partition_max(max_lambda, [&](const Partition& lambda) {
    for (int a = lambda.first(); a <= lambda.first() + a_span; ++a) {
      instances.push_back({lambda, a, 0});
    }
  });
  SweepSummary summary =
      run_sweep(3, std::move(instances), jobs, [](const Instance& inst) {
        return verify_theorem3(inst.n, inst.partition);
      });
  summary.params = {{"a_span", a_span}, {"max_lambda", max_lambda}};
  return summary;
}

}  // namespace hookpairs
