#include "hookpairs/identities.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hookpairs/staircase.hpp"

namespace hookpairs {

LegMultiset interval_multiset(int n) {
  if (n < 0) throw std::invalid_argument("interval_multiset: negative size");
  LegMultiset out;
  for (int x = 0; x < n; ++x) out.add(x);
  return out;
}

LegMultiset broken_column_legs(const Region& g, const Region& h, int d) {
  LegMultiset out;
  for (const auto& [cell, leg] : broken_column(g, h, d)) out.add(leg);
  return out;
}

LegMultiset fake_extended_legs(const Partition& mu, int d) {
  if (d < 0) throw std::invalid_argument("fake_extended_legs: negative distance");
  LegMultiset out;
  const int l = mu.length();
  for (int i = 1; i <= l; ++i) {
    int count = 0;
    for (int ip = i + 1; ip <= l; ++ip) {
      if (mu.part(ip) >= mu.part(i) - d) ++count;
    }
    out.add(count);
  }
  return out;
}

int min_part_index_le(const Partition& mu, int d) {
  for (int k = 1; k <= mu.length(); ++k) {
    if (mu.part(k) <= d) return k;
  }
  return mu.length() + 1;
}

int max_part_index_ge(const Partition& mu, int bound) {
  for (int k = mu.length(); k >= 1; --k) {
    if (mu.part(k) >= bound) return k;
  }
  return 0;
}

namespace {

std::string format_legs(const LegMultiset& m) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& [value, count] : m.entries()) {
    if (!first) os << ',';
    first = false;
    os << '[' << value << ',' << count << ']';
  }
  os << ']';
  return os.str();
}

std::string format_hook_pairs(const HookPairMultiset& m) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& [hp, count] : m.entries()) {
    if (!first) os << ',';
    first = false;
    os << '[' << hp.arm << ',' << hp.leg << ',' << count << ']';
  }
  os << ']';
  return os.str();
}

std::string format_sequence(const std::vector<int>& xs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  os << ']';
  return os.str();
}

std::string format_parts(const Partition& mu) {
  std::ostringstream os;
  for (int i = 1; i <= mu.length(); ++i) {
    if (i > 1) os << ',';
    os << mu.part(i);
  }
  return os.str();
}

// Accumulates per-check failures into a report.
class Checker {
 public:
  Checker(Report& report, std::string instance)
      : report_(report), instance_(std::move(instance)) {}

  void legs_equal(const std::string& what, std::optional<int> d,
                  const LegMultiset& lhs, const LegMultiset& rhs) {
    if (lhs != rhs) add(what, d, format_legs(lhs), format_legs(rhs));
  }

  void hook_pairs_equal(const std::string& what, const HookPairMultiset& lhs,
                        const HookPairMultiset& rhs) {
    if (lhs != rhs) add(what, std::nullopt, format_hook_pairs(lhs),
                        format_hook_pairs(rhs));
  }

  void totals_equal(const std::string& what, long long lhs, long long rhs) {
    if (lhs != rhs) {
      add(what, std::nullopt, std::to_string(lhs), std::to_string(rhs));
    }
  }

  void sequences_equal(const std::string& what, std::optional<int> d,
                       const std::vector<int>& lhs, const std::vector<int>& rhs) {
    if (lhs != rhs) add(what, d, format_sequence(lhs), format_sequence(rhs));
  }

  void add(const std::string& what, std::optional<int> d, std::string lhs,
           std::string rhs) {
    report_.pass = false;
    report_.failures.push_back(
        {instance_ + " " + what, d, std::move(lhs), std::move(rhs)});
  }

  // Runs fn, converting a failed difference containment into a failure.
  template <class Fn>
  void guarded(const std::string& what, std::optional<int> d, Fn&& fn) {
    try {
      fn();
    } catch (const MultisetDifferenceError& e) {
      add(what, d, e.what(), "");
    }
  }

 private:
  Report& report_;
  std::string instance_;
};

void require_eq_preconditions(int n, int k, const Partition& mu, int d,
                              const char* what) {
  if (mu.first() > k || mu.length() > n) {
    throw std::invalid_argument(std::string(what) + ": mu does not fit the box");
  }
  if (mu.empty() || d < 0 || d > mu.first() - 1) {
    throw std::invalid_argument(std::string(what) + ": d outside [0, mu_1 - 1]");
  }
}

void run_eq7(Checker& check, int n, int k, const Partition& mu, int d) {
  const Region mu_region = ferrers(mu);
  const Region rect = rectangle(n, k);
  const STDecomposition st = s_t_decomposition(n, k, mu);
  const int l = mu.length();
  const int k_min = min_part_index_le(mu, d);
  const int b = max_part_index_ge(mu, mu.first() - d);
  const LegMultiset fake = interval_multiset(l + 1 - k_min);
  const LegMultiset l_mu = broken_column_legs(mu_region, mu_region, d);
  const LegMultiset l_t1 = broken_column_legs(rect, st.t1, d);
  const LegMultiset lf_mu = fake_extended_legs(mu, d);

  check.legs_equal("eq7: fake-extended column union form", d, lf_mu, l_mu + fake);
  check.guarded("eq7: T1 closed form containment", d, [&] {
    check.legs_equal("eq7: T1 closed form", d, l_t1,
                     interval_multiset(n).minus(interval_multiset(b)));
  });
  check.guarded("eq7: first display containment", d, [&] {
    check.legs_equal("eq7: first display", d, l_mu + l_t1,
                     lf_mu.minus(fake) +
                         interval_multiset(n).minus(interval_multiset(b)));
  });
  check.guarded("eq7: second display containment", d, [&] {
    check.legs_equal("eq7: second display", d, l_mu + l_t1,
                     (lf_mu + interval_multiset(n))
                         .minus(fake + interval_multiset(b)));
  });
}

void run_eq8(Checker& check, int n, int k, const Partition& mu, int d) {
  const Region whole = sq(n, k, mu);
  const STDecomposition st = s_t_decomposition(n, k, mu);
  const int l = mu.length();
  const int k_min = min_part_index_le(mu, d);
  const int b = max_part_index_ge(mu, mu.first() - d);  // == max{k : mu_k + d >= mu_1}
  const LegMultiset fake_mu = interval_multiset(l + 1 - k_min);
  const LegMultiset fake_t2 = interval_multiset(b);
  const LegMultiset l_t2 = broken_column_legs(whole, st.t2, d);

  // Fake-extended column of T2: the broken-column cells in the bottom
  // l rectangle rows (alongside the removed rotated copy), fake part
  // added below them.
  LegMultiset lower;
  for (const auto& [cell, leg] : broken_column(whole, st.t2, d)) {
    if (cell.row >= n - l) lower.add(leg);
  }
  const LegMultiset lf_t2 = lower + fake_t2;

  LegMultiset lf_t2_closed;
  for (int t = 1; t <= l; ++t) {
    int count = 0;
    for (int tp = 1; tp < t; ++tp) {
      if (mu.part(tp) <= mu.part(t) + d) ++count;
    }
    lf_t2_closed.add(count);
  }

  check.legs_equal("eq8: fake-extended T2 column closed form", d, lf_t2,
                   lf_t2_closed);
  check.legs_equal("eq8: bijection between fake-extended columns", d,
                   fake_extended_legs(mu, d), lf_t2);
  check.guarded("eq8: first display containment", d, [&] {
    check.legs_equal("eq8: first display", d, l_t2,
                     lf_t2.minus(fake_t2) +
                         interval_multiset(n).minus(fake_mu));
  });
  check.guarded("eq8: second display containment", d, [&] {
    check.legs_equal("eq8: second display", d, l_t2,
                     (lf_t2 + interval_multiset(n)).minus(fake_t2 + fake_mu));
  });
}

}  // namespace

Report eq7_check(int n, int k, const Partition& mu, int d) {
  require_eq_preconditions(n, k, mu, d, "eq7_check");
  Report report;
  Checker check(report, "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                            " mu=" + format_parts(mu));
  run_eq7(check, n, k, mu, d);
  return report;
}

Report eq8_check(int n, int k, const Partition& mu, int d) {
  require_eq_preconditions(n, k, mu, d, "eq8_check");
  Report report;
  Checker check(report, "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                            " mu=" + format_parts(mu));
  run_eq8(check, n, k, mu, d);
  return report;
}

Report verify_theorem1(int n, int k, const Partition& mu) {
  Report report;
  Checker check(report, "theorem1 n=" + std::to_string(n) +
                            " k=" + std::to_string(k) + " mu=" + format_parts(mu));
  const Region left = sr(n, k, mu);
  const Region right = sr_tilde(n, k, mu);
  const HookPairMultiset lhs = hook_pairs(left, left);
  const HookPairMultiset rhs = hook_pairs(right, right);

  check.totals_equal("cardinality", lhs.total(),
                     static_cast<long long>(n) * k);
  check.totals_equal("cardinality", rhs.total(),
                     static_cast<long long>(n) * k);
  check.hook_pairs_equal("direct multiset route", lhs, rhs);

  const Staircase stairs = staircase_of(mu, n);
  for (int d = 0; d < k; ++d) {
    const std::vector<int> mapped = master_bijection(left_legs(stairs, d));
    std::vector<int> right_geo;
    for (const auto& [cell, leg] : broken_column(right, right, d)) {
      right_geo.push_back(leg);
    }
    check.sequences_equal("bijective route", d, mapped, right_geo);
  }
  return report;
}

Report verify_theorem2(int n, int k, const Partition& mu) {
  Report report;
  Checker check(report, "theorem2 n=" + std::to_string(n) +
                            " k=" + std::to_string(k) + " mu=" + format_parts(mu));
  const Region whole = sq(n, k, mu);
  const Region rect = rectangle(n, k);
  const Region mu_region = ferrers(mu);
  const HookPairMultiset lhs = hook_pairs(whole, whole);
  const HookPairMultiset rhs = hook_pairs(rect, rect) + hook_pairs(mu_region, mu_region);

  check.totals_equal("cardinality", lhs.total(),
                     static_cast<long long>(n) * k + mu.sum());
  check.totals_equal("cardinality", rhs.total(),
                     static_cast<long long>(n) * k + mu.sum());
  check.hook_pairs_equal("direct multiset route", lhs, rhs);

  const STDecomposition st = s_t_decomposition(n, k, mu);
  for (int r = 0; r < n; ++r) {
    std::vector<int> row_lhs, row_rhs;
    if (auto it = st.s1.rows().find(r); it != st.s1.rows().end()) {
      for (int c = it->second.lo; c <= it->second.hi; ++c) {
        const HookPair hp = hook_pair(rect, {r, c});
        row_lhs.push_back(hp.arm);
        row_lhs.push_back(hp.leg);
      }
    }
    if (auto it = st.s2.rows().find(r); it != st.s2.rows().end()) {
      for (int c = it->second.lo; c <= it->second.hi; ++c) {
        const HookPair hp = hook_pair(whole, {r, c});
        row_rhs.push_back(hp.arm);
        row_rhs.push_back(hp.leg);
      }
    }
    check.sequences_equal("row-wise S1/S2 match, row " + std::to_string(r),
                          std::nullopt, row_lhs, row_rhs);
  }

  for (int d = 0; d < mu.first(); ++d) {
    run_eq7(check, n, k, mu, d);
    run_eq8(check, n, k, mu, d);
    const LegMultiset l_mu = broken_column_legs(mu_region, mu_region, d);
    const LegMultiset l_t1 = broken_column_legs(rect, st.t1, d);
    const LegMultiset l_t2 = broken_column_legs(whole, st.t2, d);
    check.legs_equal("per-distance conclusion", d, l_mu + l_t1, l_t2);
  }
  return report;
}

Report verify_theorem3(int a, const Partition& lambda) {
  if (!lambda.is_strict()) {
    throw std::invalid_argument("verify_theorem3: lambda must be strict");
  }
  if (a < lambda.first()) {
    throw std::invalid_argument("verify_theorem3: requires a >= lambda_1");
  }
  Report report;
  Checker check(report, "theorem3 a=" + std::to_string(a) +
                            " lambda=" + format_parts(lambda));
  const Partition mu = doubled_shifted(lambda);
  const SqSplit split = split_sq(a, mu);
  const Region mu_region = ferrers(mu);
  const Region rect = rectangle(a, a + 1);
  const Region p_mu = split_p(mu);
  const Region q_rect = split_q_rect(a);

  const HookPairMultiset lhs =
      hook_pairs(mu_region, p_mu) + hook_pairs(rect, q_rect);
  const HookPairMultiset rhs =
      hook_pairs(split.whole, split.q_a) + hook_pairs(split.whole, split.a2);
  const long long expected =
      lambda.sum() + static_cast<long long>(a) * (a + 1) / 2;
  check.totals_equal("cardinality", lhs.total(), expected);
  check.totals_equal("cardinality", rhs.total(), expected);
  check.hook_pairs_equal("direct multiset route", lhs, rhs);

  const int l = mu.length();
  for (int d = 0; d < mu.first(); ++d) {
    const LegMultiset fake = interval_multiset(l + 1 - min_part_index_le(mu, d));
    const LegMultiset l_p = broken_column_legs(mu_region, p_mu, d);
    const LegMultiset l_qr = broken_column_legs(rect, q_rect, d);
    const LegMultiset l_qa = broken_column_legs(split.whole, split.q_a, d);
    const LegMultiset l_a2 = broken_column_legs(split.whole, split.a2, d);

    check.legs_equal("fake-extended column equality", d, l_p + fake,
                     l_qa + interval_multiset(d));
    check.guarded("q(R(a)) closed form containment", d, [&] {
      check.legs_equal("q(R(a)) closed form", d, l_qr,
                       interval_multiset(a).minus(interval_multiset(d)));
    });
    check.guarded("A2 closed form containment", d, [&] {
      check.legs_equal("A2 closed form", d, l_a2,
                       interval_multiset(a).minus(fake));
    });
    check.legs_equal("per-distance recombination", d, l_p + l_qr, l_qa + l_a2);
    check.guarded("final display containment", d, [&] {
      const LegMultiset both = fake + interval_multiset(d);
      check.legs_equal("final display, left side", d, l_p + l_qr,
                       (l_p + fake + interval_multiset(a)).minus(both));
      check.legs_equal("final display, right side", d, l_qa + l_a2,
                       (l_qa + interval_multiset(d) + interval_multiset(a))
                           .minus(both));
    });
  }
  return report;
}

}  // namespace hookpairs
