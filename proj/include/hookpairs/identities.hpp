#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hookpairs/multiset.hpp"
#include "hookpairs/partition.hpp"
#include "hookpairs/region.hpp"

namespace hookpairs {

/// Multiset of leg lengths; [[N]] and the L(..; d) values live here.
using LegMultiset = Multiset<int>;

/// [[N]] = {0, 1, ..., N-1}; [[0]] is empty.
LegMultiset interval_multiset(int n);

/// L(H inside G; d): legs of the broken column of h in distance d,
/// measured inside g.
LegMultiset broken_column_legs(const Region& g, const Region& h, int d);

/// Fake-extended broken-column legs of mu in distance d, as the
/// unified row formula #{i' > i : mu_{i'} >= mu_i - d} over i = 1..l.
/// Equals broken_column_legs(mu, mu, d) plus [[l + 1 - min{k : mu_k <= d}]].
LegMultiset fake_extended_legs(const Partition& mu, int d);

/// min{k >= 1 : mu_k <= d}, at most l + 1 by the mu_{l+1} = 0 convention.
int min_part_index_le(const Partition& mu, int d);

/// max{k >= 1 : mu_k >= bound}, or 0 when no part reaches the bound.
int max_part_index_ge(const Partition& mu, int bound);

struct IdentityFailure {
  std::string instance;   // parameters plus the equation that failed
  std::optional<int> d;   // distance, when the check is per-distance
  std::string lhs, rhs;   // serialized multisets or sequences
};

struct Report {
  bool pass = true;
  std::vector<IdentityFailure> failures;
};

/// The first leg-multiset decomposition of the rectangle identity:
/// L(mu;d) u L(T1;d) written through the fake-extended column, plus
/// the closed form L(T1;d) = [[n]] \ [[max{k : mu_k >= mu_1 - d}]].
/// Requires a nonempty mu fitting the box and 0 <= d <= mu_1 - 1.
Report eq7_check(int n, int k, const Partition& mu, int d);

/// The matching decomposition of L(T2;d), with the fake-extended
/// column of T2 taken over the bottom l(mu) rectangle rows and checked
/// against both its closed form and the bijection image of the
/// fake-extended column of mu.
Report eq8_check(int n, int k, const Partition& mu, int d);

/// Hook pairs of sr(n,k,mu) equal those of sr_tilde(n,k,mu): the full
/// multisets, and per distance d the master bijection mapping the left
/// broken-column legs onto the right ones.
Report verify_theorem1(int n, int k, const Partition& mu);

/// Hook pairs of sq(n,k,mu) equal those of rectangle(n,k) plus those
/// of mu: the full multisets, the row-wise S1/S2 hook-pair match, and
/// eq7/eq8 with the per-distance conclusion L(mu;d) u L(T1;d) = L(T2;d).
Report verify_theorem2(int n, int k, const Partition& mu);

/// Diagonal-split identity for mu = doubled_shifted(lambda) and
/// a >= lambda_1: hook pairs of p(mu) in mu plus q(R(a)) in R(a) equal
/// those of q(A) plus A2 in sq(a, a+1, mu), with the per-distance
/// fake-column equality and closed forms.
Report verify_theorem3(int a, const Partition& lambda);

}  // namespace hookpairs
