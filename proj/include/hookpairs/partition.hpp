#pragma once

#include <compare>
#include <functional>
#include <vector>

namespace hookpairs {

/// Integer partition: weakly decreasing positive parts. The default
/// value is the empty partition. Parts are read 1-indexed with
/// part(i) == 0 for i > length(); the index formulas of the identity
/// checks rely on that convention to stay total.
class Partition {
 public:
  Partition() = default;

  /// Validates the parts; throws std::invalid_argument on a
  /// nonpositive part or an increasing adjacent pair.
  explicit Partition(std::vector<int> parts);

  int length() const { return static_cast<int>(parts_.size()); }
  int sum() const;
  int part(int i) const;                  // 1-indexed, 0 beyond length()
  int first() const { return part(1); }   // largest part, 0 when empty
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  bool is_strict() const;                 // strictly decreasing parts
  Partition conjugate() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Frobenius coordinates of a partition: arm and leg lengths of its
/// diagonal cells. Both sequences are strictly decreasing, nonnegative
/// and of equal length.
struct FrobeniusForm {
  std::vector<int> arms;
  std::vector<int> legs;

  friend bool operator==(const FrobeniusForm&, const FrobeniusForm&) = default;
};

/// Checks the FrobeniusForm invariants; throws std::invalid_argument.
void validate(const FrobeniusForm& f);

FrobeniusForm to_frobenius(const Partition& mu);
Partition from_frobenius(const FrobeniusForm& f);

/// The partition with Frobenius form (lambda | lambda - 1) for a
/// strict partition lambda. Throws if lambda is not strict.
Partition doubled_shifted(const Partition& lambda);
bool is_doubled_shifted(const Partition& mu);

/// Enumerates every partition with at most n rows and largest part at
/// most k, exactly once, in graded lexicographic order: ascending by
/// |mu|, and within a grade with larger first part first. The order is
/// part of the sweep output contract.
void for_each_partition_in_box(int n, int k,
                               const std::function<void(const Partition&)>& fn);
std::vector<Partition> partitions_in_box(int n, int k);

/// Strictly decreasing positive partitions with largest part at most
/// m, in the same graded order. There are exactly 2^m of them.
void for_each_strict_partition_max(int m,
                                   const std::function<void(const Partition&)>& fn);
std::vector<Partition> strict_partitions_max(int m);

}  // namespace hookpairs
