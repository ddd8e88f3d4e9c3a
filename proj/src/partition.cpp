#include "hookpairs/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hookpairs {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw std::invalid_argument("Partition: parts must be positive");
    }
    if (i > 0 && parts_[i - 1] < parts_[i]) {
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }
}

int Partition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("Partition::part: index is 1-based");
  return i <= length() ? parts_[i - 1] : 0;
}

bool Partition::is_strict() const {
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i - 1] <= parts_[i]) return false;
  }
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  out.reserve(first());
  for (int j = 1; j <= first(); ++j) {
    int count = 0;
    for (int p : parts_) {
      if (p >= j) ++count;
    }
    out.push_back(count);
  }
  return Partition(std::move(out));
}

void validate(const FrobeniusForm& f) {
  if (f.arms.size() != f.legs.size()) {
    throw std::invalid_argument("FrobeniusForm: arm/leg length mismatch");
  }
  auto strictly_decreasing = [](const std::vector<int>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (xs[i] < 0) return false;
      if (i > 0 && xs[i - 1] <= xs[i]) return false;
    }
    return true;
  };
  if (!strictly_decreasing(f.arms) || !strictly_decreasing(f.legs)) {
    throw std::invalid_argument(
        "FrobeniusForm: sequences must be strictly decreasing and nonnegative");
  }
}

FrobeniusForm to_frobenius(const Partition& mu) {
  const Partition conj = mu.conjugate();
  FrobeniusForm f;
  for (int i = 1; mu.part(i) >= i; ++i) {
    f.arms.push_back(mu.part(i) - i);
    f.legs.push_back(conj.part(i) - i);
  }
  return f;
}

Partition from_frobenius(const FrobeniusForm& f) {
  validate(f);
  const int s = static_cast<int>(f.arms.size());
  std::vector<int> parts;
  for (int i = 1; i <= s; ++i) parts.push_back(f.arms[i - 1] + i);
  // Rows below the diagonal block are recovered from the conjugate:
  // column j has legs[j-1] + j cells for j = 1..s.
  const int depth = s == 0 ? 0 : f.legs[0] + 1;
  for (int i = s + 1; i <= depth; ++i) {
    int row = 0;
    for (int j = 1; j <= s; ++j) {
      if (f.legs[j - 1] + j >= i) ++row;
    }
    parts.push_back(row);
  }
  return Partition(std::move(parts));
}

Partition doubled_shifted(const Partition& lambda) {
  if (!lambda.is_strict()) {
    throw std::invalid_argument("doubled_shifted: lambda must be strict");
  }
  FrobeniusForm f;
  f.arms = lambda.parts();
  for (int a : lambda.parts()) f.legs.push_back(a - 1);
  return from_frobenius(f);
}

bool is_doubled_shifted(const Partition& mu) {
  const FrobeniusForm f = to_frobenius(mu);
  for (std::size_t i = 0; i < f.arms.size(); ++i) {
    if (f.legs[i] != f.arms[i] - 1) return false;
  }
  return true;
}

namespace {

// Partitions of total with at most rows parts, each <= max_part,
// larger first part first (descending lexicographic within the grade).
void emit_partitions_of(int total, int rows, int max_part, std::vector<int>& prefix,
                        const std::function<void(const Partition&)>& fn) {
  if (total == 0) {
    fn(Partition(prefix));
    return;
  }
  if (rows == 0) return;
  for (int p = std::min(total, max_part); p >= 1; --p) {
    prefix.push_back(p);
    emit_partitions_of(total - p, rows - 1, p, prefix, fn);
    prefix.pop_back();
  }
}

void emit_strict_partitions_of(int total, int max_part, std::vector<int>& prefix,
                               const std::function<void(const Partition&)>& fn) {
  if (total == 0) {
    fn(Partition(prefix));
    return;
  }
  for (int p = std::min(total, max_part); p >= 1; --p) {
    // The remaining total must fit under parts strictly below p.
    if (static_cast<long long>(p - 1) * p / 2 < total - p) continue;
    prefix.push_back(p);
    emit_strict_partitions_of(total - p, p - 1, prefix, fn);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_partition_in_box(int n, int k,
                               const std::function<void(const Partition&)>& fn) {
  if (n < 0 || k < 0) throw std::invalid_argument("partitions_in_box: negative bound");
  std::vector<int> prefix;
  for (int total = 0; total <= n * k; ++total) {
    emit_partitions_of(total, n, k, prefix, fn);
  }
}

std::vector<Partition> partitions_in_box(int n, int k) {
  std::vector<Partition> out;
  for_each_partition_in_box(n, k, [&](const Partition& mu) { out.push_back(mu); });
  return out;
}

void for_each_strict_partition_max(int m,
                                   const std::function<void(const Partition&)>& fn) {
  if (m < 0) throw std::invalid_argument("strict_partitions_max: negative bound");
  std::vector<int> prefix;
  const int top = m * (m + 1) / 2;
  for (int total = 0; total <= top; ++total) {
    emit_strict_partitions_of(total, m, prefix, fn);
  }
}

std::vector<Partition> strict_partitions_max(int m) {
  std::vector<Partition> out;
  for_each_strict_partition_max(m, [&](const Partition& mu) { out.push_back(mu); });
  return out;
}

}  // namespace hookpairs
