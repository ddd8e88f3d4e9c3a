#pragma once

#include <map>
#include <stdexcept>

namespace hookpairs {

/// Thrown when a multiset difference would drop a count below zero.
/// Differences in the identity checks are only defined under
/// containment; going negative is reported, never truncated.
class MultisetDifferenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Multiset over an ordered key type. Counts are always positive;
/// entries at count zero are erased.
template <class Key>
class Multiset {
 public:
  Multiset() = default;

  void add(const Key& key, long long count = 1) {
    if (count == 0) return;
    if (count < 0) throw std::invalid_argument("Multiset::add: negative count");
    counts_[key] += count;
    total_ += count;
  }

  long long count(const Key& key) const {
    auto it = counts_.find(key);
    return it == counts_.end() ? 0 : it->second;
  }

  long long total() const { return total_; }
  bool empty() const { return counts_.empty(); }

  bool contains(const Multiset& other) const {
    for (const auto& [key, c] : other.counts_) {
      if (count(key) < c) return false;
    }
    return true;
  }

  Multiset& operator+=(const Multiset& other) {
    for (const auto& [key, c] : other.counts_) add(key, c);
    return *this;
  }

  friend Multiset operator+(Multiset a, const Multiset& b) {
    a += b;
    return a;
  }

  /// Difference, defined only when other is contained in *this.
  Multiset minus(const Multiset& other) const {
    Multiset out = *this;
    for (const auto& [key, c] : other.counts_) {
      auto it = out.counts_.find(key);
      if (it == out.counts_.end() || it->second < c) {
        throw MultisetDifferenceError("multiset difference without containment");
      }
      it->second -= c;
      out.total_ -= c;
      if (it->second == 0) out.counts_.erase(it);
    }
    return out;
  }

  const std::map<Key, long long>& entries() const { return counts_; }

  friend bool operator==(const Multiset&, const Multiset&) = default;

 private:
  std::map<Key, long long> counts_;
  long long total_ = 0;
};

}  // namespace hookpairs
