#pragma once

#include <span>
#include <string>
#include <vector>

#include "hookpairs/identities.hpp"
#include "hookpairs/region.hpp"
#include "hookpairs/staircase.hpp"
#include "hookpairs/sweep.hpp"

namespace hookpairs {

/// Partition literal "5,2,1"; the empty string is the empty partition.
Partition parse_partition(const std::string& text);

/// Staircase literal "v:2,1,2,2,1,2;h:1,2,1,1,2".
Staircase parse_staircase(const std::string& text);

/// Leg-sequence literal "0,1,2,1,2"; empty string is the empty sequence.
std::vector<int> parse_leg_sequence(const std::string& text);
std::string format_leg_sequence(std::span<const int> seq);

// JSON documents with sorted keys and sorted multiset entries, stable
// byte for byte across runs.
std::string region_document(const Region& g);                         // [[row,col],...]
std::string leg_multiset_document(const LegMultiset& m);               // [[value,count],...]
std::string hook_pair_multiset_document(const HookPairMultiset& m);    // [[arm,leg,count],...]
std::string report_document_box(int theorem, int n, int k, const Partition& mu,
                                const Report& report);
std::string report_document_shifted(int a, const Partition& lambda,
                                    const Report& report);
std::string sweep_document(const SweepSummary& summary);

}  // namespace hookpairs
