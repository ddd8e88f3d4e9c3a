#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "hookpairs/partition.hpp"

namespace hookpairs {

/// Monotone boundary path of alternating vertical pieces v1..vp
/// (bottom to top) and horizontal pieces h1..h(p-1). Zero-length input
/// pieces are merged away at construction; the height-zero staircase
/// is kept as the single piece v = (0).
///
/// The derived row profile X_r (r = 0..n-1, bottom to top) is the
/// horizontal offset of row r, with X_0 = 0. Leg sequences depend only
/// on profile differences, so the absolute offset carries no
/// information and is normalized away.
class Staircase {
 public:
  /// Throws std::invalid_argument on negative pieces or a length
  /// mismatch (h must have one entry less than v).
  Staircase(std::vector<int> v, std::vector<int> h);

  int piece_count() const { return static_cast<int>(v_.size()); }
  int total_height() const;
  const std::vector<int>& v() const { return v_; }
  const std::vector<int>& h() const { return h_; }
  std::vector<int> profile() const;  // X_0..X_{n-1}

  friend bool operator==(const Staircase&, const Staircase&) = default;

 private:
  std::vector<int> v_;
  std::vector<int> h_;
};

/// The staircase separating sr(n, k, mu) from the rotated
/// sr_tilde(n, k, mu): profile X_r = mu_{n-r}, translated to X_0 = 0.
/// Requires len(mu) <= n.
Staircase staircase_of(const Partition& mu, int n);

/// Legs of the broken column in distance d left of the staircase,
/// bottom row first: entry r counts the rows r' < r with
/// X_{r'} >= X_r - d. The left region is taken wide enough for the
/// column to be complete, which every diagram application satisfies.
std::vector<int> left_legs(const Staircase& s, int d);

/// Legs of the broken column in distance d right of the staircase,
/// top row first: for r from n-1 down, the count of rows r' > r with
/// X_{r'} <= X_r + d.
std::vector<int> right_legs(const Staircase& s, int d);

/// A stack of consecutive integers lo..hi.
struct Run {
  int lo = 0;
  int hi = 0;

  friend auto operator<=>(const Run&, const Run&) = default;
};

/// Vertical-piece index bounds attached to a run by the run-bound
/// formulas; j <= i on the left side, j >= i on the right side.
struct RunIndices {
  int j = 0;
  int i = 0;

  friend auto operator<=>(const RunIndices&, const RunIndices&) = default;
};

/// Stacks in reading order. The first run starts at 0; concatenating
/// the runs reproduces the source sequence. indices is either empty or
/// parallel to runs.
struct RunDecomposition {
  std::vector<Run> runs;
  std::vector<RunIndices> indices;

  friend bool operator==(const RunDecomposition& a, const RunDecomposition& b) {
    return a.runs == b.runs;  // indices are derived metadata
  }
};

/// Splits a sequence into its maximal increasing stacks. The domain is
/// exactly the concatenations of consecutive-increasing runs whose
/// first entry is 0; anything else throws std::invalid_argument.
RunDecomposition mb_split(std::span<const int> seq);

/// Cascade step: for t = 1..q-1 in order, the entries of stack t below
/// the minimum of stack t+1 move to stack t+1. On stacks
/// (m1, M1)..(mq, Mq) from mb_split the result is
/// (m2, M1), (m3, M2), ..., (mq, M(q-1)), (m1, Mq). A cascade that
/// would split a stack non-contiguously cannot occur for such inputs
/// and throws std::logic_error.
RunDecomposition mb_cascade(const RunDecomposition& rd);

/// Readout: stacks from last to first, each bottom to top.
std::vector<int> mb_read(const RunDecomposition& rd);

/// mb_read(mb_cascade(mb_split(seq))). Maps the left broken-column
/// legs read bottom to top onto the right broken-column legs read top
/// to bottom, preserving the entry multiset.
std::vector<int> master_bijection(std::span<const int> seq);

/// Exact inverse of master_bijection on its image; throws
/// std::invalid_argument when seq is not a valid readout.
std::vector<int> inverse_master_bijection(std::span<const int> seq);

/// Run bounds of left_legs(s, d) computed from the pieces alone:
/// stack t covers vertical pieces j_t..i_t, with
/// M_t = v(j_t) + .. + v(i_t) - 1 and m_t = v(j_t) + .. + v(i_{t-1}).
/// Equals mb_split(left_legs(s, d)), with indices attached.
RunDecomposition run_bounds_left(const Staircase& s, int d);

/// Same for right_legs(s, d), in reading order. The attached indices
/// follow the tilde labelling, which counts stacks from the other end:
/// reading position s holds the pair (j~_t, i~_t) for t = q + 1 - s.
RunDecomposition run_bounds_right(const Staircase& s, int d);

struct LemmaReport {
  bool pass = true;
  std::string detail;  // first failed check, empty on pass
};

/// Checks, for one staircase and distance: left/right leg multiset
/// equality, the sequence-level bijection claim, round-trip inversion,
/// formula-versus-geometry run bounds, and the run-bound dualities
/// M~_t = M_t, m~_t = m_{t+1}, j~_t = i_t, i~_t = j_t.
LemmaReport verify_lemma(const Staircase& s, int d);

}  // namespace hookpairs
