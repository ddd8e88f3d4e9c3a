#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hookpairs/multiset.hpp"
#include "hookpairs/partition.hpp"

namespace hookpairs {

/// Grid cell. Row 0 is the top row of the base rectangle and rows grow
/// downward; column 0 is the leftmost rectangle column. Glued copies
/// extend into negative coordinates.
struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Arm-leg pair of a cell, measured inside an enclosing region.
struct HookPair {
  int arm = 0;
  int leg = 0;

  friend auto operator<=>(const HookPair&, const HookPair&) = default;
};

using HookPairMultiset = Multiset<HookPair>;

/// Closed integer interval.
struct Span {
  int lo = 0;
  int hi = 0;

  friend auto operator<=>(const Span&, const Span&) = default;
};

/// Finite set of cells, row-convex and column-convex. Every diagram in
/// this project satisfies both, so rows and columns are stored as
/// closed intervals; construction verifies convexity.
class Region {
 public:
  Region() = default;

  static Region from_cells(const std::vector<Cell>& cells);

  /// Builds from per-row column intervals (empty rows omitted).
  /// Throws std::invalid_argument if the column sets fail convexity.
  static Region from_row_spans(const std::map<int, Span>& rows);

  long long size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool contains(Cell c) const;
  bool contains_region(const Region& h) const;
  std::vector<Cell> cells() const;  // sorted by (row, col)

  const std::map<int, Span>& rows() const { return rows_; }
  const std::map<int, Span>& cols() const { return cols_; }

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::map<int, Span> rows_;
  std::map<int, Span> cols_;
  long long size_ = 0;
};

/// Ferrers diagram of mu: row r holds columns [0, mu_{r+1}).
Region ferrers(const Partition& mu);

/// The n x k rectangle anchored at (0, 0).
Region rectangle(int n, int k);

/// Rectangle with mu removed from the top-left corner and a copy of mu
/// glued to the right, first row to first row. Row r holds columns
/// [mu_{r+1}, mu_{r+1} + k); every row has exactly k cells.
Region sr(int n, int k, const Partition& mu);

/// Rectangle with a rotated copy of mu removed from the bottom-right
/// corner and a rotated copy glued to the left, last row to last row.
/// Row r holds columns [-mu_t, k - mu_t) for t = n - r.
Region sr_tilde(int n, int k, const Partition& mu);

/// sr_tilde plus a rotated copy of mu glued on top, its last column on
/// column k - 1: row -t holds columns [k - mu_t, k) for t = 1..len(mu).
Region sq(int n, int k, const Partition& mu);

/// Arm and leg of c measured inside g. Throws if c is not in g.
HookPair hook_pair(const Region& g, Cell c);

/// Multiset of hook pairs of the cells of h, measured inside g.
HookPairMultiset hook_pairs(const Region& g, const Region& h);

/// Cells of h whose arm measured in g equals d, top row first, paired
/// with their legs measured in g. Row convexity gives at most one cell
/// per row.
std::vector<std::pair<Cell, int>> broken_column(const Region& g, const Region& h,
                                                int d);

/// Lower-left half of the Ferrers diagram of mu, diagonal included.
Region split_p(const Partition& mu);

/// Part of the a x (a+1) rectangle strictly above the diagonal.
Region split_q_rect(int a);

struct SqSplit {
  Region q_a;    // above-diagonal remnant of the rectangle part
  Region a2;     // rotated copy glued on top
  Region whole;  // sq(a, a + 1, mu)
};

/// Diagonal split of sq(a, a+1, mu) for a doubled shifted mu with
/// a >= mu_1 - 1. |q_a| + |a2| = |split_p(mu)| + |split_q_rect(a)|.
SqSplit split_sq(int a, const Partition& mu);

struct STDecomposition {
  Region s1, t1;  // subregions of rectangle(n, k)
  Region s2, t2;  // subregions of sq(n, k, mu)
};

/// S1 is the first k - mu_1 columns of the rectangle plus an
/// upside-down copy of mu anchored at its bottom; S2 is the left glued
/// rotated copy plus the next k - mu_1 columns of sq. T1, T2 are the
/// complements. Matching rows of S1 and S2 carry identical hook pairs.
STDecomposition s_t_decomposition(int n, int k, const Partition& mu);

/// Bounding-box grid, '#' for occupied and '.' for absent, rows top to
/// bottom joined by newlines. The empty region renders as "".
std::string render_ascii(const Region& g);

}  // namespace hookpairs
