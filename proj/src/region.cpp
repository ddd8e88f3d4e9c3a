#include "hookpairs/region.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookpairs {

namespace {

void require_box(int n, int k, const Partition& mu, const char* what) {
  if (n < 0 || k < 0) {
    throw std::invalid_argument(std::string(what) + ": negative dimensions");
  }
  if (mu.first() > k || mu.length() > n) {
    throw std::invalid_argument(std::string(what) +
                                ": partition does not fit the n x k box");
  }
}

}  // namespace

Region Region::from_row_spans(const std::map<int, Span>& rows) {
  Region g;
  // first/last occupied row and cell count per column
  std::map<int, std::pair<Span, long long>> col_info;
  for (const auto& [r, span] : rows) {
    if (span.lo > span.hi) continue;
    g.rows_[r] = span;
    g.size_ += span.hi - span.lo + 1;
    for (int c = span.lo; c <= span.hi; ++c) {
      auto it = col_info.find(c);
      if (it == col_info.end()) {
        col_info[c] = {{r, r}, 1};
      } else {
        it->second.first.lo = std::min(it->second.first.lo, r);
        it->second.first.hi = std::max(it->second.first.hi, r);
        ++it->second.second;
      }
    }
  }
  for (const auto& [c, info] : col_info) {
    const auto& [span, count] = info;
    if (count != span.hi - span.lo + 1) {
      throw std::invalid_argument("Region: column " + std::to_string(c) +
                                  " is not convex");
    }
    g.cols_[c] = span;
  }
  return g;
}

Region Region::from_cells(const std::vector<Cell>& cells) {
  std::map<int, std::pair<Span, long long>> row_info;
  for (const Cell& c : cells) {
    auto it = row_info.find(c.row);
    if (it == row_info.end()) {
      row_info[c.row] = {{c.col, c.col}, 1};
    } else {
      it->second.first.lo = std::min(it->second.first.lo, c.col);
      it->second.first.hi = std::max(it->second.first.hi, c.col);
      ++it->second.second;
    }
  }
  std::map<int, Span> rows;
  for (const auto& [r, info] : row_info) {
    const auto& [span, count] = info;
    if (count != span.hi - span.lo + 1) {
      throw std::invalid_argument("Region: row " + std::to_string(r) +
                                  " is not convex or has duplicate cells");
    }
    rows[r] = span;
  }
  return from_row_spans(rows);
}

bool Region::contains(Cell c) const {
  auto it = rows_.find(c.row);
  return it != rows_.end() && it->second.lo <= c.col && c.col <= it->second.hi;
}

bool Region::contains_region(const Region& h) const {
  for (const auto& [r, span] : h.rows_) {
    auto it = rows_.find(r);
    if (it == rows_.end() || span.lo < it->second.lo || span.hi > it->second.hi) {
      return false;
    }
  }
  return true;
}

std::vector<Cell> Region::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (const auto& [r, span] : rows_) {
    for (int c = span.lo; c <= span.hi; ++c) out.push_back({r, c});
  }
  return out;
}

Region ferrers(const Partition& mu) {
  std::map<int, Span> rows;
  for (int i = 1; i <= mu.length(); ++i) {
    rows[i - 1] = {0, mu.part(i) - 1};
  }
  return Region::from_row_spans(rows);
}

Region rectangle(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("rectangle: negative dimensions");
  std::map<int, Span> rows;
  if (k > 0) {
    for (int r = 0; r < n; ++r) rows[r] = {0, k - 1};
  }
  return Region::from_row_spans(rows);
}

Region sr(int n, int k, const Partition& mu) {
  require_box(n, k, mu, "sr");
  std::map<int, Span> rows;
  if (k > 0) {
    for (int r = 0; r < n; ++r) {
      const int off = mu.part(r + 1);
      rows[r] = {off, off + k - 1};
    }
  }
  return Region::from_row_spans(rows);
}

Region sr_tilde(int n, int k, const Partition& mu) {
  require_box(n, k, mu, "sr_tilde");
  std::map<int, Span> rows;
  if (k > 0) {
    for (int r = 0; r < n; ++r) {
      const int off = mu.part(n - r);
      rows[r] = {-off, k - 1 - off};
    }
  }
  return Region::from_row_spans(rows);
}

Region sq(int n, int k, const Partition& mu) {
  require_box(n, k, mu, "sq");
  std::map<int, Span> rows;
  if (k > 0) {
    for (int r = 0; r < n; ++r) {
      const int off = mu.part(n - r);
      rows[r] = {-off, k - 1 - off};
    }
  }
  for (int t = 1; t <= mu.length(); ++t) {
    rows[-t] = {k - mu.part(t), k - 1};
  }
  return Region::from_row_spans(rows);
}

HookPair hook_pair(const Region& g, Cell c) {
  if (!g.contains(c)) throw std::invalid_argument("hook_pair: cell not in region");
  return {g.rows().at(c.row).hi - c.col, g.cols().at(c.col).hi - c.row};
}

HookPairMultiset hook_pairs(const Region& g, const Region& h) {
  if (!g.contains_region(h)) {
    throw std::invalid_argument("hook_pairs: h is not contained in g");
  }
  HookPairMultiset out;
  for (const auto& [r, span] : h.rows()) {
    const Span grow = g.rows().at(r);
    for (int c = span.lo; c <= span.hi; ++c) {
      out.add({grow.hi - c, g.cols().at(c).hi - r});
    }
  }
  return out;
}

std::vector<std::pair<Cell, int>> broken_column(const Region& g, const Region& h,
                                                int d) {
  if (d < 0) throw std::invalid_argument("broken_column: negative distance");
  if (!g.contains_region(h)) {
    throw std::invalid_argument("broken_column: h is not contained in g");
  }
  std::vector<std::pair<Cell, int>> out;
  for (const auto& [r, span] : h.rows()) {
    const Span grow = g.rows().at(r);
    const int c = grow.hi - d;  // the unique arm-d cell of g's row
    if (c >= span.lo && c <= span.hi) {
      out.push_back({{r, c}, g.cols().at(c).hi - r});
    }
  }
  return out;
}

Region split_p(const Partition& mu) {
  std::map<int, Span> rows;
  for (int i = 1; i <= mu.length(); ++i) {
    const int hi = std::min(mu.part(i) - 1, i - 1);
    if (hi >= 0) rows[i - 1] = {0, hi};
  }
  return Region::from_row_spans(rows);
}

Region split_q_rect(int a) {
  if (a < 0) throw std::invalid_argument("split_q_rect: negative side");
  std::map<int, Span> rows;
  for (int r = 0; r < a; ++r) rows[r] = {r + 1, a};
  return Region::from_row_spans(rows);
}

SqSplit split_sq(int a, const Partition& mu) {
  if (!is_doubled_shifted(mu)) {
    throw std::invalid_argument("split_sq: mu must be doubled shifted");
  }
  if (a < mu.first() - 1) {
    throw std::invalid_argument("split_sq: requires a >= mu_1 - 1");
  }
  SqSplit out;
  out.whole = sq(a, a + 1, mu);
  std::map<int, Span> a2_rows;
  std::map<int, Span> qa_rows;
  for (const auto& [r, span] : out.whole.rows()) {
    if (r < 0) {
      a2_rows[r] = span;
    } else if (span.hi > r) {
      qa_rows[r] = {std::max(span.lo, r + 1), span.hi};
    }
  }
  out.a2 = Region::from_row_spans(a2_rows);
  out.q_a = Region::from_row_spans(qa_rows);
  return out;
}

STDecomposition s_t_decomposition(int n, int k, const Partition& mu) {
  require_box(n, k, mu, "s_t_decomposition");
  const int w = k - mu.first();  // width of the shared column block
  STDecomposition out;

  std::map<int, Span> s1_rows, t1_rows;
  for (int r = 0; r < n; ++r) {
    const int t = n - r;
    // upside-down copy of mu occupies columns [w, w + mu_t) at the bottom
    const int s1_hi = w + mu.part(t) - 1;
    if (s1_hi >= 0) s1_rows[r] = {0, s1_hi};
    if (s1_hi < k - 1) t1_rows[r] = {s1_hi + 1, k - 1};
  }
  out.s1 = Region::from_row_spans(s1_rows);
  out.t1 = Region::from_row_spans(t1_rows);

  const Region whole = sq(n, k, mu);
  std::map<int, Span> s2_rows, t2_rows;
  for (const auto& [r, span] : whole.rows()) {
    if (span.lo < w) s2_rows[r] = {span.lo, std::min(span.hi, w - 1)};
    if (span.hi >= w) t2_rows[r] = {std::max(span.lo, w), span.hi};
  }
  out.s2 = Region::from_row_spans(s2_rows);
  out.t2 = Region::from_row_spans(t2_rows);
  return out;
}

std::string render_ascii(const Region& g) {
  if (g.empty()) return "";
  const int row_lo = g.rows().begin()->first;
  const int row_hi = g.rows().rbegin()->first;
  const int col_lo = g.cols().begin()->first;
  const int col_hi = g.cols().rbegin()->first;
  std::string out;
  for (int r = row_lo; r <= row_hi; ++r) {
    if (r > row_lo) out.push_back('\n');
    for (int c = col_lo; c <= col_hi; ++c) {
      out.push_back(g.contains({r, c}) ? '#' : '.');
    }
  }
  return out;
}

}  // namespace hookpairs
