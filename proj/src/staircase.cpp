#include "hookpairs/staircase.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hookpairs {

Staircase::Staircase(std::vector<int> v, std::vector<int> h) {
  if (v.empty() ? !h.empty() : h.size() != v.size() - 1) {
    throw std::invalid_argument("Staircase: h must have one piece less than v");
  }
  for (int x : v) {
    if (x < 0) throw std::invalid_argument("Staircase: negative vertical piece");
  }
  for (int x : h) {
    if (x < 0) throw std::invalid_argument("Staircase: negative horizontal piece");
  }
  // Merge away zero-length pieces: a zero h fuses the two adjacent v
  // pieces, a zero v fuses the two adjacent h pieces. Leading and
  // trailing zero v pieces just drop (with their neighbouring h; a
  // leading h only shifts the profile, which is normalized out).
  std::vector<int> nv, nh;
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (v[b] > 0) {
      if (!nv.empty() && nh.size() < nv.size()) {
        // previous h was zero (or absorbed): fuse vertical pieces
        nv.back() += v[b];
      } else {
        nv.push_back(v[b]);
      }
    }
    if (b + 1 < v.size() && h[b] > 0) {
      if (nv.empty()) continue;       // leading offset, normalized away
      if (nh.size() == nv.size()) {
        nh.back() += h[b];            // zero v in between: fuse
      } else {
        nh.push_back(h[b]);
      }
    }
  }
  while (nh.size() >= nv.size() && !nh.empty()) nh.pop_back();  // trailing h
  if (nv.empty()) {
    nv = {0};  // canonical height-zero staircase
    nh.clear();
  }
  v_ = std::move(nv);
  h_ = std::move(nh);
}

int Staircase::total_height() const {
  return std::accumulate(v_.begin(), v_.end(), 0);
}

std::vector<int> Staircase::profile() const {
  std::vector<int> x;
  x.reserve(static_cast<std::size_t>(total_height()));
  int offset = 0;
  for (std::size_t b = 0; b < v_.size(); ++b) {
    for (int r = 0; r < v_[b]; ++r) x.push_back(offset);
    if (b < h_.size()) offset += h_[b];
  }
  return x;
}

Staircase staircase_of(const Partition& mu, int n) {
  if (n < 0 || mu.length() > n) {
    throw std::invalid_argument("staircase_of: partition has more than n rows");
  }
  std::vector<int> v, h;
  for (int r = 0; r < n; ++r) {
    const int x = mu.part(n - r);
    if (r == 0) {
      v.push_back(1);
    } else if (x == mu.part(n - r + 1)) {
      ++v.back();
    } else {
      h.push_back(x - mu.part(n - r + 1));
      v.push_back(1);
    }
  }
  if (n == 0) v.push_back(0);
  return Staircase(std::move(v), std::move(h));
}

std::vector<int> left_legs(const Staircase& s, int d) {
  if (d < 0) throw std::invalid_argument("left_legs: negative distance");
  const std::vector<int> x = s.profile();
  const int n = static_cast<int>(x.size());
  std::vector<int> out(x.size());
  for (int r = 0; r < n; ++r) {
    int legs = 0;
    for (int rp = 0; rp < r; ++rp) {
      if (x[rp] >= x[r] - d) ++legs;
    }
    out[r] = legs;
  }
  return out;
}

std::vector<int> right_legs(const Staircase& s, int d) {
  if (d < 0) throw std::invalid_argument("right_legs: negative distance");
  const std::vector<int> x = s.profile();
  const int n = static_cast<int>(x.size());
  std::vector<int> out;
  out.reserve(x.size());
  for (int r = n - 1; r >= 0; --r) {
    int legs = 0;
    for (int rp = r + 1; rp < n; ++rp) {
      if (x[rp] <= x[r] + d) ++legs;
    }
    out.push_back(legs);
  }
  return out;
}

RunDecomposition mb_split(std::span<const int> seq) {
  RunDecomposition rd;
  if (seq.empty()) return rd;
  if (seq[0] != 0) {
    throw std::invalid_argument("mb_split: sequence must start at 0");
  }
  Run cur{seq[0], seq[0]};
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] == seq[i - 1] + 1) {
      cur.hi = seq[i];
    } else if (seq[i] <= seq[i - 1] && seq[i] >= 0) {
      rd.runs.push_back(cur);
      cur = {seq[i], seq[i]};
    } else {
      throw std::invalid_argument(
          "mb_split: not a concatenation of consecutive increasing runs");
    }
  }
  rd.runs.push_back(cur);
  return rd;
}

RunDecomposition mb_cascade(const RunDecomposition& rd) {
  const std::size_t q = rd.runs.size();
  RunDecomposition out;
  if (q == 0) return out;
  if (rd.runs.front().lo != 0) {
    throw std::invalid_argument("mb_cascade: first stack must start at 0");
  }
  out.runs.resize(q);
  for (std::size_t t = 0; t + 1 < q; ++t) {
    // stack t holds (0, M_t) at this point; entries below m_{t+1} leave
    if (rd.runs[t + 1].lo > rd.runs[t].hi + 1) {
      throw std::logic_error("mb_cascade: cascade would split a stack");
    }
    out.runs[t] = {rd.runs[t + 1].lo, rd.runs[t].hi};
  }
  out.runs[q - 1] = {rd.runs.front().lo, rd.runs.back().hi};
  return out;
}

std::vector<int> mb_read(const RunDecomposition& rd) {
  std::vector<int> out;
  for (auto it = rd.runs.rbegin(); it != rd.runs.rend(); ++it) {
    for (int x = it->lo; x <= it->hi; ++x) out.push_back(x);
  }
  return out;
}

std::vector<int> master_bijection(std::span<const int> seq) {
  return mb_read(mb_cascade(mb_split(seq)));
}

std::vector<int> inverse_master_bijection(std::span<const int> seq) {
  const RunDecomposition rd = mb_split(seq);
  const std::size_t q = rd.runs.size();
  if (q == 0) return {};
  // Reading order was (0, M_q), (m_q, M_{q-1}), ..., (m_2, M_1);
  // rebuild (m_1 = 0, M_1), ..., (m_q, M_q) and read front to back.
  std::vector<Run> orig(q);
  orig[0].lo = 0;
  orig[q - 1].hi = rd.runs[0].hi;
  for (std::size_t s = 1; s < q; ++s) {
    orig[q - s].lo = rd.runs[s].lo;
    orig[q - s - 1].hi = rd.runs[s].hi;
  }
  std::vector<int> out;
  for (std::size_t t = 0; t < q; ++t) {
    if (orig[t].lo > orig[t].hi || (t + 1 < q && orig[t + 1].lo > orig[t].hi)) {
      throw std::invalid_argument(
          "inverse_master_bijection: sequence is not a valid readout");
    }
    for (int x = orig[t].lo; x <= orig[t].hi; ++x) out.push_back(x);
  }
  return out;
}

namespace {

std::vector<int> prefix_sums(const std::vector<int>& xs) {
  std::vector<int> pre(xs.size() + 1, 0);
  for (std::size_t i = 0; i < xs.size(); ++i) pre[i + 1] = pre[i] + xs[i];
  return pre;
}

}  // namespace

RunDecomposition run_bounds_left(const Staircase& s, int d) {
  if (d < 0) throw std::invalid_argument("run_bounds_left: negative distance");
  RunDecomposition rd;
  if (s.total_height() == 0) return rd;
  const auto& v = s.v();
  const auto& h = s.h();
  const int p = s.piece_count();
  const std::vector<int> vpre = prefix_sums(v);
  const std::vector<int> hpre = prefix_sums(h);

  // start(b): least piece index whose h-gap sum up to piece b is <= d.
  // A stack covers the maximal block of pieces sharing one start.
  std::vector<int> start(p + 1);
  int lo = 1;
  for (int b = 1; b <= p; ++b) {
    while (hpre[b - 1] - hpre[lo - 1] > d) ++lo;
    start[b] = lo;
  }
  int first = 1;
  for (int b = 1; b <= p; ++b) {
    if (b == p || start[b + 1] != start[b]) {
      const int j = start[b];
      rd.runs.push_back({vpre[first - 1] - vpre[j - 1], vpre[b] - vpre[j - 1] - 1});
      rd.indices.push_back({j, b});
      first = b + 1;
    }
  }
  return rd;
}

RunDecomposition run_bounds_right(const Staircase& s, int d) {
  if (d < 0) throw std::invalid_argument("run_bounds_right: negative distance");
  RunDecomposition rd;
  if (s.total_height() == 0) return rd;
  const auto& v = s.v();
  const auto& h = s.h();
  const int p = s.piece_count();
  const std::vector<int> vpre = prefix_sums(v);
  const std::vector<int> hpre = prefix_sums(h);

  // end(b): greatest piece index reachable upward within h-gap sum <= d.
  std::vector<int> end(p + 1);
  int hi = p;
  for (int b = p; b >= 1; --b) {
    while (hpre[hi - 1] - hpre[b - 1] > d) --hi;
    end[b] = hi;
  }
  // Blocks of equal end, top block first (reading order is downward).
  int last = p;
  for (int b = p; b >= 1; --b) {
    if (b == 1 || end[b - 1] != end[b]) {
      const int e = end[b];
      rd.runs.push_back({vpre[e] - vpre[last], vpre[e] - vpre[b - 1] - 1});
      rd.indices.push_back({e, b});
      last = b - 1;
    }
  }
  return rd;
}

namespace {

std::string format_sequence(std::span<const int> xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  return os.str();
}

std::string format_runs(const RunDecomposition& rd) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rd.runs.size(); ++i) {
    if (i) os << ' ';
    os << '(' << rd.runs[i].lo << ',' << rd.runs[i].hi << ')';
  }
  return os.str();
}

LemmaReport fail(std::string detail) { return {false, std::move(detail)}; }

}  // namespace

LemmaReport verify_lemma(const Staircase& s, int d) {
  const std::vector<int> left = left_legs(s, d);
  const std::vector<int> right = right_legs(s, d);

  std::vector<int> ls = left, rs = right;
  std::sort(ls.begin(), ls.end());
  std::sort(rs.begin(), rs.end());
  if (ls != rs) {
    return fail("leg multisets differ: left " + format_sequence(left) + " right " +
                format_sequence(right));
  }

  const std::vector<int> mapped = master_bijection(left);
  if (mapped != right) {
    return fail("bijection output " + format_sequence(mapped) + " != right legs " +
                format_sequence(right));
  }

  if (inverse_master_bijection(mapped) != left) {
    return fail("round trip failed on " + format_sequence(left));
  }

  const RunDecomposition from_left = mb_split(left);
  const RunDecomposition from_right = mb_split(right);
  const RunDecomposition bl = run_bounds_left(s, d);
  const RunDecomposition br = run_bounds_right(s, d);
  if (from_left.runs != bl.runs) {
    return fail("left run bounds " + format_runs(bl) + " != split " +
                format_runs(from_left));
  }
  if (from_right.runs != br.runs) {
    return fail("right run bounds " + format_runs(br) + " != split " +
                format_runs(from_right));
  }

  const std::size_t q = bl.runs.size();
  if (br.runs.size() != q) {
    return fail("run counts differ");
  }
  for (std::size_t t = 0; t < q; ++t) {
    // tilde index t+1 sits at reading position q-t on the right side
    const Run& run_t = bl.runs[t];
    const Run& tilde_t = br.runs[q - 1 - t];
    const RunIndices& idx_t = bl.indices[t];
    const RunIndices& tilde_idx_t = br.indices[q - 1 - t];
    if (tilde_t.hi != run_t.hi) {
      return fail("M~ != M at stack " + std::to_string(t + 1));
    }
    if (t + 1 < q && tilde_t.lo != bl.runs[t + 1].lo) {
      return fail("m~_t != m_{t+1} at stack " + std::to_string(t + 1));
    }
    if (tilde_idx_t.j != idx_t.i || tilde_idx_t.i != idx_t.j) {
      return fail("index duality failed at stack " + std::to_string(t + 1));
    }
  }
  return {};
}

}  // namespace hookpairs
