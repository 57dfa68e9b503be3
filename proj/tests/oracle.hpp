#pragma once

// Independent ground truth for the unit and acceptance suites. Nothing here
// touches the bit-vector engine or the pruned search.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline std::set<u64> subset_sums(const std::vector<u64>& a) {
  std::set<u64> out{0};
  for (u64 x : a) {
    std::set<u64> next = out;
    for (u64 s : out) next.insert(s + x);
    out = std::move(next);
  }
  return out;
}

inline std::vector<u64> gaps(const std::vector<u64>& a, u64 upto) {
  const auto s = subset_sums(a);
  std::vector<u64> out;
  for (u64 x = 0; x <= upto; ++x)
    if (!s.contains(x)) out.push_back(x);
  return out;
}

// All sets of distinct positive integers summing to n, each checked for
// P(set) = [0, n]; returns the lexicographically smallest, if any.
inline std::optional<std::vector<u64>> smallest_base(u64 b1) {
  const u64 n = b1 - 1;
  std::optional<std::vector<u64>> best;
  std::vector<u64> cur;
  auto rec = [&](auto&& self, u64 rem, u64 lo) -> void {
    if (rem == 0) {
      if (gaps(cur, n).empty() && (!best || cur < *best)) best = cur;
      return;
    }
    for (u64 v = lo; v <= rem; ++v) {
      cur.push_back(v);
      self(self, rem - v, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, n, 1);
  return best;
}

// Feasible iff some A within [1, b3 - 1] has P(A) ∩ [0, b3] missing exactly
// {b1, b2, b3}. Enumerates all 2^(b3-1) subsets with a word-sized sumset, so
// b3 must stay small (<= 22 or so).
inline bool triple_feasible(u64 b1, u64 b2, u64 b3) {
  const u64 window = (u64{1} << (b3 + 1)) - 1;
  const u64 want = window & ~((u64{1} << b1) | (u64{1} << b2) | (u64{1} << b3));
  const u64 subsets = u64{1} << (b3 - 1);
  for (u64 mask = 0; mask < subsets; ++mask) {
    u64 s = 1;
    for (u64 v = 1; v < b3; ++v)
      if (mask & (u64{1} << (v - 1))) s = (s | (s << v)) & window;
    if (s == want) return true;
  }
  return false;
}

}  // namespace oracle
