#include "valrank/mustafin.hpp"

#include <functional>

namespace valrank {

std::vector<int> kernel_profile_from_ranks(std::size_t n, int d, const std::vector<int>& stacked_ranks) {
  std::vector<int> table(std::size_t{1} << n, d);
  for (std::size_t mask = 1; mask < table.size(); ++mask) table[mask] = d - stacked_ranks[mask];
  return table;
}

std::vector<Multidegree> m_set(const std::vector<int>& d_table, int h, int d, std::size_t n) {
  if (d_table.size() != (std::size_t{1} << n)) fail(ErrorCode::InvalidArgument, "d_table has the wrong size");
  std::vector<Multidegree> out;
  if (h < 0) return out;
  if (n == 0) {
    if (h == 0) out.emplace_back();
    return out;
  }
  Multidegree m(n, 0);
  // Ascending values at each position give lexicographic order directly.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      m[i] = left;
      for (std::size_t mask = 1; mask < d_table.size(); ++mask) {
        int s = 0;
        for (std::size_t j = 0; j < n; ++j)
          if (mask >> j & 1) s += m[j];
        if (s >= d - d_table[mask]) return;
      }
      out.push_back(m);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      m[i] = v;
      rec(i + 1, left - v);
    }
    m[i] = 0;
  };
  rec(0, h);
  return out;
}

int image_dimension(const std::vector<int>& d_table, int d, std::size_t n) {
  int best = 0;
  bool previous = true;
  for (int h = 0; h <= d - 1; ++h) {
    const bool nonempty = !m_set(d_table, h, d, n).empty();
    if (nonempty && !previous) fail(ErrorCode::TheoremViolation, "M(h) nonempty while M(h-1) is empty");
    if (nonempty) best = h;
    previous = nonempty;
  }
  return best;
}

}  // namespace valrank
