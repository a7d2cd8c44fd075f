#pragma once

#include <vector>

namespace valconv {

/// Calls fn(indices) for every increasing k-subset of {0, ..., m-1}, in
/// lexicographic order. fn may return false to stop early.
template <typename Fn>
void for_each_combination(int m, int k, Fn&& fn) {
  if (k < 0 || k > m) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!fn(static_cast<const std::vector<int>&>(idx))) return;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace valconv
