#pragma once

#include <algorithm>
#include <functional>
#include <vector>

namespace pyrenic {

// Visits k-element subsets of {0..n-1} (as sorted index vectors) in
// lexicographic order until the callback returns true. Returns whether a
// callback stopped the scan.
inline bool for_each_combination(int n, int k,
                                 const std::function<bool(const std::vector<int>&)>& cb) {
  if (k < 0 || k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (cb(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// One value per pool, pools pairwise disjoint. Candidates are emitted as
// sorted value vectors in lexicographic order, so a scan over them visits
// sets in the same relative order as a scan over all k-subsets would.
inline std::vector<std::vector<int>> sorted_pool_products(
    const std::vector<std::vector<int>>& pools) {
  std::vector<std::vector<int>> out;
  if (pools.empty()) return out;
  for (const auto& p : pools)
    if (p.empty()) return out;
  std::vector<std::size_t> at(pools.size(), 0);
  while (true) {
    std::vector<int> tuple;
    tuple.reserve(pools.size());
    for (std::size_t i = 0; i < pools.size(); ++i) tuple.push_back(pools[i][at[i]]);
    std::sort(tuple.begin(), tuple.end());
    out.push_back(std::move(tuple));
    std::size_t i = pools.size();
    while (i > 0 && ++at[i - 1] == pools[i - 1].size()) at[--i] = 0;
    if (i == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pyrenic
