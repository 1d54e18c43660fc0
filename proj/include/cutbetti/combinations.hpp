#pragma once

#include <cstdint>
#include <vector>

namespace cutbetti {

/// Calls fn(indices) for every k-subset of {0..top-1} extended by `top`
/// itself, i.e. every k-subset whose largest element is `top`, in colex
/// order. `indices` is sorted ascending.
template <class Fn>
void for_each_subset_with_max(std::uint64_t top, int k, Fn&& fn) {
  if (k <= 0) return;
  std::vector<std::uint64_t> c(static_cast<std::size_t>(k));
  if (static_cast<std::uint64_t>(k - 1) > top) return;
  for (int i = 0; i + 1 < k; ++i) c[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(i);
  c[static_cast<std::size_t>(k - 1)] = top;
  for (;;) {
    fn(static_cast<const std::vector<std::uint64_t>&>(c));
    // Colex successor among the first k-1 slots, bounded by `top`.
    int i = 0;
    while (i + 1 < k && c[static_cast<std::size_t>(i)] + 1 == c[static_cast<std::size_t>(i + 1)]) ++i;
    if (i + 1 >= k) return;
    ++c[static_cast<std::size_t>(i)];
    for (int t = 0; t < i; ++t) c[static_cast<std::size_t>(t)] = static_cast<std::uint64_t>(t);
  }
}

/// Every k-subset of {0..n-1} in colex order.
template <class Fn>
void for_each_subset(std::uint64_t n, int k, Fn&& fn) {
  if (k == 0) {
    fn(std::vector<std::uint64_t>{});
    return;
  }
  for (std::uint64_t top = 0; top < n; ++top) for_each_subset_with_max(top, k, fn);
}

}  // namespace cutbetti
