#pragma once

// Equality of square integer matrices up to a simultaneous row and column permutation.

#include <algorithm>
#include <map>
#include <vector>

#include "mfn/blocks/decomposition.hpp"
#include "mfn/error.hpp"

namespace mfn {

inline constexpr u64 kDefaultPermutationSearchNodes = 2'000'000;

namespace detail {

/// Colour refinement: start from the diagonal and sorted row, refine by the multiset of (colour, entry).
inline std::vector<std::size_t> refine_colours(const IntMatrix& m, const std::vector<std::vector<i64>>& seeds,
                                               std::map<std::vector<i64>, std::size_t>& palette) {
  const std::size_t n = m.size();
  std::vector<std::size_t> colour(n);
  for (std::size_t i = 0; i < n; ++i) colour[i] = palette.emplace(seeds[i], palette.size()).first->second;
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::vector<i64>> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::pair<i64, i64>> pairs;
      for (std::size_t j = 0; j < n; ++j) pairs.emplace_back(static_cast<i64>(colour[j]), m[i][j]);
      std::sort(pairs.begin(), pairs.end());
      sig[i] = {static_cast<i64>(colour[i])};
      for (const auto& [c, v] : pairs) {
        sig[i].push_back(c);
        sig[i].push_back(v);
      }
    }
    std::vector<std::size_t> next(n);
    for (std::size_t i = 0; i < n; ++i) next[i] = palette.emplace(sig[i], palette.size()).first->second;
    const auto classes = [](const std::vector<std::size_t>& c) {
      std::vector<std::size_t> s = c;
      std::sort(s.begin(), s.end());
      return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
    };
    const bool stable = classes(next) == classes(colour);
    colour = std::move(next);
    if (stable) break;
  }
  return colour;
}

inline std::vector<std::vector<i64>> seed_signatures(const IntMatrix& m) {
  std::vector<std::vector<i64>> seeds;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<i64> row = m[i];
    std::sort(row.begin(), row.end());
    row.insert(row.begin(), m[i][i]);
    seeds.push_back(std::move(row));
  }
  return seeds;
}

struct PermutationSearch {
  const IntMatrix& a;
  const IntMatrix& b;
  const std::vector<std::size_t>& ca;
  const std::vector<std::size_t>& cb;
  std::vector<std::size_t> image;  // image[i] = index in b
  std::vector<char> used;
  u64 nodes = 0;
  u64 budget;

  bool extend(std::size_t i) {
    if (i == a.size()) return true;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j] || ca[i] != cb[j] || a[i][i] != b[j][j]) continue;
      if (++nodes > budget) throw BoundExceeded("permutation search exceeded its node budget");
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) ok = a[i][k] == b[j][image[k]] && a[k][i] == b[image[k]][j];
      if (!ok) continue;
      used[j] = 1;
      image[i] = j;
      if (extend(i + 1)) return true;
      used[j] = 0;
    }
    return false;
  }
};

}  // namespace detail

/// True when B = P A P^T for some permutation P.
inline bool equal_up_to_permutation(const IntMatrix& a, const IntMatrix& b,
                                    u64 node_budget = kDefaultPermutationSearchNodes) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  std::map<std::vector<i64>, std::size_t> palette;  // shared so colours are comparable
  const auto ca = detail::refine_colours(a, detail::seed_signatures(a), palette);
  const auto cb = detail::refine_colours(b, detail::seed_signatures(b), palette);
  auto sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  detail::PermutationSearch search{a, b, ca, cb, std::vector<std::size_t>(a.size()), std::vector<char>(b.size(), 0), 0,
                                   node_budget};
  return search.extend(0);
}

}  // namespace mfn
