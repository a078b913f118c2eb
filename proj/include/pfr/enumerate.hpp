#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "pfr/error.hpp"
#include "pfr/frame.hpp"

namespace pfr {

inline constexpr std::size_t kDefaultEnumerationLimit = 8;

/// Height of every element above the bottom (longest chain length).
inline std::vector<int> heights(const FiniteFrame& F) {
  const auto n = static_cast<Elem>(F.size());
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Sorting by number of elements below is a linear extension.
  std::vector<int> below(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) below[a] += F.leq(b, a);
  std::sort(order.begin(), order.end(), [&](Elem a, Elem b) { return below[a] < below[b]; });
  std::vector<int> h(n, 0);
  for (Elem a : order)
    for (Elem b = 0; b < n; ++b)
      if (b != a && F.leq(b, a)) h[a] = std::max(h[a], h[b] + 1);
  return h;
}

/// Isomorphism-invariant encoding: the lexicographically least order matrix
/// over all height-respecting relabelings. `perm` receives the relabeling
/// (perm[new] = old) that attains it.
inline std::vector<std::uint8_t> canonical_code(const FiniteFrame& F, std::vector<Elem>* perm = nullptr) {
  const auto n = static_cast<Elem>(F.size());
  auto h = heights(F);
  std::vector<Elem> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::stable_sort(base.begin(), base.end(), [&](Elem a, Elem b) { return h[a] < h[b]; });

  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && h[base[j]] == h[base[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  std::vector<std::uint8_t> best;
  std::vector<Elem> best_perm;
  std::vector<Elem> cur = base;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == blocks.size()) {
      std::vector<std::uint8_t> code(std::size_t(n) * n);
      for (Elem i = 0; i < n; ++i)
        for (Elem j = 0; j < n; ++j) code[i * n + j] = F.leq(cur[i], cur[j]);
      if (best.empty() || code < best) {
        best = std::move(code);
        best_perm = cur;
      }
      return;
    }
    auto [lo, hi] = blocks[k];
    std::sort(cur.begin() + lo, cur.begin() + hi);
    do rec(k + 1);
    while (std::next_permutation(cur.begin() + lo, cur.begin() + hi));
  };
  rec(0);
  if (perm) *perm = best_perm;
  return best;
}

inline bool isomorphic(const FiniteFrame& F, const FiniteFrame& G) {
  return F.size() == G.size() && canonical_code(F) == canonical_code(G);
}

/// Default element names for an n-element frame listed bottom first, top last.
inline std::vector<std::string> standard_names(std::size_t n) {
  if (n == 1) return {"0"};
  std::vector<std::string> names{"0"};
  for (std::size_t i = 1; i + 1 < n; ++i) names.push_back(std::string(1, char('a' + i - 1)));
  names.push_back("1");
  return names;
}

/// Rebuilds F in canonical labeling with standard names.
inline FramePtr canonical_frame(const FiniteFrame& F, std::string name) {
  std::vector<Elem> perm;
  canonical_code(F, &perm);
  const std::size_t n = F.size();
  std::vector<std::uint8_t> order(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) order[i * n + j] = F.leq(perm[i], perm[j]);
  return frame_from_order(std::move(name), standard_names(n), std::move(order));
}

namespace detail {

// Down-sets of a poset on elements 0..k-1 (below[i] = strict down-set mask).
inline std::vector<std::uint32_t> downsets(const std::vector<std::uint32_t>& below, std::size_t cap) {
  std::vector<std::uint32_t> out{0};
  const std::size_t k = below.size();
  // Natural labeling: element i only has predecessors < i, so grow sets in label order.
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t m = out.size();
    for (std::size_t s = 0; s < m; ++s)
      if ((out[s] & below[i]) == below[i]) {
        out.push_back(out[s] | (1u << i));
        if (out.size() > cap) return out;
      }
  }
  return out;
}

}  // namespace detail

/// One representative per isomorphism class of finite distributive lattices
/// with at most max_size elements, built as down-set lattices of posets.
inline std::vector<FramePtr> enumerate_frames(std::size_t max_size, std::size_t limit = kDefaultEnumerationLimit) {
  if (max_size > limit)
    throw Error(ErrorKind::LimitExceeded,
                "frame enumeration bound " + std::to_string(max_size) + " exceeds limit " + std::to_string(limit));
  std::vector<FramePtr> out;
  if (max_size == 0) return out;
  std::set<std::vector<std::uint8_t>> seen;
  std::vector<std::pair<std::size_t, FramePtr>> found;

  std::vector<std::uint32_t> below;
  std::function<void()> grow = [&]() {
    auto ds = detail::downsets(below, max_size);
    if (ds.size() > max_size) return;  // adding elements never removes down-sets
    {
      const std::size_t n = ds.size();
      std::sort(ds.begin(), ds.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
      });
      std::vector<std::uint8_t> order(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) order[i * n + j] = (ds[i] & ~ds[j]) == 0;
      auto raw = frame_from_order("raw", standard_names(n), std::move(order));
      auto code = canonical_code(*raw);
      if (seen.insert(code).second) found.emplace_back(n, raw);
    }
    if (below.size() + 1 >= max_size) return;
    // Candidate strict down-sets for the new element: down-sets of the current poset.
    auto candidates = detail::downsets(below, std::size_t(-1));
    for (std::uint32_t d : candidates) {
      below.push_back(d);
      grow();
      below.pop_back();
    }
  };
  grow();

  // Stable listing: by size, then by canonical code.
  std::vector<std::pair<std::vector<std::uint8_t>, FramePtr>> keyed;
  for (auto& [n, raw] : found) {
    auto canon = canonical_frame(*raw, "raw");
    keyed.emplace_back(canonical_code(*canon), canon);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.second->size() != y.second->size()) return x.second->size() < y.second->size();
    return x.first < y.first;
  });
  std::map<std::size_t, int> serial;
  for (auto& [code, F] : keyed) {
    std::string name = "L" + std::to_string(F->size()) + "_" + std::to_string(serial[F->size()]++);
    out.push_back(std::make_shared<const FiniteFrame>(name, F->names(), F->tables()));
  }
  return out;
}

inline std::map<std::size_t, std::size_t> count_by_size(const std::vector<FramePtr>& frames) {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& F : frames) ++counts[F->size()];
  return counts;
}

// ---------------------------------------------------------------------------
// Brute-force census used as an independent oracle for the enumerator.
// It shares no code with the validator or the down-set construction.

namespace census {

/// Every bounded partial order on n elements where element 0 is bottom,
/// element n-1 is top and inner elements are labeled along a linear extension.
/// The callback receives the order as an n x n matrix.
inline void for_each_bounded_order(std::size_t n, const std::function<void(const std::vector<std::uint8_t>&)>& fn) {
  if (n == 0) return;
  if (n == 1) {
    fn({1});
    return;
  }
  const std::size_t m = n - 2;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) slots.emplace_back(i, j);
  const std::uint64_t total = std::uint64_t(1) << slots.size();
  std::vector<std::uint8_t> inner(m * m);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::fill(inner.begin(), inner.end(), 0);
    for (std::size_t i = 0; i < m; ++i) inner[i * m + i] = 1;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (bits >> s & 1) inner[slots[s].first * m + slots[s].second] = 1;
    bool transitive = true;
    for (std::size_t i = 0; i < m && transitive; ++i)
      for (std::size_t j = 0; j < m && transitive; ++j)
        if (inner[i * m + j])
          for (std::size_t k = 0; k < m && transitive; ++k)
            if (inner[j * m + k] && !inner[i * m + k]) transitive = false;
    if (!transitive) continue;
    std::vector<std::uint8_t> full(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      full[0 * n + i] = 1;
      full[i * n + (n - 1)] = 1;
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) full[(i + 1) * n + (j + 1)] = inner[i * m + j];
    fn(full);
  }
}

/// Meet/join tables if the order is a lattice (-1 entries otherwise).
inline bool lattice_tables(std::size_t n, const std::vector<std::uint8_t>& le, std::vector<int>& meet,
                           std::vector<int>& join) {
  meet.assign(n * n, -1);
  join.assign(n * n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < n; ++x) {
        if (le[x * n + a] && le[x * n + b]) {
          bool all = true;
          for (std::size_t y = 0; y < n; ++y)
            if (le[y * n + a] && le[y * n + b] && !le[y * n + x]) all = false;
          if (all) meet[a * n + b] = int(x);
        }
        if (le[a * n + x] && le[b * n + x]) {
          bool all = true;
          for (std::size_t y = 0; y < n; ++y)
            if (le[a * n + y] && le[b * n + y] && !le[x * n + y]) all = false;
          if (all) join[a * n + b] = int(x);
        }
      }
      if (meet[a * n + b] < 0 || join[a * n + b] < 0) return false;
    }
  return true;
}

inline bool distributive(std::size_t n, const std::vector<int>& meet, const std::vector<int>& join) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (meet[a * n + join[b * n + c]] != join[meet[a * n + b] * n + meet[a * n + c]]) return false;
  return true;
}

/// Lex-least order matrix over all permutations of the inner elements.
inline std::vector<std::uint8_t> inner_canonical(std::size_t n, const std::vector<std::uint8_t>& le) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::uint8_t> best;
  do {
    std::vector<std::uint8_t> code(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) code[i * n + j] = le[p[i] * n + p[j]];
    if (best.empty() || code < best) best = std::move(code);
  } while (n > 2 && std::next_permutation(p.begin() + 1, p.end() - 1));
  return best;
}

/// Isomorphism classes of lattices of each size (optionally distributive only).
inline std::vector<std::vector<std::uint8_t>> lattices_of_size(std::size_t n, bool distributive_only) {
  std::set<std::vector<std::uint8_t>> classes;
  std::vector<int> meet, join;
  for_each_bounded_order(n, [&](const std::vector<std::uint8_t>& le) {
    if (!lattice_tables(n, le, meet, join)) return;
    if (distributive_only && !distributive(n, meet, join)) return;
    classes.insert(inner_canonical(n, le));
  });
  return {classes.begin(), classes.end()};
}

inline std::map<std::size_t, std::size_t> distributive_counts(std::size_t max_size) {
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t n = 1; n <= max_size; ++n) counts[n] = lattices_of_size(n, true).size();
  return counts;
}

}  // namespace census

}  // namespace pfr
