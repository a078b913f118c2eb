#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pfr/error.hpp"
#include "pfr/frame.hpp"

namespace pfr {

/// Subset of the points of a finite space, bit i = point i.
using PointSet = std::uint32_t;

inline constexpr std::size_t kMaxSpacePoints = 16;

/// A finite T0 topological space together with its frame of opens.
class FiniteSpace {
 public:
  /// Validates the topology; throws NotATopology or NotT0.
  FiniteSpace(std::vector<std::string> points, std::vector<PointSet> opens, std::string name = "X")
      : name_(std::move(name)), points_(std::move(points)) {
    const std::size_t n = points_.size();
    if (n > kMaxSpacePoints) throw Error(ErrorKind::LimitExceeded, "space has more than 16 points");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (points_[i] == points_[j]) throw Error(ErrorKind::DuplicateElement, "point '" + points_[i] + "' listed twice", {points_[i]});
    const PointSet all = n == 0 ? 0 : PointSet((std::uint64_t(1) << n) - 1);
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    for (PointSet U : opens)
      if (U & ~all) throw Error(ErrorKind::UnknownElement, "open set mentions a point outside the space");
    auto has = [&](PointSet U) { return std::binary_search(opens.begin(), opens.end(), U); };
    if (!has(0)) throw Error(ErrorKind::NotATopology, "the empty set is not open");
    if (!has(all)) throw Error(ErrorKind::NotATopology, "the whole space is not open");
    for (PointSet U : opens)
      for (PointSet V : opens) {
        if (!has(U | V)) throw Error(ErrorKind::NotATopology, "union " + set_name(U) + " ∪ " + set_name(V) + " is not open");
        if (!has(U & V)) throw Error(ErrorKind::NotATopology, "intersection " + set_name(U) + " ∩ " + set_name(V) + " is not open");
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        bool separated = false;
        for (PointSet U : opens) separated = separated || (((U >> i) ^ (U >> j)) & 1);
        if (!separated)
          throw Error(ErrorKind::NotT0, "points '" + points_[i] + "' and '" + points_[j] + "' have the same neighbourhoods",
                      {points_[i], points_[j]});
      }
    std::stable_sort(opens.begin(), opens.end(), [](PointSet a, PointSet b) {
      return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
    });
    opens_ = std::move(opens);
    const std::size_t m = opens_.size();
    std::vector<std::string> names;
    for (PointSet U : opens_) names.push_back(set_name(U));
    std::vector<std::uint8_t> order(m * m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) order[a * m + b] = (opens_[a] & ~opens_[b]) == 0;
    for (Elem a = 0; a < m; ++a) index_.emplace(opens_[a], a);
    frame_ = frame_from_order("O(" + name_ + ")", std::move(names), std::move(order));
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::vector<PointSet>& opens() const noexcept { return opens_; }
  PointSet all() const noexcept { return size() == 0 ? 0 : PointSet((std::uint64_t(1) << size()) - 1); }

  std::size_t point(const std::string& p) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (points_[i] == p) return i;
    throw Error(ErrorKind::UnknownElement, "no point '" + p + "'", {p});
  }

  bool is_open(PointSet U) const { return index_.count(U) != 0; }
  /// Frame element of an open set.
  Elem element(PointSet U) const {
    auto it = index_.find(U);
    if (it == index_.end()) throw Error(ErrorKind::UnknownElement, set_name(U) + " is not open");
    return it->second;
  }
  PointSet open_of(Elem a) const { return opens_.at(a); }
  const FramePtr& frame() const noexcept { return frame_; }

  /// Largest open subset.
  PointSet interior(PointSet A) const {
    PointSet acc = 0;
    for (PointSet U : opens_)
      if ((U & ~A) == 0) acc |= U;
    return acc;
  }

  /// Smallest closed superset.
  PointSet closure(PointSet A) const { return all() & ~interior(all() & ~A); }

  std::string set_name(PointSet A) const {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (A >> i & 1) {
        if (!first) s += ",";
        s += points_[i];
        first = false;
      }
    return s + "}";
  }

 private:
  std::string name_;
  std::vector<std::string> points_;
  std::vector<PointSet> opens_;
  std::map<PointSet, Elem> index_;
  FramePtr frame_;
};

using SpacePtr = std::shared_ptr<const FiniteSpace>;

inline FramePtr open_frame(const FiniteSpace& X) { return X.frame(); }

/// Every point has an open neighbourhood U with U∖{x} open.
inline bool is_TD(const FiniteSpace& X) {
  for (std::size_t i = 0; i < X.size(); ++i) {
    const PointSet x = PointSet(1) << i;
    bool ok = false;
    for (PointSet U : X.opens()) ok = ok || ((U & x) && X.is_open(U & ~x));
    if (!ok) return false;
  }
  return true;
}

/// All singletons closed.
inline bool is_T1(const FiniteSpace& X) {
  for (std::size_t i = 0; i < X.size(); ++i)
    if (!X.is_open(X.all() & ~(PointSet(1) << i))) return false;
  return true;
}

inline std::vector<std::string> default_point_names(std::size_t n) {
  static const char* const kNames[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(i < 8 ? kNames[i] : "x" + std::to_string(i));
  return out;
}

inline SpacePtr discrete_space(std::size_t n, std::string name = "") {
  std::vector<PointSet> opens;
  for (PointSet U = 0; U < (PointSet(1) << n); ++U) opens.push_back(U);
  return std::make_shared<const FiniteSpace>(default_point_names(n), std::move(opens),
                                             name.empty() ? "D" + std::to_string(n) + "pt" : std::move(name));
}

/// Every T0 topology on n labeled points (n ≤ 4).
inline std::vector<SpacePtr> all_T0_spaces(std::size_t n) {
  if (n > 4) throw Error(ErrorKind::LimitExceeded, "T0 space enumeration is limited to 4 points");
  std::vector<SpacePtr> out;
  const PointSet all = PointSet((1u << n) - 1);
  std::vector<PointSet> middle;
  for (PointSet U = 1; U < all; ++U) middle.push_back(U);
  const std::uint32_t total = 1u << middle.size();
  for (std::uint32_t bits = 0; bits < total; ++bits) {
    std::vector<PointSet> opens{0, all};
    for (std::size_t k = 0; k < middle.size(); ++k)
      if (bits >> k & 1) opens.push_back(middle[k]);
    try {
      out.push_back(std::make_shared<const FiniteSpace>(default_point_names(n), opens,
                                                        "T" + std::to_string(n) + "_" + std::to_string(out.size())));
    } catch (const Error&) {
    }
  }
  return out;
}

}  // namespace pfr
