#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pfr/error.hpp"

namespace pfr {

/// Index of an element inside its frame; names are kept alongside for I/O.
using Elem = std::uint32_t;

/// Raw operation tables of a finite frame, row-major n x n (pstar is length n).
struct FrameTables {
  std::vector<std::uint8_t> leq;
  std::vector<Elem> meet;
  std::vector<Elem> join;
  std::vector<Elem> arrow;
  std::vector<Elem> pstar;
  Elem bottom = 0;
  Elem top = 0;
};

/// A finite distributive lattice with cached Heyting operations.
///
/// Finite distributive lattices are complete and satisfy the infinite
/// distributive law trivially, so they are exactly the finite frames.
/// Instances are immutable and shared through FramePtr.
class FiniteFrame {
 public:
  FiniteFrame(std::string name, std::vector<std::string> names, FrameTables tables)
      : name_(std::move(name)), names_(std::move(names)), t_(std::move(tables)) {
    for (Elem i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name_of(Elem a) const { return names_.at(a); }
  const FrameTables& tables() const noexcept { return t_; }

  std::optional<Elem> find(std::string_view element) const {
    auto it = index_.find(std::string(element));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Elem at(std::string_view element) const {
    if (auto e = find(element)) return *e;
    throw Error(ErrorKind::UnknownElement, "no element '" + std::string(element) + "' in " + name_,
                {std::string(element)});
  }

  void require(Elem a) const {
    if (a >= size())
      throw Error(ErrorKind::UnknownElement, "element index " + std::to_string(a) + " out of range in " + name_);
  }

  Elem bottom() const noexcept { return t_.bottom; }
  Elem top() const noexcept { return t_.top; }
  bool leq(Elem a, Elem b) const { return t_.leq[a * size() + b] != 0; }
  Elem meet(Elem a, Elem b) const { return t_.meet[a * size() + b]; }
  Elem join(Elem a, Elem b) const { return t_.join[a * size() + b]; }
  Elem arrow(Elem a, Elem b) const { return t_.arrow[a * size() + b]; }
  Elem pstar(Elem a) const { return t_.pstar[a]; }
  Elem pstar2(Elem a) const { return pstar(pstar(a)); }

  template <class Range>
  Elem meet_all(const Range& xs) const {
    Elem acc = top();
    for (Elem x : xs) acc = meet(acc, x);
    return acc;
  }

  template <class Range>
  Elem join_all(const Range& xs) const {
    Elem acc = bottom();
    for (Elem x : xs) acc = join(acc, x);
    return acc;
  }

  /// Cover pairs (x, y): x < y with nothing strictly between.
  std::vector<std::pair<Elem, Elem>> covers() const {
    std::vector<std::pair<Elem, Elem>> out;
    const auto n = static_cast<Elem>(size());
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        if (x == y || !leq(x, y)) continue;
        bool direct = true;
        for (Elem z = 0; z < n && direct; ++z)
          if (z != x && z != y && leq(x, z) && leq(z, y)) direct = false;
        if (direct) out.emplace_back(x, y);
      }
    return out;
  }

 private:
  std::string name_;
  std::vector<std::string> names_;
  FrameTables t_;
  std::unordered_map<std::string, Elem> index_;
};

using FramePtr = std::shared_ptr<const FiniteFrame>;

enum class RelationKind { covers, full };

namespace detail {

inline std::vector<std::uint8_t> reflexive_transitive_closure(std::size_t n, std::vector<std::uint8_t> rel) {
  for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel[k * n + j]) rel[i * n + j] = 1;
  return rel;
}

}  // namespace detail

/// Builds a frame from a full order relation given as an n x n matrix.
/// Throws Error naming the first violated law.
inline FramePtr frame_from_order(std::string name, std::vector<std::string> names, std::vector<std::uint8_t> order) {
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorKind::EmptyCarrier, "frame '" + name + "' has no elements");
  auto leq = detail::reflexive_transitive_closure(n, std::move(order));
  auto L = [&](std::size_t a, std::size_t b) { return leq[a * n + b] != 0; };

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (L(a, b) && L(b, a))
        throw Error(ErrorKind::NotAPoset, "cycle through '" + names[a] + "' and '" + names[b] + "'", {names[a], names[b]});

  FrameTables t;
  t.leq = leq;
  std::optional<Elem> bottom, top;
  for (Elem a = 0; a < n; ++a) {
    bool below_all = true, above_all = true;
    for (Elem b = 0; b < n; ++b) {
      below_all = below_all && L(a, b);
      above_all = above_all && L(b, a);
    }
    if (below_all) bottom = a;
    if (above_all) top = a;
  }
  if (!bottom) throw Error(ErrorKind::NoBottom, "frame '" + name + "' has no least element");
  if (!top) throw Error(ErrorKind::NoTop, "frame '" + name + "' has no greatest element");
  t.bottom = *bottom;
  t.top = *top;

  t.meet.assign(n * n, 0);
  t.join.assign(n * n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      std::optional<Elem> glb, lub;
      for (Elem x = 0; x < n; ++x) {
        if (L(x, a) && L(x, b)) {
          bool greatest = true;
          for (Elem y = 0; y < n && greatest; ++y)
            if (L(y, a) && L(y, b) && !L(y, x)) greatest = false;
          if (greatest) glb = x;
        }
        if (L(a, x) && L(b, x)) {
          bool least = true;
          for (Elem y = 0; y < n && least; ++y)
            if (L(a, y) && L(b, y) && !L(x, y)) least = false;
          if (least) lub = x;
        }
      }
      if (!glb || !lub)
        throw Error(ErrorKind::NotALattice,
                    std::string(glb ? "no join" : "no meet") + " for '" + names[a] + "' and '" + names[b] + "'",
                    {names[a], names[b]});
      t.meet[a * n + b] = *glb;
      t.join[a * n + b] = *lub;
    }

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        Elem lhs = t.meet[a * n + t.join[b * n + c]];
        Elem rhs = t.join[t.meet[a * n + b] * n + t.meet[a * n + c]];
        if (lhs != rhs)
          throw Error(ErrorKind::NotDistributive,
                      "a∧(b∨c) ≠ (a∧b)∨(a∧c) at (" + names[a] + ", " + names[b] + ", " + names[c] + ")",
                      {names[a], names[b], names[c]});
      }

  // In a finite distributive lattice {x : x∧a ≤ b} is closed under joins, so its join is its maximum.
  t.arrow.assign(n * n, 0);
  t.pstar.assign(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem acc = t.bottom;
      for (Elem x = 0; x < n; ++x)
        if (L(t.meet[x * n + a], b)) acc = t.join[acc * n + x];
      t.arrow[a * n + b] = acc;
    }
  for (Elem a = 0; a < n; ++a) t.pstar[a] = t.arrow[a * n + t.bottom];

  return std::make_shared<const FiniteFrame>(std::move(name), std::move(names), std::move(t));
}

/// Validates a frame given by named elements and a relation (cover pairs or the full order).
inline FramePtr validate_frame(std::string name, std::vector<std::string> elements,
                               const std::vector<std::pair<std::string, std::string>>& relation,
                               RelationKind kind = RelationKind::covers) {
  if (elements.empty()) throw Error(ErrorKind::EmptyCarrier, "frame '" + name + "' has no elements");
  std::unordered_map<std::string, Elem> index;
  for (Elem i = 0; i < elements.size(); ++i)
    if (!index.emplace(elements[i], i).second)
      throw Error(ErrorKind::DuplicateElement, "element '" + elements[i] + "' listed twice", {elements[i]});
  const std::size_t n = elements.size();
  std::vector<std::uint8_t> order(n * n, 0);
  auto lookup = [&](const std::string& e) {
    auto it = index.find(e);
    if (it == index.end()) throw Error(ErrorKind::UnknownElement, "relation mentions unknown element '" + e + "'", {e});
    return it->second;
  };
  for (const auto& [lo, hi] : relation) {
    Elem x = lookup(lo), y = lookup(hi);
    if (kind == RelationKind::covers && x == y)
      throw Error(ErrorKind::NotAPoset, "element '" + lo + "' covers itself", {lo});
    order[x * n + y] = 1;
  }
  return frame_from_order(std::move(name), std::move(elements), std::move(order));
}

/// First law violated by a frame's tables, if any; used to audit raw or mutated tables.
struct LawViolation {
  std::string law;
  std::vector<Elem> witness;
};

inline std::optional<LawViolation> check_laws(const FiniteFrame& F) {
  const auto n = static_cast<Elem>(F.size());
  const auto& t = F.tables();
  if (t.leq.size() != std::size_t(n) * n || t.meet.size() != std::size_t(n) * n || t.join.size() != std::size_t(n) * n ||
      t.arrow.size() != std::size_t(n) * n || t.pstar.size() != n || t.bottom >= n || t.top >= n)
    return LawViolation{"table-shape", {}};
  for (Elem a = 0; a < n; ++a) {
    if (F.pstar(a) >= n) return LawViolation{"table-range", {a}};
    for (Elem b = 0; b < n; ++b)
      if (F.meet(a, b) >= n || F.join(a, b) >= n || F.arrow(a, b) >= n) return LawViolation{"table-range", {a, b}};
  }
  for (Elem a = 0; a < n; ++a) {
    if (!F.leq(a, a)) return LawViolation{"reflexivity", {a}};
    if (!F.leq(F.bottom(), a)) return LawViolation{"bottom", {a}};
    if (!F.leq(a, F.top())) return LawViolation{"top", {a}};
    for (Elem b = 0; b < n; ++b) {
      if (a != b && F.leq(a, b) && F.leq(b, a)) return LawViolation{"antisymmetry", {a, b}};
      for (Elem c = 0; c < n; ++c)
        if (F.leq(a, b) && F.leq(b, c) && !F.leq(a, c)) return LawViolation{"transitivity", {a, b, c}};
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem m = F.meet(a, b), j = F.join(a, b);
      if (!F.leq(m, a) || !F.leq(m, b)) return LawViolation{"meet-lower-bound", {a, b}};
      if (!F.leq(a, j) || !F.leq(b, j)) return LawViolation{"join-upper-bound", {a, b}};
      for (Elem x = 0; x < n; ++x) {
        if (F.leq(x, a) && F.leq(x, b) && !F.leq(x, m)) return LawViolation{"meet-greatest", {a, b, x}};
        if (F.leq(a, x) && F.leq(b, x) && !F.leq(j, x)) return LawViolation{"join-least", {a, b, x}};
      }
    }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (F.meet(a, F.join(b, c)) != F.join(F.meet(a, b), F.meet(a, c))) return LawViolation{"distributivity", {a, b, c}};
        if (F.leq(F.meet(a, b), c) != F.leq(a, F.arrow(b, c))) return LawViolation{"heyting-adjunction", {a, b, c}};
      }
  for (Elem a = 0; a < n; ++a) {
    if (F.pstar(a) != F.arrow(a, F.bottom())) return LawViolation{"pseudocomplement", {a}};
    if (F.pstar(F.pstar(F.pstar(a))) != F.pstar(a)) return LawViolation{"triple-star", {a}};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Element predicates

inline bool is_dense(const FiniteFrame& F, Elem a) {
  F.require(a);
  return F.pstar(a) == F.bottom();
}

inline bool is_complemented(const FiniteFrame& F, Elem a) {
  F.require(a);
  return F.join(a, F.pstar(a)) == F.top();
}

inline bool is_regular(const FiniteFrame& F, Elem a) {
  F.require(a);
  return F.pstar2(a) == a;
}

inline bool is_boolean(const FiniteFrame& F) {
  for (Elem a = 0; a < F.size(); ++a)
    if (!is_complemented(F, a)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Frame predicates

struct SubfitResult {
  bool subfit = true;
  /// First pair a ≰ b with no c such that a∨c = 1 ≠ b∨c.
  std::optional<std::pair<Elem, Elem>> certificate;
};

inline bool has_subfit_witness(const FiniteFrame& F, Elem a, Elem b) {
  for (Elem c = 0; c < F.size(); ++c)
    if (F.join(a, c) == F.top() && F.join(b, c) != F.top()) return true;
  return false;
}

inline SubfitResult is_subfit(const FiniteFrame& F) {
  for (Elem a = 0; a < F.size(); ++a)
    for (Elem b = 0; b < F.size(); ++b)
      if (!F.leq(a, b) && !has_subfit_witness(F, a, b)) return {false, std::make_pair(a, b)};
  return {};
}

struct ExtremalResult {
  bool extremally_disconnected = true;
  std::optional<Elem> witness;
};

inline ExtremalResult is_extremally_disconnected(const FiniteFrame& F) {
  for (Elem a = 0; a < F.size(); ++a)
    if (F.join(F.pstar(a), F.pstar2(a)) != F.top()) return {false, a};
  return {};
}

/// Relation b ≺ a (b* ∨ a = 1), row-major.
inline std::vector<std::uint8_t> rather_below(const FiniteFrame& F) {
  const std::size_t n = F.size();
  std::vector<std::uint8_t> rel(n * n, 0);
  for (Elem b = 0; b < n; ++b)
    for (Elem a = 0; a < n; ++a) rel[b * n + a] = F.join(F.pstar(b), a) == F.top();
  return rel;
}

/// Completely-below relation on a finite carrier: the largest interpolative
/// relation inside ≺, reached by iterating R ↦ {(b,a) ∈ R : ∃c. bRc ∧ cRa}.
/// A ℚ∩[0,1]-indexed chain is an interpolating family, and every interpolative
/// subrelation of ≺ yields such chains by dyadic refinement, so the fixpoint
/// is exactly ≺≺.
inline std::vector<std::uint8_t> completely_below(const FiniteFrame& F) {
  const std::size_t n = F.size();
  auto rel = rather_below(F);
  for (bool changed = true; changed;) {
    changed = false;
    auto next = rel;
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t a = 0; a < n; ++a) {
        if (!rel[b * n + a]) continue;
        bool interpolated = false;
        for (std::size_t c = 0; c < n && !interpolated; ++c) interpolated = rel[b * n + c] && rel[c * n + a];
        if (!interpolated) {
          next[b * n + a] = 0;
          changed = true;
        }
      }
    rel = std::move(next);
  }
  return rel;
}

inline bool is_completely_regular(const FiniteFrame& F) {
  const std::size_t n = F.size();
  auto cb = completely_below(F);
  for (Elem a = 0; a < n; ++a) {
    Elem acc = F.bottom();
    for (Elem b = 0; b < n; ++b)
      if (cb[b * n + a]) acc = F.join(acc, b);
    if (acc != a) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Maps

struct FrameMap {
  FramePtr source;
  FramePtr target;
  std::vector<Elem> assignment;

  Elem operator()(Elem a) const { return assignment.at(a); }
};

/// True iff the map preserves 0, 1, binary meets and binary joins
/// (on finite frames binary joins give all joins).
inline bool check_hom(const FrameMap& h) {
  const FiniteFrame& S = *h.source;
  const FiniteFrame& T = *h.target;
  if (h.assignment.size() != S.size()) return false;
  for (Elem v : h.assignment)
    if (v >= T.size()) return false;
  if (h(S.bottom()) != T.bottom() || h(S.top()) != T.top()) return false;
  for (Elem a = 0; a < S.size(); ++a)
    for (Elem b = 0; b < S.size(); ++b) {
      if (h(S.meet(a, b)) != T.meet(h(a), h(b))) return false;
      if (h(S.join(a, b)) != T.join(h(a), h(b))) return false;
    }
  return true;
}

inline FrameMap identity_map(const FramePtr& F) {
  FrameMap id{F, F, {}};
  for (Elem a = 0; a < F->size(); ++a) id.assignment.push_back(a);
  return id;
}

/// The Boolean algebra of regular elements a = a** with the quotient β: a ↦ a**.
struct Booleanization {
  FramePtr parent;
  FramePtr frame;
  std::vector<Elem> beta;       // parent element -> element of frame
  std::vector<Elem> inclusion;  // element of frame -> parent element

  FrameMap beta_map() const { return FrameMap{parent, frame, beta}; }
};

inline Booleanization booleanization(const FramePtr& F) {
  const FiniteFrame& L = *F;
  Booleanization out;
  out.parent = F;
  std::vector<Elem> position(L.size(), 0);
  std::vector<std::string> names;
  for (Elem a = 0; a < L.size(); ++a)
    if (L.pstar2(a) == a) {
      position[a] = static_cast<Elem>(out.inclusion.size());
      out.inclusion.push_back(a);
      names.push_back(L.name_of(a));
    }
  const std::size_t m = out.inclusion.size();
  FrameTables t;
  t.leq.assign(m * m, 0);
  t.meet.assign(m * m, 0);
  t.join.assign(m * m, 0);
  t.arrow.assign(m * m, 0);
  t.pstar.assign(m, 0);
  for (Elem i = 0; i < m; ++i) {
    const Elem a = out.inclusion[i];
    t.pstar[i] = position[L.pstar(a)];
    for (Elem j = 0; j < m; ++j) {
      const Elem b = out.inclusion[j];
      t.leq[i * m + j] = L.leq(a, b);
      t.meet[i * m + j] = position[L.meet(a, b)];
      t.join[i * m + j] = position[L.pstar2(L.join(a, b))];
      t.arrow[i * m + j] = position[L.arrow(a, b)];  // regular b makes a → b regular
    }
  }
  t.bottom = position[L.bottom()];
  t.top = position[L.top()];
  out.frame = std::make_shared<const FiniteFrame>("B(" + L.name() + ")", std::move(names), std::move(t));
  for (Elem a = 0; a < L.size(); ++a) out.beta.push_back(position[L.pstar2(a)]);
  return out;
}

}  // namespace pfr
