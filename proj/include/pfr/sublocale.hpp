#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pfr/error.hpp"
#include "pfr/frame.hpp"
#include "pfr/space.hpp"

namespace pfr {

/// Subset of a frame's elements, bit a = element a.
using Carrier = std::uint64_t;

inline constexpr std::size_t kDefaultSublocaleLimit = 7;

inline bool in(Carrier S, Elem a) { return (S >> a) & 1; }
inline Carrier bit(Elem a) { return Carrier(1) << a; }

/// A subset of a frame closed under all meets and under x → (−).
struct Sublocale {
  FramePtr parent;
  Carrier carrier = 0;

  bool contains(Elem a) const { return in(carrier, a); }
  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    for (Elem a = 0; a < parent->size(); ++a)
      if (contains(a)) out.push_back(a);
    return out;
  }
  friend bool operator==(const Sublocale& x, const Sublocale& y) {
    return x.parent == y.parent && x.carrier == y.carrier;
  }
};

inline std::string carrier_name(const FiniteFrame& L, Carrier S) {
  std::string s = "{";
  bool first = true;
  for (Elem a = 0; a < L.size(); ++a)
    if (in(S, a)) {
      if (!first) s += ",";
      s += L.name_of(a);
      first = false;
    }
  return s + "}";
}

inline Carrier full_carrier(const FiniteFrame& L) {
  return L.size() >= 64 ? ~Carrier(0) : (Carrier(1) << L.size()) - 1;
}

/// Closed under binary meets and contains 1, i.e. closed under all meets.
inline bool meet_closed(const FiniteFrame& L, Carrier S) {
  if (!in(S, L.top())) return false;
  for (Elem a = 0; a < L.size(); ++a)
    if (in(S, a))
      for (Elem b = a + 1; b < L.size(); ++b)
        if (in(S, b) && !in(S, L.meet(a, b))) return false;
  return true;
}

inline bool implication_closed(const FiniteFrame& L, Carrier S) {
  for (Elem s = 0; s < L.size(); ++s)
    if (in(S, s))
      for (Elem x = 0; x < L.size(); ++x)
        if (!in(S, L.arrow(x, s))) return false;
  return true;
}

inline bool is_sublocale_carrier(const FiniteFrame& L, Carrier S) {
  return meet_closed(L, S) && implication_closed(L, S);
}

inline Sublocale make_sublocale(const FramePtr& L, Carrier S) {
  if (S & ~full_carrier(*L)) throw Error(ErrorKind::UnknownElement, "carrier mentions elements outside " + L->name());
  if (!is_sublocale_carrier(*L, S))
    throw Error(ErrorKind::NotASublocale, carrier_name(*L, S) + " is not a sublocale of " + L->name(),
                {carrier_name(*L, S)});
  return {L, S};
}

inline Carrier meet_closure(const FiniteFrame& L, Carrier S) {
  S |= bit(L.top());
  for (bool grew = true; grew;) {
    grew = false;
    for (Elem a = 0; a < L.size(); ++a)
      if (in(S, a))
        for (Elem b = 0; b < L.size(); ++b)
          if (in(S, b) && !in(S, L.meet(a, b))) {
            S |= bit(L.meet(a, b));
            grew = true;
          }
  }
  return S;
}

/// 𝔠(a) = ↑a.
inline Carrier closed_carrier(const FiniteFrame& L, Elem a) {
  Carrier S = 0;
  for (Elem x = 0; x < L.size(); ++x)
    if (L.leq(a, x)) S |= bit(x);
  return S;
}

/// 𝔬(a) = {a → b : b ∈ L}.
inline Carrier open_carrier(const FiniteFrame& L, Elem a) {
  Carrier S = 0;
  for (Elem b = 0; b < L.size(); ++b) S |= bit(L.arrow(a, b));
  return S;
}

inline Sublocale closed(const FramePtr& L, Elem a) {
  L->require(a);
  return make_sublocale(L, closed_carrier(*L, a));
}

inline Sublocale open_(const FramePtr& L, Elem a) {
  L->require(a);
  return make_sublocale(L, open_carrier(*L, a));
}

namespace detail {
inline const FramePtr& common_parent(const std::vector<Sublocale>& xs, const FramePtr& fallback) {
  for (const auto& s : xs)
    if (s.parent != xs.front().parent)
      throw Error(ErrorKind::MixedParents, "sublocales of different frames combined");
  return xs.empty() ? fallback : xs.front().parent;
}
}  // namespace detail

/// Join in S(L) (inclusion order): meets of all subsets of the union.
/// This is the meet of coS(L).
inline Sublocale join_S(const std::vector<Sublocale>& xs, const FramePtr& parent = nullptr) {
  const FramePtr& L = detail::common_parent(xs, parent);
  if (!L) throw Error(ErrorKind::MixedParents, "empty join needs an explicit parent frame");
  Carrier u = 0;
  for (const auto& s : xs) u |= s.carrier;
  return {L, meet_closure(*L, u)};
}

/// Meet in S(L): intersection. This is the join of coS(L).
inline Sublocale meet_S(const std::vector<Sublocale>& xs, const FramePtr& parent = nullptr) {
  const FramePtr& L = detail::common_parent(xs, parent);
  if (!L) throw Error(ErrorKind::MixedParents, "empty meet needs an explicit parent frame");
  Carrier u = full_carrier(*L);
  for (const auto& s : xs) u &= s.carrier;
  return {L, u};
}

/// Closure 𝔠(⋀S).
inline Sublocale closure(const Sublocale& S) {
  const FiniteFrame& L = *S.parent;
  Elem m = L.top();
  for (Elem a = 0; a < L.size(); ++a)
    if (S.contains(a)) m = L.meet(m, a);
  return {S.parent, closed_carrier(L, m)};
}

/// S(L)-join of all open sublocales contained in S.
inline Sublocale interior(const Sublocale& S) {
  const FiniteFrame& L = *S.parent;
  Carrier acc = bit(L.top());
  for (Elem a = 0; a < L.size(); ++a) {
    Carrier o = open_carrier(L, a);
    if ((o & ~S.carrier) == 0) acc |= o;
  }
  return {S.parent, meet_closure(L, acc)};
}

/// Induced sublocale 𝔰(A): opens U with U = ⋃{V open : V∩A = U∩A}.
inline Carrier induced_carrier(const FiniteSpace& X, PointSet A) {
  Carrier S = 0;
  for (PointSet U : X.opens()) {
    PointSet big = 0;
    for (PointSet V : X.opens())
      if ((V & A) == (U & A)) big |= V;
    if (big == U) S |= bit(X.element(U));
  }
  return S;
}

inline Sublocale induced(const SpacePtr& X, PointSet A) {
  if (A & ~X->all()) throw Error(ErrorKind::UnknownElement, "subset mentions points outside " + X->name());
  return make_sublocale(X->frame(), induced_carrier(*X, A));
}

/// All sublocales of a frame as the frame coS(L): ordered by reverse inclusion,
/// so the whole frame L is the bottom and {1} is the top. Elements carry
/// closed/open tags, and induced tags when built over a space.
class SublocaleFrame {
 public:
  const FramePtr& parent() const noexcept { return parent_; }
  const SpacePtr& space() const noexcept { return space_; }
  const FramePtr& frame() const noexcept { return frame_; }
  std::size_t size() const noexcept { return carriers_.size(); }

  Carrier carrier(Elem e) const { return carriers_.at(e); }
  Sublocale sublocale(Elem e) const { return {parent_, carrier(e)}; }

  std::optional<Elem> find(Carrier S) const {
    auto it = index_.find(S);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Elem element(Carrier S) const {
    if (auto e = find(S)) return *e;
    throw Error(ErrorKind::NotASublocale, carrier_name(*parent_, S) + " is not a sublocale of " + parent_->name());
  }
  Elem element(const Sublocale& S) const {
    if (S.parent != parent_) throw Error(ErrorKind::MixedParents, "sublocale of a different frame");
    return element(S.carrier);
  }

  /// 𝔠(a) and 𝔬(a) as elements of coS(L).
  Elem closed_elem(Elem a) const { return closed_.at(a); }
  Elem open_elem(Elem a) const { return open_.at(a); }

  /// Parent element a with e = 𝔠(a), if any.
  std::optional<Elem> closed_tag(Elem e) const { return closed_tag_.at(e); }
  std::optional<Elem> open_tag(Elem e) const { return open_tag_.at(e); }
  /// Point set A with e = 𝔰(A), if built over a space.
  std::optional<PointSet> induced_tag(Elem e) const { return induced_tag_.at(e); }
  bool is_closed(Elem e) const { return closed_tag(e).has_value(); }
  bool is_open(Elem e) const { return open_tag(e).has_value(); }

  /// S(L)-view helpers: order, join and meet under inclusion.
  bool subset(Elem x, Elem y) const { return (carrier(x) & ~carrier(y)) == 0; }
  Elem join_S(Elem x, Elem y) const { return frame_->meet(x, y); }
  Elem meet_S(Elem x, Elem y) const { return frame_->join(x, y); }

  /// Sublocale density (contains 0), distinct from density of an element of coS(L).
  bool contains_bottom(Elem e) const { return in(carrier(e), parent_->bottom()); }

  friend SublocaleFrame all_sublocales(const FramePtr& L, std::size_t limit);
  friend SublocaleFrame all_sublocales(const SpacePtr& X, std::size_t limit);

 private:
  static SublocaleFrame build(const FramePtr& L, std::size_t limit);

  FramePtr parent_;
  SpacePtr space_;
  FramePtr frame_;
  std::vector<Carrier> carriers_;
  std::map<Carrier, Elem> index_;
  std::vector<Elem> closed_, open_;
  std::vector<std::optional<Elem>> closed_tag_, open_tag_;
  std::vector<std::optional<PointSet>> induced_tag_;
};

using SublocaleFramePtr = std::shared_ptr<const SublocaleFrame>;

inline SublocaleFrame SublocaleFrame::build(const FramePtr& Lp, std::size_t limit) {
  const FiniteFrame& L = *Lp;
  if (L.size() > limit)
    throw Error(ErrorKind::LimitExceeded, "sublocale enumeration of a " + std::to_string(L.size()) +
                                              "-element frame exceeds limit " + std::to_string(limit));
  SublocaleFrame out;
  out.parent_ = Lp;
  std::vector<Elem> rest;
  for (Elem a = 0; a < L.size(); ++a)
    if (a != L.top()) rest.push_back(a);
  const std::uint64_t total = std::uint64_t(1) << rest.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Carrier S = bit(L.top());
    for (std::size_t k = 0; k < rest.size(); ++k)
      if (bits >> k & 1) S |= bit(rest[k]);
    if (is_sublocale_carrier(L, S)) out.carriers_.push_back(S);
  }
  std::sort(out.carriers_.begin(), out.carriers_.end(), [](Carrier a, Carrier b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) > std::popcount(b) : a < b;
  });
  const std::size_t n = out.carriers_.size();
  for (Elem e = 0; e < n; ++e) out.index_.emplace(out.carriers_[e], e);

  FrameTables t;
  t.leq.assign(n * n, 0);
  t.meet.assign(n * n, 0);
  t.join.assign(n * n, 0);
  t.arrow.assign(n * n, 0);
  t.pstar.assign(n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Carrier cx = out.carriers_[x], cy = out.carriers_[y];
      t.leq[x * n + y] = (cy & ~cx) == 0;
      t.meet[x * n + y] = out.index_.at(meet_closure(L, cx | cy));
      t.join[x * n + y] = out.index_.at(cx & cy);
    }
  t.bottom = out.index_.at(full_carrier(L));
  t.top = out.index_.at(bit(L.top()));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem acc = t.bottom;
      for (Elem x = 0; x < n; ++x)
        if (t.leq[t.meet[x * n + a] * n + b]) acc = t.join[acc * n + x];
      t.arrow[a * n + b] = acc;
    }
  for (Elem a = 0; a < n; ++a) t.pstar[a] = t.arrow[a * n + t.bottom];

  std::vector<std::string> names;
  for (Carrier S : out.carriers_) names.push_back(carrier_name(L, S));
  out.frame_ = std::make_shared<const FiniteFrame>("coS(" + L.name() + ")", std::move(names), std::move(t));
  if (auto bad = check_laws(*out.frame_))
    throw Error(ErrorKind::NotDistributive, "sublocale system of " + L.name() + " violates " + bad->law);

  out.closed_tag_.assign(n, std::nullopt);
  out.open_tag_.assign(n, std::nullopt);
  out.induced_tag_.assign(n, std::nullopt);
  for (Elem a = 0; a < L.size(); ++a) {
    out.closed_.push_back(out.index_.at(closed_carrier(L, a)));
    out.open_.push_back(out.index_.at(open_carrier(L, a)));
    out.closed_tag_[out.closed_.back()] = a;
    out.open_tag_[out.open_.back()] = a;
  }
  return out;
}

inline SublocaleFrame all_sublocales(const FramePtr& L, std::size_t limit = kDefaultSublocaleLimit) {
  return SublocaleFrame::build(L, limit);
}

inline SublocaleFrame all_sublocales(const SpacePtr& X, std::size_t limit = kDefaultSublocaleLimit) {
  SublocaleFrame out = SublocaleFrame::build(X->frame(), limit);
  out.space_ = X;
  for (PointSet A = 0; A <= X->all(); ++A) {
    Elem e = out.index_.at(induced_carrier(*X, A));
    if (!out.induced_tag_[e]) out.induced_tag_[e] = A;
    if (A == X->all()) break;
  }
  return out;
}

inline SublocaleFramePtr share(SublocaleFrame sf) { return std::make_shared<const SublocaleFrame>(std::move(sf)); }

// ---------------------------------------------------------------------------
// Diagnostics over the sublocale system

/// S equals the S(L)-join of the closed sublocales it contains
/// (equivalently the coS-meet of the 𝔠(a) above S in coS(L)).
inline bool is_meet_of_closed(const SublocaleFrame& sf, Elem e) {
  const FiniteFrame& L = *sf.parent();
  const Carrier S = sf.carrier(e);
  Carrier acc = bit(L.top());
  for (Elem a = 0; a < L.size(); ++a) {
    Carrier c = closed_carrier(L, a);
    if ((c & ~S) == 0) acc |= c;
  }
  return meet_closure(L, acc) == S;
}

/// Every open sublocale is the S(L)-join of the closed sublocales it contains.
inline bool subfit_via_sublocales(const SublocaleFrame& sf) {
  for (Elem a = 0; a < sf.parent()->size(); ++a)
    if (!is_meet_of_closed(sf, sf.open_elem(a))) return false;
  return true;
}

/// The Booleanization is a sublocale, contains 0, and lies inside every sublocale containing 0.
inline bool least_dense_check(const SublocaleFrame& sf) {
  const FiniteFrame& L = *sf.parent();
  Carrier B = 0;
  for (Elem a = 0; a < L.size(); ++a)
    if (L.pstar2(a) == a) B |= bit(a);
  if (!is_sublocale_carrier(L, B) || !in(B, L.bottom())) return false;
  for (Elem e = 0; e < sf.size(); ++e)
    if (sf.contains_bottom(e) && (B & ~sf.carrier(e)) != 0) return false;
  return true;
}

}  // namespace pfr
