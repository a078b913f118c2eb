#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "pfr/error.hpp"
#include "pfr/rational.hpp"
#include "pfr/realfn.hpp"
#include "pfr/space.hpp"
#include "pfr/sublocale.hpp"

namespace pfr {

/// Element of ℚ ∪ {−∞, +∞}.
struct XRational {
  enum class Kind { minus_infinity = 0, finite = 1, plus_infinity = 2 };
  Kind kind = Kind::finite;
  Rational value{0};

  static XRational minus_infinity() { return {Kind::minus_infinity, Rational(0)}; }
  static XRational plus_infinity() { return {Kind::plus_infinity, Rational(0)}; }
  static XRational finite(Rational q) { return {Kind::finite, q}; }

  bool is_finite() const { return kind == Kind::finite; }

  friend bool operator==(const XRational& a, const XRational& b) {
    return a.kind == b.kind && (a.kind != Kind::finite || a.value == b.value);
  }
  friend bool operator<(const XRational& a, const XRational& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.kind == Kind::finite && a.value < b.value;
  }
  friend bool operator<=(const XRational& a, const XRational& b) { return !(b < a); }
};

inline std::string to_string(const XRational& x) {
  switch (x.kind) {
    case XRational::Kind::minus_infinity: return "-inf";
    case XRational::Kind::plus_infinity: return "+inf";
    default: return to_string(x.value);
  }
}

inline XRational parse_xrational(std::string_view s) {
  if (s == "-inf" || s == "−∞") return XRational::minus_infinity();
  if (s == "+inf" || s == "inf" || s == "+∞") return XRational::plus_infinity();
  return XRational::finite(parse_rational(s));
}

/// A function from the points of a finite space into ℚ ∪ {±∞}.
struct PointFn {
  SpacePtr space;
  std::vector<XRational> values;

  PointSet where(auto pred) const {
    PointSet A = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (pred(values[i])) A |= PointSet(1) << i;
    return A;
  }
  std::vector<Rational> finite_values() const {
    std::vector<Rational> out;
    for (const auto& v : values)
      if (v.is_finite()) out.push_back(v.value);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  bool is_finite_valued() const {
    return std::all_of(values.begin(), values.end(), [](const XRational& v) { return v.is_finite(); });
  }
  friend bool operator==(const PointFn& a, const PointFn& b) { return a.space == b.space && a.values == b.values; }
};

inline bool pointwise_le(const PointFn& a, const PointFn& b) {
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (!(a.values[i] <= b.values[i])) return false;
  return true;
}

namespace detail {
/// Thresholds r at which {φ > r} (and {φ < r}) can change, plus one below and one above.
inline std::vector<Rational> probe_levels(const PointFn& phi) {
  auto vs = phi.finite_values();
  if (vs.empty()) return {Rational(0)};
  std::vector<Rational> out{vs.front() - 1};
  out.insert(out.end(), vs.begin(), vs.end());
  out.push_back(vs.back() + 1);
  return out;
}
}  // namespace detail

/// φ⁻¹(r, +∞] open for all r ∈ ℚ.
inline bool is_lsc_point(const PointFn& phi) {
  for (const auto& r : detail::probe_levels(phi))
    if (!phi.space->is_open(phi.where([&](const XRational& v) { return XRational::finite(r) < v; }))) return false;
  return true;
}

/// φ⁻¹[−∞, s) open for all s ∈ ℚ.
inline bool is_usc_point(const PointFn& phi) {
  for (const auto& s : detail::probe_levels(phi))
    if (!phi.space->is_open(phi.where([&](const XRational& v) { return v < XRational::finite(s); }))) return false;
  return true;
}

namespace detail {
inline void require_space_frame(const SublocaleFrame& sf, const SpacePtr& X) {
  if (sf.space() != X) throw Error(ErrorKind::NotInducedValued, "sublocale frame was not built over this space");
}
}  // namespace detail

/// Ω(φ): f(r,—) = 𝔰({φ ≤ r}) and f(—,s) = 𝔰({φ ≥ s}) in coS(𝒪X).
inline Fn omega(const PointFn& phi, const SublocaleFramePtr& sf) {
  detail::require_space_frame(*sf, phi.space);
  const FiniteSpace& X = *phi.space;
  if (phi.values.size() != X.size()) throw Error(ErrorKind::SchemaError, "point function is not total");
  auto s = [&](PointSet A) { return sf->element(induced_carrier(X, A)); };
  const auto vs = phi.finite_values();
  Trail lower{TrailKind::lower, vs, {}}, upper{TrailKind::upper, vs, {}};
  lower.values.push_back(s(phi.where([](const XRational& v) { return v == XRational::minus_infinity(); })));
  for (const auto& v : vs) {
    const XRational x = XRational::finite(v);
    lower.values.push_back(s(phi.where([&](const XRational& w) { return w <= x; })));
    upper.values.push_back(s(phi.where([&](const XRational& w) { return x <= w; })));
  }
  upper.values.push_back(s(phi.where([](const XRational& v) { return v == XRational::plus_infinity(); })));
  return Fn(sf->frame(), std::move(lower), std::move(upper), sf);
}

/// Ω⁻¹(f)(x): the least level at which x joins the set inducing f(r,—).
inline PointFn omega_inverse(const Fn& f) {
  const SublocaleFrame& sf = f.sublocales();
  if (!sf.space()) throw Error(ErrorKind::NotInducedValued, "codomain is not the sublocale frame of a space");
  const Trail& t = f.lower();
  std::vector<PointSet> sets;
  for (Elem e : t.values) {
    auto A = sf.induced_tag(e);
    if (!A) throw Error(ErrorKind::NotInducedValued, "value " + f.M().name_of(e) + " is not an induced sublocale");
    sets.push_back(*A);
  }
  PointFn out{sf.space(), std::vector<XRational>(sf.space()->size(), XRational::plus_infinity())};
  for (std::size_t x = 0; x < out.values.size(); ++x)
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (sets[i] >> x & 1) {
        out.values[x] = i == 0 ? XRational::minus_infinity() : XRational::finite(t.breakpoints[i - 1]);
        break;
      }
  return out;
}

/// Value grid for exhaustive sweeps.
struct Grid {
  std::vector<Rational> values;
  bool allow_infinities = false;

  std::vector<XRational> points() const {
    std::vector<XRational> out;
    if (allow_infinities) out.push_back(XRational::minus_infinity());
    for (const auto& q : values) out.push_back(XRational::finite(q));
    if (allow_infinities) out.push_back(XRational::plus_infinity());
    return out;
  }
};

inline constexpr std::size_t kMaxGridFunctions = 5000;

inline std::vector<PointFn> grid_functions(const SpacePtr& X, const Grid& grid, std::size_t cap = kMaxGridFunctions) {
  const auto pts = grid.points();
  std::size_t total = 1;
  for (std::size_t i = 0; i < X->size(); ++i) {
    total *= pts.size();
    if (total > cap)
      throw Error(ErrorKind::GridTooLarge, "grid sweep would visit more than " + std::to_string(cap) + " functions");
  }
  std::vector<PointFn> out;
  std::vector<std::size_t> digits(X->size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    PointFn phi{X, {}};
    for (std::size_t d : digits) phi.values.push_back(pts[d]);
    out.push_back(std::move(phi));
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < pts.size()) break;
      digits[i] = 0;
    }
  }
  return out;
}

struct SweepReport {
  std::size_t functions = 0;
  std::size_t pairs = 0;
  std::vector<std::string> mismatches;
};

inline std::string describe(const PointFn& phi) {
  std::string s = "{";
  for (std::size_t i = 0; i < phi.values.size(); ++i) {
    if (i) s += ", ";
    s += phi.space->points()[i] + ": " + to_string(phi.values[i]);
  }
  return s + "}";
}

/// Exhaustive comparison of point semicontinuity with its pointfree
/// counterpart through Ω over every grid function on X.
inline SweepReport semicontinuity_transfer_check(const SpacePtr& X, const Grid& grid, bool pairwise = true) {
  auto fns = grid_functions(X, grid);
  auto sf = share(all_sublocales(X, 16));
  SweepReport rep;
  rep.functions = fns.size();
  auto miss = [&](const std::string& what, const PointFn& phi) { rep.mismatches.push_back(what + " at " + describe(phi)); };

  std::vector<Fn> images;
  for (const auto& phi : fns) {
    Fn f = omega(phi, sf);
    if (!(omega_inverse(f) == phi)) miss("omega_inverse(omega φ) ≠ φ", phi);
    if (!(omega(omega_inverse(f), sf) == f)) miss("omega(omega_inverse f) ≠ f", phi);
    if (!is_hausdorff(f)) miss("omega φ not Hausdorff", phi);
    const bool lsc = is_lsc_point(phi), usc = is_usc_point(phi), finite = phi.is_finite_valued();
    if (lsc != is_lsc_extended(f)) miss("is_lsc_point ≠ is_lsc_extended∘Ω", phi);
    if (usc != is_usc_extended(f)) miss("is_usc_point ≠ is_usc_extended∘Ω", phi);
    if ((lsc && finite) != is_lsc(f)) miss("(lsc ∧ finite) ≠ is_lsc∘Ω", phi);
    if ((usc && finite) != is_usc(f)) miss("(usc ∧ finite) ≠ is_usc∘Ω", phi);
    if (finite != is_real_valued(f)) miss("finite-valued ≠ is_real_valued∘Ω", phi);
    if (lsc) {
      for (const auto& r : representative_points(f.cells().bps)) {
        const PointSet up = phi.where([&](const XRational& v) { return XRational::finite(r) < v; });
        if (f.lower_at(r) != sf->closed_elem(X->element(up))) miss("Ω φ(r,—) ≠ 𝔠(φ⁻¹(r,∞])", phi);
      }
      const bool no_plus = phi.where([](const XRational& v) { return v == XRational::plus_infinity(); }) == 0;
      if ((f.lower().values.back() == f.M().bottom()) != no_plus) miss("meet condition ≠ no +∞ value", phi);
    }
    images.push_back(std::move(f));
  }
  if (pairwise)
    for (std::size_t i = 0; i < fns.size(); ++i)
      for (std::size_t k = 0; k < fns.size(); ++k) {
        ++rep.pairs;
        if (pointwise_le(fns[i], fns[k]) != le(images[i], images[k]))
          miss("order embedding fails against " + describe(fns[k]), fns[i]);
        if (k <= i) continue;
        PointFn hi{X, {}}, lo{X, {}};
        for (std::size_t x = 0; x < X->size(); ++x) {
          hi.values.push_back(std::max(fns[i].values[x], fns[k].values[x]));
          lo.values.push_back(std::min(fns[i].values[x], fns[k].values[x]));
        }
        if (!(omega(hi, sf) == join_hausdorff({images[i], images[k]}))) miss("Ω(max) ≠ Hausdorff join", fns[i]);
        if (!(omega(lo, sf) == meet_hausdorff({images[i], images[k]}))) miss("Ω(min) ≠ Hausdorff meet", fns[i]);
      }
  return rep;
}

/// The point function equal to p at x and +∞ elsewhere.
inline PointFn g_point(const SpacePtr& X, std::size_t x, const Rational& p) {
  PointFn g{X, std::vector<XRational>(X->size(), XRational::plus_infinity())};
  g.values[x] = XRational::finite(p);
  return g;
}

}  // namespace pfr
