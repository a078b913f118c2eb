#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfr/error.hpp"
#include "pfr/frame.hpp"
#include "pfr/rational.hpp"
#include "pfr/sublocale.hpp"

namespace pfr {

enum class TrailKind { lower, upper };
enum class Side { at, left_limit, right_limit };

/// Finite rational step map ℚ → M.
///
/// A lower trail takes values[i] on [b_i, b_{i+1}) (right-continuous, antitone);
/// an upper trail takes values[i] on (b_i, b_{i+1}] (left-continuous, isotone).
struct Trail {
  TrailKind kind = TrailKind::lower;
  std::vector<Rational> breakpoints;
  std::vector<Elem> values{0};

  friend bool operator==(const Trail& a, const Trail& b) {
    return a.kind == b.kind && a.breakpoints == b.breakpoints && a.values == b.values;
  }
};

inline Elem eval(const Trail& t, const Rational& q, Side side = Side::at) {
  if (side == Side::at) side = t.kind == TrailKind::lower ? Side::right_limit : Side::left_limit;
  const auto& b = t.breakpoints;
  auto it = side == Side::right_limit ? std::upper_bound(b.begin(), b.end(), q) : std::lower_bound(b.begin(), b.end(), q);
  return t.values[static_cast<std::size_t>(it - b.begin())];
}

/// Drops breakpoints whose two sides carry the same value.
inline Trail canonical(Trail t) {
  Trail out{t.kind, {}, {t.values.front()}};
  for (std::size_t i = 0; i < t.breakpoints.size(); ++i)
    if (t.values[i + 1] != out.values.back()) {
      out.breakpoints.push_back(t.breakpoints[i]);
      out.values.push_back(t.values[i + 1]);
    }
  return out;
}

/// Open-cell view of a function on a partition b_1 < … < b_m: cell j is the
/// open interval (b_j, b_{j+1}) with b_0 = −∞ and b_{m+1} = +∞, and carries the
/// lower value L[j] and upper value U[j] taken there. At a breakpoint b_j the
/// lower value is L[j] and the upper value is U[j-1]; so the pair of vectors
/// determines the function completely.
struct Cells {
  std::vector<Rational> bps;
  std::vector<Elem> L;
  std::vector<Elem> U;

  std::size_t count() const { return L.size(); }
};

inline std::vector<Rational> merge_breakpoints(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// An extended partial real function: a frame homomorphism out of the frame
/// of extended partial reals, stored as a canonical pair of trails.
/// Functions valued in a sublocale frame keep a handle to it.
class ExtPartialRealFn {
 public:
  ExtPartialRealFn(FramePtr codomain, Trail lower, Trail upper, SublocaleFramePtr cos = nullptr)
      : codomain_(std::move(codomain)), cos_(std::move(cos)) {
    if (!codomain_) throw Error(ErrorKind::SchemaError, "function without codomain");
    if (cos_ && cos_->frame() != codomain_)
      throw Error(ErrorKind::MixedCodomains, "sublocale frame handle does not match the codomain");
    lower.kind = TrailKind::lower;
    upper.kind = TrailKind::upper;
    validate(lower, "lower");
    validate(upper, "upper");
    lower_ = canonical(std::move(lower));
    upper_ = canonical(std::move(upper));
    const Cells c = cells();
    for (std::size_t j = 0; j < c.count(); ++j)
      if (codomain_->meet(c.L[j], c.U[j]) != codomain_->bottom())
        throw Error(ErrorKind::NotDisjoint, "lower and upper values overlap on cell " + std::to_string(j),
                    {codomain_->name_of(c.L[j]), codomain_->name_of(c.U[j])});
  }

  static ExtPartialRealFn from_cells(FramePtr codomain, const Cells& c, SublocaleFramePtr cos = nullptr) {
    return ExtPartialRealFn(std::move(codomain), Trail{TrailKind::lower, c.bps, c.L}, Trail{TrailKind::upper, c.bps, c.U},
                            std::move(cos));
  }

  const FramePtr& codomain() const noexcept { return codomain_; }
  const FiniteFrame& M() const noexcept { return *codomain_; }
  const SublocaleFramePtr& cos() const noexcept { return cos_; }
  const Trail& lower() const noexcept { return lower_; }
  const Trail& upper() const noexcept { return upper_; }

  /// f(r,—) and f(—,s).
  Elem lower_at(const Rational& r, Side side = Side::at) const { return eval(lower_, r, side); }
  Elem upper_at(const Rational& s, Side side = Side::at) const { return eval(upper_, s, side); }

  /// Cell view on the merged breakpoints of both trails.
  Cells cells() const { return cells_on(merge_breakpoints(lower_.breakpoints, upper_.breakpoints)); }

  /// Cell view on any refinement of the function's own breakpoints.
  Cells cells_on(const std::vector<Rational>& bps) const {
    Cells c{bps, {}, {}};
    const std::size_t m = bps.size();
    for (std::size_t j = 0; j <= m; ++j) {
      c.L.push_back(j == 0 ? lower_.values.front() : lower_at(bps[j - 1], Side::right_limit));
      c.U.push_back(j == m ? upper_.values.back() : upper_at(bps[j], Side::left_limit));
    }
    return c;
  }

  const SublocaleFrame& sublocales() const {
    if (!cos_) throw Error(ErrorKind::CodomainNotSublocaleFrame, "codomain " + codomain_->name() + " is not a sublocale frame");
    return *cos_;
  }

  friend bool operator==(const ExtPartialRealFn& f, const ExtPartialRealFn& g) {
    return f.codomain_ == g.codomain_ && f.lower_ == g.lower_ && f.upper_ == g.upper_;
  }
  friend bool operator!=(const ExtPartialRealFn& f, const ExtPartialRealFn& g) { return !(f == g); }

 private:
  void validate(const Trail& t, const char* which) const {
    if (t.values.size() != t.breakpoints.size() + 1)
      throw Error(ErrorKind::SchemaError, std::string(which) + " trail needs one more value than breakpoints");
    for (std::size_t i = 1; i < t.breakpoints.size(); ++i)
      if (!(t.breakpoints[i - 1] < t.breakpoints[i]))
        throw Error(ErrorKind::SchemaError, std::string(which) + " breakpoints are not strictly increasing");
    for (Elem v : t.values) codomain_->require(v);
    for (std::size_t i = 1; i < t.values.size(); ++i) {
      const bool ok = t.kind == TrailKind::lower ? codomain_->leq(t.values[i], t.values[i - 1])
                                                 : codomain_->leq(t.values[i - 1], t.values[i]);
      if (!ok)
        throw Error(ErrorKind::NotMonotone,
                    std::string(which) + " trail is not " + (t.kind == TrailKind::lower ? "antitone" : "isotone") +
                        " at breakpoint " + to_string(t.breakpoints[i - 1]),
                    {codomain_->name_of(t.values[i - 1]), codomain_->name_of(t.values[i])});
    }
  }

  FramePtr codomain_;
  SublocaleFramePtr cos_;
  Trail lower_, upper_;
};

using Fn = ExtPartialRealFn;

namespace detail {

inline void same_codomain(const Fn& f, const Fn& g) {
  if (f.codomain() != g.codomain())
    throw Error(ErrorKind::MixedCodomains, "functions over " + f.M().name() + " and " + g.M().name() + " combined");
}

inline std::vector<Rational> merged(const std::vector<Fn>& fs) {
  std::vector<Rational> bps;
  for (const auto& f : fs) {
    bps = merge_breakpoints(bps, f.lower().breakpoints);
    bps = merge_breakpoints(bps, f.upper().breakpoints);
  }
  return bps;
}

/// Applies a cellwise value map, possibly into another codomain.
template <class Op>
Fn map_cells(const Fn& f, const FramePtr& target, const SublocaleFramePtr& cos, Op op) {
  Cells c = f.cells();
  for (std::size_t j = 0; j < c.count(); ++j) std::tie(c.L[j], c.U[j]) = op(c.L[j], c.U[j]);
  return Fn::from_cells(target, c, cos);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Constructors

inline Fn mk_constant(const FramePtr& F, const Rational& r, SublocaleFramePtr cos = nullptr) {
  return Fn(F, Trail{TrailKind::lower, {r}, {F->top(), F->bottom()}}, Trail{TrailKind::upper, {r}, {F->bottom(), F->top()}},
            std::move(cos));
}

inline Fn mk_constant(const SublocaleFramePtr& sf, const Rational& r) { return mk_constant(sf->frame(), r, sf); }

inline Fn mk_plus_infinity(const FramePtr& F, SublocaleFramePtr cos = nullptr) {
  return Fn(F, Trail{TrailKind::lower, {}, {F->top()}}, Trail{TrailKind::upper, {}, {F->bottom()}}, std::move(cos));
}

inline Fn mk_minus_infinity(const FramePtr& F, SublocaleFramePtr cos = nullptr) {
  return Fn(F, Trail{TrailKind::lower, {}, {F->bottom()}}, Trail{TrailKind::upper, {}, {F->top()}}, std::move(cos));
}

inline void require_disjoint(const FiniteFrame& F, Elem a, Elem b) {
  F.require(a);
  F.require(b);
  if (F.meet(a, b) != F.bottom())
    throw Error(ErrorKind::NotDisjoint, F.name_of(a) + " ∧ " + F.name_of(b) + " ≠ 0", {F.name_of(a), F.name_of(b)});
}

/// χ_{a,b}: value 1 where r < 0, a on [0,1), 0 from 1 on; dually b in the upper trail.
inline Fn mk_chi(const FramePtr& F, Elem a, Elem b, SublocaleFramePtr cos = nullptr) {
  require_disjoint(*F, a, b);
  return Fn(F, Trail{TrailKind::lower, {Rational(0), Rational(1)}, {F->top(), a, F->bottom()}},
            Trail{TrailKind::upper, {Rational(0), Rational(1)}, {F->bottom(), b, F->top()}}, std::move(cos));
}

/// χ̄_{a,b}: lower trail constantly a, upper trail constantly b.
inline Fn mk_chi_bar(const FramePtr& F, Elem a, Elem b, SublocaleFramePtr cos = nullptr) {
  require_disjoint(*F, a, b);
  return Fn(F, Trail{TrailKind::lower, {}, {a}}, Trail{TrailKind::upper, {}, {b}}, std::move(cos));
}

/// l_{a,q} over coS(L): lower 1 before q and 𝔠(a) from q on; upper 0 up to q and 𝔬(a) after.
inline Fn mk_l(const SublocaleFramePtr& sf, Elem a, const Rational& q) {
  sf->parent()->require(a);
  const FiniteFrame& C = *sf->frame();
  return Fn(sf->frame(), Trail{TrailKind::lower, {q}, {C.top(), sf->closed_elem(a)}},
            Trail{TrailKind::upper, {q}, {C.bottom(), sf->open_elem(a)}}, sf);
}

/// Pushes a function on L into coS(L) along a ↦ 𝔠(a).
inline Fn embed_closed(const Fn& f, const SublocaleFramePtr& sf) {
  if (f.codomain() != sf->parent())
    throw Error(ErrorKind::MixedCodomains, "function codomain is not the parent of " + sf->frame()->name());
  return detail::map_cells(f, sf->frame(), sf, [&](Elem l, Elem u) {
    return std::make_pair(sf->closed_elem(l), sf->closed_elem(u));
  });
}

// ---------------------------------------------------------------------------
// Order and negation

inline bool le_lower_only(const Fn& f, const Fn& g) {
  detail::same_codomain(f, g);
  const auto bps = detail::merged({f, g});
  const Cells a = f.cells_on(bps), b = g.cells_on(bps);
  for (std::size_t j = 0; j < a.count(); ++j)
    if (!f.M().leq(a.L[j], b.L[j])) return false;
  return true;
}

inline bool le_upper_only(const Fn& f, const Fn& g) {
  detail::same_codomain(f, g);
  const auto bps = detail::merged({f, g});
  const Cells a = f.cells_on(bps), b = g.cells_on(bps);
  for (std::size_t j = 0; j < a.count(); ++j)
    if (!f.M().leq(b.U[j], a.U[j])) return false;
  return true;
}

/// f ≤ g: f(r,—) ≤ g(r,—) and g(—,s) ≤ f(—,s) everywhere. Every point value is
/// an open-cell value of the merged partition, so comparing cells suffices.
inline bool le(const Fn& f, const Fn& g) { return le_lower_only(f, g) && le_upper_only(f, g); }

/// (−f)(r,—) = f(—,−r) and (−f)(—,s) = f(−s,—).
inline Fn neg(const Fn& f) {
  const Cells c = f.cells();
  Cells out;
  for (auto it = c.bps.rbegin(); it != c.bps.rend(); ++it) out.bps.push_back(-*it);
  out.L.assign(c.U.rbegin(), c.U.rend());
  out.U.assign(c.L.rbegin(), c.L.rend());
  return Fn::from_cells(f.codomain(), out, f.cos());
}

// ---------------------------------------------------------------------------
// Class predicates

/// (r2): lower ∨ upper = 1 on every open cell.
inline bool is_extended_continuous(const Fn& f) {
  const Cells c = f.cells();
  for (std::size_t j = 0; j < c.count(); ++j)
    if (f.M().join(c.L[j], c.U[j]) != f.M().top()) return false;
  return true;
}

/// (r5)/(r6): ⋁_r f(r,—) = 1 = ⋁_s f(—,s).
inline bool preserves_r5_r6(const Fn& f) {
  return f.lower().values.front() == f.M().top() && f.upper().values.back() == f.M().top();
}

inline bool is_continuous(const Fn& f) { return is_extended_continuous(f) && preserves_r5_r6(f); }

/// Step form of f(r,—) = ⋁_{p>r} f(—,p)* and its dual: on each open cell the
/// two values are pseudocomplements of each other.
inline bool is_hausdorff(const Fn& f) {
  const Cells c = f.cells();
  for (std::size_t j = 0; j < c.count(); ++j)
    if (c.U[j] != f.M().pstar(c.L[j]) || c.L[j] != f.M().pstar(c.U[j])) return false;
  return true;
}

/// Points hitting every breakpoint and every open cell twice.
inline std::vector<Rational> representative_points(const std::vector<Rational>& bps) {
  if (bps.empty()) return {Rational(0), Rational(1)};
  std::vector<Rational> pts{bps.front() - 2, bps.front() - 1};
  for (std::size_t j = 0; j < bps.size(); ++j) {
    pts.push_back(bps[j]);
    if (j + 1 < bps.size()) {
      const Rational w = bps[j + 1] - bps[j];
      pts.push_back(bps[j] + w / 3);
      pts.push_back(bps[j] + 2 * w / 3);
    }
  }
  pts.push_back(bps.back() + 1);
  pts.push_back(bps.back() + 2);
  return pts;
}

/// Defining inequalities f(r,—)* ≤ f(—,s) and f(—,s)* ≤ f(r,—) for all r < s,
/// checked directly over representative points.
inline bool is_hausdorff_oracle(const Fn& f) {
  const auto pts = representative_points(f.cells().bps);
  const FiniteFrame& M = f.M();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t k = i + 1; k < pts.size(); ++k) {
      const Elem l = f.lower_at(pts[i]), u = f.upper_at(pts[k]);
      if (!M.leq(M.pstar(l), u) || !M.leq(M.pstar(u), l)) return false;
    }
  return true;
}

/// ⋀_s f(—,s) = 0 = ⋀_r f(r,—).
inline bool is_real_valued(const Fn& f) {
  return f.lower().values.back() == f.M().bottom() && f.upper().values.front() == f.M().bottom();
}

/// (⋁_r f(r,—))* = 0 = (⋁_s f(—,s))*.
inline bool is_real_valued_star(const Fn& f) {
  return is_dense(f.M(), f.lower().values.front()) && is_dense(f.M(), f.upper().values.back());
}

inline bool all_closed(const SublocaleFrame& sf, const std::vector<Elem>& values) {
  return std::all_of(values.begin(), values.end(), [&](Elem e) { return sf.is_closed(e); });
}

/// Extended-continuous into coS(L) with every f(r,—) closed.
inline bool is_lsc_extended(const Fn& f) {
  const SublocaleFrame& sf = f.sublocales();
  return all_closed(sf, f.lower().values) && is_extended_continuous(f);
}

inline bool is_usc_extended(const Fn& f) {
  const SublocaleFrame& sf = f.sublocales();
  return all_closed(sf, f.upper().values) && is_extended_continuous(f);
}

/// (l1)–(l3): closed lower values, ⋁_r f(r,—) = 1 and ⋀_r f(r,—) = 0.
inline bool is_lsc(const Fn& f) {
  return is_lsc_extended(f) && f.lower().values.front() == f.M().top() && f.lower().values.back() == f.M().bottom();
}

inline bool is_usc(const Fn& f) {
  return is_usc_extended(f) && f.upper().values.back() == f.M().top() && f.upper().values.front() == f.M().bottom();
}

// ---------------------------------------------------------------------------
// Lattice operations

inline Fn join_pointwise(const Fn& f, const Fn& g) {
  detail::same_codomain(f, g);
  if (!is_extended_continuous(f) || !is_extended_continuous(g))
    throw Error(ErrorKind::NotInCbar, "pointwise join needs extended-continuous arguments");
  const auto bps = detail::merged({f, g});
  const Cells a = f.cells_on(bps), b = g.cells_on(bps);
  Cells c{bps, {}, {}};
  for (std::size_t j = 0; j < a.count(); ++j) {
    c.L.push_back(f.M().join(a.L[j], b.L[j]));
    c.U.push_back(f.M().meet(a.U[j], b.U[j]));
  }
  return Fn::from_cells(f.codomain(), c, f.cos());
}

inline Fn meet_pointwise(const Fn& f, const Fn& g) { return neg(join_pointwise(neg(f), neg(g))); }

namespace detail {
inline void require_family(const std::vector<Fn>& fs) {
  if (fs.empty()) throw Error(ErrorKind::SchemaError, "empty family");
  for (const auto& f : fs) {
    same_codomain(fs.front(), f);
    if (!is_hausdorff(f)) throw Error(ErrorKind::NotHausdorff, "Hausdorff lattice operation on a non-Hausdorff argument");
  }
}
}  // namespace detail

/// Join among Hausdorff functions: with h(p) = ⋁_i f_i(p,—), the lower trail is
/// ⋁_{p>r} h(p)** and the upper trail ⋁_{q<s} h(q)*; on step trails both
/// joins are read off the open cell next to the point.
inline Fn join_hausdorff(const std::vector<Fn>& fs) {
  detail::require_family(fs);
  const FiniteFrame& M = fs.front().M();
  const auto bps = detail::merged(fs);
  Cells c{bps, std::vector<Elem>(bps.size() + 1, M.bottom()), {}};
  for (const auto& f : fs) {
    const Cells fc = f.cells_on(bps);
    for (std::size_t j = 0; j < c.count(); ++j) c.L[j] = M.join(c.L[j], fc.L[j]);
  }
  for (std::size_t j = 0; j < c.count(); ++j) {
    c.U.push_back(M.pstar(c.L[j]));
    c.L[j] = M.pstar2(c.L[j]);
  }
  return Fn::from_cells(fs.front().codomain(), c, fs.front().cos());
}

inline Fn meet_hausdorff(const std::vector<Fn>& fs) {
  detail::require_family(fs);
  const FiniteFrame& M = fs.front().M();
  const auto bps = detail::merged(fs);
  Cells c{bps, {}, std::vector<Elem>(bps.size() + 1, M.bottom())};
  for (const auto& f : fs) {
    const Cells fc = f.cells_on(bps);
    for (std::size_t j = 0; j < c.U.size(); ++j) c.U[j] = M.join(c.U[j], fc.U[j]);
  }
  for (std::size_t j = 0; j < c.U.size(); ++j) {
    c.L.push_back(M.pstar(c.U[j]));
    c.U[j] = M.pstar2(c.U[j]);
  }
  return Fn::from_cells(fs.front().codomain(), c, fs.front().cos());
}

// ---------------------------------------------------------------------------
// Rescaling between extended and [−1,1]-bounded functions

/// Ψ: breakpoints pass through α(r) = r/(1+|r|); outside [−1,1] the result is
/// pinned to the constants −1 and 1.
inline Fn psi(const Fn& f) {
  const FiniteFrame& M = f.M();
  const Cells c = f.cells();
  Cells out{{Rational(-1)}, {M.top()}, {M.bottom()}};
  for (const auto& b : c.bps) out.bps.push_back(squash(b));
  out.bps.push_back(Rational(1));
  out.L.insert(out.L.end(), c.L.begin(), c.L.end());
  out.U.insert(out.U.end(), c.U.begin(), c.U.end());
  out.L.push_back(M.bottom());
  out.U.push_back(M.top());
  return Fn::from_cells(f.codomain(), out, f.cos());
}

/// Φ = Ψ⁻¹ on functions between the constants −1 and 1.
inline Fn phi(const Fn& g) {
  const FramePtr& F = g.codomain();
  if (!le(mk_constant(F, Rational(-1), g.cos()), g) || !le(g, mk_constant(F, Rational(1), g.cos())))
    throw Error(ErrorKind::OutOfUnitRange, "argument is not between the constants −1 and 1");
  std::vector<Rational> bps = merge_breakpoints(g.cells().bps, {Rational(-1), Rational(1)});
  const Cells c = g.cells_on(bps);
  Cells out;
  for (std::size_t j = 0; j < c.count(); ++j) {
    // Keep the cells strictly inside (−1, 1).
    const bool inside = j >= 1 && bps[j - 1] >= Rational(-1) && j < bps.size() && bps[j] <= Rational(1);
    if (!inside) continue;
    if (!out.L.empty()) out.bps.push_back(unsquash(bps[j - 1]));
    out.L.push_back(c.L[j]);
    out.U.push_back(c.U[j]);
  }
  return Fn::from_cells(F, out, g.cos());
}

// ---------------------------------------------------------------------------
// Booleanization transfer

/// Γ: a ↦ a** on every value, landing in the Booleanization of the codomain.
inline Fn gamma(const Fn& f, const Booleanization& B) {
  if (f.codomain() != B.parent) throw Error(ErrorKind::MixedCodomains, "Booleanization of a different frame");
  if (!is_hausdorff(f)) throw Error(ErrorKind::NotHausdorff, "Γ needs a Hausdorff argument");
  return detail::map_cells(f, B.frame, nullptr, [&](Elem l, Elem u) { return std::make_pair(B.beta[l], B.beta[u]); });
}

/// Δ: values pulled back along the inclusion of the regular elements.
inline Fn delta(const Fn& g, const Booleanization& B) {
  if (g.codomain() != B.frame) throw Error(ErrorKind::MixedCodomains, "function is not valued in " + B.frame->name());
  if (!is_extended_continuous(g)) throw Error(ErrorKind::NotExtContinuous, "Δ needs an extended-continuous argument");
  return detail::map_cells(g, B.parent, nullptr,
                           [&](Elem l, Elem u) { return std::make_pair(B.inclusion[l], B.inclusion[u]); });
}

// ---------------------------------------------------------------------------
// Semicontinuous regularizations over coS(L)

/// Closure of a coS element: 𝔠 of the meet of its carrier.
inline Elem closure_elem(const SublocaleFrame& sf, Elem e) {
  return sf.element(closure(sf.sublocale(e)));
}

/// f°: lower trail p ↦ closure(f(p,—)), upper trail its pseudocomplement.
inline Fn lower_regularization(const Fn& f) {
  const SublocaleFrame& sf = f.sublocales();
  const FiniteFrame& C = f.M();
  return detail::map_cells(f, f.codomain(), f.cos(), [&](Elem l, Elem) {
    const Elem cl = closure_elem(sf, l);
    return std::make_pair(cl, C.pstar(cl));
  });
}

/// f⁻: upper trail q ↦ closure(f(—,q)), lower trail its pseudocomplement.
inline Fn upper_regularization(const Fn& f) {
  const SublocaleFrame& sf = f.sublocales();
  const FiniteFrame& C = f.M();
  return detail::map_cells(f, f.codomain(), f.cos(), [&](Elem, Elem u) {
    const Elem cl = closure_elem(sf, u);
    return std::make_pair(C.pstar(cl), cl);
  });
}

/// Whether f° satisfies (l2): ⋁_r closure(f(r,—)) = 1.
inline bool lower_regularization_l2(const Fn& f) {
  return closure_elem(f.sublocales(), f.lower().values.front()) == f.M().top();
}

// ---------------------------------------------------------------------------
// Cozero elements

inline Elem coz(const Fn& f) {
  if (!is_continuous(f)) throw Error(ErrorKind::NotInC, "cozero of a function outside C");
  return f.M().join(f.lower_at(Rational(0)), f.upper_at(Rational(0)));
}

/// All cozero elements: 1 from functions with 0 inside an open cell, and
/// c ∨ d* for complemented c ≤ d from functions breaking at 0.
inline std::vector<Elem> cozero_elements(const FiniteFrame& F) {
  std::vector<Elem> out{F.top()};
  for (Elem c = 0; c < F.size(); ++c)
    for (Elem d = 0; d < F.size(); ++d)
      if (is_complemented(F, c) && is_complemented(F, d) && F.leq(c, d)) out.push_back(F.join(c, F.pstar(d)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Every cozero element is complemented.
inline bool is_p_frame(const FiniteFrame& F) {
  for (Elem a : cozero_elements(F))
    if (!is_complemented(F, a)) return false;
  return true;
}

}  // namespace pfr
