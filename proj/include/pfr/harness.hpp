#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pfr/completion.hpp"
#include "pfr/enumerate.hpp"
#include "pfr/io.hpp"
#include "pfr/realfn.hpp"
#include "pfr/sample.hpp"
#include "pfr/spatial.hpp"
#include "pfr/sublocale.hpp"

namespace pfr {

inline constexpr const char* kCatalogueVersion = "1";

struct HarnessConfig {
  std::size_t max_size = 8;        // exhaustive frame checks
  std::size_t sublocale_max = 6;   // checks that build coS(L)
  std::size_t cos_codomain_max = 5;  // checks sampling functions valued in coS(L)
  std::size_t samples = 500;
  std::size_t hausdorff_samples = 1000;
  std::size_t competitors = 200;
  std::size_t competitor_families = 25;
  std::size_t density_samples = 200;
  std::vector<std::uint64_t> seeds{7, 11, 42};
};

enum class Status { pass, fail, observation };

inline const char* name_of(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::observation: return "observation";
  }
  return "?";
}

/// One replayable unit of work: a frame, optional functions, and parameters.
struct Instance {
  FramePtr frame;
  std::vector<Fn> fns;
  json params = json::object();
};

/// nullopt when the instance passes, otherwise a description of the failure.
using Verdict = std::optional<std::string>;

struct CheckResult {
  std::string id;
  std::string anchor;
  Status status = Status::pass;
  std::optional<json> counterexample;
  json stats = json::object();
  double seconds = 0;
};

struct Report {
  std::vector<std::uint64_t> seeds;
  std::vector<CheckResult> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (c.status == Status::fail) return false;
    return true;
  }

  /// Report body; timing lives in a separate top-level object.
  json to_json(bool with_timing = true) const {
    json checks_json = json::array();
    json timing = json::object();
    for (const auto& c : checks) {
      json j{{"id", c.id}, {"paper_anchor", c.anchor}, {"status", name_of(c.status)}};
      if (c.counterexample) j["counterexample"] = *c.counterexample;
      j["stats"] = c.stats;
      checks_json.push_back(j);
      timing[c.id] = c.seconds;
    }
    json out{{"version", kCatalogueVersion}, {"seeds", seeds}, {"checks", checks_json}};
    if (with_timing) out["timing"] = timing;
    return out;
  }
};

/// Stable 64-bit mixing of a seed with labels (FNV-1a over the label bytes).
inline std::uint64_t derive_seed(std::uint64_t seed, const std::string& a, const std::string& b = "") {
  std::uint64_t h = 1469598103934665603ull ^ seed;
  for (const std::string* s : {&a, &b})
    for (unsigned char ch : *s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
  return h;
}

class Context;

struct Check {
  std::string id;
  std::string anchor;
  bool observation = false;
  std::function<void(Context&)> run;
  std::function<Verdict(const Instance&, Registry&)> instance;
};

/// Per-check execution state: counts instances and keeps the first failure.
class Context {
 public:
  Context(const HarnessConfig& cfg, Registry& reg, const Check& check) : cfg_(cfg), reg_(reg), check_(check) {}

  const HarnessConfig& cfg() const { return cfg_; }
  Registry& reg() { return reg_; }

  /// Runs one instance; returns true if it passed.
  bool test(const Instance& inst) {
    ++instances_;
    Verdict v;
    try {
      v = check_.instance(inst, reg_);
    } catch (const Error& e) {
      v = std::string("unexpected error ") + e.what();
    }
    if (!v) return true;
    ++failures_;
    if (!first_) {
      json fns = json::array();
      for (const auto& f : inst.fns) fns.push_back(fn_to_json(f));
      json payload{{"check", check_.id}, {"message", *v}};
      if (inst.frame) payload["frame"] = frame_to_json(*inst.frame, true);
      if (!inst.fns.empty()) payload["codomain"] = inst.fns.front().M().name();
      payload["functions"] = fns;
      payload["params"] = inst.params;
      first_ = payload;
    }
    return false;
  }

  /// Enumerated frames up to n, registered so their names resolve on replay.
  std::vector<FramePtr> frames(std::size_t n) {
    auto fs = enumerate_frames(std::min(n, cfg_.max_size));
    for (auto& F : fs) reg_.add(F);
    // Re-fetch through the registry so every pointer is the registered one.
    std::vector<FramePtr> out;
    for (auto& F : fs) out.push_back(reg_.frame(F->name()));
    return out;
  }

  json& stats() { return stats_; }
  std::size_t instances() const { return instances_; }
  std::size_t failures() const { return failures_; }
  const std::optional<json>& first_failure() const { return first_; }

 private:
  const HarnessConfig& cfg_;
  Registry& reg_;
  const Check& check_;
  std::size_t instances_ = 0, failures_ = 0;
  std::optional<json> first_;
  json stats_ = json::object();
};

namespace checks {

inline Verdict expect(bool ok, const std::string& what) {
  if (ok) return std::nullopt;
  return what;
}

#define PFR_EXPECT(cond, msg) \
  do {                        \
    if (!(cond)) return std::string(msg); \
  } while (0)

inline std::vector<Profile> all_profiles() {
  return {Profile::arbitrary_ic, Profile::hausdorff, Profile::ext_continuous, Profile::real_hausdorff};
}

// --- frame-core -------------------------------------------------------------

inline Verdict frame_laws(const Instance& inst, Registry&) {
  const FiniteFrame& F = *inst.frame;
  if (auto bad = check_laws(F)) return "law '" + bad->law + "' fails";
  for (Elem a = 0; a < F.size(); ++a)
    for (Elem b = 0; b < F.size(); ++b)
      if (F.leq(a, b)) PFR_EXPECT(F.leq(F.pstar(b), F.pstar(a)), "pseudocomplement not antitone");
  // The validator rebuilds identical tables from the order alone.
  auto again = frame_from_order(F.name(), F.names(), F.tables().leq);
  PFR_EXPECT(again->tables().meet == F.tables().meet && again->tables().join == F.tables().join &&
                 again->tables().arrow == F.tables().arrow && again->tables().pstar == F.tables().pstar,
             "validator disagrees with stored tables");
  auto sub = is_subfit(F);
  if (sub.certificate) PFR_EXPECT(!has_subfit_witness(F, sub.certificate->first, sub.certificate->second), "subfit certificate has a witness");
  return std::nullopt;
}

inline Verdict booleanization_laws(const Instance& inst, Registry&) {
  const auto& L = inst.frame;
  auto B = booleanization(L);
  PFR_EXPECT(!check_laws(*B.frame), "Booleanization tables violate a law");
  PFR_EXPECT(is_boolean(*B.frame), "Booleanization is not Boolean");
  PFR_EXPECT(check_hom(B.beta_map()), "a ↦ a** is not a frame homomorphism");
  for (Elem i = 0; i < B.frame->size(); ++i) PFR_EXPECT(B.beta[B.inclusion[i]] == i, "β does not fix regular elements");
  if (is_boolean(*L)) PFR_EXPECT(B.frame->size() == L->size(), "Boolean frame not fixed by Booleanization");
  if (is_boolean(*L)) PFR_EXPECT(is_completely_regular(*L) && is_extremally_disconnected(*L).extremally_disconnected,
                                 "Boolean frame not completely regular and extremally disconnected");
  return std::nullopt;
}

inline Verdict enumeration_count(const Instance& inst, Registry&) {
  const std::size_t n = inst.params.at("size").get<std::size_t>();
  const auto fs = enumerate_frames(n);
  const auto birkhoff = count_by_size(fs);
  const auto brute = census::lattices_of_size(n, true).size();
  const std::size_t got = birkhoff.count(n) ? birkhoff.at(n) : 0;
  for (const auto& F : fs) PFR_EXPECT(!check_laws(*F), "enumerated structure fails the frame laws");
  return expect(got == brute, "size " + std::to_string(n) + ": down-set enumeration " + std::to_string(got) +
                                  " vs brute force " + std::to_string(brute));
}

// --- sublocales -------------------------------------------------------------

inline Verdict spatial_bijection(const Instance& inst, Registry&) {
  auto X = space_from_json(inst.params.at("space"));
  auto sf = all_sublocales(X, 16);
  const std::size_t n = X->size();
  PFR_EXPECT(sf.size() == (std::size_t(1) << n), "number of sublocales is not 2^|X|");
  std::vector<Carrier> s(std::size_t(1) << n);
  std::set<Carrier> distinct;
  for (PointSet A = 0; A < s.size(); ++A) {
    s[A] = induced_carrier(*X, A);
    PFR_EXPECT(is_sublocale_carrier(*X->frame(), s[A]), "induced set is not a sublocale");
    distinct.insert(s[A]);
  }
  PFR_EXPECT(distinct.size() == s.size(), "𝔰 is not injective");
  const FiniteFrame& L = *X->frame();
  for (PointSet A = 0; A < s.size(); ++A)
    for (PointSet B = 0; B < s.size(); ++B) {
      PFR_EXPECT(s[A | B] == meet_closure(L, s[A] | s[B]), "𝔰(A∪B) ≠ 𝔰(A) ∨ 𝔰(B)");
      PFR_EXPECT(s[A & B] == (s[A] & s[B]), "𝔰(A∩B) ≠ 𝔰(A) ∧ 𝔰(B)");
      PFR_EXPECT(((A & ~B) == 0) == ((s[A] & ~s[B]) == 0), "𝔰 does not preserve and reflect inclusion");
    }
  for (PointSet U : X->opens()) {
    PFR_EXPECT(s[U] == open_carrier(L, X->element(U)), "𝔰(U) ≠ 𝔬(U)");
    PFR_EXPECT(s[X->all() & ~U] == closed_carrier(L, X->element(U)), "𝔰(X∖U) ≠ 𝔠(U)");
  }
  return std::nullopt;
}

inline Verdict sublocale_facts(const Instance& inst, Registry&) {
  const FramePtr& Lp = inst.frame;
  const FiniteFrame& L = *Lp;
  auto sf = all_sublocales(Lp, 16);
  const FiniteFrame& C = *sf.frame();
  PFR_EXPECT(!check_laws(C), "coS(L) is not a frame");
  PFR_EXPECT(C.bottom() == sf.element(full_carrier(L)) && C.top() == sf.element(bit(L.top())),
             "coS(L) bounds are not L and {1}");
  const Carrier full = full_carrier(L), one = bit(L.top());
  std::vector<Carrier> c(L.size()), o(L.size());
  for (Elem a = 0; a < L.size(); ++a) {
    c[a] = closed_carrier(L, a);
    o[a] = open_carrier(L, a);
    // (1) complements in S(L): meet {1}, join L.
    PFR_EXPECT((c[a] & o[a]) == one && meet_closure(L, c[a] | o[a]) == full, "𝔠(a), 𝔬(a) are not complements");
    PFR_EXPECT(C.pstar(sf.closed_elem(a)) == sf.open_elem(a) && C.pstar(sf.open_elem(a)) == sf.closed_elem(a),
               "𝔠(a)* ≠ 𝔬(a) in coS(L)");
  }
  // (2), (3): 𝔠(0) = L, 𝔠(1) = {1}, 𝔬(0) = {1}, 𝔬(1) = L.
  PFR_EXPECT(c[L.bottom()] == full && c[L.top()] == one && o[L.bottom()] == one && o[L.top()] == full,
             "closed/open sublocales of 0 and 1");
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b) {
      PFR_EXPECT(meet_closure(L, c[a] | c[b]) == c[L.meet(a, b)], "𝔠(a) ∨ 𝔠(b) ≠ 𝔠(a∧b) in S(L)");
      PFR_EXPECT((o[a] & o[b]) == o[L.meet(a, b)], "𝔬(a) ∧ 𝔬(b) ≠ 𝔬(a∧b) in S(L)");
    }
  const std::uint64_t families = std::uint64_t(1) << L.size();
  for (std::uint64_t fam = 0; fam < families; ++fam) {
    Carrier cm = full, oj = one;
    Elem j = L.bottom();
    for (Elem a = 0; a < L.size(); ++a)
      if (fam >> a & 1) {
        cm &= c[a];
        oj |= o[a];
        j = L.join(j, a);
      }
    PFR_EXPECT(cm == c[j], "⋀ 𝔠(a_i) ≠ 𝔠(⋁ a_i) in S(L)");
    PFR_EXPECT(meet_closure(L, oj) == o[j], "⋁ 𝔬(a_i) ≠ 𝔬(⋁ a_i) in S(L)");
  }
  // a ↦ 𝔠(a) is an injective frame homomorphism L → coS(L).
  FrameMap cl{Lp, sf.frame(), {}};
  for (Elem a = 0; a < L.size(); ++a) cl.assignment.push_back(sf.closed_elem(a));
  PFR_EXPECT(check_hom(cl), "a ↦ 𝔠(a) is not a frame homomorphism into coS(L)");
  PFR_EXPECT(std::set<Elem>(cl.assignment.begin(), cl.assignment.end()).size() == L.size(), "a ↦ 𝔠(a) is not injective");
  // (4) every sublocale is an intersection of sublocales 𝔬(a) ∨ 𝔠(b).
  for (Elem e = 0; e < sf.size(); ++e) {
    const Carrier S = sf.carrier(e);
    Carrier acc = full;
    for (Elem a = 0; a < L.size(); ++a)
      for (Elem b = 0; b < L.size(); ++b) {
        const Carrier ob = meet_closure(L, o[a] | c[b]);
        if ((S & ~ob) == 0) acc &= ob;
      }
    PFR_EXPECT(acc == S, "sublocale is not a meet of 𝔬(a) ∨ 𝔠(b)");
    // Closure and interior.
    const Sublocale sub = sf.sublocale(e);
    Carrier closed_meet = full;
    for (Elem a = 0; a < L.size(); ++a)
      if ((S & ~c[a]) == 0) closed_meet &= c[a];
    PFR_EXPECT(closure(sub).carrier == closed_meet, "closure ≠ meet of closed sublocales above");
    const Carrier in = interior(sub).carrier;
    PFR_EXPECT((in & ~S) == 0, "interior not contained in S");
    for (Elem a = 0; a < L.size(); ++a)
      if ((o[a] & ~S) == 0) PFR_EXPECT((o[a] & ~in) == 0, "interior misses an open sublocale inside S");
  }
  return std::nullopt;
}

inline Verdict isbell_density(const Instance& inst, Registry&) {
  auto sf = all_sublocales(inst.frame, 16);
  return expect(least_dense_check(sf), "Booleanization is not the least dense sublocale");
}

inline Verdict subfit_boolean_lemma(const Instance& inst, Registry&) {
  auto sf = all_sublocales(inst.frame, 16);
  const FiniteFrame& C = *sf.frame();
  bool all_meets = true;
  for (Elem e = 0; e < sf.size(); ++e)
    if (C.pstar2(e) == e && !is_meet_of_closed(sf, e)) all_meets = false;
  const bool subfit = is_subfit(*inst.frame).subfit;
  return expect(subfit == all_meets, std::string("subfit = ") + (subfit ? "true" : "false") +
                                         " but regular elements of coS(L) meets of closed = " + (all_meets ? "true" : "false"));
}

inline Verdict subfit_open_join(const Instance& inst, Registry&) {
  auto sf = all_sublocales(inst.frame, 16);
  return expect(subfit_via_sublocales(sf) == is_subfit(*inst.frame).subfit,
                "open-as-join-of-closed disagrees with element-wise subfitness");
}

inline Verdict cos_boolean(const Instance& inst, Registry&) {
  auto sf = all_sublocales(inst.frame, 16);
  return expect(is_boolean(*sf.frame()), "coS(L) is not Boolean");
}

// --- completion -------------------------------------------------------------

inline Verdict macneille_laws(const Instance& inst, Registry&) {
  const FinitePoset P = poset_from_json(inst.params.at("poset"));
  const Completion c = macneille(P);
  for (Elem a = 0; a < P.size(); ++a)
    for (Elem b = 0; b < P.size(); ++b)
      PFR_EXPECT(P.leq(a, b) == c.lattice.leq(c.embed[a], c.embed[b]), "embedding does not preserve and reflect order");
  PFR_EXPECT(is_join_dense(c.embed, c.lattice) && is_meet_dense(c.embed, c.lattice), "embedding is not dense");
  // Idempotence: completing the completion gives the same lattice.
  std::vector<Elem> all(c.lattice.size());
  for (Elem k = 0; k < all.size(); ++k) all[k] = k;
  const Completion cc = macneille(c.lattice.poset);
  PFR_EXPECT(cc.lattice.size() == c.lattice.size() && isomorphic_over(c.lattice, all, cc.lattice, cc.embed),
             "completion is not idempotent");
  // Uniqueness: every lattice of size ≤ max into which P embeds densely is the completion, over P.
  const std::size_t kmax = inst.params.value("lattice_max", std::size_t(8));
  static const std::vector<std::vector<FiniteLattice>> lattices = [] {
    std::vector<std::vector<FiniteLattice>> out(9);
    for (std::size_t n = 1; n <= 8; ++n)
      for (const auto& code : census::lattices_of_size(n, false))
        if (auto K = as_lattice(FinitePoset{standard_names(n), code})) out[n].push_back(std::move(*K));
    return out;
  }();
  std::size_t dense = 0;
  for (std::size_t n = 1; n <= std::min<std::size_t>(kmax, 8); ++n)
    for (const auto& Kref : lattices[n]) {
      const FiniteLattice* K = &Kref;
      std::optional<std::string> bad;
      for_each_order_embedding(P, *K, [&](const std::vector<Elem>& e) {
        if (bad || !is_join_dense(e, *K) || !is_meet_dense(e, *K)) return;
        ++dense;
        if (!isomorphic_over(c.lattice, c.embed, *K, e)) bad = "dense extension not isomorphic to the completion over P";
      });
      if (bad) return bad;
    }
  PFR_EXPECT(dense >= 1, "the completion itself was not found among lattices");
  return std::nullopt;
}

// --- functions --------------------------------------------------------------

inline std::uint64_t sample_seed(const Context& ctx, std::uint64_t seed, const std::string& check, const FiniteFrame& F) {
  (void)ctx;
  return derive_seed(seed, check, F.name());
}

inline Verdict psi_phi(const Instance& inst, Registry&) {
  const Fn& f = inst.fns.at(0);
  const Fn g = psi(f);
  PFR_EXPECT(phi(g) == f, "Φ(Ψ(f)) ≠ f");
  PFR_EXPECT(psi(phi(g)) == g, "Ψ(Φ(g)) ≠ g");
  PFR_EXPECT(is_hausdorff(f) == is_hausdorff(g), "Ψ does not preserve and reflect Hausdorffness");
  PFR_EXPECT(is_extended_continuous(f) == is_extended_continuous(g), "Ψ does not preserve and reflect extended continuity");
  PFR_EXPECT(le(mk_constant(f.codomain(), Rational(-1), f.cos()), g) && le(g, mk_constant(f.codomain(), Rational(1), f.cos())),
             "Ψ(f) is not between −1 and 1");
  return std::nullopt;
}

/// Direct (r1) and (r2) checks over many rational pairs.
inline bool quantified_r1(const Fn& f, const std::vector<Rational>& pts) {
  for (const auto& r : pts)
    for (const auto& s : pts)
      if (!(r < s) && f.M().meet(f.lower_at(r), f.upper_at(s)) != f.M().bottom()) return false;
  return true;
}

inline bool quantified_r2(const Fn& f, const std::vector<Rational>& pts) {
  for (const auto& r : pts)
    for (const auto& s : pts)
      if (r < s && f.M().join(f.lower_at(r), f.upper_at(s)) != f.M().top()) return false;
  return true;
}

inline std::vector<Rational> dense_points(const Fn& f, std::uint64_t seed, std::size_t extra) {
  auto pts = representative_points(f.cells().bps);
  Sampler s(seed);
  for (std::size_t i = 0; i < extra; ++i) {
    const auto n = static_cast<std::int64_t>(s.below(401)) - 200;
    pts.push_back(Rational(n, 12));
  }
  return pts;
}

inline Verdict hausdorff_local(const Instance& inst, Registry&) {
  const Fn& f = inst.fns.at(0);
  PFR_EXPECT(is_hausdorff(f) == is_hausdorff_oracle(f), "local Hausdorff test disagrees with the defining inequalities");
  const auto pts = dense_points(f, inst.params.value("seed", std::uint64_t(0)), 40);
  PFR_EXPECT(quantified_r1(f, pts), "(r1) fails at sampled rational pairs");
  PFR_EXPECT(quantified_r2(f, pts) == is_extended_continuous(f), "cellwise (r2) disagrees with sampled pairs");
  if (is_hausdorff(f)) {
    auto g = f;
    PFR_EXPECT(le(f, g) == le_lower_only(f, g), "order shortcut");
  }
  return std::nullopt;
}

/// Exact ⋁_{p>r} and ⋁_{q<s} over ℚ: on step trails the extremal value is
/// attained just beside the point, before the next breakpoint.
inline Rational just_right(const std::vector<Rational>& bps, const Rational& r) {
  auto it = std::upper_bound(bps.begin(), bps.end(), r);
  return it == bps.end() ? r + 1 : r + (*it - r) / 2;
}

inline Rational just_left(const std::vector<Rational>& bps, const Rational& s) {
  auto it = std::lower_bound(bps.begin(), bps.end(), s);
  return it == bps.begin() ? s - 1 : s - (s - *(it - 1)) / 2;
}

inline Verdict hausdorff_lemma(const Instance& inst, Registry&) {
  const Fn& f = inst.fns.at(0);
  if (!is_hausdorff(f)) return std::nullopt;
  const FiniteFrame& M = f.M();
  const auto bps = f.cells().bps;
  const auto pts = representative_points(bps);
  for (const auto& r : pts) {
    // Joins over all rationals above r, evaluated on representative points and the point just right of r.
    Elem j1 = M.bottom(), j2 = M.bottom();
    auto take_above = [&](const Rational& p) {
      if (!(r < p)) return;
      j1 = M.join(j1, M.pstar(f.upper_at(p)));
      j2 = M.join(j2, M.pstar2(f.lower_at(p)));
    };
    for (const auto& p : pts) take_above(p);
    take_above(just_right(bps, r));
    PFR_EXPECT(f.lower_at(r) == j1, "f(r,—) ≠ ⋁_{p>r} f(—,p)* at " + to_string(r));
    PFR_EXPECT(f.lower_at(r) == j2, "f(r,—) ≠ ⋁_{p>r} f(p,—)** at " + to_string(r));
    Elem k1 = M.bottom(), k2 = M.bottom();
    auto take_below = [&](const Rational& q) {
      if (!(q < r)) return;
      k1 = M.join(k1, M.pstar(f.lower_at(q)));
      k2 = M.join(k2, M.pstar2(f.upper_at(q)));
    };
    for (const auto& q : pts) take_below(q);
    take_below(just_left(bps, r));
    PFR_EXPECT(f.upper_at(r) == k1, "f(—,s) ≠ ⋁_{q<s} f(q,—)* at " + to_string(r));
    PFR_EXPECT(f.upper_at(r) == k2, "f(—,s) ≠ ⋁_{q<s} f(—,q)** at " + to_string(r));
  }
  const Cells c = f.cells();
  for (std::size_t j = 0; j < c.count(); ++j)
    PFR_EXPECT(c.L[j] == M.pstar(c.U[j]) && c.U[j] == M.pstar(c.L[j]), "cellwise pseudocomplement identities");
  return std::nullopt;
}

inline Verdict join_meet_bounds(const Instance& inst, Registry&) {
  const auto& fs = inst.fns;
  const Fn J = join_hausdorff(fs), Mt = meet_hausdorff(fs);
  PFR_EXPECT(is_hausdorff(J) && is_hausdorff(Mt), "Hausdorff join/meet is not Hausdorff");
  for (const auto& f : fs) {
    PFR_EXPECT(le(f, J), "Hausdorff join is not an upper bound");
    PFR_EXPECT(le(Mt, f), "Hausdorff meet is not a lower bound");
  }
  PFR_EXPECT(join_hausdorff({fs.front()}) == fs.front() && meet_hausdorff({fs.front()}) == fs.front(),
             "singleton join/meet is not the identity");
  PFR_EXPECT(join_hausdorff({mk_minus_infinity(fs.front().codomain(), fs.front().cos()), fs.front()}) == fs.front(),
             "−∞ is not neutral for the Hausdorff join");
  PFR_EXPECT(neg(join_hausdorff(fs)) == [&] {
    std::vector<Fn> ns;
    for (const auto& f : fs) ns.push_back(neg(f));
    return meet_hausdorff(ns);
  }(), "negation does not exchange Hausdorff joins and meets");
  return std::nullopt;
}

/// A random Hausdorff upper bound of fs: regular lower values above the
/// cellwise join, antitone, on a refinement of the merged partition.
inline Fn random_upper_bound(const std::vector<Fn>& fs, Sampler& s) {
  const FiniteFrame& M = fs.front().M();
  auto bps = detail::merged(fs);
  bps = merge_breakpoints(bps, s.breakpoints(s.below(3)));
  std::vector<Elem> h(bps.size() + 1, M.bottom());
  for (const auto& f : fs) {
    const Cells c = f.cells_on(bps);
    for (std::size_t j = 0; j < h.size(); ++j) h[j] = M.join(h[j], c.L[j]);
  }
  Cells u{bps, std::vector<Elem>(h.size()), {}};
  Elem floor = M.bottom();
  for (std::size_t j = h.size(); j-- > 0;) {
    std::vector<Elem> xs;
    const Elem need = M.join(h[j], floor);
    for (Elem a = 0; a < M.size(); ++a)
      if (M.pstar2(a) == a && M.leq(need, a)) xs.push_back(a);
    u.L[j] = floor = s.pick(xs);
  }
  for (Elem l : u.L) u.U.push_back(M.pstar(l));
  return Fn::from_cells(fs.front().codomain(), u, fs.front().cos());
}

inline Verdict least_bounds(const Instance& inst, Registry&) {
  const auto& fs = inst.fns;
  const Fn J = join_hausdorff(fs), Mt = meet_hausdorff(fs);
  Sampler s(inst.params.value("seed", std::uint64_t(0)));
  const std::size_t k = inst.params.value("competitors", std::size_t(200));
  std::vector<Fn> negs;
  for (const auto& f : fs) negs.push_back(neg(f));
  for (std::size_t i = 0; i < k; ++i) {
    const Fn u = random_upper_bound(fs, s);
    for (const auto& f : fs) PFR_EXPECT(le(f, u), "generated competitor is not an upper bound");
    PFR_EXPECT(le(J, u), "Hausdorff join is not below a Hausdorff upper bound");
    const Fn l = neg(random_upper_bound(negs, s));
    PFR_EXPECT(le(l, Mt), "Hausdorff meet is not above a Hausdorff lower bound");
  }
  if (is_boolean(fs.front().M())) {
    // Over Boolean codomains Hausdorff = extended continuous and pointwise formulas apply.
    for (std::size_t i = 0; i < k / 4; ++i) {
      Fn u = s.sample(fs.front().codomain(), Profile::hausdorff, fs.front().cos());
      for (const auto& f : fs) u = join_pointwise(u, f);
      PFR_EXPECT(le(J, u), "Hausdorff join is not below a pointwise upper bound");
    }
  }
  return std::nullopt;
}

inline Verdict gamma_delta(const Instance& inst, Registry& reg) {
  const Fn& f = inst.fns.at(0);
  const auto& B = reg.booleanization(f.M().name());
  if (f.codomain() != B.parent) return "codomain does not resolve through the registry";
  const Fn g = gamma(f, B);
  PFR_EXPECT(is_extended_continuous(g), "Γ(f) is not extended-continuous over 𝔅");
  PFR_EXPECT(delta(g, B) == f, "Δ(Γ(f)) ≠ f");
  if (inst.fns.size() > 1) {
    const Fn& h = inst.fns.at(1);
    PFR_EXPECT(gamma(delta(h, B), B) == h, "Γ(Δ(g)) ≠ g");
  }
  return std::nullopt;
}

inline Verdict eqextdisc(const Instance& inst, Registry&) {
  const FiniteFrame& F = *inst.frame;
  bool all = true;
  for (Elem a = 0; a < F.size(); ++a)
    all = all && is_extended_continuous(mk_chi_bar(inst.frame, F.pstar(a), F.pstar2(a)));
  return expect(all == is_extremally_disconnected(F).extremally_disconnected,
                "χ̄_{a*,a**} membership disagrees with extremal disconnectedness");
}

inline Verdict real_valued_cases(const FramePtr& L) {
  const FiniteFrame& F = *L;
  for (const Rational& r : {Rational(-3, 2), Rational(0), Rational(7)}) {
    const Fn c = mk_constant(L, r);
    PFR_EXPECT(is_real_valued(c) && is_real_valued_star(c), "constant is not real-valued");
  }
  if (F.size() == 1) return std::nullopt;  // 0 = 1: every function is real-valued
  for (const Fn& f : {mk_plus_infinity(L), mk_minus_infinity(L)})
    PFR_EXPECT(!is_real_valued(f) && !is_real_valued_star(f), "±∞ counted as real-valued");
  for (Elem a = 0; a < F.size(); ++a)
    if (F.pstar2(a) == a) {
      const Fn chi = mk_chi_bar(L, a, F.pstar(a));
      PFR_EXPECT(!is_real_valued(chi) && !is_real_valued_star(chi), "χ̄_{a,a*} counted as real-valued");
    }
  return std::nullopt;
}

inline Verdict real_valued(const Instance& inst, Registry& reg) {
  if (inst.fns.empty()) return real_valued_cases(inst.frame);
  const Fn& f = inst.fns.at(0);
  if (!is_hausdorff(f)) return std::nullopt;
  PFR_EXPECT(is_real_valued(f) == is_real_valued_star(f), "the two real-valuedness conditions disagree");
  if (f.cos()) {
    const auto& B = reg.booleanization(f.M().name());
    if (B.parent != f.codomain()) return "codomain does not resolve through the registry";
    PFR_EXPECT(is_real_valued(f) == preserves_r5_r6(gamma(f, B)), "real-valued f but Γ(f) fails (r5)/(r6), or conversely");
  }
  return std::nullopt;
}

inline Verdict dedekind_complete(const Instance& inst, Registry&) {
  const Fn& bound = inst.fns.at(0);
  std::vector<Fn> family(inst.fns.begin() + 1, inst.fns.end());
  PFR_EXPECT(is_real_valued(bound) && is_hausdorff(bound), "bound is not a real-valued Hausdorff function");
  for (const auto& f : family) PFR_EXPECT(is_real_valued(f) && le(f, bound), "family member not real-valued or not bounded");
  const Fn J = join_hausdorff(family);
  PFR_EXPECT(le(J, bound), "join exceeds the bound");
  return expect(is_real_valued(J), "join of a bounded real-valued family is not real-valued");
}

inline Verdict lsc_intersection(const Instance& inst, Registry&) {
  const Fn& f = inst.fns.at(0);
  const bool in_F = is_hausdorff(f) && is_real_valued(f);
  PFR_EXPECT(is_lsc(f) == (in_F && is_lsc_extended(f)), "LSC ≠ F ∩ LSC̄");
  PFR_EXPECT(is_usc(f) == (in_F && is_usc_extended(f)), "USC ≠ F ∩ USC̄");
  PFR_EXPECT(is_lsc_extended(f) == is_usc_extended(neg(f)) && is_lsc(f) == is_usc(neg(f)),
             "negation does not exchange lower and upper semicontinuity");
  PFR_EXPECT(is_hausdorff(neg(f)) == is_hausdorff(f) && is_real_valued(neg(f)) == is_real_valued(f),
             "negation does not fix H̄ and F");
  PFR_EXPECT(neg(neg(f)) == f, "negation is not an involution");
  return std::nullopt;
}

/// Meet-density: f is the meet of the l_{a,q} above it. The ℚ-indexed family
/// reduces to q at breakpoints, one point per bounded cell and one in the
/// right tail; the left tail contributes its limit χ̄_{𝔠(a),𝔬(a)}.
inline std::vector<Fn> density_family(const Fn& f) {
  const SublocaleFrame& sf = f.sublocales();
  const FiniteFrame& C = f.M();
  const FiniteFrame& L = *sf.parent();
  const auto bps = f.cells().bps;
  std::vector<Rational> qs = bps;
  for (std::size_t j = 0; j + 1 < bps.size(); ++j) qs.push_back((bps[j] + bps[j + 1]) / 2);
  qs.push_back(bps.empty() ? Rational(0) : bps.back() + 1);
  std::vector<Fn> out;
  auto admissible = [&](Elem target) {
    std::vector<Elem> as;
    for (Elem a = 0; a < L.size(); ++a)
      if (C.leq(C.pstar2(target), sf.closed_elem(a))) as.push_back(a);
    return as;
  };
  for (const auto& q : qs)
    for (Elem a : admissible(f.lower_at(q))) out.push_back(mk_l(f.cos(), a, q));
  const Rational left = bps.empty() ? Rational(-1) : bps.front() - 1;
  for (Elem a : admissible(f.lower_at(left)))
    out.push_back(mk_chi_bar(f.codomain(), sf.closed_elem(a), sf.open_elem(a), f.cos()));
  return out;
}

struct DensityReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
};

/// Meet-density reconstruction on `samples` seeded f ∈ C̄(coS(L)); L must be subfit.
inline DensityReport meet_density_check(const SublocaleFramePtr& sf, std::size_t samples, std::uint64_t seed) {
  const FiniteFrame& L = *sf->parent();
  if (auto sub = is_subfit(L); !sub.subfit)
    throw Error(ErrorKind::NotSubfit, L.name() + " is not subfit",
                {L.name_of(sub.certificate->first), L.name_of(sub.certificate->second)});
  DensityReport rep;
  Sampler s(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const Fn f = s.sample(sf, Profile::ext_continuous);
    ++rep.checked;
    if (meet_hausdorff(density_family(f)) != f) ++rep.failures;
  }
  return rep;
}

inline Verdict meet_density(const Instance& inst, Registry&) {
  const Fn& f = inst.fns.at(0);
  auto fam = density_family(f);
  for (const auto& l : fam) {
    PFR_EXPECT(is_lsc_extended(l), "family member is not extended lower semicontinuous");
    PFR_EXPECT(le(f, l), "family member is not above f");
  }
  if (fam.empty()) return "empty family";
  return expect(meet_hausdorff(fam) == f, "f is not the meet of the l_{a,q} above it");
}

inline Verdict regularization(const Instance& inst, Registry&) {
  const Fn& f = inst.fns.at(0);
  const Fn lo = lower_regularization(f);
  const FiniteFrame& C = f.M();
  PFR_EXPECT(le(lo, f), "f° ≰ f");
  PFR_EXPECT(lower_regularization(lo) == lo, "f° is not idempotent");
  PFR_EXPECT(is_lsc_extended(lo), "f° is not extended lower semicontinuous");
  PFR_EXPECT(lower_regularization_l2(f) == (lo.lower().values.front() == C.top()), "(l2) flag disagrees with f°");
  if (is_real_valued(f)) PFR_EXPECT(lo.lower().values.back() == C.bottom(), "f real-valued but f° fails (l3)");
  const Fn up = upper_regularization(f);
  PFR_EXPECT(up == neg(lower_regularization(neg(f))), "f⁻ ≠ −((−f)°)");
  PFR_EXPECT(le(f, up) && is_usc_extended(up) && upper_regularization(up) == up, "f⁻ laws");
  if (inst.fns.size() > 1) {
    const Fn& g = inst.fns.at(1);
    if (le(f, g)) PFR_EXPECT(le(lo, lower_regularization(g)) && le(up, upper_regularization(g)), "regularization not monotone");
  }
  if (is_lsc_extended(f)) PFR_EXPECT(lo == f, "f ∈ LSC̄ but f° ≠ f");
  return std::nullopt;
}

inline Verdict diagram(const Instance& inst, Registry&) {
  const Fn& f = inst.fns.at(0);
  const bool H = is_hausdorff(f), F = H && is_real_valued(f);
  const bool Cbar = is_extended_continuous(f), Cc = is_continuous(f);
  if (Cbar) PFR_EXPECT(H, "C̄(coS) ⊄ H̄");
  if (Cc) PFR_EXPECT(F && Cbar, "C(coS) ⊄ F ∩ C̄(coS)");
  if (f.cos()) {
    const SublocaleFrame& sf = *f.cos();
    const bool closed_valued = all_closed(sf, f.lower().values) && all_closed(sf, f.upper().values);
    if (Cc && closed_valued) PFR_EXPECT(is_lsc(f) && is_usc(f), "C(L) ⊄ LSC ∩ USC");
    if (is_lsc(f)) PFR_EXPECT(F && is_lsc_extended(f), "LSC ⊄ F ∩ LSC̄");
    if (is_boolean(f.M()) && F) PFR_EXPECT(Cc, "coS(L) Boolean but a real-valued Hausdorff function is not continuous");
  }
  if (is_extremally_disconnected(f.M()).extremally_disconnected && H) PFR_EXPECT(Cbar, "ED codomain but H̄ ≠ C̄");
  if (H) {
    const Fn g = inst.fns.size() > 1 ? inst.fns.at(1) : f;
    if (is_hausdorff(g)) PFR_EXPECT(le(f, g) == le_lower_only(f, g), "Hausdorff order is not decided by lower trails");
  }
  return std::nullopt;
}

inline Verdict cozero(const Instance& inst, Registry&) {
  const FramePtr& L = inst.frame;
  const FiniteFrame& F = *L;
  PFR_EXPECT(coz(mk_constant(L, Rational(0))) == F.bottom() && coz(mk_constant(L, Rational(1))) == F.top(),
             "cozero of constants");
  const auto zs = cozero_elements(F);
  const std::set<Elem> cz(zs.begin(), zs.end());
  for (Elem a = 0; a < F.size(); ++a)
    if (is_complemented(F, a)) {
      PFR_EXPECT(coz(mk_chi(L, a, F.pstar(a))) == a, "complemented element is not coz(χ_{a,a*})");
      PFR_EXPECT(cz.count(a), "complemented element missing from cozero set");
    }
  for (Elem a : cz) PFR_EXPECT(is_complemented(F, a), "cozero element not complemented");
  PFR_EXPECT(is_p_frame(F), "finite frame is not a P-frame");
  for (const auto& f : inst.fns) {
    PFR_EXPECT(is_complemented(F, coz(f)), "cozero of a sampled continuous function is not complemented");
    PFR_EXPECT(cz.count(coz(f)), "cozero of a sampled function outside the enumerated set");
  }
  return std::nullopt;
}

inline Verdict spatial_sweep(const Instance& inst, Registry&) {
  auto X = space_from_json(inst.params.at("space"));
  auto rep = semicontinuity_transfer_check(X, grid_from_json(inst.params.at("grid")), inst.params.value("pairwise", true));
  if (rep.mismatches.empty()) return std::nullopt;
  return rep.mismatches.front() + " (" + std::to_string(rep.mismatches.size()) + " mismatches)";
}

inline Verdict t1_density(const Instance& inst, Registry&) {
  auto X = space_from_json(inst.params.at("space"));
  auto sf = share(all_sublocales(X, 16));
  for (const auto& phi : grid_functions(X, grid_from_json(inst.params.at("grid")))) {
    std::vector<Fn> gs;
    for (std::size_t x = 0; x < X->size(); ++x) {
      PointFn g{X, std::vector<XRational>(X->size(), XRational::plus_infinity())};
      g.values[x] = phi.values[x];
      PFR_EXPECT(is_lsc_point(g), "g_{x,p} is not lower semicontinuous on a T1 space");
      gs.push_back(omega(g, sf));
    }
    gs.push_back(mk_plus_infinity(sf->frame(), sf));
    PFR_EXPECT(meet_hausdorff(gs) == omega(phi, sf), "Ω φ is not the meet of the Ω g_{x,φ(x)} at " + describe(phi));
  }
  return std::nullopt;
}

inline Verdict td_observation(const Instance& inst, Registry&) {
  auto X = space_from_json(inst.params.at("space"));
  PFR_EXPECT(is_TD(*X), "finite T0 space that is not T_D");
  PFR_EXPECT(is_T1(*X) == (X->opens().size() == (std::size_t(1) << X->size())), "T1 differs from discreteness");
  return std::nullopt;
}

#undef PFR_EXPECT

// --- drivers ----------------------------------------------------------------

inline void over_frames(Context& ctx, std::size_t bound) {
  std::size_t n = 0;
  for (const auto& F : ctx.frames(bound)) {
    ctx.test(Instance{F, {}, json::object()});
    ++n;
  }
  ctx.stats()["frames"] = n;
  ctx.stats()["max_size"] = std::min(bound, ctx.cfg().max_size);
}

/// Samples single functions per frame and seed; `codomain` picks what they are valued in.
enum class Over { frame, cos, boolean_codomains };

inline void over_samples(Context& ctx, const std::string& id, Over over, std::size_t bound, std::size_t count,
                         const std::vector<Profile>& profiles, std::size_t arity = 1,
                         const std::function<std::vector<Fn>(std::vector<Fn>, Sampler&)>& shape = nullptr) {
  std::size_t codomains = 0;
  for (const auto& L : ctx.frames(bound)) {
    FramePtr M = L;
    SublocaleFramePtr sf;
    if (over == Over::cos) {
      sf = ctx.reg().sublocales(L->name());
      M = sf->frame();
    } else if (over == Over::boolean_codomains && !is_boolean(*L)) {
      continue;
    }
    ++codomains;
    for (std::uint64_t seed : ctx.cfg().seeds) {
      Sampler s(derive_seed(seed, id, M->name()));
      for (std::size_t i = 0; i < count; ++i) {
        std::vector<Fn> fns;
        for (std::size_t k = 0; k < arity; ++k) fns.push_back(s.sample(M, profiles[(i + k) % profiles.size()], sf));
        if (shape) fns = shape(std::move(fns), s);
        if (fns.empty()) continue;
        json params{{"seed", s.next_u64()}};
        ctx.test(Instance{L, std::move(fns), params});
      }
    }
  }
  ctx.stats()["codomains"] = codomains;
  ctx.stats()["samples_per_codomain_per_seed"] = count;
}

inline std::vector<Check> catalogue() {
  std::vector<Check> cs;
  auto add = [&](std::string id, std::string anchor, std::function<void(Context&)> run,
                 std::function<Verdict(const Instance&, Registry&)> inst, bool observation = false) {
    cs.push_back(Check{std::move(id), std::move(anchor), observation, std::move(run), std::move(inst)});
  };

  add("frame.laws",
      "Every finite distributive lattice is a frame: meet distributes over joins, a∧b ≤ c ⟺ a ≤ b→c, and a*** = a*",
      [](Context& ctx) { over_frames(ctx, ctx.cfg().max_size); }, frame_laws);

  add("frame.enumeration-count",
      "Distributive lattices counted as down-set lattices of posets agree with a brute-force lattice census",
      [](Context& ctx) {
        json counts = json::object();
        for (std::size_t n = 1; n <= ctx.cfg().max_size; ++n) {
          ctx.test(Instance{nullptr, {}, json{{"size", n}}});
          counts[std::to_string(n)] = census::lattices_of_size(n, true).size();
        }
        ctx.stats()["counts"] = counts;
      },
      enumeration_count);

  add("frame.booleanization",
      "The regular elements a = a** form a Boolean algebra and a ↦ a** is a frame homomorphism",
      [](Context& ctx) { over_frames(ctx, ctx.cfg().max_size); }, booleanization_laws);

  add("sublocale.spatial-bijection",
      "For a finite T0 space, A ↦ 𝔰(A) is a lattice isomorphism from subsets onto sublocales, with 𝔰(U) = 𝔬(U) and 𝔰(X∖U) = 𝔠(U)",
      [](Context& ctx) {
        std::size_t spaces = 0;
        for (std::size_t n = 0; n <= 4; ++n)
          for (const auto& X : all_T0_spaces(n)) {
            ctx.test(Instance{X->frame(), {}, json{{"space", space_to_json(*X)}}});
            ++spaces;
          }
        ctx.stats()["spaces"] = spaces;
      },
      spatial_bijection);

  add("sublocale.facts",
      "Closed and open sublocales are complements; 𝔠 turns meets into joins, 𝔬 preserves them; every sublocale is a meet of 𝔬(a) ∨ 𝔠(b); closure and interior formulas",
      [](Context& ctx) { over_frames(ctx, ctx.cfg().sublocale_max); }, sublocale_facts);

  add("sublocale.isbell-density", "The Booleanization is the least sublocale containing 0",
      [](Context& ctx) { over_frames(ctx, ctx.cfg().sublocale_max); }, isbell_density);

  add("lemma.subfit-boolean",
      "A frame is subfit iff every regular element of coS(L) is a meet of closed sublocales",
      [](Context& ctx) { over_frames(ctx, ctx.cfg().sublocale_max); }, subfit_boolean_lemma);

  add("sublocale.subfit-open-join",
      "A frame is subfit iff every open sublocale is a join of closed sublocales",
      [](Context& ctx) { over_frames(ctx, ctx.cfg().sublocale_max); }, subfit_open_join);

  add("observation.cos-boolean", "coS(L) of a finite frame is Boolean (no counterexample expected at finite scale)",
      [](Context& ctx) { over_frames(ctx, ctx.cfg().sublocale_max); }, cos_boolean, true);

  add("completion.macneille",
      "The completion by cuts embeds P join- and meet-densely, is idempotent, and is the unique such lattice over P",
      [](Context& ctx) {
        std::size_t posets = 0;
        for (std::size_t n = 0; n <= 5; ++n) {
          std::set<std::vector<std::uint8_t>> seen;
          census::for_each_bounded_order(n + 2, [&](const std::vector<std::uint8_t>& le) {
            FinitePoset P;
            P.names = default_point_names(n);
            P.order.assign(n * n, 0);
            for (std::size_t a = 0; a < n; ++a)
              for (std::size_t b = 0; b < n; ++b) P.order[a * n + b] = le[(a + 1) * (n + 2) + (b + 1)];
            if (!seen.insert(census::inner_canonical(n + 2, le)).second) return;
            ctx.test(Instance{nullptr, {}, json{{"poset", poset_to_json(P)}, {"lattice_max", 8}}});
            ++posets;
          });
        }
        ctx.stats()["posets"] = posets;
      },
      macneille_laws);

  add("prop.psi-phi",
      "Rescaling along α(r) = r/(1+|r|) is a bijection between extended functions and functions between −1 and 1 that preserves and reflects Hausdorffness and extended continuity",
      [](Context& ctx) {
        over_samples(ctx, "prop.psi-phi", Over::frame, ctx.cfg().sublocale_max, ctx.cfg().samples, all_profiles());
      },
      psi_phi);

  add("hausdorff.local-vs-oracle",
      "The cellwise pseudocomplement test decides Hausdorff continuity exactly as the defining inequalities; cellwise (r1)/(r2) agree with quantified checks",
      [](Context& ctx) {
        over_samples(ctx, "hausdorff.local-vs-oracle", Over::frame, ctx.cfg().sublocale_max, ctx.cfg().hausdorff_samples,
                     all_profiles());
      },
      hausdorff_local);

  add("hausdorff.lemma-identities",
      "For Hausdorff f: f(r,—) = ⋁_{p>r} f(—,p)* = ⋁_{p>r} f(p,—)** and f(—,s) = ⋁_{q<s} f(q,—)* = ⋁_{q<s} f(—,q)**",
      [](Context& ctx) {
        over_samples(ctx, "hausdorff.lemma-identities", Over::frame, ctx.cfg().sublocale_max, ctx.cfg().hausdorff_samples,
                     {Profile::hausdorff, Profile::real_hausdorff, Profile::ext_continuous});
      },
      hausdorff_lemma);

  add("hausdorff.join-meet-bounds",
      "The Hausdorff join and meet formulas always return Hausdorff upper and lower bounds",
      [](Context& ctx) {
        over_samples(ctx, "hausdorff.join-meet-bounds", Over::frame, ctx.cfg().sublocale_max, ctx.cfg().samples,
                     {Profile::hausdorff, Profile::real_hausdorff}, 3);
      },
      join_meet_bounds);

  add("hausdorff.least-bounds",
      "On Boolean codomains and on coS(L) the Hausdorff join and meet are least upper and greatest lower bounds",
      [](Context& ctx) {
        auto shape = [&](std::vector<Fn> fs, Sampler&) { return fs; };
        const std::size_t fam = ctx.cfg().competitor_families;
        over_samples(ctx, "hausdorff.least-bounds", Over::boolean_codomains, ctx.cfg().sublocale_max, fam,
                     {Profile::hausdorff}, 2, shape);
        json boolean_stats = ctx.stats();
        over_samples(ctx, "hausdorff.least-bounds/cos", Over::cos, ctx.cfg().cos_codomain_max, fam, {Profile::hausdorff}, 2,
                     shape);
        ctx.stats()["boolean_codomains"] = boolean_stats["codomains"];
        ctx.stats()["competitors"] = ctx.cfg().competitors;
      },
      least_bounds);

  add("observation.least-bounds-non-cr",
      "On finite frames that are not completely regular the Hausdorff join is still least among sampled Hausdorff upper bounds",
      [](Context& ctx) {
        std::size_t frames = 0;
        for (const auto& L : ctx.frames(ctx.cfg().sublocale_max)) {
          if (is_completely_regular(*L)) continue;
          ++frames;
          Sampler s(derive_seed(ctx.cfg().seeds.front(), "observation.least-bounds-non-cr", L->name()));
          for (std::size_t i = 0; i < ctx.cfg().competitor_families; ++i)
            ctx.test(Instance{L, {s.sample(L, Profile::hausdorff), s.sample(L, Profile::hausdorff)},
                              json{{"seed", s.next_u64()}, {"competitors", ctx.cfg().competitors}}});
        }
        ctx.stats()["frames"] = frames;
      },
      least_bounds, true);

  add("prop.gamma-delta-roundtrip",
      "Γ(f) = β∘f and Δ are mutually inverse between Hausdorff functions on L and extended-continuous functions on 𝔅(L)",
      [](Context& ctx) {
        over_samples(ctx, "prop.gamma-delta-roundtrip", Over::frame, ctx.cfg().sublocale_max, ctx.cfg().samples,
                     {Profile::hausdorff, Profile::real_hausdorff}, 1, [&](std::vector<Fn> fs, Sampler& s) {
                       const auto& B = ctx.reg().booleanization(fs.front().M().name());
                       fs.push_back(s.sample(B.frame, Profile::ext_continuous));
                       return fs;
                     });
      },
      gamma_delta);

  add("prop.eqextdisc",
      "L is extremally disconnected iff every χ̄_{a*,a**} is extended-continuous (C̄(L) = H̄(L))",
      [](Context& ctx) { over_frames(ctx, ctx.cfg().max_size); }, eqextdisc);

  add("corollary.real-valued",
      "For Hausdorff f: ⋀_s f(—,s) = 0 = ⋀_r f(r,—) iff (⋁_r f(r,—))* = 0 = (⋁_s f(—,s))*",
      [](Context& ctx) {
        for (const auto& L : ctx.frames(ctx.cfg().max_size)) ctx.test(Instance{L, {}, json{{"fixed_cases", true}}});
        over_samples(ctx, "corollary.real-valued", Over::frame, ctx.cfg().sublocale_max, ctx.cfg().samples,
                     {Profile::hausdorff, Profile::real_hausdorff, Profile::ext_continuous});
        json frame_stats = ctx.stats();
        over_samples(ctx, "corollary.real-valued/cos", Over::cos, ctx.cfg().cos_codomain_max, ctx.cfg().samples,
                     {Profile::hausdorff, Profile::real_hausdorff});
        ctx.stats()["frame_codomains"] = frame_stats["codomains"];
      },
      real_valued);

  add("prop.dedekind-complete",
      "Joins of real-valued Hausdorff families bounded by a real-valued function are real-valued",
      [](Context& ctx) {
        over_samples(ctx, "prop.dedekind-complete", Over::cos, ctx.cfg().cos_codomain_max, ctx.cfg().samples,
                     {Profile::real_hausdorff}, 3, [](std::vector<Fn> fs, Sampler&) {
                       std::vector<Fn> out{fs[0]};
                       for (std::size_t i = 1; i < fs.size(); ++i) out.push_back(meet_hausdorff({fs[0], fs[i]}));
                       return out;
                     });
      },
      dedekind_complete);

  add("prop.lsc-intersection",
      "LSC(L) = F(L) ∩ LSC̄(L) and USC(L) = F(L) ∩ USC̄(L); negation exchanges them",
      [](Context& ctx) {
        over_samples(ctx, "prop.lsc-intersection", Over::cos, ctx.cfg().cos_codomain_max, ctx.cfg().samples,
                     {Profile::hausdorff, Profile::real_hausdorff, Profile::arbitrary_ic}, 1,
                     [&](std::vector<Fn> fs, Sampler& s) {
                       // Mix in semicontinuous functions: regularizations, l_{a,q}, and 𝔠-images.
                       const Fn& f = fs.front();
                       const auto& sf = f.cos();
                       switch (s.below(4)) {
                         case 0: return std::vector<Fn>{lower_regularization(f)};
                         case 1: return std::vector<Fn>{upper_regularization(f)};
                         case 2: {
                           auto g = s.sample(sf->parent(), Profile::ext_continuous);
                           return std::vector<Fn>{embed_closed(g, sf)};
                         }
                         default: return fs;
                       }
                     });
      },
      lsc_intersection);

  add("prop.meet-density",
      "For subfit L, every f ∈ C̄(coS(L)) is the meet of the functions l_{a,q} above it",
      [](Context& ctx) {
        std::size_t frames = 0;
        json skipped = json::array();
        for (const auto& L : ctx.frames(ctx.cfg().cos_codomain_max)) {
          auto sub = is_subfit(*L);
          if (!sub.subfit) {
            skipped.push_back({{"frame", L->name()},
                               {"certificate", {L->name_of(sub.certificate->first), L->name_of(sub.certificate->second)}}});
            continue;
          }
          ++frames;
          auto sf = ctx.reg().sublocales(L->name());
          for (std::uint64_t seed : ctx.cfg().seeds) {
            Sampler s(derive_seed(seed, "prop.meet-density", L->name()));
            for (std::size_t i = 0; i < ctx.cfg().density_samples; ++i)
              ctx.test(Instance{L, {s.sample(sf, Profile::ext_continuous)}, json::object()});
          }
        }
        ctx.stats()["subfit_frames"] = frames;
        ctx.stats()["not_subfit"] = skipped;
      },
      meet_density);

  add("regularization.laws",
      "f° ≤ f, f° is idempotent, monotone and extended lower semicontinuous; f⁻ = −((−f)°)",
      [](Context& ctx) {
        over_samples(ctx, "regularization.laws", Over::cos, ctx.cfg().cos_codomain_max, ctx.cfg().samples,
                     {Profile::arbitrary_ic, Profile::hausdorff, Profile::real_hausdorff}, 2,
                     [](std::vector<Fn> fs, Sampler&) {
                       if (is_hausdorff(fs[0]) && is_hausdorff(fs[1])) fs[1] = join_hausdorff({fs[0], fs[1]});
                       return fs;
                     });
      },
      regularization);

  add("diagram.inclusions",
      "C ⊆ C(coS) ⊆ F ⊆ F̄, C(coS) ⊆ C̄(coS), LSC ⊆ F ∩ LSC̄; with Boolean coS(L) every real-valued Hausdorff function is continuous",
      [](Context& ctx) {
        over_samples(ctx, "diagram.inclusions", Over::cos, ctx.cfg().cos_codomain_max, ctx.cfg().samples,
                     {Profile::arbitrary_ic, Profile::hausdorff, Profile::real_hausdorff, Profile::ext_continuous}, 2,
                     [](std::vector<Fn> fs, Sampler& s) {
                       if (s.below(3) == 0) {
                         auto g = s.sample(fs[0].cos()->parent(), Profile::ext_continuous);
                         fs[0] = embed_closed(g, fs[0].cos());
                       }
                       return fs;
                     });
        json cos_stats = ctx.stats();
        over_samples(ctx, "diagram.inclusions/boolean", Over::boolean_codomains, ctx.cfg().max_size, ctx.cfg().samples,
                     {Profile::arbitrary_ic, Profile::hausdorff}, 2);
        ctx.stats()["cos_codomains"] = cos_stats["codomains"];
      },
      diagram);

  add("prop.cozero",
      "Cozero elements f(—,0) ∨ f(0,—) of continuous functions on a finite frame are exactly the complemented elements, so every finite frame is a P-frame",
      [](Context& ctx) {
        std::size_t frames = 0;
        for (const auto& L : ctx.frames(ctx.cfg().max_size)) {
          ++frames;
          Sampler s(derive_seed(ctx.cfg().seeds.front(), "prop.cozero", L->name()));
          std::vector<Fn> fs;
          for (std::size_t i = 0; i < 20; ++i) {
            Fn f = s.sample(L, Profile::ext_continuous);
            if (is_continuous(f)) fs.push_back(f);
          }
          ctx.test(Instance{L, fs, json::object()});
        }
        ctx.stats()["frames"] = frames;
      },
      cozero);

  add("spatial.conservativeness",
      "Over finite T0 spaces, Ω is an order embedding with inverse on its image that matches point and pointfree semicontinuity and real-valuedness",
      [](Context& ctx) {
        const json grid{{"values", {"0", "1/2", "1"}}, {"allow_infinities", true}};
        std::size_t spaces = 0;
        for (std::size_t n = 0; n <= 3; ++n)
          for (const auto& X : all_T0_spaces(n)) {
            ctx.test(Instance{X->frame(), {}, json{{"space", space_to_json(*X)}, {"grid", grid}}});
            ++spaces;
          }
        ctx.test(Instance{nullptr, {}, json{{"space", space_to_json(*discrete_space(4))}, {"grid", grid}}});
        ctx.stats()["spaces"] = spaces + 1;
      },
      spatial_sweep);

  add("spatial.t1-meet-density",
      "On finite T1 (discrete) spaces every function is the meet of the lower semicontinuous g_{x,φ(x)}",
      [](Context& ctx) {
        const json grid{{"values", {"0", "1/2", "1"}}, {"allow_infinities", true}};
        for (std::size_t n = 1; n <= 3; ++n)
          ctx.test(Instance{nullptr, {}, json{{"space", space_to_json(*discrete_space(n))}, {"grid", grid}}});
        ctx.stats()["spaces"] = 3;
      },
      t1_density);

  add("observation.finite-td",
      "Finite T0 spaces are T_D, and T1 coincides with discreteness",
      [](Context& ctx) {
        for (std::size_t n = 0; n <= 4; ++n)
          for (const auto& X : all_T0_spaces(n)) ctx.test(Instance{nullptr, {}, json{{"space", space_to_json(*X)}}});
      },
      td_observation, true);

  add("observation.infinite-examples",
      "Examples needing infinite spaces or frames (a one-to-one map on ℚ, the rational and irrational sublocales of the reals) are outside the finite model",
      [](Context& ctx) { ctx.stats()["note"] = "not executable on finite frames"; },
      [](const Instance&, Registry&) -> Verdict { return std::nullopt; }, true);

  return cs;
}

}  // namespace checks

inline const std::vector<Check>& catalogue() {
  static const std::vector<Check> cs = checks::catalogue();
  return cs;
}

inline const Check& find_check(const std::string& id) {
  for (const auto& c : catalogue())
    if (c.id == id) return c;
  throw Error(ErrorKind::UnknownCheck, "no check named '" + id + "'", {id});
}

inline CheckResult run_check(const Check& check, const HarnessConfig& cfg, Registry& reg) {
  const auto start = std::chrono::steady_clock::now();
  Context ctx(cfg, reg, check);
  check.run(ctx);
  CheckResult r{check.id, check.anchor, Status::pass, std::nullopt, ctx.stats(), 0};
  r.stats["instances"] = ctx.instances();
  r.stats["failures"] = ctx.failures();
  if (check.observation) {
    r.status = Status::observation;
  } else if (ctx.failures() > 0) {
    r.status = Status::fail;
    r.counterexample = ctx.first_failure();
  }
  if (check.observation && ctx.first_failure()) r.counterexample = ctx.first_failure();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline void validate_config(const HarnessConfig& cfg) {
  if (cfg.max_size > kDefaultEnumerationLimit)
    throw Error(ErrorKind::LimitExceeded, "frame size bound " + std::to_string(cfg.max_size) + " exceeds " +
                                              std::to_string(kDefaultEnumerationLimit));
  if (cfg.sublocale_max > kDefaultSublocaleLimit || cfg.cos_codomain_max > kDefaultSublocaleLimit)
    throw Error(ErrorKind::LimitExceeded, "sublocale bound exceeds " + std::to_string(kDefaultSublocaleLimit));
  if (cfg.seeds.empty()) throw Error(ErrorKind::SchemaError, "sampled checks need at least one seed");
}

/// Runs the named checks (all when ids is empty) in catalogue order.
inline Report run_suite(const std::vector<std::string>& ids, HarnessConfig cfg) {
  validate_config(cfg);
  cfg.sublocale_max = std::min(cfg.sublocale_max, cfg.max_size);
  cfg.cos_codomain_max = std::min(cfg.cos_codomain_max, cfg.max_size);
  for (const auto& id : ids) find_check(id);
  Registry reg;
  Report rep{cfg.seeds, {}};
  for (const auto& c : catalogue())
    if (ids.empty() || std::find(ids.begin(), ids.end(), c.id) != ids.end()) rep.checks.push_back(run_check(c, cfg, reg));
  return rep;
}

/// Counterexample payload for one frame-level instance of `check`.
inline json frame_payload(const std::string& check, const FiniteFrame& F) {
  return json{{"check", check}, {"frame", frame_to_json(F, true)}, {"functions", json::array()}, {"params", json::object()}};
}

struct MutationReport {
  std::size_t mutations = 0;
  std::size_t caught = 0;
  std::size_t replayed = 0;  // caught mutations whose payload replays as a failure
  std::vector<std::string> missed;
};

/// Every frame-level check that sees the raw tables; a mutation is caught if any fails.
inline const std::vector<std::string>& table_checks() {
  static const std::vector<std::string> ids{"frame.laws", "frame.booleanization", "prop.eqextdisc"};
  return ids;
}

/// Mutates each single table entry of F to every other in-range value and
/// runs the frame-level checks on the result.
inline MutationReport fault_injection(const FiniteFrame& F, bool replay_payloads = true);

/// Re-executes the single instance stored in a counterexample; true iff it passes.
inline bool replay(const json& payload) {
  if (!payload.is_object() || !payload.contains("check")) throw Error(ErrorKind::SchemaError, "counterexample without 'check'");
  const Check& check = find_check(detail::field<std::string>(payload, "check"));
  Registry reg;
  Instance inst;
  inst.params = payload.value("params", json::object());
  if (inst.params.contains("space")) reg.add_space(space_from_json(inst.params.at("space")));
  if (payload.contains("frame") && !payload.at("frame").is_null()) {
    inst.frame = frame_from_json(payload.at("frame"));
    reg.add(inst.frame);
  }
  if (payload.contains("functions"))
    for (const auto& f : payload.at("functions")) {
      inst.fns.push_back(fn_from_json(f, reg));
    }
  if (!inst.fns.empty() && inst.frame == nullptr) inst.frame = inst.fns.front().codomain();
  // Frame-level instances read the registered frame so derived codomains match.
  if (inst.frame && !inst.fns.empty()) {
    // The function codomain may be derived from the frame (coS, B); nothing to adjust.
  }
  try {
    return !check.instance(inst, reg).has_value();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SchemaError) throw;
    return false;
  }
}

inline MutationReport fault_injection(const FiniteFrame& F, bool replay_payloads) {
  MutationReport rep;
  const std::size_t n = F.size();
  auto attempt = [&](const std::string& label, FrameTables t) {
    ++rep.mutations;
    const FiniteFrame mutant(F.name(), F.names(), std::move(t));
    const Instance inst{std::make_shared<const FiniteFrame>(mutant), {}, json::object()};
    Registry reg;
    for (const auto& id : table_checks()) {
      Verdict v;
      try {
        v = find_check(id).instance(inst, reg);
      } catch (const Error& e) {
        v = e.what();
      }
      if (!v) continue;
      ++rep.caught;
      if (replay_payloads && !replay(frame_payload(id, mutant))) ++rep.replayed;
      return;
    }
    rep.missed.push_back(label);
  };
  auto over = [&](const std::string& table, std::vector<Elem> FrameTables::*field) {
    for (std::size_t i = 0; i < (F.tables().*field).size(); ++i)
      for (Elem v = 0; v < n; ++v) {
        if (v == (F.tables().*field)[i]) continue;
        FrameTables t = F.tables();
        (t.*field)[i] = v;
        attempt(table + "[" + std::to_string(i) + "]=" + F.name_of(v), std::move(t));
      }
  };
  for (std::size_t i = 0; i < F.tables().leq.size(); ++i) {
    FrameTables t = F.tables();
    t.leq[i] = !t.leq[i];
    attempt("leq[" + std::to_string(i) + "]", std::move(t));
  }
  over("meet", &FrameTables::meet);
  over("join", &FrameTables::join);
  over("arrow", &FrameTables::arrow);
  over("pstar", &FrameTables::pstar);
  for (Elem v = 0; v < n; ++v) {
    FrameTables t = F.tables();
    if (v != t.bottom) {
      t.bottom = v;
      attempt("bottom=" + F.name_of(v), t);
    }
    t = F.tables();
    if (v != t.top) {
      t.top = v;
      attempt("top=" + F.name_of(v), t);
    }
  }
  return rep;
}

}  // namespace pfr
