#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pfr/error.hpp"
#include "pfr/realfn.hpp"

namespace pfr {

enum class Profile {
  hausdorff,       // regular lower values, upper = pseudocomplement
  ext_continuous,  // complemented lower values, upper = complement
  arbitrary_ic,    // any antitone lower trail with a compatible upper trail
  real_hausdorff,  // hausdorff, starting at 1 and ending at 0
};

inline const char* name_of(Profile p) {
  switch (p) {
    case Profile::hausdorff: return "hausdorff";
    case Profile::ext_continuous: return "ext_continuous";
    case Profile::arbitrary_ic: return "arbitrary_ic";
    case Profile::real_hausdorff: return "real_hausdorff";
  }
  return "?";
}

inline Profile parse_profile(const std::string& s) {
  for (Profile p : {Profile::hausdorff, Profile::ext_continuous, Profile::arbitrary_ic, Profile::real_hausdorff})
    if (s == name_of(p)) return p;
  throw Error(ErrorKind::SchemaError, "unknown sampling profile '" + s + "'");
}

/// Seeded generator of step functions. Breakpoints are n/d with d ∈ 1..4 and
/// n ∈ [−12, 12]; at most `budget` of them per function.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, std::size_t budget = 4) : rng_(seed), budget_(budget) {}

  std::uint64_t next_u64() { return rng_(); }

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  template <class T>
  const T& pick(const std::vector<T>& xs) { return xs[below(xs.size())]; }

  std::vector<Rational> breakpoints(std::size_t k) {
    std::vector<Rational> out;
    for (std::size_t tries = 0; out.size() < k && tries < 64; ++tries) {
      const auto d = static_cast<std::int64_t>(1 + below(4));
      const auto n = static_cast<std::int64_t>(below(25)) - 12;
      Rational q(n, d);
      if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Fn sample(const FramePtr& F, Profile profile, SublocaleFramePtr cos = nullptr) {
    const FiniteFrame& M = *F;
    // Real-valued functions need a cell starting at top and one ending at 0.
    const std::size_t lo = profile == Profile::real_hausdorff ? 1 : 0;
    const auto bps = breakpoints(lo + below(budget_ + 1 - lo));
    const std::size_t cells = bps.size() + 1;

    std::vector<Elem> pool;
    for (Elem a = 0; a < M.size(); ++a) {
      const bool take = profile == Profile::arbitrary_ic      ? true
                        : profile == Profile::ext_continuous ? is_complemented(M, a)
                                                              : M.pstar2(a) == a;
      if (take) pool.push_back(a);
    }
    auto below_of = [&](Elem cap) {
      std::vector<Elem> xs;
      for (Elem a : pool)
        if (M.leq(a, cap)) xs.push_back(a);
      return xs;
    };

    Cells c{bps, {}, {}};
    Elem prev = profile == Profile::real_hausdorff ? M.top() : pick(pool);
    for (std::size_t j = 0; j < cells; ++j) {
      Elem v = j == 0 ? prev : pick(below_of(prev));
      if (profile == Profile::real_hausdorff && j + 1 == cells) v = M.bottom();
      c.L.push_back(v);
      prev = v;
    }
    if (profile == Profile::arbitrary_ic) {
      Elem lo = M.bottom();
      for (std::size_t j = 0; j < cells; ++j) {
        std::vector<Elem> xs;
        const Elem hi = M.pstar(c.L[j]);
        for (Elem a = 0; a < M.size(); ++a)
          if (M.leq(lo, a) && M.leq(a, hi)) xs.push_back(a);
        lo = pick(xs);
        c.U.push_back(lo);
      }
    } else {
      for (Elem l : c.L) c.U.push_back(M.pstar(l));
    }
    return Fn::from_cells(F, c, std::move(cos));
  }

  Fn sample(const SublocaleFramePtr& sf, Profile profile) { return sample(sf->frame(), profile, sf); }

 private:
  std::mt19937_64 rng_;
  std::size_t budget_;
};

inline Fn sample_fn(const FramePtr& F, Profile profile, std::uint64_t seed, SublocaleFramePtr cos = nullptr) {
  Sampler s(seed);
  return s.sample(F, profile, std::move(cos));
}

}  // namespace pfr
