#include <gtest/gtest.h>

#include "pfr/builtins.hpp"
#include "pfr/enumerate.hpp"
#include "pfr/realfn.hpp"
#include "pfr/sample.hpp"

using namespace pfr;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

Trail lower(const FiniteFrame& F, std::vector<Rational> bps, std::initializer_list<const char*> vals) {
  Trail t{TrailKind::lower, std::move(bps), {}};
  for (const char* v : vals) t.values.push_back(F.at(v));
  return t;
}

Trail upper(const FiniteFrame& F, std::vector<Rational> bps, std::initializer_list<const char*> vals) {
  Trail t{TrailKind::upper, std::move(bps), {}};
  for (const char* v : vals) t.values.push_back(F.at(v));
  return t;
}

template <class Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::SchemaError;
}

struct CoS {
  FramePtr L;
  SublocaleFramePtr sf;
  explicit CoS(FramePtr parent) : L(parent), sf(share(all_sublocales(parent))) {}
  const FiniteFrame& M() const { return *sf->frame(); }
};

}  // namespace

TEST(Eval, Conventions) {
  auto F = builtin::two();
  Trail lo = lower(*F, {q(0)}, {"1", "0"});
  EXPECT_EQ(eval(lo, q(0)), F->at("0"));
  EXPECT_EQ(eval(lo, q(0), Side::left_limit), F->at("1"));
  EXPECT_EQ(eval(lo, q(-1, 2)), F->at("1"));
  Trail up = upper(*F, {q(0)}, {"0", "1"});
  EXPECT_EQ(eval(up, q(0)), F->at("0"));
  EXPECT_EQ(eval(up, q(0), Side::right_limit), F->at("1"));
  Trail c = lower(*F, {}, {"1"});
  EXPECT_EQ(eval(c, q(123)), F->at("1"));
}

TEST(Constants, Trails) {
  auto F = builtin::two();
  auto c = mk_constant(F, q(0));
  EXPECT_EQ(c.lower(), lower(*F, {q(0)}, {"1", "0"}));
  EXPECT_EQ(c.upper(), upper(*F, {q(0)}, {"0", "1"}));
  EXPECT_TRUE(is_hausdorff(c) && is_continuous(c));
  EXPECT_TRUE(le(mk_constant(F, q(1, 3)), mk_constant(F, q(1, 2))));
  EXPECT_FALSE(le(mk_constant(F, q(1, 2)), mk_constant(F, q(1, 3))));
  auto T = builtin::trivial();
  EXPECT_EQ(mk_constant(T, q(5)), mk_plus_infinity(T));
}

TEST(Constants, Infinities) {
  auto C3 = builtin::C3();
  Sampler s(3);
  for (int i = 0; i < 50; ++i) {
    auto f = s.sample(C3, Profile::arbitrary_ic);
    EXPECT_TRUE(le(f, mk_plus_infinity(C3)));
    EXPECT_TRUE(le(mk_minus_infinity(C3), f));
  }
  EXPECT_EQ(neg(mk_plus_infinity(C3)), mk_minus_infinity(C3));
  EXPECT_FALSE(is_real_valued(mk_plus_infinity(C3)));
  EXPECT_FALSE(preserves_r5_r6(mk_plus_infinity(C3)));
}

TEST(Chi, W5) {
  auto W5 = builtin::W5();
  const Elem x = W5->at("x"), y = W5->at("y"), xy = W5->at("xy");
  auto chi = mk_chi_bar(W5, x, y);
  EXPECT_TRUE(is_hausdorff(chi));
  EXPECT_FALSE(is_extended_continuous(chi));
  EXPECT_FALSE(is_real_valued(chi));
  EXPECT_FALSE(is_real_valued_star(chi));
  EXPECT_FALSE(is_hausdorff(mk_chi_bar(W5, xy, W5->bottom())));
  EXPECT_FALSE(le(chi, mk_chi_bar(W5, y, x)));
  EXPECT_FALSE(le(mk_chi_bar(W5, y, x), chi));
  EXPECT_EQ(mk_chi_bar(W5, W5->top(), W5->bottom()), mk_plus_infinity(W5));
  EXPECT_EQ(kind_of([&] { mk_chi(W5, x, xy); }), ErrorKind::NotDisjoint);
}

TEST(Chi, D4) {
  auto D4 = builtin::D4();
  const Elem u = D4->at("u"), w = D4->at("w");
  auto chi = mk_chi(D4, u, w);
  EXPECT_TRUE(is_continuous(chi));
  EXPECT_TRUE(preserves_r5_r6(chi));
  EXPECT_EQ(coz(chi), u);
  EXPECT_EQ(chi.lower(), lower(*D4, {q(0), q(1)}, {"1", "u", "0"}));
  EXPECT_EQ(chi.upper(), upper(*D4, {q(0), q(1)}, {"0", "w", "1"}));
}

TEST(LFunctions, CoSC3) {
  CoS c(builtin::C3());
  const Elem a = c.L->at("a");
  auto l = mk_l(c.sf, a, q(1));
  EXPECT_TRUE(is_lsc_extended(l));
  EXPECT_FALSE(is_lsc(l));
  EXPECT_TRUE(is_hausdorff(l));
  EXPECT_TRUE(is_extended_continuous(mk_l(c.sf, a, q(0))));
  EXPECT_TRUE(is_usc_extended(neg(l)));
  EXPECT_EQ(mk_l(c.sf, c.L->bottom(), q(2)), mk_constant(c.sf, q(2)));
  auto bar = mk_chi_bar(c.sf->frame(), c.sf->open_elem(a), c.sf->closed_elem(a), c.sf);
  EXPECT_FALSE(is_lsc_extended(bar));
  EXPECT_EQ(kind_of([&] { is_lsc(mk_constant(c.L, q(0))); }), ErrorKind::CodomainNotSublocaleFrame);
}

TEST(Order, LowerOnlyOnHausdorff) {
  Sampler s(11);
  auto W5 = builtin::W5();
  for (int i = 0; i < 300; ++i) {
    auto f = s.sample(W5, Profile::hausdorff), g = s.sample(W5, Profile::hausdorff);
    EXPECT_EQ(le(f, g), le_lower_only(f, g));
  }
  EXPECT_EQ(kind_of([&] { le(mk_constant(W5, q(0)), mk_constant(builtin::C3(), q(0))); }), ErrorKind::MixedCodomains);
}

TEST(Negation, Basics) {
  auto W5 = builtin::W5();
  EXPECT_EQ(neg(mk_constant(W5, q(3, 4))), mk_constant(W5, q(-3, 4)));
  Sampler s(5);
  for (int i = 0; i < 200; ++i) {
    auto f = s.sample(W5, Profile::arbitrary_ic), g = s.sample(W5, Profile::arbitrary_ic);
    EXPECT_EQ(neg(neg(f)), f);
    EXPECT_EQ(le(f, g), le(neg(g), neg(f)));
    EXPECT_EQ(is_hausdorff(f), is_hausdorff(neg(f)));
  }
}

TEST(Classes, R5R6) {
  auto W5 = builtin::W5();
  EXPECT_TRUE(preserves_r5_r6(mk_constant(W5, q(1))));
  EXPECT_TRUE(preserves_r5_r6(mk_chi(W5, W5->at("x"), W5->at("y"))));
}

TEST(Classes, Validation) {
  auto C3 = builtin::C3();
  EXPECT_EQ(kind_of([&] { Fn(C3, lower(*C3, {q(0)}, {"0", "1"}), upper(*C3, {}, {"0"})); }), ErrorKind::NotMonotone);
  EXPECT_EQ(kind_of([&] { Fn(C3, lower(*C3, {}, {"a"}), upper(*C3, {}, {"a"})); }), ErrorKind::NotDisjoint);
  EXPECT_EQ(kind_of([&] { Fn(C3, lower(*C3, {q(0)}, {"1"}), upper(*C3, {}, {"0"})); }), ErrorKind::SchemaError);
  // Canonical form drops breakpoints between equal values.
  Fn f(C3, lower(*C3, {q(0), q(1)}, {"1", "1", "0"}), upper(*C3, {}, {"0"}));
  EXPECT_EQ(f.lower().breakpoints, std::vector<Rational>{q(1)});
}

TEST(Pointwise, Joins) {
  auto W5 = builtin::W5();
  EXPECT_EQ(join_pointwise(mk_constant(W5, q(1)), mk_constant(W5, q(2))), mk_constant(W5, q(2)));
  EXPECT_EQ(meet_pointwise(mk_constant(W5, q(1)), mk_constant(W5, q(2))), mk_constant(W5, q(1)));
  auto c = mk_constant(W5, q(7, 3));
  EXPECT_EQ(join_pointwise(c, c), c);
  EXPECT_EQ(kind_of([&] { join_pointwise(c, mk_chi_bar(W5, W5->at("x"), W5->at("y"))); }), ErrorKind::NotInCbar);
}

TEST(Pointwise, D4LeastAmongSampled) {
  auto D4 = builtin::D4();
  const Elem u = D4->at("u"), w = D4->at("w");
  auto j = join_pointwise(mk_chi(D4, u, w), mk_chi(D4, w, u));
  EXPECT_EQ(j.lower(), lower(*D4, {q(1)}, {"1", "0"}));
  Sampler s(9);
  std::size_t bounds = 0;
  for (int i = 0; i < 4000; ++i) {
    auto b = s.sample(D4, Profile::ext_continuous);
    if (le(mk_chi(D4, u, w), b) && le(mk_chi(D4, w, u), b)) {
      ++bounds;
      EXPECT_TRUE(le(j, b));
    }
  }
  EXPECT_GT(bounds, 0u);
}

TEST(Hausdorff, JoinExamples) {
  auto W5 = builtin::W5();
  const Elem x = W5->at("x"), y = W5->at("y");
  EXPECT_EQ(join_hausdorff({mk_chi_bar(W5, x, y), mk_chi_bar(W5, y, x)}), mk_plus_infinity(W5));
  Sampler s(4);
  for (int i = 0; i < 200; ++i) {
    auto f = s.sample(W5, Profile::hausdorff);
    EXPECT_EQ(join_hausdorff({f}), f);
    EXPECT_EQ(meet_hausdorff({f}), f);
    EXPECT_EQ(join_hausdorff({mk_minus_infinity(W5), f}), f);
    EXPECT_EQ(meet_hausdorff({mk_plus_infinity(W5), f}), f);
  }
  EXPECT_EQ(kind_of([&] { join_hausdorff({mk_chi_bar(W5, W5->at("xy"), W5->bottom())}); }), ErrorKind::NotHausdorff);
  EXPECT_EQ(kind_of([&] { join_hausdorff({}); }), ErrorKind::SchemaError);
}

TEST(Hausdorff, LocalMatchesOracle) {
  for (const auto& F : enumerate_frames(6)) {
    Sampler s(42);
    for (int i = 0; i < 300; ++i) {
      auto f = s.sample(F, i % 2 ? Profile::arbitrary_ic : Profile::hausdorff);
      EXPECT_EQ(is_hausdorff(f), is_hausdorff_oracle(f)) << F->name();
    }
  }
}

TEST(PsiPhi, Examples) {
  auto W5 = builtin::W5();
  EXPECT_EQ(psi(mk_plus_infinity(W5)), mk_constant(W5, q(1)));
  EXPECT_EQ(psi(mk_minus_infinity(W5)), mk_constant(W5, q(-1)));
  EXPECT_EQ(psi(mk_constant(W5, q(0))), mk_constant(W5, q(0)));
  EXPECT_EQ(psi(mk_constant(W5, q(1))), mk_constant(W5, q(1, 2)));
  EXPECT_EQ(kind_of([&] { phi(mk_constant(W5, q(2))); }), ErrorKind::OutOfUnitRange);
  Sampler s(7);
  for (int i = 0; i < 500; ++i) {
    auto f = s.sample(W5, Profile::arbitrary_ic);
    EXPECT_EQ(phi(psi(f)), f);
  }
}

TEST(GammaDelta, W5) {
  auto W5 = builtin::W5();
  auto B = booleanization(W5);
  const Elem x = W5->at("x"), y = W5->at("y");
  auto g = gamma(mk_chi_bar(W5, x, y), B);
  EXPECT_TRUE(is_extended_continuous(g));
  EXPECT_EQ(g, mk_chi_bar(B.frame, B.frame->at("x"), B.frame->at("y")));
  EXPECT_EQ(gamma(mk_constant(W5, q(3)), B), mk_constant(B.frame, q(3)));
  EXPECT_EQ(delta(g, B), mk_chi_bar(W5, x, y));
  EXPECT_EQ(kind_of([&] { gamma(mk_chi_bar(W5, W5->at("xy"), W5->bottom()), B); }), ErrorKind::NotHausdorff);
}

TEST(RealValued, Examples) {
  auto W5 = builtin::W5();
  EXPECT_TRUE(is_real_valued(mk_constant(W5, q(2))));
  EXPECT_TRUE(is_real_valued_star(mk_constant(W5, q(2))));
  EXPECT_FALSE(is_real_valued(mk_plus_infinity(W5)));
  EXPECT_FALSE(is_real_valued(mk_minus_infinity(W5)));
}

TEST(Regularization, Examples) {
  CoS c(builtin::C3());
  const FiniteFrame& M = c.M();
  const Elem a = c.L->at("a");
  const Elem o = c.sf->open_elem(a), cl = c.sf->closed_elem(a);
  Fn f = Fn::from_cells(c.sf->frame(), Cells{{q(0), q(1)}, {M.top(), o, M.bottom()}, {M.bottom(), cl, M.top()}}, c.sf);
  ASSERT_TRUE(is_hausdorff(f));
  auto lo = lower_regularization(f);
  EXPECT_EQ(lo.lower_at(q(1, 2)), M.bottom());
  EXPECT_TRUE(is_lsc_extended(lo));
  EXPECT_TRUE(le(lo, f));
  auto l = mk_l(c.sf, a, q(1));
  EXPECT_EQ(lower_regularization(l), l);
  EXPECT_EQ(upper_regularization(f), neg(lower_regularization(neg(f))));
}

TEST(Regularization, Laws) {
  CoS c(builtin::W5());
  Sampler s(11);
  for (int i = 0; i < 300; ++i) {
    auto f = s.sample(c.sf, Profile::arbitrary_ic);
    auto lo = lower_regularization(f);
    EXPECT_TRUE(le(lo, f));
    EXPECT_EQ(lower_regularization(lo), lo);
    EXPECT_TRUE(is_lsc_extended(lo));
  }
}

TEST(Cozero, Examples) {
  auto D4 = builtin::D4();
  EXPECT_EQ(coz(mk_constant(D4, q(0))), D4->bottom());
  EXPECT_EQ(coz(mk_constant(D4, q(1))), D4->top());
  EXPECT_EQ(kind_of([&] { coz(mk_plus_infinity(D4)); }), ErrorKind::NotInC);
  for (const auto& F : enumerate_frames(8)) EXPECT_TRUE(is_p_frame(*F));
}

TEST(Embedding, ClosedImageIsSemicontinuous) {
  CoS c(builtin::W5());
  Sampler s(2);
  for (int i = 0; i < 100; ++i) {
    auto g = embed_closed(s.sample(c.L, Profile::ext_continuous), c.sf);
    EXPECT_TRUE(is_lsc_extended(g));
    EXPECT_TRUE(is_usc_extended(g));
  }
  auto k = embed_closed(mk_constant(c.L, q(1)), c.sf);
  EXPECT_TRUE(is_lsc(k) && is_usc(k));
}

TEST(Sampler, DeterministicAndSound) {
  auto W5 = builtin::W5();
  Sampler a(42), b(42);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(a.sample(W5, Profile::hausdorff), b.sample(W5, Profile::hausdorff));
  Sampler s(1);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_TRUE(is_hausdorff(s.sample(W5, Profile::hausdorff)));
    EXPECT_TRUE(is_extended_continuous(s.sample(W5, Profile::ext_continuous)));
    auto r = s.sample(W5, Profile::real_hausdorff);
    EXPECT_TRUE(is_hausdorff(r) && is_real_valued(r));
  }
  EXPECT_EQ(parse_profile("hausdorff"), Profile::hausdorff);
  EXPECT_EQ(kind_of([] { parse_profile("nope"); }), ErrorKind::SchemaError);
}
