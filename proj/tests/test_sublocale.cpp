#include <gtest/gtest.h>

#include "pfr/builtins.hpp"
#include "pfr/enumerate.hpp"
#include "pfr/sublocale.hpp"

using namespace pfr;

namespace {

Carrier carrier_of(const FiniteFrame& L, std::initializer_list<const char*> names) {
  Carrier c = 0;
  for (const char* n : names) c |= bit(L.at(n));
  return c;
}

std::vector<std::string> element_names(const FiniteFrame& F) {
  std::vector<std::string> out;
  for (Elem i = 0; i < F.size(); ++i) out.push_back(F.name_of(i));
  return out;
}

}  // namespace

TEST(AllSublocales, C3) {
  auto sf = all_sublocales(builtin::C3());
  EXPECT_EQ(sf.size(), 4u);
  EXPECT_EQ(element_names(*sf.frame()), (std::vector<std::string>{"{0,a,1}", "{0,1}", "{a,1}", "{1}"}));
  EXPECT_EQ(sf.frame()->name(), "coS(C3)");
  EXPECT_EQ(sf.frame()->bottom(), sf.frame()->at("{0,a,1}"));
  EXPECT_EQ(sf.frame()->top(), sf.frame()->at("{1}"));
  EXPECT_FALSE(check_laws(*sf.frame()));
}

TEST(AllSublocales, W5IsBoolean) {
  auto sf = all_sublocales(builtin::W5());
  EXPECT_EQ(sf.size(), 8u);
  EXPECT_TRUE(is_boolean(*sf.frame()));
}

TEST(AllSublocales, Trivial) { EXPECT_EQ(all_sublocales(builtin::trivial()).size(), 1u); }

TEST(AllSublocales, LimitExceeded) {
  auto big = enumerate_frames(8).back();
  try {
    all_sublocales(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LimitExceeded);
  }
}

TEST(ClosedOpen, C3) {
  auto C3 = builtin::C3();
  const Elem a = C3->at("a");
  EXPECT_EQ(closed(C3, a).carrier, carrier_of(*C3, {"a", "1"}));
  EXPECT_EQ(open_(C3, a).carrier, carrier_of(*C3, {"0", "1"}));
}

TEST(ClosedOpen, Bounds) {
  for (const auto& F : builtin::named_frames()) {
    EXPECT_EQ(closed(F, F->bottom()).carrier, full_carrier(*F));
    EXPECT_EQ(closed(F, F->top()).carrier, bit(F->top()));
    EXPECT_EQ(open_(F, F->top()).carrier, full_carrier(*F));
    EXPECT_EQ(open_(F, F->bottom()).carrier, bit(F->top()));
  }
}

TEST(JoinMeet, C3) {
  auto C3 = builtin::C3();
  const Elem a = C3->at("a");
  EXPECT_EQ(join_S({closed(C3, a), open_(C3, a)}).carrier, full_carrier(*C3));
  EXPECT_EQ(meet_S({closed(C3, a), open_(C3, a)}).carrier, bit(C3->top()));
  EXPECT_EQ(join_S({closed(C3, a)}).carrier, closed(C3, a).carrier);
}

TEST(JoinMeet, MixedParents) {
  try {
    join_S({closed(builtin::C3(), 1), closed(builtin::W5(), 1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MixedParents);
  }
}

TEST(Complements, EveryFrameUpToSix) {
  for (const auto& L : enumerate_frames(6)) {
    auto sf = all_sublocales(L);
    const FiniteFrame& C = *sf.frame();
    for (Elem a = 0; a < L->size(); ++a) {
      EXPECT_EQ(meet_S({closed(L, a), open_(L, a)}).carrier, bit(L->top()));
      EXPECT_EQ(join_S({closed(L, a), open_(L, a)}).carrier, full_carrier(*L));
      EXPECT_EQ(C.pstar(sf.open_elem(a)), sf.closed_elem(a));
      EXPECT_EQ(C.pstar(sf.closed_elem(a)), sf.open_elem(a));
    }
  }
}

TEST(ClosureInterior, C3) {
  auto C3 = builtin::C3();
  const Elem a = C3->at("a");
  EXPECT_EQ(closure(open_(C3, a)).carrier, full_carrier(*C3));
  EXPECT_EQ(interior(closed(C3, a)).carrier, bit(C3->top()));
  EXPECT_EQ(closure(closed(C3, a)).carrier, closed(C3, a).carrier);
}

TEST(Induced, Sierpinski) {
  auto X = builtin::sierpinski();
  const FiniteFrame& L = *X->frame();
  const PointSet p = 1u << X->point("p"), q = 1u << X->point("q");
  EXPECT_EQ(induced(X, q).carrier, closed_carrier(L, X->element(p)));
  EXPECT_EQ(induced(X, X->all()).carrier, full_carrier(L));
  EXPECT_EQ(induced(X, 0).carrier, bit(L.top()));
}

TEST(Induced, ThreePoint) {
  auto X = builtin::three_point();
  const PointSet p = 1u << X->point("p");
  EXPECT_EQ(induced(X, p).carrier, open_carrier(*X->frame(), X->element(p)));
}

TEST(Induced, TagsOverSpace) {
  auto sf = all_sublocales(builtin::three_point());
  std::size_t tagged = 0;
  for (Elem e = 0; e < sf.size(); ++e) tagged += sf.induced_tag(e).has_value();
  EXPECT_EQ(tagged, 8u);
}

TEST(Subfit, ViaSublocales) {
  EXPECT_TRUE(subfit_via_sublocales(all_sublocales(builtin::D4())));
  EXPECT_FALSE(subfit_via_sublocales(all_sublocales(builtin::C3())));
  EXPECT_FALSE(subfit_via_sublocales(all_sublocales(builtin::W5())));
  for (const auto& L : enumerate_frames(6)) EXPECT_EQ(subfit_via_sublocales(all_sublocales(L)), is_subfit(*L).subfit);
}

TEST(MeetOfClosed, Examples) {
  auto c3 = all_sublocales(builtin::C3());
  for (Elem a = 0; a < 3; ++a) EXPECT_TRUE(is_meet_of_closed(c3, c3.closed_elem(a)));
  EXPECT_FALSE(is_meet_of_closed(c3, c3.open_elem(builtin::C3()->at("a"))));
  auto d4 = all_sublocales(builtin::D4());
  for (Elem e = 0; e < d4.size(); ++e)
    if (d4.frame()->pstar2(e) == e) EXPECT_TRUE(is_meet_of_closed(d4, e));
}

TEST(LeastDense, Examples) {
  EXPECT_TRUE(least_dense_check(all_sublocales(builtin::C3())));
  EXPECT_TRUE(least_dense_check(all_sublocales(builtin::D4())));
  EXPECT_TRUE(least_dense_check(all_sublocales(builtin::trivial())));
  auto sf = all_sublocales(builtin::C3());
  std::size_t dense = 0;
  for (Elem e = 0; e < sf.size(); ++e) dense += sf.contains_bottom(e);
  EXPECT_EQ(dense, 2u);
}

TEST(MakeSublocale, Rejects) {
  auto C3 = builtin::C3();
  try {
    make_sublocale(C3, carrier_of(*C3, {"0", "a"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotASublocale);
  }
}

TEST(Embedding, ClosedIsInjectiveHom) {
  for (const auto& L : enumerate_frames(6)) {
    auto sf = all_sublocales(L);
    FrameMap h{L, sf.frame(), {}};
    for (Elem a = 0; a < L->size(); ++a) h.assignment.push_back(sf.closed_elem(a));
    EXPECT_TRUE(check_hom(h)) << L->name();
  }
}
