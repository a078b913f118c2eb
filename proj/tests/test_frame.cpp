#include <gtest/gtest.h>

#include "pfr/builtins.hpp"
#include "pfr/enumerate.hpp"
#include "pfr/frame.hpp"

using namespace pfr;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::SchemaError;
}

}  // namespace

TEST(Validate, TrivialFrame) {
  auto F = builtin::trivial();
  EXPECT_EQ(F->size(), 1u);
  EXPECT_EQ(F->bottom(), F->top());
  EXPECT_FALSE(check_laws(*F));
}

TEST(Validate, ChainC3) {
  auto F = builtin::C3();
  const Elem a = F->at("a"), z = F->at("0");
  EXPECT_EQ(F->arrow(a, z), z);
  EXPECT_EQ(F->pstar(a), z);
  EXPECT_FALSE(check_laws(*F));
}

TEST(Validate, DiamondIsNotDistributive) {
  EXPECT_EQ(kind_of([] { validate_frame("M3", {"0", "a", "b", "c", "1"}, builtin::M5_covers()); }),
            ErrorKind::NotDistributive);
}

TEST(Validate, PentagonIsNotDistributive) {
  EXPECT_EQ(kind_of([] {
              validate_frame("N5", {"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
            }),
            ErrorKind::NotDistributive);
}

TEST(Validate, Rejections) {
  EXPECT_EQ(kind_of([] { validate_frame("E", {}, {}); }), ErrorKind::EmptyCarrier);
  EXPECT_EQ(kind_of([] { validate_frame("V", {"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}); }), ErrorKind::NoTop);
  EXPECT_EQ(kind_of([] { validate_frame("L", {"a", "b", "1"}, {{"a", "1"}, {"b", "1"}}); }), ErrorKind::NoBottom);
  EXPECT_EQ(kind_of([] { validate_frame("C", {"0", "a", "1"}, {{"0", "a"}, {"a", "0"}, {"a", "1"}}); }),
            ErrorKind::NotAPoset);
  EXPECT_EQ(kind_of([] { validate_frame("D", {"0", "0"}, {}); }), ErrorKind::DuplicateElement);
  EXPECT_EQ(kind_of([] { validate_frame("U", {"0", "1"}, {{"0", "z"}}); }), ErrorKind::UnknownElement);
  // Two maximal elements between the bounds: no least upper bound of a, b.
  EXPECT_EQ(kind_of([] {
              validate_frame("X", {"0", "a", "b", "c", "d", "1"},
                             {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}});
            }),
            ErrorKind::NotALattice);
}

TEST(Validate, FullRelationMatchesCovers) {
  auto a = builtin::C4();
  auto b = validate_frame("C4", {"0", "a", "b", "1"},
                          {{"0", "a"}, {"0", "b"}, {"0", "1"}, {"a", "b"}, {"a", "1"}, {"b", "1"}}, RelationKind::full);
  EXPECT_EQ(a->tables().meet, b->tables().meet);
  EXPECT_EQ(a->tables().arrow, b->tables().arrow);
}

TEST(Predicates, DenseAndComplemented) {
  auto C3 = builtin::C3();
  EXPECT_TRUE(is_dense(*C3, C3->at("a")));
  EXPECT_FALSE(is_complemented(*C3, C3->at("a")));
  for (const auto& F : builtin::named_frames()) {
    EXPECT_TRUE(is_dense(*F, F->top()));
    EXPECT_TRUE(is_complemented(*F, F->top()));
  }
  auto W5 = builtin::W5();
  const Elem x = W5->at("x");
  EXPECT_EQ(W5->pstar(x), W5->at("y"));
  EXPECT_FALSE(is_dense(*W5, x));
  EXPECT_FALSE(is_complemented(*W5, x));
}

TEST(Predicates, Subfit) {
  EXPECT_TRUE(is_subfit(*builtin::D4()).subfit);
  EXPECT_TRUE(is_subfit(*builtin::trivial()).subfit);
  auto C3 = builtin::C3();
  auto r = is_subfit(*C3);
  ASSERT_FALSE(r.subfit);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(C3->name_of(r.certificate->first), "a");
  EXPECT_EQ(C3->name_of(r.certificate->second), "0");
  EXPECT_FALSE(has_subfit_witness(*C3, r.certificate->first, r.certificate->second));
}

TEST(Predicates, SubfitCertificateReplaysOnAllFrames) {
  for (const auto& F : enumerate_frames(8)) {
    auto r = is_subfit(*F);
    if (r.subfit) continue;
    ASSERT_TRUE(r.certificate);
    EXPECT_FALSE(F->leq(r.certificate->first, r.certificate->second));
    EXPECT_FALSE(has_subfit_witness(*F, r.certificate->first, r.certificate->second)) << F->name();
  }
}

TEST(Predicates, ExtremallyDisconnected) {
  EXPECT_TRUE(is_extremally_disconnected(*builtin::C3()).extremally_disconnected);
  auto W5 = builtin::W5();
  auto r = is_extremally_disconnected(*W5);
  EXPECT_FALSE(r.extremally_disconnected);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(W5->name_of(*r.witness), "x");
  EXPECT_TRUE(is_extremally_disconnected(*builtin::B8()).extremally_disconnected);
}

TEST(Predicates, CompletelyRegular) {
  EXPECT_TRUE(is_completely_regular(*builtin::D4()));
  EXPECT_TRUE(is_completely_regular(*builtin::B8()));
  EXPECT_FALSE(is_completely_regular(*builtin::C3()));
  EXPECT_FALSE(is_completely_regular(*builtin::W5()));
  // On finite frames complete regularity coincides with being Boolean.
  for (const auto& F : enumerate_frames(8)) EXPECT_EQ(is_completely_regular(*F), is_boolean(*F)) << F->name();
}

TEST(Booleanization, Chain) {
  auto B = booleanization(builtin::C3());
  EXPECT_EQ(B.frame->size(), 2u);
  EXPECT_EQ(B.frame->name(), "B(C3)");
  EXPECT_EQ(B.frame->name_of(B.beta[builtin::C3()->at("a")]), "1");
}

TEST(Booleanization, W5) {
  auto W5 = builtin::W5();
  auto B = booleanization(W5);
  ASSERT_EQ(B.frame->size(), 4u);
  std::vector<std::string> names;
  for (Elem i = 0; i < B.frame->size(); ++i) names.push_back(B.frame->name_of(i));
  EXPECT_EQ(names, (std::vector<std::string>{"0", "x", "y", "1"}));
  EXPECT_EQ(B.frame->join(B.frame->at("x"), B.frame->at("y")), B.frame->top());
  EXPECT_TRUE(check_hom(B.beta_map()));
  EXPECT_TRUE(is_boolean(*B.frame));
}

TEST(Booleanization, BooleanIsFixed) {
  auto D4 = builtin::D4();
  auto B = booleanization(D4);
  EXPECT_EQ(B.frame->size(), 4u);
  for (Elem a = 0; a < D4->size(); ++a) EXPECT_EQ(B.inclusion[B.beta[a]], a);
}

TEST(Homomorphisms, IdentityAndBroken) {
  for (const auto& F : builtin::named_frames()) EXPECT_TRUE(check_hom(identity_map(F)));
  auto C3 = builtin::C3();
  auto two = builtin::two();
  FrameMap broken{C3, two, {two->at("0"), two->at("1"), two->at("0")}};
  EXPECT_FALSE(check_hom(broken));
}

TEST(Laws, EveryEnumeratedFrame) {
  for (const auto& F : enumerate_frames(8)) {
    EXPECT_FALSE(check_laws(*F)) << F->name();
    for (Elem a = 0; a < F->size(); ++a) {
      EXPECT_EQ(F->pstar(F->pstar2(a)), F->pstar(a));
      EXPECT_EQ(F->pstar(a), F->arrow(a, F->bottom()));
      for (Elem b = 0; b < F->size(); ++b)
        for (Elem c = 0; c < F->size(); ++c) {
          EXPECT_EQ(F->leq(F->meet(a, b), c), F->leq(a, F->arrow(b, c)));
          EXPECT_EQ(F->meet(a, F->join(b, c)), F->join(F->meet(a, b), F->meet(a, c)));
        }
    }
    auto B = booleanization(F);
    for (Elem a = 0; a < B.frame->size(); ++a) EXPECT_EQ(B.frame->join(a, B.frame->pstar(a)), B.frame->top());
  }
}

TEST(Laws, DetectsCorruptedTable) {
  auto F = builtin::W5();
  FrameTables t = F->tables();
  t.meet[1 * F->size() + 2] = F->at("x");
  FiniteFrame bad("W5", F->names(), t);
  auto v = check_laws(bad);
  ASSERT_TRUE(v);
  EXPECT_FALSE(v->law.empty());
}
