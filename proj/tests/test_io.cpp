#include <gtest/gtest.h>

#include "pfr/io.hpp"

using namespace pfr;

namespace {

std::string data(const std::string& file) { return std::string(PFR_DATA_DIR) + "/" + file; }

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

TEST(Rationals, Parse) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_EQ(to_string(Rational(-4, 6)), "-2/3");
  EXPECT_EQ(kind_of([] { parse_rational("1/0"); }), ErrorKind::SchemaError);
  EXPECT_EQ(kind_of([] { parse_rational("0.5"); }), ErrorKind::SchemaError);
  EXPECT_EQ(kind_of([] { parse_rational(""); }), ErrorKind::SchemaError);
}

TEST(Frames, RoundTrip) {
  auto F = frame_from_json(read_json_file(data("w5.json")));
  EXPECT_EQ(F->name(), "W5");
  EXPECT_FALSE(check_laws(*F));
  auto G = frame_from_json(frame_to_json(*F));
  EXPECT_EQ(F->tables().meet, G->tables().meet);
  auto H = frame_from_json(frame_to_json(*F, true));
  EXPECT_EQ(F->tables().arrow, H->tables().arrow);
}

TEST(Frames, Rejections) {
  EXPECT_EQ(kind_of([] { frame_from_json(read_json_file(data("m3_not_distributive.json"))); }), ErrorKind::NotDistributive);
  EXPECT_EQ(kind_of([] { frame_from_json(read_json_file(data("n5_not_distributive.json"))); }), ErrorKind::NotDistributive);
  EXPECT_EQ(kind_of([] { frame_from_json(read_json_file(data("no_top.json"))); }), ErrorKind::NoTop);
  EXPECT_EQ(kind_of([] { frame_from_json(json{{"name", "x"}}); }), ErrorKind::SchemaError);
  EXPECT_EQ(kind_of([] { read_json_file(data("missing.json")); }), ErrorKind::SchemaError);
}

TEST(Frames, ErrorJson) {
  try {
    frame_from_json(read_json_file(data("m3_not_distributive.json")));
    FAIL();
  } catch (const Error& e) {
    auto j = error_to_json(e);
    EXPECT_EQ(j["error"], "NotDistributive");
    EXPECT_EQ(j["witness"].size(), 3u);
  }
}

TEST(Spaces, Files) {
  auto X = space_from_json(read_json_file(data("sierpinski.json")));
  EXPECT_EQ(X->size(), 2u);
  EXPECT_EQ(X->opens().size(), 3u);
  auto Y = space_from_json(space_to_json(*X));
  EXPECT_EQ(X->opens(), Y->opens());
  EXPECT_EQ(kind_of([] { space_from_json(read_json_file(data("indiscrete2.json"))); }), ErrorKind::NotT0);
}

TEST(Grids, Parse) {
  auto g = grid_from_json(read_json_file(data("grid.json")));
  EXPECT_EQ(g.values.size(), 3u);
  EXPECT_TRUE(g.allow_infinities);
  auto h = grid_from_string("0,1/2,1");
  EXPECT_EQ(h.values, g.values);
  EXPECT_FALSE(h.allow_infinities);
}

TEST(Functions, LoadThroughRegistry) {
  Registry reg;
  auto f = fn_from_json(read_json_file(data("fn_w5_hausdorff.json")), reg);
  EXPECT_TRUE(is_hausdorff(f));
  EXPECT_EQ(fn_from_json(fn_to_json(f), reg), f);
  auto g = fn_from_json(read_json_file(data("fn_w5_chi_bar.json")), reg);
  EXPECT_EQ(join_hausdorff({g, neg(neg(g))}), g);
  auto c = fn_from_json(read_json_file(data("fn_c3_const_half.json")), reg);
  EXPECT_EQ(c, mk_constant(reg.frame("C3"), Rational(1, 2)));
}

TEST(Functions, CoSCodomain) {
  Registry reg;
  auto l = fn_from_json(read_json_file(data("fn_cos_c3_l.json")), reg);
  ASSERT_TRUE(l.cos());
  auto sf = reg.sublocales("C3");
  EXPECT_EQ(l, mk_l(sf, reg.frame("C3")->at("a"), Rational(1, 3)));
  EXPECT_TRUE(is_lsc_extended(l));
}

TEST(Registry, Names) {
  Registry reg;
  EXPECT_EQ(reg.frame("L5_0")->size(), 5u);
  EXPECT_EQ(reg.frame("coS(W5)")->size(), 8u);
  EXPECT_EQ(reg.frame("B(W5)")->size(), 4u);
  EXPECT_EQ(reg.frame("coS(W5)"), reg.frame("coS(W5)"));
  EXPECT_EQ(reg.frame("O(sierpinski)")->size(), 3u);
  EXPECT_EQ(kind_of([&] { reg.frame("nope"); }), ErrorKind::UnknownElement);
}

TEST(Sublocales, Json) {
  Registry reg;
  auto S = sublocale_from_json(json{{"frame", "C3"}, {"carrier", {"a", "1"}}}, reg);
  EXPECT_EQ(sublocale_to_json(S)["carrier"], (json{"a", "1"}));
  EXPECT_EQ(kind_of([&] { sublocale_from_json(json{{"frame", "C3"}, {"carrier", {"0", "a"}}}, reg); }),
            ErrorKind::NotASublocale);
  auto j = sublocale_frame_to_json(*reg.sublocales("C3"));
  EXPECT_TRUE(j.contains("tags"));
  EXPECT_EQ(j["tags"]["closed"].size(), 3u);
}
