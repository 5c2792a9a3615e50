#include <gtest/gtest.h>

#include "test_support.hpp"
#include "ybx/io.hpp"

using namespace ybx;
using nlohmann::json;

TEST(Cycles, ParsesOneBasedNotation) {
  EXPECT_EQ(parse_cycles("(1 4 2 3)"), Permutation({3, 2, 0, 1}));
  EXPECT_EQ(parse_cycles("(1 2 3 4)"), Permutation({1, 2, 3, 0}));
  EXPECT_EQ(parse_cycles("(1,2)(3 4)"), Permutation({1, 0, 3, 2}));
  EXPECT_EQ(parse_cycles(" ( 2 3 ) ", 4), Permutation({0, 2, 1, 3}));
  EXPECT_TRUE(parse_cycles("(1)(2)", 2).is_identity());
  EXPECT_EQ(parse_cycles("(1)(2)", 2).size(), 2u);
}

TEST(Cycles, RejectsMalformedInputWithPosition) {
  try {
    parse_cycles("(1 1)");
    FAIL() << "repeated point accepted";
  } catch (const ParseError& e) {
    ASSERT_TRUE(e.position().has_value());
    EXPECT_EQ(*e.position(), 3u);
  }
  EXPECT_THROW(parse_cycles("(0 1)"), ParseError);
  EXPECT_THROW(parse_cycles("(1 2"), ParseError);
  EXPECT_THROW(parse_cycles("(1 x)"), ParseError);
  EXPECT_THROW(parse_cycles("(1 2)(2 3)"), ParseError);
  EXPECT_THROW(parse_cycles("(1 5)", 4), ParseError);
}

TEST(Cycles, FormatIsCanonical) {
  EXPECT_EQ(format_cycles(Permutation({3, 2, 0, 1})), "(1 4 2 3)");
  EXPECT_EQ(format_cycles(Permutation({1, 0, 2})), "(1 2)");
  EXPECT_EQ(format_cycles(Permutation::identity(3)), "(1)");
}

TEST(Cycles, RoundTripRandomPermutations) {
  Rng rng = derive_rng(61, 0);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + t % 9;
    const Permutation p = ybx::testing::random_bijection(n, rng);
    EXPECT_EQ(parse_cycles(format_cycles(p), n), p);
  }
}

TEST(Json, StructureRoundTrip) {
  Rng rng = derive_rng(62, 0);
  for (int t = 0; t < 1000; ++t) {
    const ABDStructure s = ybx::testing::random_abd(1 + t % 7, rng);
    EXPECT_EQ(abd_from_json(abd_to_json(s)), s);
    const ParsedInput in = parse_inputs(emit(ParsedInput(s)));
    ASSERT_TRUE(std::holds_alternative<ABDStructure>(in));
    EXPECT_EQ(std::get<ABDStructure>(in), s);
  }
}

TEST(Json, StructureAcceptsCycleStrings) {
  const ABDStructure s =
      abd_from_json(json::parse(R"j({"n":4,"c1":"(1 4 2 3)","c2":"(1 2 3 4)","a":[2]})j"));
  EXPECT_EQ(s, ABDStructure(Permutation({3, 2, 0, 1}), Permutation({1, 2, 3, 0}), {2}));
  EXPECT_THROW(abd_from_json(json::parse(R"({"n":3,"c1":[1,2,0,3],"c2":[1,2,0]})")), ParseError);
  EXPECT_THROW(abd_from_json(json::parse("[1,2]")), ParseError);
}

TEST(Json, BundleRoundTrip) {
  const Field q = Field::rationals();
  const BundleData b(2, 2, {{0, 0}, {1, 0}}, q.from_fraction(-7, 3));
  const json j = bundle_to_json(b);
  EXPECT_EQ(j.at("lambda"), "-7/3");
  const BundleData back = bundle_from_json(j, q);
  EXPECT_EQ(back.r, b.r);
  EXPECT_EQ(back.n, b.n);
  EXPECT_EQ(back.m, b.m);
  EXPECT_EQ(back.lambda, b.lambda);
  EXPECT_THROW(bundle_from_json(json::parse(R"({"r":2,"n":1})")), ParseError);
  EXPECT_THROW(bundle_from_json(json::parse(R"({"r":2,"n":1,"m":[[0]]})")), ParseError);
  EXPECT_TRUE(std::holds_alternative<BundleData>(parse_inputs(j.dump())));
}

TEST(Json, TensorRoundTrip) {
  const Field p = Field::prime_field(kDefaultPrime);
  Tensor2 t(p, 3);
  t.at(0, 1, 2, 0) = p.from_int(5);
  t.at(2, 2, 1, 1) = p.from_int(-1);
  const json j = tensor_to_json(t);
  EXPECT_EQ(j.size(), 2u);
  EXPECT_EQ(tensor_from_json(j, p, 3), t);
}

TEST(ParseInputs, DispatchesOnShape) {
  EXPECT_TRUE(std::holds_alternative<Permutation>(parse_inputs("(1 3 2)")));
  const ParsedInput p = parse_inputs(R"j({"cycles":"(1 2)","n":3})j");
  ASSERT_TRUE(std::holds_alternative<Permutation>(p));
  EXPECT_EQ(std::get<Permutation>(p), Permutation({1, 0, 2}));
  EXPECT_EQ(parse_inputs(emit(p)), p);
  EXPECT_THROW(parse_inputs(R"({"foo":1})"), ParseError);
}
