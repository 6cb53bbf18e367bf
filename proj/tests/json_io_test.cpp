#include <gtest/gtest.h>

#include "deltaq/json_io.hpp"
#include "deltaq/oracle.hpp"

using namespace deltaq;

TEST(JsonIo, Partition) {
  EXPECT_EQ(to_json(Partition{3, 2, 2, 1}).dump(), "[3,2,2,1]");
  EXPECT_EQ(partition_from_json(json::parse("[1,3,2]")), (Partition{3, 2, 1}));
  EXPECT_THROW(partition_from_json(json::parse("[1,\"x\"]")), std::invalid_argument);
  EXPECT_THROW(partition_from_json(json::parse("{}")), std::invalid_argument);
}

TEST(JsonIo, Polynomials) {
  EXPECT_EQ(to_json(TPoly{1, 0, -2}).dump(), R"(["1","0","-2"])");
  EXPECT_EQ(tpoly_from_json(json::parse(R"(["1", 0, -2])")), (TPoly{1, 0, -2}));
  const TPoly big = TPoly::monomial(Int("123456789012345678901234567890"), 3);
  EXPECT_EQ(tpoly_from_json(to_json(big)), big);
  const TRat r(TPoly{1}, TPoly{1, -1});
  EXPECT_EQ(trat_from_json(to_json(r)), r);
  EXPECT_THROW(trat_from_json(json::parse(R"({"num":["1"],"den":[]})")), std::invalid_argument);
  EXPECT_EQ(to_json(TLaurent::monomial(2, -1)).dump(), R"({"coeffs":["2"],"offset":-1})");
}

TEST(JsonIo, SymFuncRoundTrip) {
  const SymFuncExpr d = delta_ek_en_q1(3, 2);
  EXPECT_EQ(symfunc_from_json(to_json(d)), d);
  const SymFuncExpr p = default_engine().convert(d, Basis::p);
  EXPECT_EQ(symfunc_from_json(to_json(p)), p);
  EXPECT_THROW(symfunc_from_json(json::parse(R"({"degree":2,"basis":"q","terms":[]})")), std::invalid_argument);
}

TEST(JsonIo, CombinatorialObjects) {
  const DecoratedDyckPath d(DyckPath({0, 1, 2, 2, 1, 2, 1, 2}), {0, 3, 8});
  EXPECT_EQ(to_json(d).dump(), R"({"area_seq":[0,1,2,2,1,2,1,2],"decorated_rows":[0,3,8]})");
  EXPECT_EQ(decorated_path_from_json(to_json(d)), d);
  const MSequence s{{{0, 2}, {1, 0}}};
  EXPECT_EQ(to_json(s).dump(), R"({"pairs":[[0,2],[1,0]]})");
  EXPECT_EQ(msequence_from_json(to_json(s)), s);
  EXPECT_THROW(msequence_from_json(json::parse(R"({"pairs":[[0,2,1]]})")), std::invalid_argument);
  const LabeledDiagram t{{ColumnStack{1, {}, {2}}, ColumnStack{2, {2, 1}, {0, 1}}}, Partition{2, 1}};
  EXPECT_EQ(diagram_from_json(to_json(t)), t);
  const OSPSequence o{{{0, {1, 3}}, {1, {}}, {0, {2}}}};
  EXPECT_EQ(to_json(o).dump(), R"({"pairs":[[0,[1,3]],[1,[]],[0,[2]]]})");
}

TEST(JsonIo, ParseErrors) {
  EXPECT_THROW(parse_json_text("{"), std::invalid_argument);
  EXPECT_THROW(decorated_path_from_json(json::parse(R"({"area_seq":[0,2],"decorated_rows":[]})")),
               std::invalid_argument);
}
