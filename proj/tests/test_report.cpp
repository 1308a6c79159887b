#include <gtest/gtest.h>

#include "oracles.hpp"

namespace g2cy {
namespace {

using enum G2Parabolic;

TEST(Parse, Weights) {
  EXPECT_EQ(parse_weight("(1,-2)"), (Weight{1, -2}));
  EXPECT_EQ(parse_weight(" ( 3 , 0 ) "), (Weight{3, 0}));
  for (const char* bad : {"", "1,2", "(1,2", "(a,2)", "(1,2)x", "(-,1)"}) EXPECT_THROW(parse_weight(bad), Error) << bad;
}

TEST(Parse, Summands) {
  EXPECT_EQ(parse_summands("(0,1)^3+(2,0)"), (std::vector<Weight>{{0, 1}, {0, 1}, {0, 1}, {2, 0}}));
  EXPECT_EQ(parse_summands("(1,1)"), (std::vector<Weight>{{1, 1}}));
  EXPECT_THROW(parse_summands(""), Error);
  EXPECT_THROW(parse_summands("(1,1)^"), Error);
  EXPECT_THROW(parse_summands("(1,1)+(1,1,1)"), Error);
}

TEST(Render, Summands) {
  EXPECT_EQ(render_summands({Weight{0, 1}, Weight{0, 1}, Weight{2, 0}}), "(0,1)^{⊕2} ⊕ (2,0)");
  EXPECT_EQ(render_bounds(DimBounds{3, 5}), "[3,5]");
  EXPECT_EQ(render_bounds(DimBounds::exactly(4)), "4");
}

TEST(Render, RowsMarkdown) {
  const auto md = render_rows_markdown(classify(5));
  EXPECT_EQ(md, "| No. | P | E |\n|---|---|---|\n| 1 | B | (2,2) |\n");
}

TEST(Invariants, No1) {
  const auto r = compute_invariants(P1, {Weight{1, 1}});
  EXPECT_EQ(r.deg, Quantity::exactly(42));
  EXPECT_EQ(r.c2H, Quantity::exactly(84));
  EXPECT_EQ(r.h11, Quantity::exactly(1));
  EXPECT_EQ(r.h12, Quantity::exactly(50));
  EXPECT_EQ(r.euler, Quantity::exactly(-98));
  EXPECT_EQ(r.chi_omega1, -49);
  EXPECT_TRUE(r.discrepancies.empty());
}

TEST(Invariants, No3DiscrepancyIsFlagged) {
  const auto r = compute_invariants(P2, {Weight{1, 1}});
  EXPECT_EQ(r.deg, Quantity::exactly(14));
  EXPECT_EQ(r.c2H, Quantity::exactly(56));
  ASSERT_EQ(r.discrepancies.size(), 1u);
  EXPECT_EQ(r.discrepancies[0], "c2H: computed 56, published 50");
}

TEST(Invariants, NotApplicableOnSurfaces) {
  const auto r = compute_invariants(P1, {Weight{1, 0}, Weight{1, 0}, Weight{1, 0}});
  EXPECT_EQ(r.dim_X, 2);
  EXPECT_EQ(r.h11.status, Status::NotApplicable);
  EXPECT_EQ(r.deg.status, Status::NotApplicable);
  const auto j = to_json(r);
  EXPECT_TRUE(j["deg"].is_null());
  EXPECT_EQ(j["statuses"]["deg"], "not_applicable");
}

TEST(Json, RoundTripForEveryRow) {
  for (Int d = 2; d <= 5; ++d)
    for (const auto& row : classify(d)) {
      const auto r = compute_invariants(row.parabolic, row.summands);
      const auto j = to_json(r);
      for (const char* key : {"parabolic", "summands", "rank", "dim_X", "det", "h0q", "h11", "h12", "chi_omega1", "deg",
                              "c2H", "euler", "statuses", "bounds", "discrepancies"})
        EXPECT_TRUE(j.contains(key)) << key;
      EXPECT_EQ(invariant_record_from_json(json::parse(j.dump())), r) << j.dump();
    }
}

TEST(Json, UndeterminedCarriesBounds) {
  bool seen = false;
  for (const auto& row : enumerate_candidates(B, 3)) {
    const auto r = compute_invariants(B, row.summands);
    EXPECT_EQ(r.h11, Quantity::exactly(2));
    if (r.h12.status == Status::Undetermined) {
      seen = true;
      const auto j = to_json(r);
      EXPECT_TRUE(j["h12"].is_null());
      EXPECT_EQ(j["bounds"]["h12"][0], r.h12.lower);
      EXPECT_EQ(j["bounds"]["h12"][1], r.h12.upper);
      EXPECT_EQ(r.euler.status, Status::Undetermined);
    }
  }
  EXPECT_TRUE(seen);
}

TEST(Json, RepeatedOutputIsIdentical) {
  const auto a = to_json(compute_invariants(P1, {Weight{1, 1}})).dump(2);
  const auto b = to_json(compute_invariants(P1, {Weight{1, 1}})).dump(2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(render_rows_text(classify(3)), render_rows_text(classify(3)));
}

TEST(Json, E1Page) {
  const auto j = to_json(e1_page(g2_parabolic(P1), RepSum{{1, 1}}, RepSum::trivial(2)));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["k"], 2);
  EXPECT_EQ(j[1]["q"], 5);
  EXPECT_EQ(j[1]["total_degree"], 3);
}

}  // namespace
}  // namespace g2cy
