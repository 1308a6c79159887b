#include <gtest/gtest.h>

#include "oracles.hpp"

namespace g2cy {
namespace {

using enum G2Parabolic;

std::set<std::vector<Weight>> as_set(const std::vector<TableRow>& rows) {
  std::set<std::vector<Weight>> out;
  for (const auto& r : rows) out.insert(r.summands);
  return out;
}

TEST(Enumerate, Examples) {
  const auto p1 = enumerate_candidates(P1, 3);
  ASSERT_EQ(p1.size(), 2u);
  EXPECT_EQ(p1[0].summands, (std::vector<Weight>{{1, 1}}));
  EXPECT_FALSE(p1[0].split);
  EXPECT_EQ(p1[1].summands, (std::vector<Weight>{{1, 0}, {2, 0}}));
  EXPECT_TRUE(p1[1].split);

  const auto five = enumerate_candidates(B, 5);
  ASSERT_EQ(five.size(), 1u);
  EXPECT_EQ(five[0].summands, (std::vector<Weight>{{2, 2}}));

  const auto p2 = enumerate_candidates(P2, 2);
  ASSERT_EQ(p2.size(), 3u);
  EXPECT_EQ(p2[0].summands, (std::vector<Weight>{{1, 0}, {0, 2}}));
  EXPECT_EQ(p2[1].summands, (std::vector<Weight>{{0, 1}, {0, 1}, {0, 3}}));
  EXPECT_EQ(p2[2].summands, (std::vector<Weight>{{0, 1}, {0, 2}, {0, 2}}));

  EXPECT_THROW(enumerate_candidates(P1, 5), Error);
  EXPECT_THROW(enumerate_candidates(B, 1), Error);
  EXPECT_THROW(classify(6), Error);
}

TEST(Enumerate, AgreesWithBruteForce) {
  for (auto p : kG2Parabolics) {
    const auto brute = oracle::brute_force_candidates(p, 5, 6);
    const auto& P = g2_parabolic(p);
    for (Int d = 2; d <= P.dim() - 1; ++d) {
      const auto it = brute.find(d);
      const std::set<std::vector<Weight>> expected = it == brute.end() ? std::set<std::vector<Weight>>{} : it->second;
      EXPECT_EQ(as_set(enumerate_candidates(p, d)), expected) << P.label() << " dim " << d;
    }
  }
}

TEST(Enumerate, EveryRowValidates) {
  for (Int d = 2; d <= 5; ++d)
    for (const auto& row : classify(d)) {
      const auto c = validate_candidate(g2_parabolic(row.parabolic), row.summands);
      EXPECT_EQ(c.dim_X, d);
      EXPECT_EQ(c.summands, row.summands);
      EXPECT_EQ(c.split(), row.split);
    }
}

TEST(Enumerate, Deterministic) {
  for (Int d = 2; d <= 5; ++d) {
    const auto a = classify(d), b = classify(d);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i], b[i]);
      EXPECT_EQ(a[i].dims, b[i].dims);
    }
    EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
  }
}

TEST(Theorem, OneNonSplitThreefoldPerMaximalParabolic) {
  const auto report = verify_theorem_or_throw();
  EXPECT_TRUE(report.holds);
  ASSERT_EQ(report.witnesses.size(), 2u);
  for (const auto& w : report.witnesses) {
    ASSERT_EQ(w.non_split.size(), 1u);
    EXPECT_EQ(w.non_split[0].summands, (std::vector<Weight>{{1, 1}}));
  }
  for (const auto& row : enumerate_candidates(B, 3)) EXPECT_TRUE(row.split);
}

TEST(PaperDiff, Counts) {
  const std::map<Int, std::size_t> expected{{5, 1}, {4, 5}, {3, 8}, {2, 7}};
  for (auto [d, n] : expected) {
    const auto diff = diff_against_paper(d);
    EXPECT_EQ(diff.matched.size(), n) << d;
    EXPECT_TRUE(diff.missing.empty()) << d;
    EXPECT_NO_THROW(require_no_missing(diff));
    if (d == 4) {
      ASSERT_EQ(diff.extra.size(), 1u);
      EXPECT_EQ(diff.extra[0].parabolic, B);
      EXPECT_EQ(diff.extra[0].summands, (std::vector<Weight>{{1, 0}, {1, 2}}));
      EXPECT_FALSE(diff.clean());
    } else {
      EXPECT_TRUE(diff.clean()) << d;
    }
  }
  EXPECT_THROW(diff_against_paper(1), Error);
}

TEST(PaperDiff, MissingRowsAreAnError) {
  PaperDiff diff;
  diff.dim_X = 3;
  diff.missing.push_back(make_row(P1, {Weight{1, 1}}));
  try {
    require_no_missing(diff);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingPaperRow);
  }
}

TEST(PaperDiff, RestrictedToOneParabolic) {
  const auto diff = diff_against_paper(4, P1);
  EXPECT_TRUE(diff.clean());
  EXPECT_EQ(diff.matched.size(), 1u);
}

TEST(Reference, TableNumbering) {
  EXPECT_EQ(table_dimension(1), 5);
  EXPECT_EQ(table_dimension(4), 2);
  EXPECT_THROW(table_dimension(0), Error);
  // the printed order of tables 1, 3 and 4 is the computed order
  for (int t : {1, 3, 4}) {
    const auto computed = classify(table_dimension(t));
    const auto& printed = reference_table(t);
    ASSERT_EQ(computed.size(), printed.size());
    for (std::size_t i = 0; i < printed.size(); ++i) EXPECT_EQ(computed[i], make_row(printed[i].parabolic, printed[i].summands));
  }
}

}  // namespace
}  // namespace g2cy
