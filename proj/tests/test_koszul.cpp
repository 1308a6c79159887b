#include <gtest/gtest.h>

#include "oracles.hpp"

namespace g2cy {
namespace {

using enum G2Parabolic;
const ParabolicData& P(G2Parabolic p) { return g2_parabolic(p); }

const RepSum kNo1{{1, 1}};  // on P1
const RepSum kNo3{{1, 1}};  // on P2
RepSum k3_bundle() {
  RepSum r;
  r.insert(Weight{1, 0}, 3);
  return r;
}

TEST(KoszulTerms, Examples) {
  const auto terms = koszul_terms(P(P1), kNo1, RepSum::trivial(2));
  ASSERT_EQ(terms.size(), 3u);
  EXPECT_EQ(terms[0], RepSum::trivial(2));
  EXPECT_EQ(terms[1], dual(P(P1), kNo1));
  EXPECT_EQ(terms[2], (RepSum{{-3, 0}}));
  EXPECT_THROW(koszul_terms(P(P1), RepSum{{0, 0}}, RepSum::trivial(2)), Error);
  EXPECT_THROW(koszul_terms(P(P1), RepSum{{-1, 1}}, RepSum::trivial(2)), Error);
}

TEST(E1Page, StructureSheafOfThreefolds) {
  for (auto [p, E] : {std::pair{P1, kNo1}, std::pair{P2, kNo3}}) {
    const auto page = e1_page(P(p), E, RepSum::trivial(2));
    const auto entries = page.entries();
    ASSERT_EQ(entries.size(), 2u);
    EXPECT_EQ(entries[0].k, 0);
    EXPECT_EQ(entries[0].q, 0);
    EXPECT_EQ(entries[0].dim, 1);
    EXPECT_EQ(entries[1].k, 2);
    EXPECT_EQ(entries[1].q, 5);
    EXPECT_EQ(entries[1].dim, 1);
    EXPECT_EQ(page.dim_F(), 5);
    EXPECT_EQ(page.euler(), 0);
  }
}

std::vector<Int> values(const RestrictedCohomology& rc) {
  std::vector<Int> out;
  for (const auto& b : rc.degrees) {
    EXPECT_TRUE(b.determined());
    out.push_back(b.lower);
  }
  return out;
}

TEST(RestrictedCohomology, StructureSheaf) {
  const auto no1 = restricted_cohomology(P(P1), kNo1, RepSum::trivial(2));
  EXPECT_EQ(no1.dim_X, 3);
  EXPECT_EQ(values(no1), (std::vector<Int>{1, 0, 0, 1}));

  const auto no3 = restricted_cohomology(P(P2), kNo3, RepSum::trivial(2));
  EXPECT_EQ(values(no3), (std::vector<Int>{1, 0, 0, 1}));

  const auto k3 = restricted_cohomology(P(P1), k3_bundle(), RepSum::trivial(2));
  EXPECT_EQ(k3.dim_X, 2);
  EXPECT_EQ(values(k3), (std::vector<Int>{1, 0, 1}));
}

TEST(RestrictedCohomology, EulerIsTheDoubleSum) {
  const auto& F = P(P1);
  for (const RepSum& W : {RepSum::trivial(2), dual(F, kNo1), dual(F, F.tangent()), RepSum{{1, 0}}}) {
    Int expected = 0;
    const auto terms = koszul_terms(F, kNo1, W);
    for (std::size_t k = 0; k < terms.size(); ++k)
      expected += sign_power(static_cast<Int>(k)) * euler_char(F, terms[k]);
    const auto rc = restricted_cohomology(F, kNo1, W);
    EXPECT_EQ(rc.euler, expected);
    Int lo = 0, hi = 0;
    for (std::size_t n = 0; n < rc.degrees.size(); ++n) {
      const Int s = sign_power(static_cast<Int>(n));
      lo += s > 0 ? rc.degrees[n].lower : -rc.degrees[n].upper;
      hi += s > 0 ? rc.degrees[n].upper : -rc.degrees[n].lower;
    }
    EXPECT_LE(lo, rc.euler);
    EXPECT_GE(hi, rc.euler);
  }
}

TEST(RestrictedCohomology, AuditWithoutDegreeVanishing) {
  RestrictionOptions audit;
  audit.degree_vanishing = false;
  for (auto p : kG2Parabolics) {
    const auto& F = P(p);
    for (const auto& row : enumerate_candidates(p, 3)) {
      const auto c = validate_candidate(F, row.summands);
      for (const RepSum& W : {RepSum::trivial(2), dual(F, c.bundle()), dual(F, F.tangent())}) {
        const auto full = restricted_cohomology(F, c.bundle(), W);
        const auto weak = restricted_cohomology(F, c.bundle(), W, audit);
        ASSERT_EQ(full.degrees.size(), weak.degrees.size());
        for (std::size_t n = 0; n < full.degrees.size(); ++n) {
          EXPECT_LE(full.degrees[n].lower, full.degrees[n].upper);
          if (weak.degrees[n].determined()) {
            EXPECT_TRUE(full.degrees[n].determined());
            EXPECT_EQ(full.degrees[n].lower, weak.degrees[n].lower);
          }
          EXPECT_GE(full.degrees[n].lower, weak.degrees[n].lower);
          EXPECT_LE(full.degrees[n].upper, weak.degrees[n].upper);
        }
      }
    }
  }
}

TEST(HilbertValue, Examples) {
  EXPECT_EQ(hilbert_value(P(P1), kNo1, 0), 0);
  EXPECT_EQ(hilbert_value(P(P1), kNo1, 1), 14);
  EXPECT_EQ(hilbert_value(P(P2), kNo3, 1), 7);
  EXPECT_THROW(hilbert_value(P(B), RepSum{{2, 2}}, 1), Error);
}

TEST(HilbertValue, OddAndCubicOnThreefolds) {
  for (auto p : {P1, P2})
    for (const auto& row : enumerate_candidates(p, 3)) {
      const RepSum E = validate_candidate(P(p), row.summands).bundle();
      std::vector<Int> chi;
      for (Int i = 0; i <= 5; ++i) chi.push_back(hilbert_value(P(p), E, i));
      EXPECT_EQ(chi[0], 0);
      for (Int i = 1; i <= 4; ++i) EXPECT_EQ(hilbert_value(P(p), E, -i), -chi[static_cast<std::size_t>(i)]);
      // third differences of a cubic with leading term deg/6 are constant
      std::vector<Int> d = chi;
      for (int r = 0; r < 3; ++r)
        for (std::size_t j = 0; j + 1 < d.size() - r; ++j) d[j] = d[j + 1] - d[j];
      EXPECT_EQ(d[0], d[1]);
      EXPECT_EQ(d[1], d[2]);
    }
}

TEST(HilbertValue, K3Surfaces) {
  // chi(O_S(i)) = H^2 i^2 / 2 + 2 on a K3 surface
  const RepSum E = k3_bundle();
  const Int chi0 = hilbert_value(P(P1), E, 0);
  EXPECT_EQ(chi0, 2);
  const Int h2 = 2 * (hilbert_value(P(P1), E, 1) - 2);
  for (Int i = -3; i <= 3; ++i) EXPECT_EQ(2 * hilbert_value(P(P1), E, i), h2 * i * i + 4);
}

std::vector<std::pair<G2Parabolic, RepSum>> all_rows() {
  std::vector<std::pair<G2Parabolic, RepSum>> out;
  for (Int d = 2; d <= 5; ++d)
    for (const auto& row : classify(d)) out.emplace_back(row.parabolic, validate_candidate(P(row.parabolic), row.summands).bundle());
  return out;
}

TEST(KoszulProperty, DoubleSumEulerAgreement) {
  const auto rows = all_rows();
  oracle::WeightGen gen(17);
  int cases = 0;
  for (int n = 0; n < 220; ++n) {
    const auto& [p, E] = rows[static_cast<std::size_t>(n) % rows.size()];
    const auto& F = P(p);
    const RepSum W{gen.p_dominant(F)};
    const auto page = e1_page(F, E, W);
    Int expected = 0;
    const auto terms = koszul_terms(F, E, W);
    for (std::size_t k = 0; k < terms.size(); ++k)
      expected += sign_power(static_cast<Int>(k)) * euler_char(F, terms[k]);
    EXPECT_EQ(page.euler(), expected);
    Int by_entries = 0;
    for (const auto& e : page.entries()) by_entries += sign_power(e.total_degree()) * e.dim;
    EXPECT_EQ(by_entries, expected);
    ++cases;
  }
  EXPECT_GE(cases, 200);
}

std::vector<std::pair<G2Parabolic, RepSum>> maximal_rows(Int dim_X) {
  std::vector<std::pair<G2Parabolic, RepSum>> out;
  for (auto p : {P1, P2})
    for (const auto& row : enumerate_candidates(p, dim_X)) out.emplace_back(p, validate_candidate(P(p), row.summands).bundle());
  return out;
}

TEST(HilbertProperty, FiniteDifferencesGiveTheDegree) {
  oracle::WeightGen gen(23);
  int cases = 0;
  for (Int dim_X = 2; dim_X <= 4; ++dim_X) {
    for (const auto& [p, E] : maximal_rows(dim_X)) {
      // the dim_X-th difference of chi(O_X(i)) is the constant H^dim_X
      std::optional<Int> degree;
      for (int n = 0; n < 30; ++n) {
        const Int i0 = gen.coord(-6, 6);
        std::vector<Int> d;
        for (Int j = 0; j <= dim_X + 1; ++j) d.push_back(hilbert_value(P(p), E, i0 + j));
        for (Int r = 0; r < dim_X; ++r)
          for (std::size_t j = 0; j + 1 < d.size() - static_cast<std::size_t>(r); ++j) d[j] = d[j + 1] - d[j];
        EXPECT_EQ(d[0], d[1]) << "not a polynomial of degree " << dim_X;
        EXPECT_GT(d[0], 0);
        if (degree) {
          EXPECT_EQ(*degree, d[0]);
        }
        degree = d[0];
        ++cases;
      }
      if (dim_X == 3) {
        EXPECT_EQ(*degree, degree_and_c2(validate_candidate(P(p), E.summands())).deg);
      }
    }
  }
  EXPECT_GE(cases, 200);
}

TEST(HilbertProperty, OddSymmetryOnThreefolds) {
  const auto rows = maximal_rows(3);
  ASSERT_EQ(rows.size(), 5u);
  int cases = 0;
  for (const auto& [p, E] : rows)
    for (Int i = 1; i <= 40; ++i) {
      EXPECT_EQ(hilbert_value(P(p), E, -i), -hilbert_value(P(p), E, i));
      ++cases;
    }
  EXPECT_GE(cases, 200);
}

}  // namespace
}  // namespace g2cy
