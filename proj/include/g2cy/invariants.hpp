#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "g2cy/koszul.hpp"

namespace g2cy {

/// A parabolic with the highest weights of a completely reducible bundle E.
struct Candidate {
  const ParabolicData* parabolic = nullptr;
  std::vector<Weight> summands;  // canonical order, with repetition
  Int rank = 0;
  Int dim_X = 0;
  Weight det;

  const ParabolicData& P() const { return *parabolic; }
  RepSum bundle() const {
    RepSum r;
    for (const auto& w : summands) r.insert(w);
    return r;
  }
  /// True when every summand is a line bundle.
  bool split() const {
    return std::all_of(summands.begin(), summands.end(), [&](const Weight& w) { return irrep_dim(P(), w) == 1; });
  }
};

/// Canonical summand order: larger irreps first, then ascending highest weight.
inline void canonical_sort(const LeviData& P, std::vector<Weight>& summands) {
  std::sort(summands.begin(), summands.end(), [&](const Weight& a, const Weight& b) {
    const Int da = irrep_dim(P, a), db = irrep_dim(P, b);
    return da != db ? da > db : a < b;
  });
}

/// Checks the conditions of the classification: global generation, no trivial
/// summand, det E = det(g/p), and rank E <= dim G/P - 2.
inline Candidate validate_candidate(const ParabolicData& P, std::vector<Weight> summands) {
  for (const auto& w : summands) {
    if (w.rank() != P.rank()) throw Error(ErrorCode::Inconsistent, "weight " + w.str() + " has wrong rank");
    if (!is_g_dominant(w))
      throw Error(ErrorCode::NotGloballyGenerated, w.str() + " is not g-dominant, so E is not globally generated");
  }
  for (const auto& w : summands)
    if (w.is_zero()) throw Error(ErrorCode::TrivialSummand, "E has the trivial bundle as a direct summand");
  if (summands.empty()) throw Error(ErrorCode::WrongDeterminant, "empty bundle");
  canonical_sort(P, summands);

  Candidate c;
  c.parabolic = &P;
  c.summands = std::move(summands);
  const RepSum E = c.bundle();
  c.rank = rank(P, E);
  c.det = det(P, E);
  c.dim_X = sub(P.dim(), c.rank);
  if (c.det != P.anticanonical())
    throw Error(ErrorCode::WrongDeterminant,
                "det E = " + c.det.str() + " but det(g/p) = " + P.anticanonical().str() + " on " + P.label());
  if (c.rank > P.dim() - 2)
    throw Error(ErrorCode::RankTooLarge,
                "rank " + std::to_string(c.rank) + " exceeds dim G/P - 2 = " + std::to_string(P.dim() - 2));
  return c;
}

struct HodgeRecord {
  Int dim_X = 0;
  std::vector<DimBounds> h0q;     // q = 0 .. dim_X
  std::optional<DimBounds> h11;   // threefolds only
  std::optional<DimBounds> h12;
  /// -chi(Omega^1_X); on a Calabi-Yau threefold this is h^{1,1} - h^{1,2}.
  Int chi_omega1 = 0;
};

namespace detail {

/// Solves the long exact sequence
///   ... -> A^q -> B^q -> C^q -> A^{q+1} -> ...
/// for the possible dimensions of C^q, given bounds on A, B and C. The state
/// carried from q to q+1 is the rank of C^q -> A^{q+1}.
inline std::vector<DimBounds> solve_long_exact_sequence(const std::vector<DimBounds>& A,
                                                        const std::vector<DimBounds>& B,
                                                        const std::vector<DimBounds>& C) {
  const std::size_t n = A.size();
  auto a_hi = [&](std::size_t q) { return q < n ? A[q].upper : Int{0}; };

  struct Step {
    Int in, out, c;
  };
  auto steps = [&](std::size_t q, Int in, auto&& emit) {
    for (Int a = A[q].lower; a <= A[q].upper; ++a) {
      const Int ra = a - in;
      if (ra < 0) continue;
      for (Int b = B[q].lower; b <= B[q].upper; ++b) {
        if (ra > b) continue;
        const Int rb = b - ra;
        for (Int out = 0; out <= a_hi(q + 1); ++out) {
          const Int c = rb + out;
          if (c >= C[q].lower && c <= C[q].upper) emit(Step{in, out, c});
        }
      }
    }
  };

  std::vector<std::set<Int>> forward(n + 1), backward(n + 1);
  forward[0].insert(0);
  for (std::size_t q = 0; q < n; ++q)
    for (Int in : forward[q]) steps(q, in, [&](const Step& s) { forward[q + 1].insert(s.out); });
  backward[n].insert(0);
  for (std::size_t q = n; q-- > 0;)
    for (Int in : forward[q])
      steps(q, in, [&](const Step& s) {
        if (backward[q + 1].contains(s.out)) backward[q].insert(in);
      });
  if (!backward[0].contains(0)) throw Error(ErrorCode::Inconsistent, "long exact sequence has no solution");

  std::vector<DimBounds> out(n);
  for (std::size_t q = 0; q < n; ++q) {
    bool any = false;
    for (Int in : backward[q]) {
      if (!forward[q].contains(in)) continue;
      steps(q, in, [&](const Step& s) {
        if (!backward[q + 1].contains(s.out)) return;
        if (!any) out[q] = DimBounds::exactly(s.c);
        out[q].lower = std::min(out[q].lower, s.c);
        out[q].upper = std::max(out[q].upper, s.c);
        any = true;
      });
    }
  }
  return out;
}

}  // namespace detail

/// h^{0,q} from O_X, and for threefolds h^{1,1}, h^{1,2} from the conormal sequence
/// 0 -> E^vee|_X -> Omega_F|_X -> Omega_X -> 0, with both restrictions computed by
/// Koszul. The ends of that sequence are pinned by h^{1,0} = h^{0,1} and
/// h^{1,n} = h^{0,n-1} (Hodge symmetry and trivial canonical class).
inline HodgeRecord hodge_numbers(const Candidate& c, RestrictionOptions options = {}) {
  const auto& P = c.P();
  const RepSum E = c.bundle();
  HodgeRecord h;
  h.dim_X = c.dim_X;
  h.h0q = restricted_cohomology(P, E, RepSum::trivial(P.rank()), options).degrees;

  const RepSum conormal = dual(P, E);
  const RepSum cotangent = dual(P, P.tangent());
  const auto A = restricted_cohomology(P, E, conormal, options);
  const auto B = restricted_cohomology(P, E, cotangent, options);
  h.chi_omega1 = sub(A.euler, B.euler);

  if (c.dim_X == 3) {
    std::vector<DimBounds> C(4, DimBounds{0, std::numeric_limits<Int>::max() / 4});
    C[0] = h.h0q[1];
    C[3] = h.h0q[2];
    const auto h1q = detail::solve_long_exact_sequence(A.degrees, B.degrees, C);
    h.h11 = h1q[1];
    h.h12 = h1q[2];
  }
  return h;
}

struct DegreeC2 {
  Int deg = 0;
  /// c_2(X) . H
  Int c2H = 0;
  std::vector<std::pair<Int, Int>> samples;  // (i, chi(O_X(i)))
};

/// Fits chi(O_X(i)) = deg/6 i^3 + c2H/12 i from i = 1, 2 and verifies the fit on
/// i = -2 .. 4.
inline DegreeC2 degree_and_c2(const Candidate& c) {
  const auto& P = c.P();
  if (c.dim_X != 3) throw Error(ErrorCode::Unsupported, "degree and c2 need a threefold");
  if (!P.is_maximal()) throw Error(ErrorCode::NotMaximalParabolic, "no canonical polarization on " + P.label());
  const RepSum E = c.bundle();
  DegreeC2 out;
  for (Int i = -2; i <= 4; ++i) out.samples.emplace_back(i, hilbert_value(P, E, i));
  auto chi = [&](Int i) { return out.samples.at(static_cast<std::size_t>(i + 2)).second; };
  out.deg = sub(chi(2), mul(2, chi(1)));
  out.c2H = sub(mul(12, chi(1)), mul(2, out.deg));
  for (const auto& [i, v] : out.samples) {
    // 12 chi(i) = 2 deg i^3 + c2H i
    if (mul(12, v) != add(mul(mul(2, out.deg), mul(i, mul(i, i))), mul(out.c2H, i)))
      throw Error(ErrorCode::FitInconsistent, "chi(O_X(" + std::to_string(i) + ")) = " + std::to_string(v) +
                                                  " is off the odd cubic");
  }
  return out;
}

/// Topological Euler number 2(h^{1,1} - h^{1,2}) of a Calabi-Yau threefold.
inline Int euler_number(const HodgeRecord& h) {
  if (!h.h11 || !h.h12 || !h.h11->determined() || !h.h12->determined())
    throw Error(ErrorCode::UndeterminedHodge, "h^{1,1} or h^{1,2} not determined");
  return mul(2, sub(h.h11->lower, h.h12->lower));
}

}  // namespace g2cy
