#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "g2cy/invariants.hpp"
#include "g2cy/reference.hpp"

namespace g2cy {

/// Rows order by parabolic, then by summand ranks (largest irreps first), then
/// by highest weights; equality ignores the derived fields.
struct TableRow {
  G2Parabolic parabolic;
  std::vector<Weight> summands;  // canonical order
  std::vector<Int> dims;         // irrep dimension of each summand
  bool split = false;

  friend bool operator==(const TableRow& a, const TableRow& b) {
    return a.parabolic == b.parabolic && a.summands == b.summands;
  }
  friend std::strong_ordering operator<=>(const TableRow& a, const TableRow& b) {
    if (a.parabolic != b.parabolic) return a.parabolic <=> b.parabolic;
    if (a.dims != b.dims) return b.dims <=> a.dims;
    return a.summands <=> b.summands;
  }
};

inline TableRow make_row(G2Parabolic p, std::vector<Weight> summands) {
  const auto& P = g2_parabolic(p);
  canonical_sort(P, summands);
  TableRow row{p, std::move(summands), {}, true};
  for (const auto& w : row.summands) row.dims.push_back(irrep_dim(P, w));
  row.split = std::all_of(row.dims.begin(), row.dims.end(), [](Int d) { return d == 1; });
  return row;
}

/// Nonzero g-dominant weights that can occur as a summand of a bundle with
/// determinant det(g/p). For a g-dominant irrep (a,b) the determinant is
/// non-negative and its coordinate sum is at least a + b: on P1 it is
/// a(b+1) + b(b+1)/2, on P2 (a+1)b + 3a(a+1)/2, on B just a + b. Since all
/// summand determinants add up to det(g/p), no coordinate of a summand
/// exceeds the coordinate sum of det(g/p) and the box below is exhaustive.
inline std::vector<Weight> summand_pool(const ParabolicData& P) {
  const auto& K = P.anticanonical();
  Int bound = 0;
  for (auto c : K.coords()) bound = add(bound, c);
  std::vector<Weight> pool;
  Weight w(P.rank());
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i == P.rank()) {
      if (w.is_zero()) return;
      const Weight d = irrep_det(P, w);
      bool fits = true;
      Int dsum = 0, wsum = 0;
      for (std::size_t j = 0; j < P.rank(); ++j) {
        if (d[j] < 0) throw Error(ErrorCode::Inconsistent, "negative determinant coordinate for " + w.str());
        fits &= d[j] <= K[j];
        dsum += d[j], wsum += w[j];
      }
      if (dsum < wsum) throw Error(ErrorCode::Inconsistent, "determinant does not bound " + w.str());
      if (fits) pool.push_back(w);
      return;
    }
    for (Int v = 0; v <= bound; ++v) {
      w[i] = v;
      fill(i + 1);
    }
  };
  fill(0);
  return pool;
}

/// All multisets of nonzero g-dominant highest weights with total rank
/// dim G/P - dim_X and determinant det(g/p).
inline std::vector<TableRow> enumerate_candidates(G2Parabolic p, Int dim_X) {
  const auto& P = g2_parabolic(p);
  if (dim_X < 2 || dim_X > P.dim() - 1)
    throw Error(ErrorCode::OutOfRange, "dim X = " + std::to_string(dim_X) + " outside 2.." + std::to_string(P.dim() - 1));
  const Int target_rank = P.dim() - dim_X;
  const auto pool = summand_pool(P);
  std::vector<Int> dims;
  std::vector<Weight> dets;
  for (const auto& w : pool) dims.push_back(irrep_dim(P, w)), dets.push_back(irrep_det(P, w));

  std::set<TableRow> rows;
  std::vector<Weight> chosen;
  std::function<void(std::size_t, Int, const Weight&)> search = [&](std::size_t from, Int r, const Weight& d) {
    if (r == target_rank) {
      if (d == P.anticanonical()) rows.insert(make_row(p, chosen));
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (r + dims[i] > target_rank) continue;
      const Weight next = d + dets[i];
      bool fits = true;
      for (std::size_t j = 0; j < P.rank(); ++j) fits &= next[j] <= P.anticanonical()[j];
      if (!fits) continue;
      chosen.push_back(pool[i]);
      search(i, r + dims[i], next);
      chosen.pop_back();
    }
  };
  search(0, 0, Weight::zero(P.rank()));

  std::vector<TableRow> out(rows.begin(), rows.end());
  return out;
}

/// Rows for every parabolic admitting the given dimension, in P1, P2, B order.
inline std::vector<TableRow> classify(Int dim_X, std::optional<G2Parabolic> only = std::nullopt) {
  if (dim_X < 2 || dim_X > 5) throw Error(ErrorCode::OutOfRange, "dim X = " + std::to_string(dim_X) + " outside 2..5");
  std::vector<TableRow> out;
  for (auto p : kG2Parabolics) {
    if (only && *only != p) continue;
    const auto& P = g2_parabolic(p);
    if (dim_X < 2 || dim_X > P.dim() - 1) continue;
    for (auto& row : enumerate_candidates(p, dim_X)) out.push_back(std::move(row));
  }
  return out;
}

struct TheoremReport {
  struct Witness {
    G2Parabolic parabolic;
    std::vector<TableRow> non_split;
  };
  std::vector<Witness> witnesses;
  bool holds = false;
};

/// On each maximal parabolic there is exactly one non-split bundle cutting out a threefold.
inline TheoremReport verify_theorem() {
  TheoremReport report;
  report.holds = true;
  for (auto p : {G2Parabolic::P1, G2Parabolic::P2}) {
    TheoremReport::Witness w{p, {}};
    for (auto& row : enumerate_candidates(p, 3))
      if (!row.split) w.non_split.push_back(row);
    report.holds &= w.non_split.size() == 1;
    report.witnesses.push_back(std::move(w));
  }
  return report;
}

inline TheoremReport verify_theorem_or_throw() {
  auto report = verify_theorem();
  if (!report.holds) {
    std::string detail;
    for (const auto& w : report.witnesses) detail += std::to_string(w.non_split.size()) + " non-split rows; ";
    throw Error(ErrorCode::TheoremViolated, detail);
  }
  return report;
}

struct PaperDiff {
  Int dim_X = 0;
  std::vector<TableRow> matched, missing, extra;
  bool clean() const { return missing.empty() && extra.empty(); }
};

inline std::vector<TableRow> reference_rows(Int dim_X, std::optional<G2Parabolic> only = std::nullopt) {
  std::vector<TableRow> out;
  for (const auto& r : reference_table(6 - static_cast<int>(dim_X)))
    if (!only || *only == r.parabolic) out.push_back(make_row(r.parabolic, r.summands));
  return out;
}

/// Set difference between the enumeration and the published table for dim_X.
inline PaperDiff diff_against_paper(Int dim_X, std::optional<G2Parabolic> only = std::nullopt) {
  if (dim_X < 2 || dim_X > 5) throw Error(ErrorCode::OutOfRange, "published tables cover dimensions 2..5");
  PaperDiff diff;
  diff.dim_X = dim_X;
  const auto computed = classify(dim_X, only);
  const auto published = reference_rows(dim_X, only);
  for (const auto& row : published) {
    if (std::find(computed.begin(), computed.end(), row) != computed.end()) diff.matched.push_back(row);
    else diff.missing.push_back(row);
  }
  for (const auto& row : computed)
    if (std::find(published.begin(), published.end(), row) == published.end()) diff.extra.push_back(row);
  return diff;
}

inline void require_no_missing(const PaperDiff& diff) {
  if (!diff.missing.empty())
    throw Error(ErrorCode::MissingPaperRow, std::to_string(diff.missing.size()) + " published rows not reproduced in dimension " +
                                                std::to_string(diff.dim_X));
}

}  // namespace g2cy
