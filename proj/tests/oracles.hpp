#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <vector>

#include "g2cy/g2cy.hpp"

namespace g2cy::oracle {

/// Dominant conjugate by trying every Weyl group element.
inline std::optional<std::pair<Int, Weight>> dominant_conjugate_exhaustive(const RootSystem& rs, const Weight& mu) {
  std::optional<std::pair<Int, Weight>> found;
  for (const auto& w : rs.weyl_group()) {
    const Weight img = rs.apply(w, mu);
    if (img.is_dominant()) {
      if (!img.is_strictly_dominant()) return std::nullopt;
      if (found) throw std::logic_error("two dominant conjugates");
      found = std::make_pair(static_cast<Int>(w.length()), img);
    }
  }
  return found;
}

/// G2 Weyl dimension formula in Euclidean coordinates: short simple root
/// (1,0), long simple root (-3/2, sqrt(3)/2), inner products in floating point.
inline Int g2_weyl_dim_euclidean(Int a, Int b) {
  const double s3 = std::sqrt(3.0);
  const double a1[2] = {-1.5, s3 / 2}, a2[2] = {1.0, 0.0};
  // Fundamental weights: 2(w_i, a_j)/(a_j, a_j) = delta_ij.
  const double w1[2] = {0.0, s3};          // (w1,a1)=1.5=|a1|^2/2, (w1,a2)=0
  const double w2[2] = {0.5, s3 / 2};      // (w2,a1)=0, (w2,a2)=0.5=|a2|^2/2
  std::vector<std::array<double, 2>> pos;
  for (auto [c1, c2] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}})
    pos.push_back({c1 * a1[0] + c2 * a2[0], c1 * a1[1] + c2 * a2[1]});
  const double lr[2] = {(a + 1) * w1[0] + (b + 1) * w2[0], (a + 1) * w1[1] + (b + 1) * w2[1]};
  const double r[2] = {w1[0] + w2[0], w1[1] + w2[1]};
  double d = 1;
  for (const auto& al : pos) d *= (lr[0] * al[0] + lr[1] * al[1]) / (r[0] * al[0] + r[1] * al[1]);
  return std::llround(d);
}

/// The closed forms for G2 Levi representations: dimension and determinant.
inline std::pair<Int, Weight> g2_closed_form(G2Parabolic p, Int a, Int b) {
  switch (p) {
    case G2Parabolic::P1: return {b + 1, Weight{a * (b + 1) + b * (b + 1) / 2, 0}};
    case G2Parabolic::P2: return {a + 1, Weight{0, (a + 1) * b + 3 * a * (a + 1) / 2}};
    case G2Parabolic::B: return {1, Weight{a, b}};
  }
  return {};
}

/// Weight strings as closed formulas.
inline WeightMultiset g2_closed_form_weights(G2Parabolic p, Int a, Int b) {
  WeightMultiset m;
  switch (p) {
    case G2Parabolic::P1:
      for (Int j = 0; j <= b; ++j) m.insert(Weight{a + j, b - 2 * j});
      break;
    case G2Parabolic::P2:
      for (Int j = 0; j <= a; ++j) m.insert(Weight{a - 2 * j, b + 3 * j});
      break;
    case G2Parabolic::B: m.insert(Weight{a, b}); break;
  }
  return m;
}

/// Exterior power character by enumerating index subsets.
inline WeightMultiset exterior_subsets(const WeightMultiset& m, Int k, std::size_t rank) {
  std::vector<Weight> list;
  for (const auto& [w, c] : m)
    for (Int i = 0; i < c; ++i) list.push_back(w);
  WeightMultiset out;
  const std::size_t n = list.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    Weight s(rank);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s += list[i];
    out.insert(s);
  }
  return out;
}

/// Naive candidate search: every multiset of at most `max_size` nonzero
/// dominant weights with coordinates <= max_coord, filtered by the closed-form
/// rank and determinant.
inline std::map<Int, std::set<std::vector<Weight>>> brute_force_candidates(G2Parabolic p, Int max_coord, std::size_t max_size) {
  const auto& P = g2_parabolic(p);
  std::vector<Weight> pool;
  for (Int a = 0; a <= max_coord; ++a)
    for (Int b = 0; b <= max_coord; ++b)
      if (a || b) pool.push_back(Weight{a, b});
  std::map<Int, std::set<std::vector<Weight>>> by_dim;
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (!idx.empty()) {
      Int rank = 0;
      Weight d{0, 0};
      std::vector<Weight> ws;
      for (auto i : idx) {
        auto [dim, det] = g2_closed_form(p, pool[i][0], pool[i][1]);
        rank += dim;
        d += det;
        ws.push_back(pool[i]);
      }
      const Int dim_X = P.dim() - rank;
      if (d == P.anticanonical() && dim_X >= 2 && dim_X <= P.dim() - 1) {
        canonical_sort(P, ws);
        by_dim[dim_X].insert(ws);
      }
    }
    if (idx.size() == max_size) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      idx.push_back(i);
      rec(i);
      idx.pop_back();
    }
  };
  rec(0);
  return by_dim;
}

/// Deterministic generator of weights in a box.
class WeightGen {
 public:
  explicit WeightGen(unsigned seed) : rng_(seed) {}
  Int coord(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng_); }
  Weight box(Int lo, Int hi) { return Weight{coord(lo, hi), coord(lo, hi)}; }
  /// p-dominant weight with coordinates in [-6, 6].
  Weight p_dominant(const LeviData& P) {
    Weight w = box(-6, 6);
    for (auto i : P.uncrossed()) w[i] = coord(0, 6);
    return w;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace g2cy::oracle

namespace g2cy {

// gtest printers
inline void PrintTo(const Weight& w, std::ostream* os) { *os << w.str(); }
inline void PrintTo(const RepSum& r, std::ostream* os) {
  *os << "{";
  for (const auto& [w, m] : r) *os << " " << m << "x" << w.str();
  *os << " }";
}
inline void PrintTo(ErrorCode c, std::ostream* os) { *os << to_string(c); }
inline void PrintTo(const DimBounds& b, std::ostream* os) { *os << "[" << b.lower << "," << b.upper << "]"; }

}  // namespace g2cy
