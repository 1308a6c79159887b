#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "g2cy/levi.hpp"

namespace g2cy {

/// Formal non-negative combination of irreducible Levi representations, keyed
/// by highest weight. Models both bundles and the terms of Koszul complexes.
class RepSum {
 public:
  RepSum() = default;
  RepSum(std::initializer_list<Weight> summands) {
    for (const auto& w : summands) insert(w);
  }

  static RepSum trivial(std::size_t rank) { return RepSum{Weight::zero(rank)}; }

  void insert(const Weight& highest, Int mult = 1) {
    if (mult < 0) throw Error(ErrorCode::NotARepresentation, "negative multiplicity for " + highest.str());
    if (mult == 0) return;
    Int& m = terms_[highest];
    m = add(m, mult);
  }

  RepSum& operator+=(const RepSum& o) {
    for (const auto& [w, m] : o.terms_) insert(w, m);
    return *this;
  }
  friend RepSum operator+(RepSum a, const RepSum& b) { return a += b; }

  Int multiplicity(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Number of irreducible summands counted with multiplicity.
  Int count() const {
    Int n = 0;
    for (const auto& [w, m] : terms_) n = add(n, m);
    return n;
  }

  bool empty() const noexcept { return terms_.empty(); }
  const std::map<Weight, Int>& terms() const noexcept { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Summands expanded with multiplicity, in key order.
  std::vector<Weight> summands() const {
    std::vector<Weight> out;
    for (const auto& [w, m] : terms_)
      for (Int k = 0; k < m; ++k) out.push_back(w);
    return out;
  }

  friend bool operator==(const RepSum&, const RepSum&) = default;

 private:
  std::map<Weight, Int> terms_;
};

namespace detail {

/// Levi simple roots must be pairwise orthogonal: each Levi irrep is then a
/// product of independent alpha-strings.
inline void require_string_levi(const LeviData& P) {
  const auto& c = P.root_system().cartan();
  for (auto i : P.uncrossed())
    for (auto j : P.uncrossed())
      if (i != j && c(i, j) != 0)
        throw Error(ErrorCode::Unsupported, "Levi of " + P.label() + " is not a product of A1 factors");
}

}  // namespace detail

/// Weights of the irreducible Levi representation with highest weight lam:
/// { lam - sum_i j_i alpha_i : 0 <= j_i <= lam_i } over uncrossed nodes i.
inline WeightMultiset irrep_weights(const LeviData& P, const Weight& lam) {
  if (!P.is_p_dominant(lam)) throw Error(ErrorCode::NotPDominant, lam.str() + " over " + P.label());
  detail::require_string_levi(P);
  WeightMultiset out;
  out.insert(lam);
  for (auto i : P.uncrossed()) {
    WeightMultiset next;
    const Weight alpha = P.root_system().simple_root(i);
    for (const auto& [w, m] : out)
      for (Int j = 0; j <= lam[i]; ++j) next.insert(w - j * alpha, m);
    out = std::move(next);
  }
  return out;
}

inline Int irrep_dim(const LeviData& P, const Weight& lam) {
  if (!P.is_p_dominant(lam)) throw Error(ErrorCode::NotPDominant, lam.str() + " over " + P.label());
  detail::require_string_levi(P);
  Int d = 1;
  for (auto i : P.uncrossed()) d = mul(d, add(lam[i], 1));
  return d;
}

/// Weight of the determinant character: the sum of all weights of the irrep.
inline Weight irrep_det(const LeviData& P, const Weight& lam) {
  return irrep_weights(P, lam).sum(P.rank());
}

inline WeightMultiset weights(const LeviData& P, const RepSum& r) {
  WeightMultiset out;
  for (const auto& [lam, m] : r)
    for (const auto& [w, k] : irrep_weights(P, lam)) out.insert(w, mul(m, k));
  return out;
}

inline Int rank(const LeviData& P, const RepSum& r) {
  Int n = 0;
  for (const auto& [lam, m] : r) n = add(n, mul(m, irrep_dim(P, lam)));
  return n;
}

inline Weight det(const LeviData& P, const RepSum& r) {
  Weight d(P.rank());
  for (const auto& [lam, m] : r) d += m * irrep_det(P, lam);
  return d;
}

/// Splits a weight multiset into irreducible Levi characters by repeatedly
/// peeling off a maximal weight (ties broken lexicographically, largest first).
inline RepSum decompose(const LeviData& P, WeightMultiset m) {
  RepSum out;
  while (!m.empty()) {
    const Weight* best = nullptr;
    for (const auto& [w, k] : m) {
      if (k < 0) throw Error(ErrorCode::NotARepresentation, "negative multiplicity at " + w.str());
      const bool dominated = std::any_of(m.begin(), m.end(), [&](const auto& e) {
        return P.levi_dominates(e.first, w);
      });
      if (!dominated && (!best || *best < w)) best = &w;
    }
    if (!best) throw Error(ErrorCode::NotARepresentation, "no maximal weight");
    const Weight lam = *best;
    const Int k = m.count(lam);
    if (!P.is_p_dominant(lam))
      throw Error(ErrorCode::NotARepresentation, "maximal weight " + lam.str() + " is not p-dominant");
    for (const auto& [w, j] : irrep_weights(P, lam)) {
      m.remove(w, mul(k, j));
      if (m.count(w) < 0) throw Error(ErrorCode::NotARepresentation, "extraction of " + lam.str() + " went negative");
    }
    out.insert(lam, k);
  }
  return out;
}

inline RepSum dual(const LeviData& P, const RepSum& r) { return decompose(P, weights(P, r).negated()); }

inline RepSum tensor(const LeviData& P, const RepSum& a, const RepSum& b) {
  return decompose(P, convolve(weights(P, a), weights(P, b)));
}

/// k-th exterior power. The character is the k-th elementary symmetric
/// accumulation of the weight list: layer j holds the sums of j-element sub-multisets.
inline RepSum exterior_power(const LeviData& P, const RepSum& r, Int k) {
  const WeightMultiset ws = weights(P, r);
  const Int n = ws.size();
  if (k < 0 || k > n)
    throw Error(ErrorCode::OutOfRange, "exterior power " + std::to_string(k) + " of rank " + std::to_string(n));
  std::vector<WeightMultiset> layer(static_cast<std::size_t>(k) + 1);
  layer[0].insert(Weight::zero(P.rank()));
  for (const auto& [w, m] : ws)
    for (Int copy = 0; copy < m; ++copy)
      for (std::size_t j = layer.size() - 1; j >= 1; --j)
        for (const auto& [v, c] : layer[j - 1]) layer[j].insert(v + w, c);
  return decompose(P, layer[static_cast<std::size_t>(k)]);
}

}  // namespace g2cy
