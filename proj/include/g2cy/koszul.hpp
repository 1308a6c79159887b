#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "g2cy/cohomology.hpp"

namespace g2cy {

/// A bundle E cutting out X = s^{-1}(0) on G/P, and a coefficient bundle W
/// whose restriction to X is being computed.
struct KoszulInput {
  RepSum bundle;
  RepSum coefficients;
};

/// E must be globally generated and free of trivial summands.
inline void check_koszul_bundle(const ParabolicData& P, const RepSum& E) {
  for (const auto& [lam, m] : E) {
    if (!is_g_dominant(lam)) throw Error(ErrorCode::NotGloballyGenerated, lam.str() + " is not g-dominant");
    if (lam.is_zero()) throw Error(ErrorCode::TrivialSummand, "bundle contains the trivial summand " + lam.str());
    (void)P;
  }
}

/// Terms Lambda^k E^vee (x) W for k = 0 .. rank E.
inline std::vector<RepSum> koszul_terms(const ParabolicData& P, const RepSum& E, const RepSum& W) {
  check_koszul_bundle(P, E);
  const RepSum dualE = dual(P, E);
  const Int r = rank(P, E);
  std::vector<RepSum> terms;
  for (Int k = 0; k <= r; ++k) terms.push_back(tensor(P, exterior_power(P, dualE, k), W));
  return terms;
}

/// H^q(G/P, Lambda^k E^vee (x) W), one cohomology table per Koszul step k.
class E1Page {
 public:
  E1Page() = default;
  E1Page(std::vector<CohomologyTable> columns, Int dim_F) : columns_(std::move(columns)), dim_F_(dim_F) {}

  Int max_k() const noexcept { return static_cast<Int>(columns_.size()) - 1; }
  Int dim_F() const noexcept { return dim_F_; }
  const CohomologyTable& column(Int k) const { return columns_.at(static_cast<std::size_t>(k)); }
  Int dim(Int k, Int q) const {
    if (k < 0 || k > max_k()) return 0;
    return column(k).total_dim(q);
  }

  struct Entry {
    Int k, q;
    Int dim;
    /// Contributes to H^{q-k} of the restriction.
    Int total_degree() const { return q - k; }
  };

  /// Nonzero entries ordered by (k, q).
  std::vector<Entry> entries() const {
    std::vector<Entry> out;
    for (Int k = 0; k <= max_k(); ++k)
      for (Int q : column(k).degrees()) out.push_back({k, q, column(k).total_dim(q)});
    return out;
  }

  /// Alternating sum over all entries with sign (-1)^{q-k}.
  Int euler() const {
    Int e = 0;
    for (const auto& x : entries()) e = add(e, mul(sign_power(x.total_degree()), x.dim));
    return e;
  }

  friend bool operator==(const E1Page&, const E1Page&) = default;

 private:
  std::vector<CohomologyTable> columns_;
  Int dim_F_ = 0;
};

inline E1Page e1_page(const ParabolicData& P, const RepSum& E, const RepSum& W) {
  std::vector<CohomologyTable> cols;
  for (const auto& term : koszul_terms(P, E, W)) cols.push_back(bundle_cohomology(P, term));
  return E1Page(std::move(cols), P.dim());
}

/// A dimension known exactly, or only up to an interval.
struct DimBounds {
  Int lower = 0;
  Int upper = 0;

  bool determined() const noexcept { return lower == upper; }
  std::optional<Int> value() const { return determined() ? std::optional<Int>(lower) : std::nullopt; }

  static DimBounds exactly(Int v) { return {v, v}; }
  friend bool operator==(const DimBounds&, const DimBounds&) = default;
};

struct RestrictedCohomology {
  Int dim_X = 0;
  std::vector<DimBounds> degrees;  // index n = 0 .. dim_X
  Int euler = 0;                   // exact

  bool all_determined() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const DimBounds& b) { return b.determined(); });
  }
};

struct RestrictionOptions {
  /// Use that H^n(X, -) vanishes for n < 0 and n > dim X. Without it a degree
  /// is determined only when no differential can touch its entries.
  bool degree_vanishing = true;
  /// Largest number of differential-rank assignments enumerated per component.
  std::size_t enumeration_limit = 200'000;
};

namespace detail {

/// Bounds on what survives of the entries of a first-quadrant-style spectral
/// sequence. The differential d_r maps position (k,q) to (k-r, q-r+1); every
/// entry ends with its E1 dimension minus the ranks of all differentials
/// touching it. Ranks are treated as free non-negative unknowns, which is a
/// relaxation: the returned bounds always contain the true values.
class SurvivorSolver {
 public:
  struct Node {
    Int degree;
    Int dim;
    Int lo, hi;  // survivor bounds
    std::vector<std::size_t> edges;
  };
  struct Edge {
    std::size_t src, dst;
    Int lo, hi;  // rank bounds
  };

  SurvivorSolver(const std::vector<E1Page::Entry>& entries, std::optional<std::pair<Int, Int>> allowed) {
    for (const auto& e : entries) {
      const bool forced = allowed && (e.total_degree() < allowed->first || e.total_degree() > allowed->second);
      nodes_.push_back({e.total_degree(), e.dim, 0, forced ? 0 : e.dim, {}});
    }
    for (std::size_t a = 0; a < entries.size(); ++a)
      for (std::size_t b = 0; b < entries.size(); ++b) {
        const Int r = entries[a].k - entries[b].k;
        if (r >= 1 && entries[b].q == entries[a].q - r + 1) {
          edges_.push_back({a, b, 0, std::min(entries[a].dim, entries[b].dim)});
          nodes_[a].edges.push_back(edges_.size() - 1);
          nodes_[b].edges.push_back(edges_.size() - 1);
        }
      }
  }

  /// Bounds on the total surviving dimension in each degree of [first, last].
  std::vector<DimBounds> solve(Int first, Int last, std::size_t enumeration_limit) {
    propagate();
    std::vector<DimBounds> out(static_cast<std::size_t>(last - first + 1));
    for (const auto& component : components()) {
      const auto partial = component_bounds(component, first, last, enumeration_limit);
      for (std::size_t n = 0; n < out.size(); ++n) {
        out[n].lower = add(out[n].lower, partial[n].lower);
        out[n].upper = add(out[n].upper, partial[n].upper);
      }
    }
    return out;
  }

 private:
  void propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& v : nodes_) {
        Int sum_lo = 0, sum_hi = 0;
        for (auto ei : v.edges) sum_lo = add(sum_lo, edges_[ei].lo), sum_hi = add(sum_hi, edges_[ei].hi);
        changed |= tighten(v.lo, v.hi, v.dim - sum_hi, v.dim - sum_lo);
        for (auto ei : v.edges) {
          auto& e = edges_[ei];
          const Int others_lo = sum_lo - e.lo, others_hi = sum_hi - e.hi;
          changed |= tighten(e.lo, e.hi, v.dim - v.hi - others_hi, v.dim - v.lo - others_lo);
        }
      }
    }
  }

  static bool tighten(Int& lo, Int& hi, Int new_lo, Int new_hi) {
    bool changed = false;
    if (new_lo > lo) lo = new_lo, changed = true;
    if (new_hi < hi) hi = new_hi, changed = true;
    if (lo > hi) throw Error(ErrorCode::Inconsistent, "Koszul spectral sequence has no consistent degeneration");
    return changed;
  }

  std::vector<std::vector<std::size_t>> components() const {
    std::vector<int> seen(nodes_.size(), 0);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < nodes_.size(); ++s) {
      if (seen[s]) continue;
      std::vector<std::size_t> comp, stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (auto ei : nodes_[v].edges) {
          const auto w = edges_[ei].src == v ? edges_[ei].dst : edges_[ei].src;
          if (!seen[w]) seen[w] = 1, stack.push_back(w);
        }
      }
      out.push_back(std::move(comp));
    }
    return out;
  }

  std::vector<DimBounds> component_bounds(const std::vector<std::size_t>& comp, Int first, Int last,
                                          std::size_t limit) const {
    const std::size_t width = static_cast<std::size_t>(last - first + 1);
    std::vector<DimBounds> interval(width);
    for (auto v : comp) {
      const auto& node = nodes_[v];
      if (node.degree < first || node.degree > last) continue;
      auto& b = interval[static_cast<std::size_t>(node.degree - first)];
      b.lower = add(b.lower, node.lo);
      b.upper = add(b.upper, node.hi);
    }

    std::vector<std::size_t> comp_edges;
    for (std::size_t ei = 0; ei < edges_.size(); ++ei)
      if (std::find(comp.begin(), comp.end(), edges_[ei].src) != comp.end()) comp_edges.push_back(ei);
    std::size_t space = 1;
    for (auto ei : comp_edges) {
      space *= static_cast<std::size_t>(edges_[ei].hi - edges_[ei].lo + 1);
      if (space > limit) return interval;
    }
    if (comp_edges.empty()) return interval;

    // Exhaustive refinement over every rank assignment within the propagated bounds.
    std::vector<DimBounds> best(width);
    bool any = false;
    std::vector<Int> x(edges_.size(), 0);
    std::function<void(std::size_t)> visit = [&](std::size_t idx) {
      if (idx == comp_edges.size()) {
        std::vector<Int> per_degree(width, 0);
        for (auto v : comp) {
          const auto& node = nodes_[v];
          Int s = node.dim;
          for (auto ei : node.edges) s -= x[ei];
          if (s < node.lo || s > node.hi) return;
          if (node.degree >= first && node.degree <= last) per_degree[static_cast<std::size_t>(node.degree - first)] += s;
        }
        for (std::size_t n = 0; n < width; ++n) {
          if (!any) best[n] = DimBounds::exactly(per_degree[n]);
          best[n].lower = std::min(best[n].lower, per_degree[n]);
          best[n].upper = std::max(best[n].upper, per_degree[n]);
        }
        any = true;
        return;
      }
      const auto ei = comp_edges[idx];
      for (Int v = edges_[ei].lo; v <= edges_[ei].hi; ++v) {
        x[ei] = v;
        visit(idx + 1);
      }
    };
    visit(0);
    if (!any) throw Error(ErrorCode::Inconsistent, "Koszul spectral sequence has no consistent degeneration");
    return best;
  }

  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
};

}  // namespace detail

/// Cohomology of W restricted to X from the Koszul resolution of O_X.
inline RestrictedCohomology restricted_cohomology(const ParabolicData& P, const RepSum& E, const RepSum& W,
                                                  RestrictionOptions options = {}) {
  const E1Page page = e1_page(P, E, W);
  RestrictedCohomology out;
  out.dim_X = sub(P.dim(), rank(P, E));
  out.euler = page.euler();
  std::optional<std::pair<Int, Int>> allowed;
  if (options.degree_vanishing) allowed = std::make_pair(Int{0}, out.dim_X);
  detail::SurvivorSolver solver(page.entries(), allowed);
  out.degrees = solver.solve(0, out.dim_X, options.enumeration_limit);
  return out;
}

/// chi(O_X(i)) for a maximal parabolic, where O(1) is the ample generator of Pic G/P.
inline Int hilbert_value(const ParabolicData& P, const RepSum& E, Int i) {
  if (!P.is_maximal()) throw Error(ErrorCode::NotMaximalParabolic, P.label());
  check_koszul_bundle(P, E);
  const RepSum twist{i * P.hyperplane()};
  const RepSum dualE = dual(P, E);
  Int chi = 0;
  for (Int k = 0; k <= rank(P, E); ++k)
    chi = add(chi, mul(sign_power(k), euler_char(P, tensor(P, exterior_power(P, dualE, k), twist))));
  return chi;
}

}  // namespace g2cy
