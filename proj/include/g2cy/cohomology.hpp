#pragma once

#include <map>
#include <optional>
#include <string>

#include "g2cy/parabolic.hpp"

namespace g2cy {

/// Weyl dimension formula: prod over positive roots of <mu+rho, a^vee> / <rho, a^vee>.
inline Int weyl_dim(const RootSystem& rs, const Weight& mu) {
  if (!is_g_dominant(mu)) throw Error(ErrorCode::NotGDominant, mu.str());
  const Weight shifted = mu + rs.weyl_vector();
  // Accumulate as a reduced fraction to keep intermediates small.
  Int num = 1, den = 1;
  for (const auto& a : rs.positive_roots()) {
    num = mul(num, rs.pairing(shifted, a));
    den = mul(den, rs.pairing(rs.weyl_vector(), a));
    const Int g = std::gcd(num, den);
    num /= g, den /= g;
  }
  return div_exact(num, den);
}

/// Where an irreducible homogeneous bundle has its (single) nonvanishing cohomology.
struct BwbTerm {
  Int degree = 0;
  Weight highest;  // highest weight of the G-module, up to dualization

  friend bool operator==(const BwbTerm&, const BwbTerm&) = default;
};

/// Borel-Weil-Bott: if lam + rho is singular everything vanishes, otherwise the
/// Weyl element w making w(lam + rho) dominant gives H^{l(w)} = V(w(lam+rho) - rho)^*.
/// The search runs over the full Weyl group.
inline std::optional<BwbTerm> bwb_irrep(const ParabolicData& P, const Weight& lam) {
  if (!P.is_p_dominant(lam)) throw Error(ErrorCode::NotPDominant, lam.str() + " over " + P.label());
  const auto& rs = P.root_system();
  const auto dc = rs.dominant_conjugate(lam + rs.weyl_vector());
  if (!dc) return std::nullopt;
  if (dc->length > P.dim())
    throw Error(ErrorCode::Inconsistent, "BWB degree " + std::to_string(dc->length) + " exceeds dim G/P");
  return BwbTerm{dc->length, dc->dominant - rs.weyl_vector()};
}

/// Cohomology of a completely reducible homogeneous bundle, degree by degree.
/// Each degree holds a formal sum of irreducible G-modules keyed by highest weight.
class CohomologyTable {
 public:
  void insert(Int degree, const Weight& highest, Int mult, Int dim) {
    modules_[degree].insert(highest, mult);
    Int& d = dims_[degree];
    d = add(d, mul(mult, dim));
  }

  Int total_dim(Int degree) const {
    auto it = dims_.find(degree);
    return it == dims_.end() ? 0 : it->second;
  }

  const RepSum& modules(Int degree) const {
    static const RepSum empty;
    auto it = modules_.find(degree);
    return it == modules_.end() ? empty : it->second;
  }

  /// Degrees with nonzero cohomology, ascending.
  std::vector<Int> degrees() const {
    std::vector<Int> out;
    for (const auto& [q, d] : dims_)
      if (d != 0) out.push_back(q);
    return out;
  }

  Int euler() const {
    Int e = 0;
    for (const auto& [q, d] : dims_) e = add(e, mul(sign_power(q), d));
    return e;
  }

  bool empty() const { return degrees().empty(); }

  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;

 private:
  std::map<Int, RepSum> modules_;
  std::map<Int, Int> dims_;
};

inline CohomologyTable bundle_cohomology(const ParabolicData& P, const RepSum& r) {
  CohomologyTable table;
  for (const auto& [lam, m] : r) {
    const auto term = bwb_irrep(P, lam);
    if (!term) continue;
    table.insert(term->degree, term->highest, m, weyl_dim(P.root_system(), term->highest));
  }
  return table;
}

inline Int euler_char(const ParabolicData& P, const RepSum& r) {
  Int e = 0;
  for (const auto& [lam, m] : r) {
    const auto term = bwb_irrep(P, lam);
    if (term) e = add(e, mul(mul(sign_power(term->degree), m), weyl_dim(P.root_system(), term->highest)));
  }
  return e;
}

}  // namespace g2cy
