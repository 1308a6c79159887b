#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "g2cy/reps.hpp"

namespace g2cy {

/// A parabolic together with the data of G/P: its dimension, the tangent
/// representation g/p and the anticanonical weight det(g/p).
class ParabolicData : public LeviData {
 public:
  Int dim() const noexcept { return dim_; }
  /// g/p as a sum of irreducible Levi representations.
  const RepSum& tangent() const noexcept { return tangent_; }
  /// The weights of g/p: the positive roots outside the Levi span.
  const WeightMultiset& tangent_weights() const noexcept { return tangent_weights_; }
  const Weight& anticanonical() const noexcept { return anticanonical_; }
  Weight canonical() const { return -anticanonical_; }

  /// Ample generator of Pic G/P for a maximal parabolic: the fundamental weight of the crossed node.
  Weight hyperplane() const {
    if (!is_maximal()) throw Error(ErrorCode::NotMaximalParabolic, label() + " has Picard rank > 1");
    return Weight::fundamental(rank(), *spec().crossed.begin());
  }

  friend ParabolicData make_parabolic(std::shared_ptr<const RootSystem>, ParabolicSpec);

 private:
  ParabolicData(std::shared_ptr<const RootSystem> rs, ParabolicSpec spec) : LeviData(std::move(rs), std::move(spec)) {}

  Int dim_ = 0;
  RepSum tangent_;
  WeightMultiset tangent_weights_;
  Weight anticanonical_;
};

/// The tangent weights are taken to be the positive roots outside the Levi
/// span; with node 1 long this reproduces the G2 decompositions
/// g/p1 = (-1,3) + (1,0), g/p2 = (1,-1) + (1,0) + (0,1), and the six
/// characters of g/b.
inline ParabolicData make_parabolic(std::shared_ptr<const RootSystem> rs, ParabolicSpec spec) {
  ParabolicData pd(std::move(rs), std::move(spec));
  for (const auto& root : pd.root_system().positive_roots())
    if (!pd.in_levi(root)) pd.tangent_weights_.insert(root.weight);
  pd.dim_ = pd.tangent_weights_.size();
  pd.tangent_ = decompose(pd, pd.tangent_weights_);
  pd.anticanonical_ = pd.tangent_weights_.sum(pd.rank());
  return pd;
}

/// Shared G2 root system, built once.
inline std::shared_ptr<const RootSystem> g2_root_system() {
  static const auto rs = std::make_shared<const RootSystem>(build_root_system(CartanMatrix::g2()));
  return rs;
}

enum class G2Parabolic { P1, P2, B };

inline ParabolicSpec spec_of(G2Parabolic p) {
  switch (p) {
    case G2Parabolic::P1: return {{0}};
    case G2Parabolic::P2: return {{1}};
    case G2Parabolic::B: return {{0, 1}};
  }
  return {};
}

inline const ParabolicData& g2_parabolic(G2Parabolic p) {
  static const ParabolicData p1 = make_parabolic(g2_root_system(), spec_of(G2Parabolic::P1));
  static const ParabolicData p2 = make_parabolic(g2_root_system(), spec_of(G2Parabolic::P2));
  static const ParabolicData b = make_parabolic(g2_root_system(), spec_of(G2Parabolic::B));
  switch (p) {
    case G2Parabolic::P1: return p1;
    case G2Parabolic::P2: return p2;
    case G2Parabolic::B: return b;
  }
  return b;
}

/// Accepts "P1", "P2" or "B".
inline G2Parabolic parse_g2_parabolic(std::string_view name) {
  if (name == "P1") return G2Parabolic::P1;
  if (name == "P2") return G2Parabolic::P2;
  if (name == "B") return G2Parabolic::B;
  throw Error(ErrorCode::Parse, "unknown parabolic '" + std::string(name) + "' (expected P1, P2 or B)");
}

inline constexpr G2Parabolic kG2Parabolics[] = {G2Parabolic::P1, G2Parabolic::P2, G2Parabolic::B};

}  // namespace g2cy
