#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "g2cy/root_system.hpp"

namespace g2cy {

/// Crossed Dynkin diagram: the nodes removed from the Levi factor (0-based).
struct ParabolicSpec {
  std::set<std::size_t> crossed;

  friend bool operator==(const ParabolicSpec&, const ParabolicSpec&) = default;
};

inline bool is_g_dominant(const Weight& lam) { return lam.is_dominant(); }

/// The Levi side of a parabolic: which simple roots stay uncrossed, and the
/// order relation used to pick highest weights of Levi representations.
class LeviData {
 public:
  LeviData(std::shared_ptr<const RootSystem> rs, ParabolicSpec spec) : rs_(std::move(rs)), spec_(std::move(spec)) {
    if (!rs_) throw Error(ErrorCode::Inconsistent, "null root system");
    if (spec_.crossed.empty()) throw Error(ErrorCode::Inconsistent, "a proper parabolic needs a crossed node");
    for (auto c : spec_.crossed)
      if (c >= rs_->rank()) throw Error(ErrorCode::OutOfRange, "crossed node " + std::to_string(c + 1));
    for (std::size_t i = 0; i < rs_->rank(); ++i)
      if (!spec_.crossed.contains(i)) uncrossed_.push_back(i);
  }

  const RootSystem& root_system() const noexcept { return *rs_; }
  std::shared_ptr<const RootSystem> root_system_ptr() const noexcept { return rs_; }
  const ParabolicSpec& spec() const noexcept { return spec_; }
  std::size_t rank() const noexcept { return rs_->rank(); }
  const std::vector<std::size_t>& uncrossed() const noexcept { return uncrossed_; }
  std::size_t levi_rank() const noexcept { return uncrossed_.size(); }
  bool is_maximal() const noexcept { return spec_.crossed.size() == 1; }

  /// "B" when every node is crossed, "P<i>" for a single crossed node i (1-based).
  std::string label() const {
    if (uncrossed_.empty()) return "B";
    std::string s = "P";
    bool first = true;
    for (auto c : spec_.crossed) {
      if (!first) s += ',';
      s += std::to_string(c + 1);
      first = false;
    }
    return s;
  }

  bool is_p_dominant(const Weight& lam) const {
    return std::all_of(uncrossed_.begin(), uncrossed_.end(), [&](std::size_t i) { return lam[i] >= 0; });
  }

  /// Whether the simple root of node i lies in the Levi.
  bool in_levi(const Root& root) const {
    for (auto c : spec_.crossed)
      if (root.simple_coords[c] != 0) return false;
    return true;
  }

  /// True iff hi - lo is a nonzero non-negative integer combination of Levi simple roots.
  bool levi_dominates(const Weight& hi, const Weight& lo) const {
    const auto c = rs_->to_simple_coords(hi - lo);
    if (!c) return false;
    bool nonzero = false;
    for (std::size_t i = 0; i < rank(); ++i) {
      const Int x = (*c)[i];
      if (x == 0) continue;
      if (x < 0 || spec_.crossed.contains(i)) return false;
      nonzero = true;
    }
    return nonzero;
  }

 private:
  std::shared_ptr<const RootSystem> rs_;
  ParabolicSpec spec_;
  std::vector<std::size_t> uncrossed_;
};

}  // namespace g2cy
