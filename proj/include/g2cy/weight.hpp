#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "g2cy/arith.hpp"

namespace g2cy {

/// An integral weight written in the basis of fundamental weights, so that
/// coordinate i is the pairing with the i-th simple coroot.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank, 0) {}
  Weight(std::initializer_list<Int> coords) : coords_(coords) {}
  explicit Weight(std::vector<Int> coords) : coords_(std::move(coords)) {}

  std::size_t rank() const noexcept { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_.at(i); }
  Int& operator[](std::size_t i) { return coords_.at(i); }
  std::span<const Int> coords() const noexcept { return coords_; }

  static Weight zero(std::size_t rank) { return Weight(rank); }
  static Weight fundamental(std::size_t rank, std::size_t i) {
    Weight w(rank);
    w.coords_.at(i) = 1;
    return w;
  }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
  }

  /// All coordinates non-negative.
  bool is_dominant() const {
    return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c >= 0; });
  }

  /// All coordinates strictly positive.
  bool is_strictly_dominant() const {
    return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c > 0; });
  }

  Weight& operator+=(const Weight& o) {
    check_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = add(coords_[i], o.coords_[i]);
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = sub(coords_[i], o.coords_[i]);
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) {
    for (auto& c : a.coords_) c = sub(0, c);
    return a;
  }
  friend Weight operator*(Int k, Weight a) {
    for (auto& c : a.coords_) c = mul(k, c);
    return a;
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  /// Rendered as "(a,b)".
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(coords_[i]);
    }
    return s + ')';
  }

 private:
  void check_rank(const Weight& o) const {
    if (o.rank() != rank())
      throw Error(ErrorCode::Inconsistent, "rank mismatch " + str() + " vs " + o.str());
  }

  std::vector<Int> coords_;
};

/// Weights with positive multiplicities; the character of a torus representation.
class WeightMultiset {
 public:
  using Map = std::map<Weight, Int>;

  WeightMultiset() = default;
  WeightMultiset(std::initializer_list<Weight> ws) {
    for (const auto& w : ws) insert(w);
  }

  void insert(const Weight& w, Int mult = 1) {
    if (mult == 0) return;
    Int& m = counts_[w];
    m = add(m, mult);
    if (m == 0) counts_.erase(w);
  }

  /// Removes `mult` copies; negative results are kept so callers can detect them.
  void remove(const Weight& w, Int mult = 1) { insert(w, sub(0, mult)); }

  Int count(const Weight& w) const {
    auto it = counts_.find(w);
    return it == counts_.end() ? 0 : it->second;
  }

  Int size() const {
    Int n = 0;
    for (const auto& [w, m] : counts_) n = add(n, m);
    return n;
  }

  bool empty() const noexcept { return counts_.empty(); }

  Weight sum(std::size_t rank) const {
    Weight s(rank);
    for (const auto& [w, m] : counts_) s += m * w;
    return s;
  }

  WeightMultiset negated() const {
    WeightMultiset r;
    for (const auto& [w, m] : counts_) r.insert(-w, m);
    return r;
  }

  /// Pointwise convolution: the character of a tensor product.
  friend WeightMultiset convolve(const WeightMultiset& a, const WeightMultiset& b) {
    WeightMultiset r;
    for (const auto& [u, m] : a.counts_)
      for (const auto& [v, n] : b.counts_) r.insert(u + v, mul(m, n));
    return r;
  }

  WeightMultiset& operator+=(const WeightMultiset& o) {
    for (const auto& [w, m] : o.counts_) insert(w, m);
    return *this;
  }

  const Map& entries() const noexcept { return counts_; }
  auto begin() const { return counts_.begin(); }
  auto end() const { return counts_.end(); }

  friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

 private:
  Map counts_;
};

}  // namespace g2cy
