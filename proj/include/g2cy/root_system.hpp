#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "g2cy/arith.hpp"
#include "g2cy/weight.hpp"

namespace g2cy {

/// Square integer matrix with entry (i,j) = <alpha_i, alpha_j^vee>. Row i is the
/// simple root alpha_i written in fundamental-weight coordinates.
class CartanMatrix {
 public:
  CartanMatrix(std::size_t rank, std::vector<Int> entries)
      : rank_(rank), entries_(std::move(entries)) {
    if (rank_ == 0 || entries_.size() != rank_ * rank_)
      throw Error(ErrorCode::Inconsistent, "Cartan matrix must be square and nonempty");
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) {
        const Int c = (*this)(i, j);
        if (i == j && c != 2) throw Error(ErrorCode::Inconsistent, "diagonal entry must be 2");
        if (i != j && c > 0) throw Error(ErrorCode::Inconsistent, "off-diagonal entry must be <= 0");
        if (i != j && (c == 0) != ((*this)(j, i) == 0))
          throw Error(ErrorCode::Inconsistent, "zero pattern must be symmetric");
      }
  }

  CartanMatrix(std::initializer_list<std::initializer_list<Int>> rows)
      : CartanMatrix(rows.size(), flatten(rows)) {}

  /// G2 with node 1 long: <alpha_1, alpha_2^vee> = -3, <alpha_2, alpha_1^vee> = -1.
  static CartanMatrix g2() { return CartanMatrix{{2, -3}, {-1, 2}}; }

  /// Type A_r.
  static CartanMatrix type_a(std::size_t r) {
    std::vector<Int> e(r * r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      e[i * r + i] = 2;
      if (i + 1 < r) e[i * r + i + 1] = e[(i + 1) * r + i] = -1;
    }
    return CartanMatrix(r, std::move(e));
  }

  std::size_t rank() const noexcept { return rank_; }
  Int operator()(std::size_t i, std::size_t j) const { return entries_.at(i * rank_ + j); }

 private:
  static std::vector<Int> flatten(std::initializer_list<std::initializer_list<Int>> rows) {
    std::vector<Int> out;
    for (const auto& row : rows) {
      if (row.size() != rows.size())
        throw Error(ErrorCode::Inconsistent, "Cartan matrix must be square");
      out.insert(out.end(), row.begin(), row.end());
    }
    return out;
  }

  std::size_t rank_;
  std::vector<Int> entries_;
};

enum class LengthClass { Short, Long };

struct Root {
  Weight weight;                    // fundamental-weight coordinates
  std::vector<Int> simple_coords;   // expansion in simple roots
  std::vector<Int> coroot_coords;   // expansion of alpha^vee in simple coroots
  Int half_norm = 1;                // (alpha, alpha) / 2 in the symmetrized form
  LengthClass length_class = LengthClass::Long;

  bool is_positive() const {
    return std::all_of(simple_coords.begin(), simple_coords.end(), [](Int c) { return c >= 0; });
  }
  Int height() const { return std::accumulate(simple_coords.begin(), simple_coords.end(), Int{0}); }
};

/// A Weyl group element stored as a reduced word. The element is the product
/// s_{word[0]} s_{word[1]} ... s_{word[n-1]}, so word.back() acts first.
struct WeylElement {
  std::vector<std::size_t> word;

  std::size_t length() const noexcept { return word.size(); }
  WeylElement inverse() const { return {std::vector<std::size_t>(word.rbegin(), word.rend())}; }
};

/// Result of moving a regular weight into the dominant chamber.
struct DominantConjugate {
  Int length = 0;
  Weight dominant;
  WeylElement element;  // element * mu == dominant
};

class RootSystem;
RootSystem build_root_system(const CartanMatrix& cartan, std::size_t max_roots = 4096);

class RootSystem {
 public:
  const CartanMatrix& cartan() const noexcept { return cartan_; }
  std::size_t rank() const noexcept { return cartan_.rank(); }
  const std::vector<Root>& positive_roots() const noexcept { return positive_roots_; }
  const std::vector<Int>& symmetrizer() const noexcept { return symmetrizer_; }
  const Weight& weyl_vector() const noexcept { return weyl_vector_; }

  Weight simple_root(std::size_t i) const {
    Weight w(rank());
    for (std::size_t j = 0; j < rank(); ++j) w[j] = cartan_(i, j);
    return w;
  }

  const Root& simple(std::size_t i) const {
    for (const auto& r : positive_roots_)
      if (r.height() == 1 && r.simple_coords.at(i) == 1) return r;
    throw Error(ErrorCode::OutOfRange, "no simple root " + std::to_string(i));
  }

  /// The root of maximal height.
  const Root& highest_root() const {
    return *std::max_element(positive_roots_.begin(), positive_roots_.end(),
                             [](const Root& a, const Root& b) { return a.height() < b.height(); });
  }

  /// s_i(lambda) = lambda - lambda_i alpha_i.
  Weight reflect(std::size_t i, const Weight& lam) const {
    if (i >= rank()) throw Error(ErrorCode::OutOfRange, "node index " + std::to_string(i));
    return lam - lam[i] * simple_root(i);
  }

  /// Reflection in an arbitrary positive root.
  Weight reflect(const Root& alpha, const Weight& lam) const {
    return lam - pairing(lam, alpha) * alpha.weight;
  }

  /// <lambda, alpha^vee>, exact.
  Int pairing(const Weight& lam, const Root& alpha) const {
    Int s = 0;
    for (std::size_t i = 0; i < rank(); ++i) s = add(s, mul(lam[i], alpha.coroot_coords[i]));
    return s;
  }

  Weight apply(const WeylElement& w, Weight lam) const {
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) lam = reflect(*it, lam);
    return lam;
  }

  /// True when mu lies on some reflecting wall.
  bool is_singular(const Weight& mu) const {
    return std::any_of(positive_roots_.begin(), positive_roots_.end(),
                       [&](const Root& a) { return pairing(mu, a) == 0; });
  }

  /// Finds the unique strictly dominant conjugate of a regular weight by
  /// reflecting at the first negative coordinate until none remain. Returns
  /// nullopt when mu is singular.
  std::optional<DominantConjugate> dominant_conjugate(const Weight& mu) const {
    if (is_singular(mu)) return std::nullopt;
    DominantConjugate out{0, mu, {}};
    for (;;) {
      std::size_t i = 0;
      while (i < rank() && out.dominant[i] > 0) ++i;
      if (i == rank()) break;
      out.dominant = reflect(i, out.dominant);
      out.element.word.insert(out.element.word.begin(), i);
      if (out.element.length() > positive_roots_.size())
        throw Error(ErrorCode::Inconsistent, "dominant conjugate search did not terminate");
    }
    out.length = static_cast<Int>(out.element.length());
    return out;
  }

  /// Number of positive roots sent to negative roots by w.
  std::size_t inversions(const WeylElement& w) const {
    std::size_t n = 0;
    for (const auto& r : positive_roots_) {
      const auto img = to_simple_coords(apply(w, r.weight));
      if (img && std::all_of(img->begin(), img->end(), [](Int c) { return c <= 0; })) ++n;
    }
    return n;
  }

  /// All Weyl group elements as reduced words, in order of nondecreasing length.
  std::vector<WeylElement> weyl_group(std::size_t max_order = 1'000'000) const {
    std::vector<WeylElement> out{{}};
    std::set<Weight> seen{weyl_vector_};
    std::deque<std::pair<Weight, std::size_t>> queue{{weyl_vector_, 0}};
    while (!queue.empty()) {
      auto [nu, idx] = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < rank(); ++i) {
        Weight next = reflect(i, nu);
        if (!seen.insert(next).second) continue;
        WeylElement w{{i}};
        w.word.insert(w.word.end(), out[idx].word.begin(), out[idx].word.end());
        out.push_back(std::move(w));
        if (out.size() > max_order) throw Error(ErrorCode::NonFiniteType, "Weyl group too large");
        queue.emplace_back(std::move(next), out.size() - 1);
      }
    }
    return out;
  }

  /// Expansion of a weight in simple roots, or nullopt if it is not in the root lattice.
  std::optional<std::vector<Int>> to_simple_coords(const Weight& lam) const {
    // lam = C^T c, so det(C) c = adj(C^T) lam.
    std::vector<Int> c(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < rank(); ++j) s = add(s, mul(adj_transpose_[i * rank() + j], lam[j]));
      if (s % det_ != 0) return std::nullopt;
      c[i] = s / det_;
    }
    return c;
  }

 private:
  friend RootSystem build_root_system(const CartanMatrix&, std::size_t);
  explicit RootSystem(CartanMatrix c) : cartan_(std::move(c)) {}

  CartanMatrix cartan_;
  std::vector<Int> symmetrizer_;
  std::vector<Root> positive_roots_;
  Weight weyl_vector_;
  Int det_ = 1;
  std::vector<Int> adj_transpose_;
};

namespace detail {

inline Int determinant(std::vector<Int> m, std::size_t n) {
  // Bareiss fraction-free elimination.
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i * n + j] = div_exact(sub(mul(m[i * n + j], m[k * n + k]), mul(m[i * n + k], m[k * n + j])), prev);
    prev = m[k * n + k];
  }
  return mul(sign, m[(n - 1) * n + (n - 1)]);
}

/// Per-node integers d with C_ij d_j = C_ji d_i, minimal on each connected component.
inline std::vector<Int> symmetrize(const CartanMatrix& c) {
  const std::size_t r = c.rank();
  // Rational d_j = num/den, propagated along Dynkin edges.
  std::vector<Int> num(r, 0), den(r, 1);
  for (std::size_t start = 0; start < r; ++start) {
    if (num[start] != 0) continue;
    num[start] = 1;
    std::vector<std::size_t> component{start}, stack{start};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < r; ++j) {
        if (j == i || c(i, j) == 0) continue;
        // d_j = d_i * C_ji / C_ij
        Int n = mul(num[i], c(j, i)), d = mul(den[i], c(i, j));
        if (d < 0) n = -n, d = -d;
        const Int g = std::gcd(n, d);
        n /= g, d /= g;
        if (num[j] == 0) {
          num[j] = n, den[j] = d;
          component.push_back(j);
          stack.push_back(j);
        } else if (mul(num[j], d) != mul(n, den[j])) {
          throw Error(ErrorCode::NotSymmetrizable, "Cartan matrix is not symmetrizable");
        }
      }
    }
    Int l = 1;
    for (auto j : component) l = std::lcm(l, den[j]);
    Int g = 0;
    for (auto j : component) {
      num[j] = mul(num[j], l / den[j]);
      den[j] = 1;
      g = std::gcd(g, num[j]);
    }
    for (auto j : component) num[j] /= g;
  }
  return num;
}

}  // namespace detail

/// Builds the positive roots by closing the simple roots under simple
/// reflections, keeping positive images. Throws NonFiniteType if the closure
/// exceeds `max_roots`.
inline RootSystem build_root_system(const CartanMatrix& cartan, std::size_t max_roots) {
  RootSystem rs(cartan);
  const std::size_t r = cartan.rank();
  rs.symmetrizer_ = detail::symmetrize(cartan);

  // (alpha_i, alpha_j) = C_ij d_j
  auto half_norm = [&](const std::vector<Int>& c) {
    Int s = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) s = add(s, mul(mul(c[i], c[j]), mul(cartan(i, j), rs.symmetrizer_[j])));
    return div_exact(s, 2);
  };

  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> order;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Int> e(r, 0);
    e[i] = 1;
    seen.insert(e);
    order.push_back(e);
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::vector<Int> beta = order[k];
    for (std::size_t i = 0; i < r; ++i) {
      // <beta, alpha_i^vee> = sum_j beta_j C_ji
      Int p = 0;
      for (std::size_t j = 0; j < r; ++j) p = add(p, mul(beta[j], cartan(j, i)));
      std::vector<Int> img = beta;
      img[i] = sub(img[i], p);
      if (img == beta || std::any_of(img.begin(), img.end(), [](Int c) { return c < 0; })) continue;
      if (seen.insert(img).second) {
        order.push_back(img);
        if (order.size() > max_roots)
          throw Error(ErrorCode::NonFiniteType, "reflection closure exceeded " + std::to_string(max_roots) + " roots");
      }
    }
  }

  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    const Int ha = std::accumulate(a.begin(), a.end(), Int{0});
    const Int hb = std::accumulate(b.begin(), b.end(), Int{0});
    return ha != hb ? ha < hb : a > b;
  });

  Int max_norm = 0;
  for (const auto& c : order) {
    Root root;
    root.simple_coords = c;
    root.weight = Weight(r);
    for (std::size_t i = 0; i < r; ++i) root.weight += c[i] * rs.simple_root(i);
    root.half_norm = half_norm(c);
    root.coroot_coords.resize(r);
    for (std::size_t i = 0; i < r; ++i)
      root.coroot_coords[i] = div_exact(mul(c[i], rs.symmetrizer_[i]), root.half_norm);
    max_norm = std::max(max_norm, root.half_norm);
    rs.positive_roots_.push_back(std::move(root));
  }
  for (auto& root : rs.positive_roots_)
    root.length_class = root.half_norm == max_norm ? LengthClass::Long : LengthClass::Short;

  // rho = half the sum of positive roots
  Weight twice_rho(r);
  for (const auto& root : rs.positive_roots_) twice_rho += root.weight;
  rs.weyl_vector_ = Weight(r);
  for (std::size_t i = 0; i < r; ++i) rs.weyl_vector_[i] = div_exact(twice_rho[i], 2);

  // Transpose of C, then its adjugate, for converting back to simple-root coordinates.
  std::vector<Int> ct(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) ct[i * r + j] = cartan(j, i);
  rs.det_ = detail::determinant(ct, r);
  if (rs.det_ == 0) throw Error(ErrorCode::NonFiniteType, "singular Cartan matrix");
  rs.adj_transpose_.assign(r * r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      // adj(M)_{ij} = (-1)^{i+j} minor_{ji}
      std::vector<Int> minor;
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
          if (a != j && b != i) minor.push_back(ct[a * r + b]);
      rs.adj_transpose_[i * r + j] = mul(sign_power(static_cast<Int>(i + j)), detail::determinant(minor, r - 1));
    }
  return rs;
}

}  // namespace g2cy
