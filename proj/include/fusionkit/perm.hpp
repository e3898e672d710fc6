#pragma once

// Permutation groups with a deterministic Schreier-Sims stabilizer chain.
//
// Points are 0-based. Permutations compose left to right, matching the
// exponent notation: x^(pq) = (x^p)^q, so (p * q)(x) = q(p(x)).

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fusionkit/cayley.hpp"

namespace fusionkit::perm {

using Point = std::uint16_t;

class Perm {
 public:
  Perm() = default;
  /// Throws Parse unless `images` is a permutation of 0..n-1.
  explicit Perm(std::vector<Point> images);
  static Perm identity(std::size_t degree);
  /// Cycles over 0-based points, e.g. {{0, 1, 2}, {3, 4}}.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return img_.size(); }
  Point operator()(Point x) const noexcept { return img_[x]; }
  const std::vector<Point>& images() const noexcept { return img_; }

  friend Perm operator*(const Perm& p, const Perm& q);
  Perm inverse() const;
  /// q^-1 p q
  Perm conj(const Perm& q) const { return q.inverse() * *this * q; }
  bool is_identity() const noexcept;
  std::uint64_t order() const;
  /// Cycle notation with 1-based points, "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.img_ <=> b.img_; }

 private:
  std::vector<Point> img_;
};

inline constexpr std::size_t kMaxEnumeration = 1'000'000;

class PermGroup {
 public:
  PermGroup() = default;
  /// Builds the stabilizer chain. An empty generator list gives the
  /// trivial group of the given degree.
  PermGroup(std::size_t degree, std::vector<Perm> gens, std::string name = "");

  std::size_t degree() const noexcept { return degree_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Perm>& generators() const noexcept { return gens_; }
  std::uint64_t order() const noexcept { return order_; }
  const std::vector<Point>& base() const noexcept { return base_; }

  bool contains(const Perm& p) const;
  /// All elements in lexicographic order of image lists (identity first).
  /// Enumerated on first use; throws TooLarge above kMaxEnumeration.
  const std::vector<Perm>& elements() const;
  std::optional<std::size_t> index_of(const Perm& p) const;

  PermGroup with_name(std::string name) const {
    PermGroup g = *this;
    g.name_ = std::move(name);
    return g;
  }

 private:
  struct Level {
    Point base = 0;
    std::vector<std::optional<Perm>> transversal;  // indexed by point
    std::vector<Point> orbit;
  };
  std::optional<Perm> sift(Perm g, std::size_t from, std::size_t* drop) const;
  void build_chain();
  void rebuild_level(std::size_t i);

  std::size_t degree_ = 0;
  std::string name_;
  std::vector<Perm> gens_;
  std::vector<Perm> strong_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
  mutable std::shared_ptr<const std::vector<Perm>> elements_;
};

/// Sorted element list of the group generated by `gens` (orbit closure).
std::vector<Perm> closure(std::size_t degree, std::span<const Perm> gens,
                          std::size_t limit = kMaxEnumeration);

/// Multiplication table of a sorted, closed element list.
grp::CayleyTable table_of(const std::vector<Perm>& sorted_elements);

PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
/// Symmetries of a regular n-gon, order 2n.
PermGroup dihedral_perm_group(std::size_t n);
/// L3(2) acting on the 7 points of the Fano plane.
PermGroup l32_group();

/// Elements of g commuting with every element of h.
std::vector<Perm> centralizer(const PermGroup& g, std::span<const Perm> h_gens);
/// Elements of g normalizing the subgroup generated by h_gens.
std::vector<Perm> normalizer(const PermGroup& g, const std::vector<Perm>& h_elements);

/// A Sylow 2-subgroup by normalizer climbing: from `seed` (a 2-group; by
/// default the lexicographically least involution) repeatedly adjoin the
/// least g in N_G(P) - P with g^2 in P. Returns a sorted element list.
std::vector<Perm> sylow2(const PermGroup& g, std::span<const Perm> seed = {});

/// (K1 x K2)<x> on 2m points: K1 = K' on 0..m-1, K2 its copy on m..2m-1,
/// x the swap i <-> i+m.
struct WreathModel {
  PermGroup base;
  PermGroup ambient;
  Perm x;
  std::vector<Perm> diag_gens;
};
WreathModel make_wreath_model(const PermGroup& k);

}  // namespace fusionkit::perm
