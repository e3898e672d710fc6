#pragma once

// Finite groups given by an explicit multiplication table, and the
// exhaustive subgroup algorithms used at desk scale (order <= 4096).
//
// Elements are indices 0..order-1 and index 0 is always the identity.
// Subgroups are sorted vectors of element indices.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fusionkit::grp {

using Elem = std::uint32_t;
using ElementSet = std::vector<Elem>;

inline constexpr std::size_t kMaxTableOrder = 4096;

class CayleyTable {
 public:
  CayleyTable() = default;
  /// `table[a * order + b]` is the index of a*b. Throws TooLarge above
  /// kMaxTableOrder; the caller guarantees the table is a group with
  /// identity 0.
  CayleyTable(std::size_t order, std::vector<std::uint16_t> table);

  std::size_t order() const noexcept { return order_; }
  Elem mul(Elem a, Elem b) const noexcept { return table_[a * order_ + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  Elem conj(Elem a, Elem g) const noexcept { return mul(inv(g), mul(a, g)); }
  Elem comm(Elem a, Elem b) const noexcept {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  std::uint32_t element_order(Elem a) const noexcept { return orders_[a]; }
  bool is_involution(Elem a) const noexcept { return orders_[a] == 2; }

  ElementSet all() const;

 private:
  std::size_t order_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> orders_;
};

bool contains(const ElementSet& set, Elem e);
bool is_subset(const ElementSet& small, const ElementSet& big);
bool is_power_of_two(std::size_t n);
ElementSet set_union(const ElementSet& a, const ElementSet& b);

/// Subgroup generated by `gens` (closure under right multiplication).
ElementSet closure(const CayleyTable& g, std::span<const Elem> gens);
/// Subgroup generated by `base` together with `extra`.
ElementSet join(const CayleyTable& g, const ElementSet& base, Elem extra);
/// Greedy generating set: an element is kept only if it enlarges the
/// subgroup generated so far, scanning `h` in increasing order.
std::vector<Elem> generators_of(const CayleyTable& g, const ElementSet& h);

bool is_abelian(const CayleyTable& g, const ElementSet& h);
bool is_elementary_abelian(const CayleyTable& g, const ElementSet& h);
std::uint32_t exponent(const CayleyTable& g, const ElementSet& h);

ElementSet center(const CayleyTable& g, const ElementSet& h);
/// Elements of `h` commuting with every element of `x`.
ElementSet centralizer(const CayleyTable& g, const ElementSet& h, const ElementSet& x);
/// Elements of `h` normalizing the set `x`.
ElementSet normalizer(const CayleyTable& g, const ElementSet& h, const ElementSet& x);
ElementSet derived_subgroup(const CayleyTable& g, const ElementSet& h);
ElementSet agemo1(const CayleyTable& g, const ElementSet& h);
ElementSet omega1(const CayleyTable& g, const ElementSet& h);
/// Smallest normal subgroup of `h` containing `x`.
ElementSet normal_closure(const CayleyTable& g, const ElementSet& h, const ElementSet& x);
bool is_normal(const CayleyTable& g, const ElementSet& h, const ElementSet& n);
/// Largest normal 2-subgroup of `h`.
ElementSet o2(const CayleyTable& g, const ElementSet& h);

/// Conjugacy classes of `h`, each sorted, ordered by least element.
std::vector<ElementSet> conjugacy_classes(const CayleyTable& g, const ElementSet& h);

/// All elementary abelian subgroups of `h` of the largest order, sorted.
std::vector<ElementSet> max_elementary_abelians(const CayleyTable& g, const ElementSet& h);
/// log2 of the order of the largest elementary abelian subgroup.
std::size_t two_rank(const CayleyTable& g, const ElementSet& h);

/// Every subgroup of `h`, sorted by (order, elements). Throws TooLarge
/// when |h| exceeds `limit`.
std::vector<ElementSet> all_subgroups(const CayleyTable& g, const ElementSet& h,
                                      std::size_t limit = 256);

}  // namespace fusionkit::grp
