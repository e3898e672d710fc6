#pragma once

// Finite 2-groups from power-commutator presentations.
//
// Generators g_1 < ... < g_n all have relative order 2. The square of g_k
// and every commutator [g_k, g_i] (i < k) are words in g_1..g_{k-1}, so
// <g_1..g_{k-1}> is normal in <g_1..g_k> and each element has a unique
// normal form g_1^e_1 ... g_n^e_n. The element with exponent vector e is
// stored as the integer whose bit i-1 is e_i.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fusionkit/cayley.hpp"

namespace fusionkit::pc {

inline constexpr std::size_t kMaxGenerators = 12;

struct PcElement {
  std::uint32_t bits = 0;
  friend auto operator<=>(const PcElement&, const PcElement&) = default;
};

/// Word as a sequence of generator indices (0-based); empty = identity.
using Word = std::vector<std::size_t>;

struct PcPresentation {
  std::vector<std::string> generators;
  /// powers[k] is the word equal to g_k^2. Missing entries mean identity.
  std::vector<Word> powers;
  /// Key (a, b) holds the word equal to [g_a, g_b]. Either orientation is
  /// accepted; [g_b, g_a] is then the inverse. Missing pairs commute.
  std::map<std::pair<std::size_t, std::size_t>, Word> commutators;

  std::size_t index_of(std::string_view name) const;
  /// Parses "a*b*c" (empty string = identity).
  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const;

  void set_commutator(std::string_view ga, std::string_view gb, std::string_view word);
  void set_power(std::string_view g, std::string_view word);
};

class SubgroupHandle;

class PcGroup {
 public:
  /// Collects the presentation into a full multiplication table. Throws
  /// InconsistentPresentation when the presented group has fewer than
  /// 2^n elements, TooLarge above kMaxGenerators generators.
  static PcGroup build(PcPresentation pres);

  const PcPresentation& presentation() const noexcept { return *pres_; }
  const grp::CayleyTable& table() const noexcept { return *table_; }
  std::shared_ptr<const grp::CayleyTable> shared_table() const noexcept { return table_; }

  std::size_t order() const noexcept { return table_->order(); }
  std::size_t generator_count() const noexcept { return pres_->generators.size(); }

  PcElement identity() const noexcept { return {}; }
  PcElement generator(std::size_t i) const noexcept { return {std::uint32_t{1} << i}; }
  PcElement generator(std::string_view name) const;

  PcElement mul(PcElement a, PcElement b) const noexcept { return {table_->mul(a.bits, b.bits)}; }
  PcElement inv(PcElement a) const noexcept { return {table_->inv(a.bits)}; }
  PcElement comm(PcElement a, PcElement b) const noexcept { return {table_->comm(a.bits, b.bits)}; }
  PcElement conj(PcElement a, PcElement g) const noexcept { return {table_->conj(a.bits, g.bits)}; }
  std::uint32_t element_order(PcElement a) const noexcept { return table_->element_order(a.bits); }

  PcElement eval(const Word& w) const;
  PcElement parse(std::string_view word) const { return eval(pres_->parse_word(word)); }
  /// Normal-form word, e.g. "t1*a2"; "1" for the identity.
  std::string format(PcElement a) const;

  SubgroupHandle whole() const;
  SubgroupHandle subgroup(std::span<const PcElement> gens) const;
  SubgroupHandle subgroup(std::initializer_list<std::string_view> gen_words) const;

 private:
  PcGroup() = default;
  std::shared_ptr<const PcPresentation> pres_;
  std::shared_ptr<const grp::CayleyTable> table_;
};

class SubgroupHandle {
 public:
  SubgroupHandle(std::shared_ptr<const grp::CayleyTable> parent, grp::ElementSet elements);

  std::size_t order() const noexcept { return elements_.size(); }
  const grp::ElementSet& elements() const noexcept { return elements_; }
  const std::vector<PcElement>& generators() const noexcept { return generators_; }
  bool contains(PcElement a) const { return grp::contains(elements_, a.bits); }
  const grp::CayleyTable& parent() const noexcept { return *parent_; }

  friend bool operator==(const SubgroupHandle& a, const SubgroupHandle& b) {
    return a.elements_ == b.elements_;
  }
  friend bool operator<(const SubgroupHandle& a, const SubgroupHandle& b) {
    return a.elements_ < b.elements_;
  }

 private:
  std::shared_ptr<const grp::CayleyTable> parent_;
  grp::ElementSet elements_;
  std::vector<PcElement> generators_;
};

PcGroup build_presented_group(const PcPresentation& pres);

enum class SylowKind { L34, L34_f, L34_u, L34_fu };
SylowKind parse_sylow_kind(std::string_view s);
std::string_view to_string(SylowKind k);

/// The presentations of the Sylow 2-subgroup of L3(4) and of its
/// extensions by a field (f), graph-field (u) and both automorphisms.
PcPresentation sylow_presentation(SylowKind kind);
PcGroup builtin_sylow(SylowKind kind);

enum class CharacteristicKind { Center, Derived, Frattini, Omega1, Agemo1 };
SubgroupHandle characteristic_subgroup(const PcGroup& g, CharacteristicKind kind);
/// Same, applied to a subgroup of g.
SubgroupHandle characteristic_subgroup(const PcGroup& g, const SubgroupHandle& h,
                                       CharacteristicKind kind);

/// The set A(G) of elementary abelian subgroups of maximal order, sorted
/// by element set (so the first one is the lexicographically least).
std::vector<SubgroupHandle> max_elementary_abelians(const PcGroup& g);
std::vector<SubgroupHandle> max_elementary_abelians(const PcGroup& g, const SubgroupHandle& h);
/// Subgroup generated by the members of A(G).
SubgroupHandle thompson_subgroup(const PcGroup& g);
std::size_t two_rank(const PcGroup& g);

/// Concatenated presentation with trivial cross commutators. Clashing
/// generator names from `h` get a "_2" suffix.
PcGroup direct_product(const PcGroup& g, const PcGroup& h);

enum class LocalKind { Centralizer, Normalizer };
SubgroupHandle local_subgroup(const PcGroup& g, const SubgroupHandle& h, LocalKind kind);

/// An automorphism stored extensionally: images[a.bits] is the image of a.
struct Automorphism {
  std::vector<PcElement> images;
  PcElement operator()(PcElement a) const { return images[a.bits]; }
};

/// Extends generator images multiplicatively along normal forms and
/// validates. Throws NotAutomorphism.
Automorphism automorphism_from_generator_images(const PcGroup& g,
                                                std::span<const PcElement> images);
/// Validates an explicit map. Throws NotAutomorphism if it is not a
/// bijective homomorphism.
Automorphism automorphism_from_map(const PcGroup& g, std::vector<PcElement> images);
Automorphism inner_automorphism(const PcGroup& g, PcElement x);

/// Orbits on the involutions of g under <A, Inn(G)>; each orbit sorted,
/// orbits ordered by least element. Every member of A is re-validated.
std::vector<std::vector<PcElement>> involution_classes_under(
    const PcGroup& g, std::span<const Automorphism> autos);

enum class SmallType { Cyclic, Elementary, Homocyclic, Dihedral, Semidihedral, Quaternion, Other };
std::string_view to_string(SmallType t);

struct SmallIsoType {
  SmallType type = SmallType::Other;
  std::uint32_t exponent = 1;
};

/// Fingerprint classification for 2-groups of order <= 16.
SmallIsoType isomorphism_type_small(const PcGroup& g);
SmallIsoType isomorphism_type_small(const grp::CayleyTable& t, const grp::ElementSet& h);

// Small named 2-groups. A single-generator group is named `name`,
// otherwise generators are name1, name2, ... with the last one of top order.
PcGroup cyclic_group(std::size_t order, std::string_view name = "c");
PcGroup elementary_abelian_group(std::size_t rank, std::string_view name = "e");
PcGroup dihedral_group(std::size_t order);
PcGroup semidihedral_group(std::size_t order);
PcGroup quaternion_group(std::size_t order);

}  // namespace fusionkit::pc
