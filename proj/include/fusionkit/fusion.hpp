#pragma once

// The fusion system F_S(G) of a permutation group G over a Sylow 2-subgroup
// S. Subgroups of S are sorted sets of indices into the sorted element list
// of S; a morphism records the image of every element of its source.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string_view>
#include <tuple>
#include <vector>

#include "fusionkit/cayley.hpp"
#include "fusionkit/perm.hpp"

namespace fusionkit::fus {

using grp::Elem;
using grp::ElementSet;
using perm::Perm;
using perm::PermGroup;

struct Morphism {
  ElementSet source;
  std::vector<Elem> images;  // images[i] is the image of source[i]

  Elem operator()(Elem x) const;
  ElementSet image() const;
  bool restricts_to(const Morphism& phi) const;

  friend bool operator==(const Morphism&, const Morphism&) = default;
  friend auto operator<=>(const Morphism&, const Morphism&) = default;
};

enum class HomMethod { Exhaustive, Transversal };

struct SubgroupFlags {
  bool fully_normalized = false;
  bool fully_centralized = false;
  bool centric = false;
  bool radical = false;
  bool weakly_closed = false;
};

enum class LocalKind { Centralizer, Normalizer };
std::string_view to_string(LocalKind k);

class FusionSystem;

/// C_F(P) or N_F(P) with membership decided by the extension condition.
class SubsystemView {
 public:
  LocalKind kind() const noexcept { return kind_; }
  const ElementSet& anchor() const noexcept { return anchor_; }
  const ElementSet& carrier() const noexcept { return carrier_; }
  /// False when P is not fully centralized (resp. normalized).
  bool precondition_ok() const noexcept { return precondition_ok_; }

  /// phi : Q -> R with Q, R in the carrier lies in the subsystem iff it
  /// extends to PQ -> PR in F fixing P pointwise (centralizer) or
  /// mapping P onto P (normalizer).
  bool contains(const Morphism& phi) const;
  std::vector<Morphism> hom_set(const ElementSet& q, const ElementSet& r) const;

 private:
  friend class FusionSystem;
  const FusionSystem* f_ = nullptr;
  LocalKind kind_ = LocalKind::Centralizer;
  ElementSet anchor_;
  ElementSet carrier_;
  bool precondition_ok_ = false;
};

class FusionSystem {
 public:
  /// `sylow` lists generators of S; by default S is found by normalizer
  /// climbing. Throws NotInSylow if S is not a Sylow 2-subgroup.
  explicit FusionSystem(PermGroup g, std::span<const Perm> sylow = {});

  const PermGroup& group() const noexcept { return g_; }
  const std::vector<Perm>& s_elements() const noexcept { return s_; }
  const grp::CayleyTable& s_table() const noexcept { return *table_; }
  ElementSet whole() const { return table_->all(); }
  std::optional<Elem> s_index(const Perm& p) const;
  std::vector<Perm> perms(const ElementSet& p) const;

  /// Subgroup of S generated by permutations. Throws NotInSylow.
  ElementSet subgroup(std::span<const Perm> gens) const;
  ElementSet generated(std::span<const Elem> gens) const { return grp::closure(*table_, gens); }
  /// Every subgroup of S, by (order, elements). Throws TooLarge if |S| > 256.
  const std::vector<ElementSet>& subgroups() const;

  /// Restrictions c_g : P -> Q with P^g <= Q, sorted, distinct as maps.
  std::vector<Morphism> hom_sets(const ElementSet& p, const ElementSet& q,
                                 HomMethod method = HomMethod::Transversal) const;
  std::vector<Morphism> automizer(const ElementSet& p) const { return hom_sets(p, p); }
  /// Same, for conjugation by an explicit list of elements of G.
  std::vector<Morphism> hom_sets_by(std::span<const Perm> conjugators, const ElementSet& p,
                                    const ElementSet& q) const;
  /// c_g on P for g normalizing P, as a morphism of P.
  Morphism conjugation(const ElementSet& p, const Perm& g) const;

  /// P^F, sorted.
  std::vector<ElementSet> conjugates(const ElementSet& p) const;
  ElementSet normalizer_in_s(const ElementSet& p) const;
  ElementSet centralizer_in_s(const ElementSet& p) const;
  bool is_fully_normalized(const ElementSet& p) const;
  bool is_fully_centralized(const ElementSet& p) const;
  SubgroupFlags classify(const ElementSet& p) const;

  struct Representative {
    Morphism alpha;  // defined on N_S(P)
    ElementSet target;
  };
  /// alpha in Hom_F(N_S(P), S) with P^alpha fully normalized, scanning G in
  /// element order; with `target`, P^alpha must equal it.
  std::optional<Representative> find_fully_normalized_rep(
      const ElementSet& p, const std::optional<ElementSet>& target = std::nullopt) const;

  SubsystemView local_subsystem(const ElementSet& p, LocalKind kind) const;

  struct Core {
    ElementSet o2;
    ElementSet z;
  };
  Core core_subgroups() const;
  /// Largest normal 2-subgroup of G, as a subgroup of S.
  ElementSet group_o2() const;

  bool alperin_generation_check() const;
  /// Throws NotWeaklyClosed.
  bool burnside_control_check(const ElementSet& w) const;
  bool constrained_check() const;
  /// The extension axiom for every phi in Hom(P, S) with P^phi fully
  /// centralized: phi extends to N_phi.
  bool extension_axiom_holds(const ElementSet& p) const;

  /// Elements of G normalizing (resp. centralizing) P.
  std::vector<Perm> group_normalizer(const ElementSet& p) const;
  std::vector<Perm> group_centralizer(const ElementSet& p) const;

 private:
  struct Orbit {
    std::vector<std::vector<Perm>> members;  // sorted element lists
    std::vector<Perm> transversal;           // P^t_i = members[i]
    std::vector<std::vector<Elem>> aut;      // Aut_G(P) as image lists on P
  };
  std::shared_ptr<const Orbit> orbit(const ElementSet& p) const;
  std::vector<Morphism> exhaustive(const ElementSet& p, const ElementSet& q) const;
  std::vector<Morphism> transversal(const ElementSet& p, const ElementSet& q) const;
  Elem conj_index(Elem x, const Perm& g) const;
  bool normal_in_f(const ElementSet& p, LocalKind kind) const;

  PermGroup g_;
  std::vector<Perm> s_;
  std::shared_ptr<const grp::CayleyTable> table_;

  // Append-only caches, shared between copies.
  struct Cache {
    std::mutex mu;
    std::map<std::tuple<int, ElementSet, ElementSet>, std::vector<Morphism>> homs;
    std::map<ElementSet, std::shared_ptr<const Orbit>> orbits;
    std::shared_ptr<const std::vector<ElementSet>> subgroups;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace fusionkit::fus
