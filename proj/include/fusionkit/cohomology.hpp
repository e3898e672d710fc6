#pragma once

// Cohomology of finite matrix groups on F2-modules, group extensions from
// 2-cocycles, and complements.
//
// Conventions: modules are right modules, so v^g = v * rho(g). An element of
// an extension H of E by Gamma is a pair (e, g) standing for s(g) * e, where
// s is the chosen section; s(g) s(h) = s(gh) c(g, h). The product is
//
//   (e1, g1)(e2, g2) = (e1^g2 + e2 + c(g1, g2), g1 g2)
//
// and c satisfies c(g1,g2)^g3 + c(g1 g2, g3) = c(g2, g3) + c(g1, g2 g3).

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fusionkit/modrep.hpp"

namespace fusionkit::coh {

using mod::MatF2;
using mod::MatGroupF2;
using mod::Vec;

/// Right multiplication by the generators of an enumerated group, with a
/// breadth-first spanning tree rooted at the identity.
struct CayleyGraph {
  std::size_t ngens = 0;
  std::vector<std::uint32_t> succ;    // succ[g * ngens + i] = g * s_i
  std::vector<std::uint32_t> order;   // breadth-first order, identity first
  std::vector<std::uint32_t> parent;  // tree parent (identity: itself)
  std::vector<std::uint8_t> via;      // generator index of the tree edge

  std::uint32_t step(std::uint32_t g, std::size_t i) const { return succ[g * ngens + i]; }
};

/// An F2[Gamma]-module of dimension <= 8. Gamma is any enumerated matrix
/// group; the module structure is given by the images of its generators.
class Module {
 public:
  /// Gamma acting on its own space.
  static Module natural(std::shared_ptr<const MatGroupF2> gamma);
  /// Gamma acting trivially on F2^dim.
  static Module trivial(std::shared_ptr<const MatGroupF2> gamma, int dim);
  /// Throws ShapeMismatch when the images do not define a homomorphism.
  static Module from_generator_images(std::shared_ptr<const MatGroupF2> gamma,
                                      std::vector<MatF2> images);

  const MatGroupF2& group() const noexcept { return *gamma_; }
  std::shared_ptr<const MatGroupF2> shared_group() const noexcept { return gamma_; }
  int dim() const noexcept { return dim_; }
  std::size_t order() const noexcept { return gamma_->order(); }
  const CayleyGraph& graph() const noexcept { return *graph_; }

  /// rho(g) for an element index g.
  const MatF2& action(std::uint32_t g) const { return (*action_)[g]; }
  Vec act(Vec v, std::uint32_t g) const { return action(g).apply(v); }
  std::uint32_t identity() const noexcept { return identity_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(gamma_->mul(a, b));
  }
  std::uint32_t inv(std::uint32_t a) const { return static_cast<std::uint32_t>(gamma_->inv(a)); }

 private:
  Module() = default;
  std::shared_ptr<const MatGroupF2> gamma_;
  int dim_ = 0;
  std::uint32_t identity_ = 0;
  std::shared_ptr<const CayleyGraph> graph_;
  std::shared_ptr<const std::vector<MatF2>> action_;
};

CayleyGraph build_cayley_graph(const MatGroupF2& g);

/// A 1-cocycle d : Gamma -> M, d(gh) = d(g)^h + d(h).
struct Cocycle1 {
  std::vector<Vec> values;  // indexed by element
};

struct H1Result {
  int dim_z1 = 0;
  int dim_b1 = 0;
  int dim_h0 = 0;
  int dim_h1 = 0;
  /// Basis of Z^1 as explicit cocycles.
  std::vector<Cocycle1> z1_basis;
};

/// Z^1 by seeding the values on the generators and propagating along the
/// spanning tree; every non-tree edge contributes linear constraints.
/// Throws TooLarge when (generators * dim) exceeds 64 unknowns.
H1Result first_cohomology(const Module& m);
int h1_dimension(const Module& m);

bool is_cocycle1(const Module& m, const Cocycle1& d);

/// Normalized 2-cocycle, stored sparsely: pairs absent from the map are 0.
struct Cocycle2 {
  std::unordered_map<std::uint64_t, Vec> values;
  std::size_t quotient_order = 0;

  Vec operator()(std::uint32_t a, std::uint32_t b) const {
    if (values.empty()) return 0;
    auto it = values.find(key(a, b));
    return it == values.end() ? 0 : it->second;
  }
  void set(std::uint32_t a, std::uint32_t b, Vec v) {
    if (v)
      values[key(a, b)] = v;
    else
      values.erase(key(a, b));
  }
  std::uint64_t key(std::uint32_t a, std::uint32_t b) const {
    return std::uint64_t{a} * quotient_order + b;
  }
};

/// The coboundary of f : Gamma -> M, (g, h) -> f(g)^h + f(h) + f(gh).
Cocycle2 coboundary(const Module& m, std::span<const Vec> f);

/// Every triple on which the cocycle identity can fail is tested: with a
/// sparse cocycle only triples touching the support matter.
bool is_cocycle2(const Module& m, const Cocycle2& c);

struct ExtElement {
  Vec e = 0;
  std::uint32_t g = 0;
  friend bool operator==(const ExtElement&, const ExtElement&) = default;
  friend auto operator<=>(const ExtElement& a, const ExtElement& b) {
    return a.g != b.g ? a.g <=> b.g : a.e <=> b.e;
  }
};

class ExtensionGroup {
 public:
  /// Normalizes c (shift by the coboundary of the constant c(1,1)) and
  /// validates it. Throws NotACocycle, or TooLarge past `limit` elements.
  static ExtensionGroup build(Module m, Cocycle2 c, std::size_t limit = std::size_t{1} << 24);

  const Module& module() const noexcept { return module_; }
  const Cocycle2& cocycle() const noexcept { return cocycle_; }
  std::size_t order() const noexcept { return (std::size_t{1} << module_.dim()) * module_.order(); }
  std::size_t base_order() const noexcept { return std::size_t{1} << module_.dim(); }

  ExtElement identity() const noexcept { return {0, module_.identity()}; }
  ExtElement base(Vec e) const noexcept { return {e, module_.identity()}; }
  /// The section value s(g) = (0, g).
  ExtElement lift(std::uint32_t g) const noexcept { return {0, g}; }
  bool in_base(ExtElement a) const noexcept { return a.g == module_.identity(); }

  ExtElement mul(ExtElement a, ExtElement b) const {
    return {static_cast<Vec>(module_.act(a.e, b.g) ^ b.e ^ cocycle_(a.g, b.g)),
            module_.mul(a.g, b.g)};
  }
  ExtElement inv(ExtElement a) const;
  ExtElement conj(ExtElement a, ExtElement by) const { return mul(inv(by), mul(a, by)); }
  ExtElement comm(ExtElement a, ExtElement b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  std::uint32_t element_order(ExtElement a) const;

  std::uint64_t index(ExtElement a) const noexcept {
    return (std::uint64_t{a.g} << module_.dim()) | a.e;
  }
  ExtElement element(std::uint64_t i) const noexcept {
    return {static_cast<Vec>(i & ((std::uint64_t{1} << module_.dim()) - 1)),
            static_cast<std::uint32_t>(i >> module_.dim())};
  }

 private:
  ExtensionGroup(Module m, Cocycle2 c) : module_(std::move(m)), cocycle_(std::move(c)) {}
  Module module_;
  Cocycle2 cocycle_;
};

/// A complement described by its section: g -> (f(g), g).
struct Complement {
  std::vector<Vec> offsets;
  ExtElement element(std::uint32_t g) const { return {offsets[g], g}; }
};

/// Solves c = delta(f) along the spanning tree. nullopt iff the class of c
/// in H^2 is nonzero.
std::optional<Complement> complement_search(const ExtensionGroup& h);

/// All complements, one per solution of c = delta(f): there are
/// |Z^1| of them when one exists. Throws TooLarge above 2^16.
std::vector<Complement> all_complements(const ExtensionGroup& h);

/// Complements up to conjugation by the base E.
std::size_t complement_classes(const ExtensionGroup& h);

// ---------------------------------------------------------------------------
// Hyperplane-stabilizer extensions

enum class YType { Elementary, Homocyclic, Other };
std::string_view to_string(YType t);

struct Lemma32Verdict {
  std::size_t h_order = 0;
  std::size_t u_order = 0;
  std::size_t x_order = 0;  // |X|
  bool xbar_elementary = false;
  bool x_central_mod_v = false;
  bool comm_map_well_defined = false;
  bool comm_map_bijective = false;
  bool comm_map_equivariant = false;
  std::size_t invariant_complements = 0;
  bool found = false;
  std::size_t y_order = 0;
  YType y_type = YType::Other;
  std::uint32_t y_exponent = 0;
  std::size_t y_omega1_order = 0;
  bool y_omega1_contains_v = false;
  bool y_omega1_is_v = false;
  bool y_g_invariant = false;
  bool y_meets_x_trivially = false;
  /// Every G-invariant complement has the same type as the reported one.
  bool all_complements_same_type = false;

  bool holds() const;
};

/// Checks the structure of X, the preimage of U = O_2(stabilizer of V), in
/// an extension H of E = <x> + V. `v_basis` spans the hyperplane V,
/// `g_gens` are quotient indices generating G (each fixing x and V).
/// Throws ShapeMismatch if the containments fail.
Lemma32Verdict lemma32_conclusion_check(const ExtensionGroup& h, Vec x,
                                        std::span<const Vec> v_basis,
                                        std::span<const std::uint32_t> g_gens);

struct Lemma32Scenario {
  std::shared_ptr<const MatGroupF2> gamma;
  ExtensionGroup extension;
  Vec x = 0;
  std::vector<Vec> v_basis;
  std::vector<std::uint32_t> g_gens;
};

/// E = V + <x> with V = F2^n carrying G and x fixed; Gamma = U G inside
/// GL(E) where U consists of the maps x -> x + v fixing V. `c` defaults to
/// the split extension.
Lemma32Scenario make_lemma32_scenario(const MatGroupF2& g);

// ---------------------------------------------------------------------------
// Lifting to Z/4

/// Matrices a, b generating a copy of A5 = <a, b | a^2, b^3, (ab)^k> with
/// k = 5. A different k gives the (2,3,k) triangle presentation.
struct TriangleWitness {
  MatF2 a;
  MatF2 b;
  int k = 5;
};

/// An SL2(4) = A5 inside g generated by an involution and an element of
/// order 3 with no nonzero fixed vector; scan in element order.
/// Throws NoFpfElement when none exists.
TriangleWitness find_sl24_witness(const MatGroupF2& g);

/// True iff the relators a^2, b^3, (ab)^k admit no lift of (a, b) to
/// GL_n(Z/4) reducing to the given matrices, i.e. no homocyclic Y of
/// exponent 4 with Omega_1(Y) = V carries the action. The single lifting
/// layer is solved as a linear system over F2. Exponent 2 is vacuous.
/// Throws NoFpfElement if b fixes a nonzero vector.
bool higman_instance_check(const TriangleWitness& w, int y_exponent = 4);

}  // namespace fusionkit::coh
