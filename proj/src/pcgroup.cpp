#include "fusionkit/pcgroup.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "fusionkit/error.hpp"
#include "fusionkit/f2.hpp"

namespace fusionkit::pc {

using grp::Elem;
using grp::ElementSet;

// ---------------------------------------------------------------------------
// Presentations

std::size_t PcPresentation::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return i;
  throw Error(ErrorKind::Parse, "unknown generator '" + std::string(name) + "'");
}

Word PcPresentation::parse_word(std::string_view text) const {
  Word w;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "1") return w;
  while (pos <= text.size()) {
    const std::size_t star = std::min(text.find('*', pos), text.size());
    const std::string_view tok = trim(text.substr(pos, star - pos));
    if (tok.empty()) throw Error(ErrorKind::Parse, "empty factor in '" + std::string(text) + "'");
    w.push_back(index_of(tok));
    pos = star + 1;
  }
  return w;
}

std::string PcPresentation::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += generators.at(w[i]);
  }
  return out;
}

void PcPresentation::set_commutator(std::string_view ga, std::string_view gb,
                                    std::string_view word) {
  commutators[{index_of(ga), index_of(gb)}] = parse_word(word);
}

void PcPresentation::set_power(std::string_view g, std::string_view word) {
  const std::size_t i = index_of(g);
  if (powers.size() < generators.size()) powers.resize(generators.size());
  powers[i] = parse_word(word);
}

// ---------------------------------------------------------------------------
// Collection

namespace {

[[noreturn]] void inconsistent(const std::string& what) {
  throw Error(ErrorKind::InconsistentPresentation, what);
}

// Evaluates w inside the partially built table holding <g_1..g_k>.
Elem eval_partial(const std::vector<std::uint16_t>& table, std::size_t stride,
                  const Word& w) {
  Elem acc = 0;
  for (std::size_t g : w) acc = table[acc * stride + (Elem{1} << g)];
  return acc;
}

}  // namespace

PcGroup PcGroup::build(PcPresentation pres) {
  const std::size_t n = pres.generators.size();
  if (n > kMaxGenerators)
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " generators exceeds " +
                                         std::to_string(kMaxGenerators));
  pres.powers.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (pres.generators[i] == pres.generators[j])
        throw Error(ErrorKind::Parse, "duplicate generator " + pres.generators[i]);

  const std::size_t order = std::size_t{1} << n;
  std::vector<std::uint16_t> table(order * order, 0);
  auto at = [&](Elem a, Elem b) -> std::uint16_t& { return table[a * order + b]; };
  at(0, 0) = 0;

  for (std::size_t k = 0; k < n; ++k) {
    const Elem half = Elem{1} << k;
    const std::string& name = pres.generators[k];
    auto check_lower = [&](const Word& w, const std::string& rel) {
      for (std::size_t g : w)
        if (g >= k)
          inconsistent("relation " + rel + " uses " + pres.generators[g] +
                       ", not below " + name);
    };

    check_lower(pres.powers[k], name + "^2");
    const Elem square = eval_partial(table, order, pres.powers[k]);

    // psi(h) = g_k^-1 h g_k on <g_1..g_{k-1}>; on generators
    // g_i^{g_k} = g_i [g_k, g_i]^-1.
    std::vector<Elem> psi(half, 0);
    for (std::size_t i = 0; i < k; ++i) {
      Elem c = 0;  // [g_k, g_i]
      bool have = false;
      if (auto it = pres.commutators.find({k, i}); it != pres.commutators.end()) {
        check_lower(it->second, "[" + name + "," + pres.generators[i] + "]");
        c = eval_partial(table, order, it->second);
        have = true;
      }
      if (auto it = pres.commutators.find({i, k}); it != pres.commutators.end()) {
        check_lower(it->second, "[" + pres.generators[i] + "," + name + "]");
        const Elem ci = eval_partial(table, order, it->second);
        Elem inv_ci = 0;
        for (Elem b = 0; b < half; ++b)
          if (at(ci, b) == 0) inv_ci = b;
        if (have && inv_ci != c)
          inconsistent("[" + name + "," + pres.generators[i] + "] and its reverse disagree");
        c = inv_ci;
      }
      Elem c_inv = 0;
      for (Elem b = 0; b < half; ++b)
        if (at(c, b) == 0) c_inv = b;
      psi[Elem{1} << i] = at(Elem{1} << i, c_inv);
    }
    for (Elem h = 1; h < half; ++h) {
      const Elem top = Elem{1} << (31 - std::countl_zero(h));
      psi[h] = at(psi[h ^ top], psi[top]);
    }

    // psi must be an automorphism fixing the square, with psi^2 equal to
    // conjugation by the square; otherwise the extension collapses.
    std::vector<Elem> phi(half, half);
    for (Elem h = 0; h < half; ++h) {
      if (phi[psi[h]] != half)
        inconsistent("conjugation by " + name + " is not injective");
      phi[psi[h]] = h;
    }
    for (Elem h = 0; h < half; ++h)
      for (std::size_t i = 0; i < k; ++i) {
        const Elem gi = Elem{1} << i;
        if (psi[at(h, gi)] != at(psi[h], psi[gi]))
          inconsistent("conjugation by " + name + " is not a homomorphism");
      }
    if (psi[square] != square) inconsistent(name + " does not commute with its square");
    {
      Elem square_inv = 0;
      for (Elem b = 0; b < half; ++b)
        if (at(square, b) == 0) square_inv = b;
      for (Elem h = 0; h < half; ++h)
        if (psi[psi[h]] != at(at(square_inv, h), square))
          inconsistent("conjugation by " + name + " squared differs from conjugation by " +
                       name + "^2");
    }

    // (h1 g^e1)(h2 g^e2) = h1 phi^e1(h2) g^(e1+e2), with g^2 = square.
    for (Elem a = 0; a < 2 * half; ++a)
      for (Elem b = 0; b < 2 * half; ++b) {
        if (a < half && b < half) continue;
        const Elem h1 = a & (half - 1), h2 = b & (half - 1);
        const bool e1 = a & half, e2 = b & half;
        Elem prod = at(h1, e1 ? phi[h2] : h2);
        if (e1 && e2)
          prod = at(prod, square);
        else if (e1 || e2)
          prod |= half;
        at(a, b) = static_cast<std::uint16_t>(prod);
      }
  }

  PcGroup g;
  g.pres_ = std::make_shared<const PcPresentation>(std::move(pres));
  g.table_ = std::make_shared<const grp::CayleyTable>(order, std::move(table));
  return g;
}

PcGroup build_presented_group(const PcPresentation& pres) { return PcGroup::build(pres); }

PcElement PcGroup::generator(std::string_view name) const {
  return generator(pres_->index_of(name));
}

PcElement PcGroup::eval(const Word& w) const {
  PcElement acc;
  for (std::size_t g : w) acc = mul(acc, generator(g));
  return acc;
}

std::string PcGroup::format(PcElement a) const {
  Word w;
  for (std::size_t i = 0; i < generator_count(); ++i)
    if (a.bits >> i & 1u) w.push_back(i);
  return pres_->format_word(w);
}

SubgroupHandle PcGroup::whole() const { return SubgroupHandle(table_, table_->all()); }

SubgroupHandle PcGroup::subgroup(std::span<const PcElement> gens) const {
  std::vector<Elem> g;
  for (PcElement e : gens) g.push_back(e.bits);
  return SubgroupHandle(table_, grp::closure(*table_, g));
}

SubgroupHandle PcGroup::subgroup(std::initializer_list<std::string_view> gen_words) const {
  std::vector<PcElement> gens;
  for (std::string_view w : gen_words) gens.push_back(parse(w));
  return subgroup(gens);
}

SubgroupHandle::SubgroupHandle(std::shared_ptr<const grp::CayleyTable> parent,
                               grp::ElementSet elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  for (Elem e : grp::generators_of(*parent_, elements_)) generators_.push_back({e});
}

// ---------------------------------------------------------------------------
// Builtin presentations

SylowKind parse_sylow_kind(std::string_view s) {
  if (s == "L34") return SylowKind::L34;
  if (s == "L34_f") return SylowKind::L34_f;
  if (s == "L34_u") return SylowKind::L34_u;
  if (s == "L34_fu") return SylowKind::L34_fu;
  throw Error(ErrorKind::Parse, "unknown sylow kind '" + std::string(s) + "'");
}

std::string_view to_string(SylowKind k) {
  switch (k) {
    case SylowKind::L34: return "L34";
    case SylowKind::L34_f: return "L34_f";
    case SylowKind::L34_u: return "L34_u";
    case SylowKind::L34_fu: return "L34_fu";
  }
  return "?";
}

PcPresentation sylow_presentation(SylowKind kind) {
  PcPresentation p;
  p.generators = {"t1", "t2", "a1", "a2", "b1", "b2"};
  const bool with_f = kind == SylowKind::L34_f || kind == SylowKind::L34_fu;
  const bool with_u = kind == SylowKind::L34_u || kind == SylowKind::L34_fu;
  if (with_f) p.generators.push_back("f");
  if (with_u) p.generators.push_back("u");
  p.powers.resize(p.generators.size());

  // T0: all generators are involutions, t1 and t2 central.
  p.set_commutator("a2", "a1", "");
  p.set_commutator("b2", "b1", "");
  p.set_commutator("a1", "b1", "t1");
  p.set_commutator("a2", "b2", "t1");
  p.set_commutator("a2", "b1", "t2");
  p.set_commutator("a1", "b2", "t1*t2");
  if (with_f) {
    p.set_commutator("a1", "f", "a1*a2");
    p.set_commutator("a2", "f", "a1*a2");
    p.set_commutator("b1", "f", "b1*b2");
    p.set_commutator("b2", "f", "b1*b2");
    p.set_commutator("t2", "f", "t1");
  }
  if (with_u) {
    p.set_commutator("a1", "u", "a1*b1");
    p.set_commutator("u", "b1", "a1*b1");
    p.set_commutator("a2", "u", "a2*b2");
    p.set_commutator("u", "b2", "a2*b2");
    p.set_commutator("t2", "u", "t1");
  }
  if (with_f && with_u) p.set_commutator("u", "f", "");
  return p;
}

PcGroup builtin_sylow(SylowKind kind) { return PcGroup::build(sylow_presentation(kind)); }

// ---------------------------------------------------------------------------
// Characteristic and local subgroups

namespace {

// Phi(G) as the intersection of the kernels of all homomorphisms G -> F2.
// A homomorphism is linear on exponent vectors, and f(a g_i) = f(a) + f(g_i)
// for all a, i says exactly that f kills every defect a g_i + a + g_i.
ElementSet frattini_by_kernels(const PcGroup& g) {
  f2::SmallSpan defects;
  for (Elem a = 0; a < g.order(); ++a)
    for (std::size_t i = 0; i < g.generator_count(); ++i) {
      const Elem gi = g.generator(i).bits;
      defects.insert(g.table().mul(a, gi) ^ a ^ gi);
    }
  ElementSet out;
  for (std::uint64_t v : defects.elements()) out.push_back(static_cast<Elem>(v));
  return out;
}

}  // namespace

SubgroupHandle characteristic_subgroup(const PcGroup& g, const SubgroupHandle& h,
                                       CharacteristicKind kind) {
  const auto& t = g.table();
  switch (kind) {
    case CharacteristicKind::Center:
      return SubgroupHandle(g.shared_table(), grp::center(t, h.elements()));
    case CharacteristicKind::Derived:
      return SubgroupHandle(g.shared_table(), grp::derived_subgroup(t, h.elements()));
    case CharacteristicKind::Frattini:
      if (h.order() == g.order())
        return SubgroupHandle(g.shared_table(), frattini_by_kernels(g));
      return SubgroupHandle(g.shared_table(),
                            grp::closure(t, grp::set_union(grp::derived_subgroup(t, h.elements()),
                                                           grp::agemo1(t, h.elements()))));
    case CharacteristicKind::Omega1:
      return SubgroupHandle(g.shared_table(), grp::omega1(t, h.elements()));
    case CharacteristicKind::Agemo1:
      return SubgroupHandle(g.shared_table(), grp::agemo1(t, h.elements()));
  }
  throw Error(ErrorKind::Parse, "unknown characteristic subgroup kind");
}

SubgroupHandle characteristic_subgroup(const PcGroup& g, CharacteristicKind kind) {
  return characteristic_subgroup(g, g.whole(), kind);
}

std::vector<SubgroupHandle> max_elementary_abelians(const PcGroup& g, const SubgroupHandle& h) {
  std::vector<SubgroupHandle> out;
  for (auto& e : grp::max_elementary_abelians(g.table(), h.elements()))
    out.emplace_back(g.shared_table(), std::move(e));
  return out;
}

std::vector<SubgroupHandle> max_elementary_abelians(const PcGroup& g) {
  return max_elementary_abelians(g, g.whole());
}

SubgroupHandle thompson_subgroup(const PcGroup& g) {
  std::vector<Elem> gens;
  for (const auto& a : max_elementary_abelians(g))
    gens.insert(gens.end(), a.elements().begin(), a.elements().end());
  return SubgroupHandle(g.shared_table(), grp::closure(g.table(), gens));
}

std::size_t two_rank(const PcGroup& g) { return grp::two_rank(g.table(), g.table().all()); }

PcGroup direct_product(const PcGroup& g, const PcGroup& h) {
  const std::size_t off = g.generator_count();
  if (off + h.generator_count() > kMaxGenerators)
    throw Error(ErrorKind::TooLarge, "direct product exceeds 2^" + std::to_string(kMaxGenerators));
  PcPresentation p = g.presentation();
  p.powers.resize(off);
  for (std::string name : h.presentation().generators) {
    while (std::find(p.generators.begin(), p.generators.end(), name) != p.generators.end())
      name += "_2";
    p.generators.push_back(name);
  }
  auto shift = [&](Word w) {
    for (auto& x : w) x += off;
    return w;
  };
  const auto& hp = h.presentation();
  for (std::size_t i = 0; i < hp.generators.size(); ++i)
    p.powers.push_back(i < hp.powers.size() ? shift(hp.powers[i]) : Word{});
  for (const auto& [key, w] : hp.commutators)
    p.commutators[{key.first + off, key.second + off}] = shift(w);
  return PcGroup::build(std::move(p));
}

SubgroupHandle local_subgroup(const PcGroup& g, const SubgroupHandle& h, LocalKind kind) {
  const ElementSet all = g.table().all();
  if (kind == LocalKind::Centralizer)
    return SubgroupHandle(g.shared_table(), grp::centralizer(g.table(), all, h.elements()));
  return SubgroupHandle(g.shared_table(), grp::normalizer(g.table(), all, h.elements()));
}

// ---------------------------------------------------------------------------
// Automorphisms and involution fusion

namespace {

void validate_automorphism(const PcGroup& g, const std::vector<PcElement>& images) {
  if (images.size() != g.order())
    throw Error(ErrorKind::NotAutomorphism, "map has wrong size");
  std::vector<char> hit(g.order(), 0);
  for (PcElement e : images) {
    if (e.bits >= g.order() || hit[e.bits])
      throw Error(ErrorKind::NotAutomorphism, "map is not a bijection");
    hit[e.bits] = 1;
  }
  // Multiplicativity against every pc generator implies it everywhere.
  for (Elem a = 0; a < g.order(); ++a)
    for (std::size_t i = 0; i < g.generator_count(); ++i) {
      const PcElement gi = g.generator(i);
      if (images[g.mul({a}, gi).bits] != g.mul(images[a], images[gi.bits]))
        throw Error(ErrorKind::NotAutomorphism,
                    "map is not a homomorphism at " + g.format({a}) + "*" + g.format(gi));
    }
}

}  // namespace

Automorphism automorphism_from_generator_images(const PcGroup& g,
                                                std::span<const PcElement> images) {
  if (images.size() != g.generator_count())
    throw Error(ErrorKind::NotAutomorphism, "need one image per generator");
  std::vector<PcElement> map(g.order());
  for (Elem h = 1; h < g.order(); ++h) {
    const Elem top = Elem{1} << (31 - std::countl_zero(h));
    map[h] = g.mul(map[h ^ top], images[std::countr_zero(top)]);
  }
  validate_automorphism(g, map);
  return Automorphism{std::move(map)};
}

Automorphism automorphism_from_map(const PcGroup& g, std::vector<PcElement> images) {
  validate_automorphism(g, images);
  return Automorphism{std::move(images)};
}

Automorphism inner_automorphism(const PcGroup& g, PcElement x) {
  std::vector<PcElement> map(g.order());
  for (Elem a = 0; a < g.order(); ++a) map[a] = g.conj({a}, x);
  return Automorphism{std::move(map)};
}

std::vector<std::vector<PcElement>> involution_classes_under(
    const PcGroup& g, std::span<const Automorphism> autos) {
  for (const auto& a : autos) validate_automorphism(g, a.images);
  std::vector<Elem> parent(g.order());
  std::iota(parent.begin(), parent.end(), Elem{0});
  auto find = [&](Elem x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (Elem a = 0; a < g.order(); ++a) {
    for (std::size_t i = 0; i < g.generator_count(); ++i)
      unite(a, g.conj({a}, g.generator(i)).bits);
    for (const auto& alpha : autos) unite(a, alpha.images[a].bits);
  }
  std::map<Elem, std::vector<PcElement>> orbits;
  for (Elem a = 0; a < g.order(); ++a)
    if (g.table().is_involution(a)) orbits[find(a)].push_back({a});
  std::vector<std::vector<PcElement>> out;
  for (auto& [root, orbit] : orbits) out.push_back(std::move(orbit));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Small isomorphism types

std::string_view to_string(SmallType t) {
  switch (t) {
    case SmallType::Cyclic: return "cyclic";
    case SmallType::Elementary: return "elementary";
    case SmallType::Homocyclic: return "homocyclic";
    case SmallType::Dihedral: return "dihedral";
    case SmallType::Semidihedral: return "semidihedral";
    case SmallType::Quaternion: return "quaternion";
    case SmallType::Other: return "other";
  }
  return "?";
}

SmallIsoType isomorphism_type_small(const grp::CayleyTable& t, const ElementSet& h) {
  const std::size_t n = h.size();
  if (n > 16) throw Error(ErrorKind::TooLarge, "fingerprint classification needs order <= 16");
  SmallIsoType r;
  r.exponent = grp::exponent(t, h);
  if (r.exponent == n) {
    r.type = SmallType::Cyclic;
    return r;
  }
  const std::size_t involutions =
      std::count_if(h.begin(), h.end(), [&](Elem a) { return t.is_involution(a); });
  if (grp::is_abelian(t, h)) {
    if (r.exponent == 2) {
      r.type = SmallType::Elementary;
    } else {
      // Homocyclic iff |H| = |Omega_1(H)|^log2(exp).
      std::size_t pow = 1;
      for (std::uint32_t e = r.exponent; e > 1; e >>= 1) pow *= involutions + 1;
      r.type = pow == n ? SmallType::Homocyclic : SmallType::Other;
    }
    return r;
  }
  if (r.exponent == n / 2) {
    if (involutions == n / 2 + 1)
      r.type = SmallType::Dihedral;
    else if (n >= 16 && involutions == n / 4 + 1)
      r.type = SmallType::Semidihedral;
    else if (involutions == 1)
      r.type = SmallType::Quaternion;
  }
  return r;
}

SmallIsoType isomorphism_type_small(const PcGroup& g) {
  return isomorphism_type_small(g.table(), g.table().all());
}

// ---------------------------------------------------------------------------
// Named groups

namespace {

std::size_t log2_exact(std::size_t order) {
  if (!grp::is_power_of_two(order) || order < 2)
    throw Error(ErrorKind::Parse, "order must be a power of two >= 2");
  return static_cast<std::size_t>(std::countr_zero(order));
}

// Cyclic part r_1 < ... < r_m with r_m = r and r_i = r^(2^(m-i)).
void add_cyclic_part(PcPresentation& p, std::size_t m, std::string_view name) {
  for (std::size_t i = 1; i <= m; ++i)
    p.generators.push_back(m == 1 ? std::string(name) : std::string(name) + std::to_string(i));
  p.powers.resize(p.generators.size());
  for (std::size_t i = 1; i < m; ++i) p.powers[i] = {i - 1};
}

// Word for r^j in the cyclic part of length m starting at generator 0.
Word power_of_r(std::size_t m, std::size_t j) {
  Word w;
  j %= std::size_t{1} << m;
  for (std::size_t i = 0; i < m; ++i)
    if (j >> (m - 1 - i) & 1u) w.push_back(i);
  return w;
}

// <r, s> with r of order 2^m, r^s = r^mult and s^2 = r^square_exp.
PcGroup metacyclic(std::size_t m, std::size_t mult, std::size_t square_exp) {
  PcPresentation p;
  add_cyclic_part(p, m, "r");
  p.generators.push_back("s");
  const std::size_t mod = std::size_t{1} << m;
  p.powers.push_back(power_of_r(m, square_exp));
  for (std::size_t i = 0; i < m; ++i) {
    // [s, r^k] = (r^-k)^s r^k = r^(k (1 - mult))
    const std::size_t k = std::size_t{1} << (m - 1 - i);
    const std::size_t e = (k * ((mod + 1 - mult % mod) % mod)) % mod;
    if (e) p.commutators[{m, i}] = power_of_r(m, e);
  }
  return PcGroup::build(std::move(p));
}

}  // namespace

PcGroup cyclic_group(std::size_t order, std::string_view name) {
  PcPresentation p;
  add_cyclic_part(p, log2_exact(order), name);
  return PcGroup::build(std::move(p));
}

PcGroup elementary_abelian_group(std::size_t rank, std::string_view name) {
  PcPresentation p;
  for (std::size_t i = 1; i <= rank; ++i)
    p.generators.push_back(rank == 1 ? std::string(name) : std::string(name) + std::to_string(i));
  p.powers.resize(rank);
  return PcGroup::build(std::move(p));
}

PcGroup dihedral_group(std::size_t order) {
  const std::size_t m = log2_exact(order) - 1;
  return metacyclic(m, (std::size_t{1} << m) - 1, 0);
}

PcGroup semidihedral_group(std::size_t order) {
  const std::size_t m = log2_exact(order) - 1;
  if (m < 3) throw Error(ErrorKind::Parse, "semidihedral groups start at order 16");
  return metacyclic(m, (std::size_t{1} << (m - 1)) - 1, 0);
}

PcGroup quaternion_group(std::size_t order) {
  const std::size_t m = log2_exact(order) - 1;
  if (m < 2) throw Error(ErrorKind::Parse, "quaternion groups start at order 8");
  return metacyclic(m, (std::size_t{1} << m) - 1, std::size_t{1} << (m - 1));
}

}  // namespace fusionkit::pc
