#include "fusionkit/fusion.hpp"

#include <algorithm>
#include <set>

#include "fusionkit/error.hpp"

namespace fusionkit::fus {

namespace {

std::size_t position(const ElementSet& set, Elem x) {
  return static_cast<std::size_t>(std::lower_bound(set.begin(), set.end(), x) - set.begin());
}

ElementSet sorted(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

Elem Morphism::operator()(Elem x) const { return images[position(source, x)]; }

ElementSet Morphism::image() const { return sorted(images); }

bool Morphism::restricts_to(const Morphism& phi) const {
  for (std::size_t i = 0; i < phi.source.size(); ++i) {
    const std::size_t k = position(source, phi.source[i]);
    if (k == source.size() || source[k] != phi.source[i] || images[k] != phi.images[i])
      return false;
  }
  return true;
}

std::string_view to_string(LocalKind k) {
  return k == LocalKind::Centralizer ? "centralizer" : "normalizer";
}

// ---------------------------------------------------------------------------

FusionSystem::FusionSystem(PermGroup g, std::span<const Perm> sylow) : g_(std::move(g)) {
  if (sylow.empty()) {
    s_ = perm::sylow2(g_);
  } else {
    for (const Perm& p : sylow)
      if (!g_.contains(p)) throw Error(ErrorKind::NotInSylow, "Sylow generator outside G");
    s_ = perm::closure(g_.degree(), sylow);
  }
  if (!grp::is_power_of_two(s_.size()) || (g_.order() / s_.size()) % 2 == 0)
    throw Error(ErrorKind::NotInSylow, "S is not a Sylow 2-subgroup of G");
  table_ = std::make_shared<const grp::CayleyTable>(perm::table_of(s_));
}

std::optional<Elem> FusionSystem::s_index(const Perm& p) const {
  auto it = std::lower_bound(s_.begin(), s_.end(), p);
  if (it == s_.end() || *it != p) return std::nullopt;
  return static_cast<Elem>(it - s_.begin());
}

std::vector<Perm> FusionSystem::perms(const ElementSet& p) const {
  std::vector<Perm> out;
  out.reserve(p.size());
  for (Elem x : p) out.push_back(s_[x]);
  return out;
}

ElementSet FusionSystem::subgroup(std::span<const Perm> gens) const {
  std::vector<Elem> idx;
  for (const Perm& p : gens) {
    auto i = s_index(p);
    if (!i) throw Error(ErrorKind::NotInSylow, p.to_string() + " is not in S");
    idx.push_back(*i);
  }
  return grp::closure(*table_, idx);
}

const std::vector<ElementSet>& FusionSystem::subgroups() const {
  std::lock_guard lock(cache_->mu);
  if (!cache_->subgroups)
    cache_->subgroups = std::make_shared<const std::vector<ElementSet>>(
        grp::all_subgroups(*table_, table_->all(), 256));
  return *cache_->subgroups;
}

Elem FusionSystem::conj_index(Elem x, const Perm& g) const {
  return *s_index(s_[x].conj(g));
}

Morphism FusionSystem::conjugation(const ElementSet& p, const Perm& g) const {
  Morphism m{p, {}};
  for (Elem x : p) {
    auto i = s_index(s_[x].conj(g));
    if (!i) throw Error(ErrorKind::NotInSylow, "conjugate leaves S");
    m.images.push_back(*i);
  }
  return m;
}

std::vector<Morphism> FusionSystem::hom_sets_by(std::span<const Perm> conjugators,
                                                const ElementSet& p, const ElementSet& q) const {
  const auto gens = grp::generators_of(*table_, p);
  std::set<Morphism> out;
  for (const Perm& g : conjugators) {
    bool ok = true;
    for (Elem x : gens) {
      auto i = s_index(s_[x].conj(g));
      if (!i || !grp::contains(q, *i)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(conjugation(p, g));
  }
  return {out.begin(), out.end()};
}

std::vector<Morphism> FusionSystem::exhaustive(const ElementSet& p, const ElementSet& q) const {
  return hom_sets_by(g_.elements(), p, q);
}

std::shared_ptr<const FusionSystem::Orbit> FusionSystem::orbit(const ElementSet& p) const {
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->orbits.find(p);
    if (it != cache_->orbits.end()) return it->second;
  }
  auto o = std::make_shared<Orbit>();
  const std::size_t d = g_.degree();
  std::map<std::vector<Perm>, std::size_t> where;
  o->members.push_back(perms(p));
  o->transversal.push_back(Perm::identity(d));
  where.emplace(o->members[0], 0);
  std::set<std::vector<Elem>> schreier;
  for (std::size_t i = 0; i < o->members.size(); ++i)
    for (const Perm& s : g_.generators()) {
      std::vector<Perm> img;
      img.reserve(p.size());
      for (const Perm& x : o->members[i]) img.push_back(x.conj(s));
      std::sort(img.begin(), img.end());
      auto [it, fresh] = where.emplace(img, o->members.size());
      if (fresh) {
        o->members.push_back(std::move(img));
        o->transversal.push_back(o->transversal[i] * s);
        continue;
      }
      // Schreier generator of N_G(P).
      const Perm sch = o->transversal[i] * s * o->transversal[it->second].inverse();
      std::vector<Elem> map;
      for (Elem x : p) map.push_back(conj_index(x, sch));
      schreier.insert(std::move(map));
    }
  // Close the Schreier generators' restrictions under composition.
  std::set<std::vector<Elem>> aut{std::vector<Elem>(p.begin(), p.end())};
  std::vector<std::vector<Elem>> queue(aut.begin(), aut.end());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& s : schreier) {
      std::vector<Elem> c(p.size());
      for (std::size_t k = 0; k < p.size(); ++k) c[k] = s[position(p, queue[i][k])];
      if (aut.insert(c).second) queue.push_back(std::move(c));
    }
  o->aut.assign(aut.begin(), aut.end());
  std::lock_guard lock(cache_->mu);
  return cache_->orbits.emplace(p, std::move(o)).first->second;
}

std::vector<Morphism> FusionSystem::transversal(const ElementSet& p, const ElementSet& q) const {
  const auto o = orbit(p);
  std::set<Morphism> out;
  for (std::size_t j = 0; j < o->members.size(); ++j) {
    bool inside = true;
    for (const Perm& x : o->members[j]) {
      auto i = s_index(x);
      if (!i || !grp::contains(q, *i)) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    for (const auto& a : o->aut) {
      Morphism m{p, {}};
      for (Elem y : a) m.images.push_back(conj_index(y, o->transversal[j]));
      out.insert(std::move(m));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Morphism> FusionSystem::hom_sets(const ElementSet& p, const ElementSet& q,
                                             HomMethod method) const {
  for (Elem x : p)
    if (x >= s_.size()) throw Error(ErrorKind::NotInSylow, "subgroup index outside S");
  for (Elem x : q)
    if (x >= s_.size()) throw Error(ErrorKind::NotInSylow, "subgroup index outside S");
  const auto key = std::make_tuple(static_cast<int>(method), p, q);
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->homs.find(key);
    if (it != cache_->homs.end()) return it->second;
  }
  auto homs = method == HomMethod::Exhaustive ? exhaustive(p, q) : transversal(p, q);
  std::lock_guard lock(cache_->mu);
  return cache_->homs.emplace(key, std::move(homs)).first->second;
}

std::vector<ElementSet> FusionSystem::conjugates(const ElementSet& p) const {
  std::set<ElementSet> out;
  for (const Morphism& m : hom_sets(p, whole())) out.insert(m.image());
  return {out.begin(), out.end()};
}

ElementSet FusionSystem::normalizer_in_s(const ElementSet& p) const {
  return grp::normalizer(*table_, whole(), p);
}

ElementSet FusionSystem::centralizer_in_s(const ElementSet& p) const {
  return grp::centralizer(*table_, whole(), p);
}

bool FusionSystem::is_fully_normalized(const ElementSet& p) const {
  const std::size_t n = normalizer_in_s(p).size();
  for (const ElementSet& q : conjugates(p))
    if (normalizer_in_s(q).size() > n) return false;
  return true;
}

bool FusionSystem::is_fully_centralized(const ElementSet& p) const {
  const std::size_t n = centralizer_in_s(p).size();
  for (const ElementSet& q : conjugates(p))
    if (centralizer_in_s(q).size() > n) return false;
  return true;
}

SubgroupFlags FusionSystem::classify(const ElementSet& p) const {
  SubgroupFlags f;
  const auto cls = conjugates(p);
  f.weakly_closed = cls.size() == 1 && cls.front() == p;
  f.fully_normalized = is_fully_normalized(p);
  f.fully_centralized = is_fully_centralized(p);
  f.centric = std::all_of(cls.begin(), cls.end(), [&](const ElementSet& q) {
    return grp::is_subset(centralizer_in_s(q), q);
  });

  // O_2(Out_F(P)) = 1 iff O_2(Aut_F(P)) = Inn(P).
  const auto aut = automizer(p);
  const std::size_t n = aut.size();
  if (n > grp::kMaxTableOrder) throw Error(ErrorKind::TooLarge, "automizer too large");
  std::map<std::vector<Elem>, std::uint16_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(aut[i].images, static_cast<std::uint16_t>(i));
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<Elem> c(p.size());
      for (std::size_t k = 0; k < p.size(); ++k) c[k] = aut[b](aut[a].images[k]);
      table[a * n + b] = index.at(c);
    }
  const grp::CayleyTable aut_table(n, std::move(table));
  std::vector<Elem> inn;
  for (Elem x : p) {
    std::vector<Elem> c;
    for (Elem y : p) c.push_back(table_->conj(y, x));
    inn.push_back(index.at(c));
  }
  std::sort(inn.begin(), inn.end());
  inn.erase(std::unique(inn.begin(), inn.end()), inn.end());
  f.radical = grp::o2(aut_table, aut_table.all()) == inn;
  return f;
}

std::optional<FusionSystem::Representative> FusionSystem::find_fully_normalized_rep(
    const ElementSet& p, const std::optional<ElementSet>& target) const {
  const ElementSet n = normalizer_in_s(p);
  const auto n_gens = grp::generators_of(*table_, n);
  const auto p_gens = grp::generators_of(*table_, p);
  std::map<ElementSet, bool> fully;
  for (const Perm& g : g_.elements()) {
    bool ok = true;
    for (Elem x : n_gens)
      if (!s_index(s_[x].conj(g))) {
        ok = false;
        break;
      }
    if (!ok) continue;
    std::vector<Elem> q_gens;
    for (Elem x : p_gens) q_gens.push_back(conj_index(x, g));
    const ElementSet q = grp::closure(*table_, q_gens);
    if (target && q != *target) continue;
    auto it = fully.find(q);
    if (it == fully.end()) it = fully.emplace(q, is_fully_normalized(q)).first;
    if (!it->second) continue;
    return Representative{conjugation(n, g), q};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

SubsystemView FusionSystem::local_subsystem(const ElementSet& p, LocalKind kind) const {
  SubsystemView v;
  v.f_ = this;
  v.kind_ = kind;
  v.anchor_ = p;
  if (kind == LocalKind::Centralizer) {
    v.carrier_ = centralizer_in_s(p);
    v.precondition_ok_ = is_fully_centralized(p);
  } else {
    v.carrier_ = normalizer_in_s(p);
    v.precondition_ok_ = is_fully_normalized(p);
  }
  return v;
}

bool SubsystemView::contains(const Morphism& phi) const {
  const ElementSet img = phi.image();
  if (!grp::is_subset(phi.source, carrier_) || !grp::is_subset(img, carrier_)) return false;
  const auto& t = f_->s_table();
  auto join = [&](const ElementSet& a, const ElementSet& b) {
    std::vector<Elem> gens = grp::generators_of(t, a);
    const auto more = grp::generators_of(t, b);
    gens.insert(gens.end(), more.begin(), more.end());
    return grp::closure(t, gens);
  };
  const ElementSet pq = join(anchor_, phi.source);
  const ElementSet pr = join(anchor_, img);
  for (const Morphism& ext : f_->hom_sets(pq, pr)) {
    if (!ext.restricts_to(phi)) continue;
    if (kind_ == LocalKind::Centralizer) {
      bool fixes = true;
      for (Elem x : anchor_) fixes = fixes && ext(x) == x;
      if (fixes) return true;
    } else {
      std::vector<Elem> moved;
      for (Elem x : anchor_) moved.push_back(ext(x));
      if (sorted(std::move(moved)) == anchor_) return true;
    }
  }
  return false;
}

std::vector<Morphism> SubsystemView::hom_set(const ElementSet& q, const ElementSet& r) const {
  std::vector<Morphism> out;
  for (const Morphism& m : f_->hom_sets(q, r))
    if (contains(m)) out.push_back(m);
  return out;
}

bool FusionSystem::normal_in_f(const ElementSet& p, LocalKind kind) const {
  const SubsystemView v = local_subsystem(p, kind);
  if (v.carrier() != whole()) return false;
  for (const ElementSet& q : subgroups())
    for (const Morphism& m : hom_sets(q, whole()))
      if (!v.contains(m)) return false;
  return true;
}

FusionSystem::Core FusionSystem::core_subgroups() const {
  const auto& subs = subgroups();
  Core c;
  bool have_o2 = false, have_z = false;
  for (std::size_t i = subs.size(); i-- > 0 && !(have_o2 && have_z);) {
    const ElementSet& p = subs[i];
    if (!grp::is_normal(*table_, whole(), p)) continue;
    if (!have_o2 && normal_in_f(p, LocalKind::Normalizer)) {
      c.o2 = p;
      have_o2 = true;
    }
    if (!have_z && normal_in_f(p, LocalKind::Centralizer)) {
      c.z = p;
      have_z = true;
    }
  }
  return c;
}

ElementSet FusionSystem::group_o2() const {
  // core_G(S): elements of S all of whose G-conjugates stay in S.
  ElementSet out;
  for (Elem x = 0; x < s_.size(); ++x) {
    bool ok = true;
    for (const Perm& g : g_.elements())
      if (!s_index(s_[x].conj(g))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

bool FusionSystem::alperin_generation_check() const {
  const ElementSet s = whole();
  std::vector<ElementSet> essentials{s};
  for (const ElementSet& r : subgroups()) {
    if (r == s) continue;
    const SubgroupFlags f = classify(r);
    if (f.centric && f.radical && f.fully_normalized) essentials.push_back(r);
  }
  std::vector<std::vector<Morphism>> auts;
  for (const ElementSet& r : essentials) auts.push_back(automizer(r));

  for (const ElementSet& q : subgroups()) {
    std::set<std::vector<Elem>> reached{std::vector<Elem>(q.begin(), q.end())};
    std::vector<std::vector<Elem>> queue(reached.begin(), reached.end());
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const ElementSet img = sorted(queue[i]);
      for (std::size_t r = 0; r < essentials.size(); ++r) {
        if (!grp::is_subset(img, essentials[r])) continue;
        for (const Morphism& a : auts[r]) {
          std::vector<Elem> c;
          for (Elem y : queue[i]) c.push_back(a(y));
          if (reached.insert(c).second) queue.push_back(std::move(c));
        }
      }
    }
    std::set<std::vector<Elem>> all;
    for (const Morphism& m : hom_sets(q, s)) all.insert(m.images);
    if (all != reached) return false;
  }
  return true;
}

bool FusionSystem::burnside_control_check(const ElementSet& w) const {
  const auto cls = conjugates(w);
  if (cls.size() != 1 || cls.front() != w)
    throw Error(ErrorKind::NotWeaklyClosed, "subgroup is not weakly closed");
  const ElementSet z = grp::center(*table_, w);
  const auto aut = automizer(w);
  for (Elem a : z) {
    const Elem gens[1] = {a};
    const ElementSet ca = generated(gens);
    std::set<Elem> fused;
    for (const Morphism& m : hom_sets(ca, whole())) fused.insert(m(a));
    for (Elem b : z) {
      if (!fused.count(b)) continue;
      const bool under_w = std::any_of(aut.begin(), aut.end(), [&](const Morphism& m) { return m(a) == b; });
      if (!under_w) return false;
    }
  }
  return true;
}

bool FusionSystem::constrained_check() const { return classify(core_subgroups().o2).centric; }

bool FusionSystem::extension_axiom_holds(const ElementSet& p) const {
  const ElementSet np = normalizer_in_s(p);
  for (const Morphism& phi : hom_sets(p, whole())) {
    const ElementSet q = phi.image();
    if (!is_fully_centralized(q)) continue;
    std::set<std::vector<Elem>> aut_s_q;
    for (Elem s : normalizer_in_s(q)) {
      std::vector<Elem> c;
      for (Elem y : q) c.push_back(table_->conj(y, s));
      aut_s_q.insert(std::move(c));
    }
    // g in N_phi iff phi^-1 c_g phi lies in Aut_S(Q).
    std::vector<Elem> n_phi;
    for (Elem g : np) {
      std::vector<Elem> c(q.size());
      for (std::size_t k = 0; k < p.size(); ++k)
        c[position(q, phi.images[k])] = phi(table_->conj(p[k], g));
      if (aut_s_q.count(c)) n_phi.push_back(g);
    }
    bool extends = false;
    for (const Morphism& ext : hom_sets(sorted(n_phi), whole()))
      if (ext.restricts_to(phi)) {
        extends = true;
        break;
      }
    if (!extends) return false;
  }
  return true;
}

std::vector<Perm> FusionSystem::group_normalizer(const ElementSet& p) const {
  return perm::normalizer(g_, perms(p));
}

std::vector<Perm> FusionSystem::group_centralizer(const ElementSet& p) const {
  return perm::centralizer(g_, perms(grp::generators_of(*table_, p)));
}

}  // namespace fusionkit::fus
