#include "fusionkit/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "fusionkit/error.hpp"

namespace fusionkit::perm {

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (Point p : img_) {
    if (p >= img_.size() || seen[p]) throw Error(ErrorKind::Parse, "not a permutation");
    seen[p] = 1;
  }
}

Perm Perm::identity(std::size_t degree) {
  Perm p;
  p.img_.resize(degree);
  std::iota(p.img_.begin(), p.img_.end(), Point{0});
  return p;
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img = identity(degree).img_;
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree) throw Error(ErrorKind::Parse, "cycle point out of range");
      img[c[i]] = c[(i + 1) % c.size()];
    }
  return Perm(std::move(img));
}

Perm operator*(const Perm& p, const Perm& q) {
  Perm r;
  r.img_.resize(p.img_.size());
  for (std::size_t i = 0; i < p.img_.size(); ++i) r.img_[i] = q.img_[p.img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<Point>(i);
  return r;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::uint64_t Perm::order() const {
  std::uint64_t o = 1;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    o = std::lcm(o, len);
  }
  return o;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      os << (j == i ? "" : " ") << j + 1;
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

// ---------------------------------------------------------------------------
// Schreier-Sims

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> gens, std::string name)
    : degree_(degree), name_(std::move(name)), gens_(std::move(gens)) {
  for (const Perm& g : gens_)
    if (g.degree() != degree_) throw Error(ErrorKind::Parse, "generator degree mismatch");
  build_chain();
}

void PermGroup::rebuild_level(std::size_t i) {
  Level& lv = levels_[i];
  lv.transversal.assign(degree_, std::nullopt);
  lv.orbit.clear();
  lv.transversal[lv.base] = Perm::identity(degree_);
  lv.orbit.push_back(lv.base);
  std::vector<const Perm*> gens;
  for (const Perm& s : strong_) {
    bool fixes = true;
    for (std::size_t j = 0; j < i; ++j) fixes = fixes && s(base_[j]) == base_[j];
    if (fixes) gens.push_back(&s);
  }
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    const Point p = lv.orbit[k];
    for (const Perm* s : gens) {
      const Point q = (*s)(p);
      if (lv.transversal[q]) continue;
      lv.transversal[q] = *lv.transversal[p] * *s;
      lv.orbit.push_back(q);
    }
  }
}

std::optional<Perm> PermGroup::sift(Perm g, std::size_t from, std::size_t* drop) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Point b = g(levels_[i].base);
    if (!levels_[i].transversal[b]) {
      if (drop) *drop = i;
      return g;
    }
    g = g * levels_[i].transversal[b]->inverse();
  }
  if (drop) *drop = levels_.size();
  if (g.is_identity()) return std::nullopt;
  return g;
}

void PermGroup::build_chain() {
  auto add_strong = [&](const Perm& h) {
    strong_.push_back(h);
    bool fixes_base = true;
    for (Point b : base_) fixes_base = fixes_base && h(b) == b;
    if (fixes_base) {
      Point p = 0;
      while (h(p) == p) ++p;  // least moved point
      base_.push_back(p);
      levels_.push_back(Level{p, {}, {}});
    }
  };
  for (const Perm& g : gens_)
    if (!g.is_identity() && std::find(strong_.begin(), strong_.end(), g) == strong_.end())
      add_strong(g);

  // Deterministic variant: process levels from the bottom; whenever a
  // Schreier generator fails to sift, adjoin its residue and start over.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = levels_.size(); i-- > 0 && !changed;) {
      for (std::size_t j = i; j < levels_.size(); ++j) rebuild_level(j);
      const Level& lv = levels_[i];
      std::vector<Perm> gens;
      for (const Perm& s : strong_) {
        bool fixes = true;
        for (std::size_t j = 0; j < i; ++j) fixes = fixes && s(base_[j]) == base_[j];
        if (fixes) gens.push_back(s);
      }
      for (Point p : lv.orbit) {
        for (const Perm& s : gens) {
          const Perm sch = *lv.transversal[p] * s * lv.transversal[s(p)]->inverse();
          if (auto residue = sift(sch, i + 1, nullptr)) {
            add_strong(*residue);
            changed = true;
            break;
          }
        }
        if (changed) break;
      }
    }
  }
  for (std::size_t j = 0; j < levels_.size(); ++j) rebuild_level(j);
  order_ = 1;
  for (const Level& lv : levels_) order_ *= lv.orbit.size();
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  return !sift(p, 0, nullptr).has_value();
}

const std::vector<Perm>& PermGroup::elements() const {
  if (elements_) return *elements_;
  if (order_ > kMaxEnumeration)
    throw Error(ErrorKind::TooLarge, "group of order " + std::to_string(order_));
  std::vector<Perm> out{Perm::identity(degree_)};
  // g = u_{k-1} * ... * u_0 with u_i from the level-i transversal.
  for (std::size_t i = levels_.size(); i-- > 0;) {
    std::vector<Perm> next;
    next.reserve(out.size() * levels_[i].orbit.size());
    for (const Perm& g : out)
      for (Point p : levels_[i].orbit) next.push_back(g * *levels_[i].transversal[p]);
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  elements_ = std::make_shared<const std::vector<Perm>>(std::move(out));
  return *elements_;
}

std::optional<std::size_t> PermGroup::index_of(const Perm& p) const {
  const auto& els = elements();
  auto it = std::lower_bound(els.begin(), els.end(), p);
  if (it == els.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - els.begin());
}

// ---------------------------------------------------------------------------

std::vector<Perm> closure(std::size_t degree, std::span<const Perm> gens, std::size_t limit) {
  std::set<Perm> seen{Perm::identity(degree)};
  std::vector<Perm> queue{Perm::identity(degree)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const Perm& s : gens) {
      Perm p = queue[i] * s;
      if (seen.insert(p).second) {
        queue.push_back(std::move(p));
        if (queue.size() > limit) throw Error(ErrorKind::TooLarge, "closure exceeds limit");
      }
    }
  return {seen.begin(), seen.end()};
}

grp::CayleyTable table_of(const std::vector<Perm>& els) {
  const std::size_t n = els.size();
  if (n > grp::kMaxTableOrder) throw Error(ErrorKind::TooLarge, "table of order " + std::to_string(n));
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Perm p = els[a] * els[b];
      auto it = std::lower_bound(els.begin(), els.end(), p);
      if (it == els.end() || *it != p) throw Error(ErrorKind::ShapeMismatch, "element set not closed");
      table[a * n + b] = static_cast<std::uint16_t>(it - els.begin());
    }
  return grp::CayleyTable(n, std::move(table));
}

PermGroup symmetric_group(std::size_t n) {
  if (n <= 1) return PermGroup(std::max<std::size_t>(n, 1), {}, "S" + std::to_string(n));
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Point{0});
  return PermGroup(n, {Perm::from_cycles(n, {{0, 1}}), Perm::from_cycles(n, {cyc})},
                   "S" + std::to_string(n));
}

PermGroup alternating_group(std::size_t n) {
  const std::string name = "A" + std::to_string(n);
  if (n < 3) return PermGroup(std::max<std::size_t>(n, 1), {}, name);
  // (1 2 3) and the (n-1)- or n-cycle fixing 1 / moving all, by parity.
  std::vector<Point> cyc;
  for (Point p = (n % 2 == 0) ? 1 : 0; p < n; ++p) cyc.push_back(p);
  return PermGroup(n, {Perm::from_cycles(n, {{0, 1, 2}}), Perm::from_cycles(n, {cyc})}, name);
}

PermGroup dihedral_perm_group(std::size_t n) {
  std::vector<Point> rot(n);
  std::iota(rot.begin(), rot.end(), Point{0});
  std::vector<std::vector<Point>> refl;
  for (std::size_t i = 1; i < n - i; ++i)
    refl.push_back({static_cast<Point>(i), static_cast<Point>(n - i)});
  return PermGroup(n, {Perm::from_cycles(n, {rot}), Perm::from_cycles(n, refl)},
                   "D" + std::to_string(2 * n));
}

PermGroup l32_group() {
  return PermGroup(7,
                   {Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}}),
                    Perm::from_cycles(7, {{2, 4}, {5, 6}})},
                   "L3(2)");
}

std::vector<Perm> centralizer(const PermGroup& g, std::span<const Perm> h_gens) {
  std::vector<Perm> out;
  for (const Perm& a : g.elements()) {
    bool ok = true;
    for (const Perm& h : h_gens)
      if (a * h != h * a) {
        ok = false;
        break;
      }
    if (ok) out.push_back(a);
  }
  return out;
}

std::vector<Perm> normalizer(const PermGroup& g, const std::vector<Perm>& h_elements) {
  const std::size_t d = g.degree();
  const auto gens = [&] {
    // Greedy generators of h, enough to test normality.
    std::vector<Perm> gs;
    std::size_t reached = 1;
    for (const Perm& p : h_elements) {
      if (reached == h_elements.size()) break;
      std::vector<Perm> trial = gs;
      trial.push_back(p);
      const std::size_t sz = closure(d, trial).size();
      if (sz > reached) {
        gs = std::move(trial);
        reached = sz;
      }
    }
    return gs;
  }();
  std::vector<Perm> out;
  for (const Perm& a : g.elements()) {
    bool ok = true;
    for (const Perm& h : gens)
      if (!std::binary_search(h_elements.begin(), h_elements.end(), h.conj(a))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(a);
  }
  return out;
}

std::vector<Perm> sylow2(const PermGroup& g, std::span<const Perm> seed) {
  const std::size_t d = g.degree();
  std::uint64_t two_part = 1;
  while (g.order() % (two_part * 2) == 0) two_part *= 2;
  std::vector<Perm> gens(seed.begin(), seed.end());
  if (gens.empty())
    for (const Perm& a : g.elements())
      if (a.order() == 2) {
        gens.push_back(a);
        break;
      }
  std::vector<Perm> p = closure(d, gens);
  if (!grp::is_power_of_two(p.size()))
    throw Error(ErrorKind::ShapeMismatch, "the Sylow seed is not a 2-group");
  while (p.size() < two_part) {
    const std::vector<Perm> n = normalizer(g, p);
    const Perm* ext = nullptr;
    for (const Perm& a : n)
      if (!std::binary_search(p.begin(), p.end(), a) &&
          std::binary_search(p.begin(), p.end(), a * a)) {
        ext = &a;
        break;
      }
    if (!ext) throw Error(ErrorKind::SearchExhausted, "normalizer climbing stalled");
    gens.push_back(*ext);
    p = closure(d, gens);
  }
  return p;
}

WreathModel make_wreath_model(const PermGroup& k) {
  const std::size_t m = k.degree();
  std::vector<Perm> gens;
  std::vector<Perm> diag;
  for (const Perm& s : k.generators()) {
    std::vector<Point> one(2 * m), two(2 * m), both(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      one[i] = s(static_cast<Point>(i));
      one[i + m] = static_cast<Point>(i + m);
      two[i] = static_cast<Point>(i);
      two[i + m] = static_cast<Point>(s(static_cast<Point>(i)) + m);
      both[i] = one[i];
      both[i + m] = two[i + m];
    }
    gens.emplace_back(std::move(one));
    gens.emplace_back(std::move(two));
    diag.emplace_back(std::move(both));
  }
  std::vector<Point> sw(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    sw[i] = static_cast<Point>(i + m);
    sw[i + m] = static_cast<Point>(i);
  }
  Perm x(std::move(sw));
  gens.push_back(x);
  PermGroup ambient(2 * m, std::move(gens), "(" + k.name() + " x " + k.name() + ")<x>");
  return {k, std::move(ambient), std::move(x), std::move(diag)};
}

}  // namespace fusionkit::perm
