#include "fusionkit/cohomology.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <set>

#include "fusionkit/error.hpp"
#include "fusionkit/f2.hpp"

namespace fusionkit::coh {

namespace {

// Coordinates of a module vector as linear (or affine) forms in at most 64
// unknowns: form[j] is the mask of unknowns entering coordinate j.
struct Form {
  std::array<std::uint64_t, mod::kMaxDim> mask{};
  Vec constant = 0;

  friend bool operator==(const Form&, const Form&) = default;
};

Form act_form(const Form& f, const MatF2& m) {
  Form out;
  const int n = m.dim();
  for (int i = 0; i < n; ++i) {
    const Vec row = m.row(i);
    for (int j = 0; j < n; ++j)
      if (row >> j & 1u) out.mask[j] ^= f.mask[i];
  }
  out.constant = m.apply(f.constant);
  return out;
}

Form add_form(Form a, const Form& b, int n) {
  for (int j = 0; j < n; ++j) a.mask[j] ^= b.mask[j];
  a.constant ^= b.constant;
  return a;
}

Form unknown_form(std::size_t gen, int n) {
  Form f;
  for (int j = 0; j < n; ++j) f.mask[j] = std::uint64_t{1} << (gen * n + j);
  return f;
}

Vec evaluate(const Form& f, std::uint64_t x, int n) {
  Vec v = f.constant;
  for (int j = 0; j < n; ++j)
    if (std::popcount(f.mask[j] & x) & 1) v ^= Vec{1} << j;
  return v;
}

// Incremental echelon form for affine equations  mask . x = rhs  in at most
// 64 unknowns; each stored row has a distinct highest bit.
class AffineEchelon {
 public:
  explicit AffineEchelon(std::size_t nvars) : nvars_(nvars) {}

  void add(std::uint64_t mask, bool rhs) {
    while (mask) {
      const int top = 63 - std::countl_zero(mask);
      auto it = rows_.find(top);
      if (it == rows_.end()) {
        rows_.emplace(top, std::make_pair(mask, rhs));
        return;
      }
      mask ^= it->second.first;
      rhs ^= it->second.second;
    }
    if (rhs) consistent_ = false;
  }

  bool consistent() const noexcept { return consistent_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  // Solution with the given values on free variables (bits of `free_vals`
  // at pivot positions are ignored); `homogeneous` drops right-hand sides.
  std::uint64_t solve(std::uint64_t free_vals, bool homogeneous) const {
    std::uint64_t x = free_vals;
    for (const auto& [p, row] : rows_) x &= ~(std::uint64_t{1} << p);
    for (const auto& [p, row] : rows_) {  // ascending pivot order
      const std::uint64_t rest = row.first & ~(std::uint64_t{1} << p);
      const bool v = (homogeneous ? false : row.second) ^ (std::popcount(rest & x) & 1);
      if (v) x |= std::uint64_t{1} << p;
    }
    return x;
  }

  std::vector<std::uint64_t> nullspace_basis() const {
    std::vector<std::uint64_t> out;
    for (std::size_t v = 0; v < nvars_; ++v)
      if (!rows_.count(static_cast<int>(v))) out.push_back(solve(std::uint64_t{1} << v, true));
    return out;
  }

 private:
  std::size_t nvars_;
  std::map<int, std::pair<std::uint64_t, bool>> rows_;
  bool consistent_ = true;
};

std::size_t unknown_count(const Module& m) {
  const std::size_t n = m.graph().ngens * static_cast<std::size_t>(m.dim());
  if (n > 64)
    throw Error(ErrorKind::TooLarge,
                "more than 64 unknowns (" + std::to_string(n) + ") in the spanning-tree system");
  return n;
}

// Propagates  f(g s) = f(g)^s + f(s) + c(g, s)  along the spanning tree and
// collects the constraints from the remaining edges.
std::vector<Form> propagate(const Module& m, const Cocycle2* c, AffineEchelon& sys) {
  const CayleyGraph& cg = m.graph();
  const int n = m.dim();
  std::vector<Form> f(m.order());
  auto edge = [&](std::uint32_t g, std::size_t i) {
    const std::uint32_t s = cg.step(m.identity(), i);
    Form r = add_form(act_form(f[g], m.action(s)), unknown_form(i, n), n);
    if (c) r.constant ^= (*c)(g, s);
    return r;
  };
  for (std::size_t k = 1; k < cg.order.size(); ++k) {
    const std::uint32_t g = cg.order[k];
    f[g] = edge(cg.parent[g], cg.via[g]);
  }
  for (std::uint32_t g : cg.order)
    for (std::size_t i = 0; i < cg.ngens; ++i) {
      const std::uint32_t h = cg.step(g, i);
      if (cg.parent[h] == g && cg.via[h] == i && h != m.identity()) continue;
      const Form diff = add_form(edge(g, i), f[h], n);
      for (int j = 0; j < n; ++j) sys.add(diff.mask[j], diff.constant >> j & 1u);
    }
  return f;
}

}  // namespace

// ---------------------------------------------------------------------------

CayleyGraph build_cayley_graph(const MatGroupF2& g) {
  CayleyGraph cg;
  const auto gens = g.generator_indices();
  cg.ngens = gens.size();
  const std::size_t order = g.order();
  cg.succ.resize(order * cg.ngens);
  for (std::uint32_t a = 0; a < order; ++a) {
    const MatF2 ma = g.element(a);
    for (std::size_t i = 0; i < cg.ngens; ++i)
      cg.succ[a * cg.ngens + i] = static_cast<std::uint32_t>(*g.index_of(ma * g.generators()[i]));
  }
  const auto id = static_cast<std::uint32_t>(g.identity_index());
  cg.parent.assign(order, UINT32_MAX);
  cg.via.assign(order, 0);
  cg.parent[id] = id;
  cg.order.push_back(id);
  for (std::size_t k = 0; k < cg.order.size(); ++k) {
    const std::uint32_t a = cg.order[k];
    for (std::size_t i = 0; i < cg.ngens; ++i) {
      const std::uint32_t b = cg.step(a, i);
      if (cg.parent[b] != UINT32_MAX) continue;
      cg.parent[b] = a;
      cg.via[b] = static_cast<std::uint8_t>(i);
      cg.order.push_back(b);
    }
  }
  return cg;
}

Module Module::natural(std::shared_ptr<const MatGroupF2> gamma) {
  return from_generator_images(gamma, gamma->generators());
}

Module Module::trivial(std::shared_ptr<const MatGroupF2> gamma, int dim) {
  std::vector<MatF2> images(gamma->generators().size(), MatF2::identity(dim));
  return from_generator_images(std::move(gamma), std::move(images));
}

Module Module::from_generator_images(std::shared_ptr<const MatGroupF2> gamma,
                                     std::vector<MatF2> images) {
  if (images.size() != gamma->generators().size())
    throw Error(ErrorKind::ShapeMismatch, "one action matrix per generator is required");
  if (images.size() > 255) throw Error(ErrorKind::TooLarge, "too many generators");
  Module m;
  m.dim_ = images.empty() ? 0 : images.front().dim();
  for (const MatF2& a : images)
    if (a.dim() != m.dim_ || !a.invertible())
      throw Error(ErrorKind::ShapeMismatch, "action matrices must be invertible of equal size");
  m.gamma_ = std::move(gamma);
  m.identity_ = static_cast<std::uint32_t>(m.gamma_->identity_index());
  auto graph = std::make_shared<CayleyGraph>(build_cayley_graph(*m.gamma_));
  auto action = std::make_shared<std::vector<MatF2>>(m.gamma_->order());
  (*action)[m.identity_] = MatF2::identity(m.dim_);
  for (std::size_t k = 1; k < graph->order.size(); ++k) {
    const std::uint32_t g = graph->order[k];
    (*action)[g] = (*action)[graph->parent[g]] * images[graph->via[g]];
  }
  for (std::uint32_t g = 0; g < m.gamma_->order(); ++g)
    for (std::size_t i = 0; i < graph->ngens; ++i)
      if ((*action)[graph->step(g, i)] != (*action)[g] * images[i])
        throw Error(ErrorKind::ShapeMismatch, "generator images do not define an action");
  m.graph_ = std::move(graph);
  m.action_ = std::move(action);
  return m;
}

// ---------------------------------------------------------------------------

H1Result first_cohomology(const Module& m) {
  const std::size_t nvars = unknown_count(m);
  const int n = m.dim();
  AffineEchelon sys(nvars);
  const std::vector<Form> forms = propagate(m, nullptr, sys);

  H1Result r;
  r.dim_z1 = static_cast<int>(nvars - sys.rank());
  std::vector<MatF2> gen_actions;
  for (std::size_t i = 0; i < m.graph().ngens; ++i)
    gen_actions.push_back(m.action(m.graph().step(m.identity(), i)));
  r.dim_h0 = n == 0 ? 0 : mod::fixed_subspace(n, gen_actions).dim();
  r.dim_b1 = n - r.dim_h0;
  r.dim_h1 = r.dim_z1 - r.dim_b1;
  for (std::uint64_t sol : sys.nullspace_basis()) {
    Cocycle1 d;
    d.values.reserve(forms.size());
    for (const Form& f : forms) d.values.push_back(evaluate(f, sol, n));
    r.z1_basis.push_back(std::move(d));
  }
  return r;
}

int h1_dimension(const Module& m) { return first_cohomology(m).dim_h1; }

bool is_cocycle1(const Module& m, const Cocycle1& d) {
  if (d.values.size() != m.order()) return false;
  for (std::uint32_t g = 0; g < m.order(); ++g)
    for (std::uint32_t h = 0; h < m.order(); ++h)
      if (d.values[m.mul(g, h)] != (m.act(d.values[g], h) ^ d.values[h])) return false;
  return true;
}

Cocycle2 coboundary(const Module& m, std::span<const Vec> f) {
  const std::size_t q = m.order();
  if (q * q > (std::size_t{1} << 22)) throw Error(ErrorKind::TooLarge, "dense coboundary");
  Cocycle2 c;
  c.quotient_order = q;
  for (std::uint32_t g = 0; g < q; ++g)
    for (std::uint32_t h = 0; h < q; ++h)
      c.set(g, h, static_cast<Vec>(m.act(f[g], h) ^ f[h] ^ f[m.mul(g, h)]));
  return c;
}

bool is_cocycle2(const Module& m, const Cocycle2& c) {
  const std::uint32_t q = static_cast<std::uint32_t>(m.order());
  auto holds = [&](std::uint32_t a, std::uint32_t b, std::uint32_t d) {
    const std::uint32_t ab = m.mul(a, b), bd = m.mul(b, d);
    return (m.act(c(a, b), d) ^ c(ab, d)) == (c(b, d) ^ c(a, bd));
  };
  if (c.values.empty()) return true;
  if (std::uint64_t{q} * q * q <= (std::uint64_t{1} << 21)) {
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t d = 0; d < q; ++d)
          if (!holds(a, b, d)) return false;
    return true;
  }
  // A triple where all four terms vanish satisfies the identity, so only
  // triples with some term in the support need testing.
  for (const auto& [key, value] : c.values) {
    const auto p = static_cast<std::uint32_t>(key / q), r = static_cast<std::uint32_t>(key % q);
    for (std::uint32_t t = 0; t < q; ++t) {
      const std::uint32_t t_inv_p = m.mul(m.inv(t), p);  // t * (t^-1 p) = p
      const std::uint32_t t_inv_r = m.mul(m.inv(t), r);
      if (!holds(p, r, t) || !holds(t, t_inv_p, r) || !holds(t, p, r) || !holds(p, t, t_inv_r))
        return false;
    }
  }
  return true;
}

ExtensionGroup ExtensionGroup::build(Module m, Cocycle2 c, std::size_t limit) {
  const std::size_t q = m.order();
  c.quotient_order = q;
  if ((std::size_t{1} << m.dim()) * q > limit)
    throw Error(ErrorKind::TooLarge, "extension of order above " + std::to_string(limit));
  for (const auto& [key, value] : c.values)
    if (key >= std::uint64_t{q} * q || (value >> m.dim()))
      throw Error(ErrorKind::NotACocycle, "cocycle entry out of range");
  const std::uint32_t id = m.identity();
  if (const Vec c0 = c(id, id)) {
    // Shift by the coboundary of the constant function c0.
    if (q * q > (std::size_t{1} << 22))
      throw Error(ErrorKind::TooLarge, "normalizing a cocycle over a large quotient");
    Cocycle2 shifted;
    shifted.quotient_order = q;
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) shifted.set(a, b, c(a, b) ^ m.act(c0, b));
    c = std::move(shifted);
  }
  for (std::uint32_t g = 0; g < q; ++g)
    if (c(id, g) || c(g, id))
      throw Error(ErrorKind::NotACocycle, "cocycle is not normalized after the shift");
  if (!is_cocycle2(m, c)) throw Error(ErrorKind::NotACocycle, "2-cocycle identity fails");
  return ExtensionGroup(std::move(m), std::move(c));
}

ExtElement ExtensionGroup::inv(ExtElement a) const {
  const std::uint32_t gi = module_.inv(a.g);
  return {static_cast<Vec>(module_.act(a.e, gi) ^ cocycle_(a.g, gi)), gi};
}

std::uint32_t ExtensionGroup::element_order(ExtElement a) const {
  ExtElement p = a;
  std::uint32_t k = 1;
  while (p != identity()) {
    p = mul(p, a);
    ++k;
  }
  return k;
}

// ---------------------------------------------------------------------------

namespace {

struct ComplementSystem {
  std::vector<Form> forms;
  AffineEchelon sys;
};

ComplementSystem complement_system(const ExtensionGroup& h) {
  ComplementSystem cs{{}, AffineEchelon(unknown_count(h.module()))};
  cs.forms = propagate(h.module(), &h.cocycle(), cs.sys);
  return cs;
}

Complement complement_from(const std::vector<Form>& forms, std::uint64_t x, int n) {
  Complement c;
  c.offsets.reserve(forms.size());
  for (const Form& f : forms) c.offsets.push_back(evaluate(f, x, n));
  return c;
}

}  // namespace

std::optional<Complement> complement_search(const ExtensionGroup& h) {
  ComplementSystem cs = complement_system(h);
  if (!cs.sys.consistent()) return std::nullopt;
  return complement_from(cs.forms, cs.sys.solve(0, false), h.module().dim());
}

std::vector<Complement> all_complements(const ExtensionGroup& h) {
  ComplementSystem cs = complement_system(h);
  if (!cs.sys.consistent()) return {};
  const auto kernel = cs.sys.nullspace_basis();
  if (kernel.size() > 16) throw Error(ErrorKind::TooLarge, "more than 2^16 complements");
  const std::uint64_t base = cs.sys.solve(0, false);
  std::vector<Complement> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << kernel.size()); ++mask) {
    std::uint64_t x = base;
    for (std::size_t b = 0; b < kernel.size(); ++b)
      if (mask >> b & 1u) x ^= kernel[b];
    out.push_back(complement_from(cs.forms, x, h.module().dim()));
  }
  return out;
}

std::size_t complement_classes(const ExtensionGroup& h) {
  const auto all = all_complements(h);
  const Module& m = h.module();
  // Conjugating by e in E turns f into f + (g -> e^g + e).
  std::set<std::vector<Vec>> seen;
  std::size_t classes = 0;
  for (const Complement& c : all) {
    if (seen.count(c.offsets)) continue;
    ++classes;
    for (Vec e = 0; e < h.base_order(); ++e) {
      std::vector<Vec> shifted(c.offsets);
      for (std::uint32_t g = 0; g < shifted.size(); ++g) shifted[g] ^= m.act(e, g) ^ e;
      seen.insert(std::move(shifted));
    }
  }
  return classes;
}

// ---------------------------------------------------------------------------

std::string_view to_string(YType t) {
  switch (t) {
    case YType::Elementary: return "elementary";
    case YType::Homocyclic: return "homocyclic";
    case YType::Other: return "other";
  }
  return "other";
}

bool Lemma32Verdict::holds() const {
  const bool omega_ok = (y_type == YType::Elementary && y_omega1_contains_v) ||
                        (y_type == YType::Homocyclic && y_omega1_is_v);
  return xbar_elementary && x_central_mod_v && comm_map_well_defined && comm_map_bijective &&
         comm_map_equivariant && found && y_order * y_order == x_order * x_order / 4 && omega_ok &&
         y_g_invariant && y_meets_x_trivially;
}

namespace {

// Subgroup generated by a set of extension elements, by closure.
std::set<std::uint64_t> ext_closure(const ExtensionGroup& h, const std::vector<ExtElement>& gens) {
  std::set<std::uint64_t> seen{h.index(h.identity())};
  std::vector<ExtElement> queue{h.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const ExtElement& s : gens) {
      const ExtElement p = h.mul(queue[i], s);
      if (seen.insert(h.index(p)).second) queue.push_back(p);
    }
  return seen;
}

}  // namespace

Lemma32Verdict lemma32_conclusion_check(const ExtensionGroup& h, Vec x,
                                        std::span<const Vec> v_basis,
                                        std::span<const std::uint32_t> g_gens) {
  const Module& m = h.module();
  const int dim = m.dim();
  const int n = dim - 1;
  Lemma32Verdict out;
  out.h_order = h.order();

  f2::SmallSpan vspan;
  for (Vec v : v_basis)
    if (!vspan.insert(v)) throw Error(ErrorKind::ShapeMismatch, "V basis is dependent");
  if (static_cast<int>(vspan.dim()) != n)
    throw Error(ErrorKind::ShapeMismatch, "V must be a hyperplane of E");
  if (x == 0 || (x >> dim) || vspan.contains(x))
    throw Error(ErrorKind::ShapeMismatch, "x must lie in E outside V");
  auto in_v = [&](Vec v) { return vspan.contains(v); };
  for (std::uint32_t g : g_gens) {
    if (m.act(x, g) != x) throw Error(ErrorKind::ShapeMismatch, "G does not fix x");
    for (Vec v : v_basis)
      if (!in_v(m.act(v, g))) throw Error(ErrorKind::ShapeMismatch, "G does not normalize V");
  }

  // U: fixes V pointwise and acts trivially on E/V.
  std::vector<std::uint32_t> u_elems;
  std::vector<Vec> u_shift(m.order(), 0);
  for (std::uint32_t g = 0; g < m.order(); ++g) {
    bool ok = in_v(m.act(x, g) ^ x);
    for (Vec v : v_basis) ok = ok && m.act(v, g) == v;
    if (!ok) continue;
    u_elems.push_back(g);
    u_shift[g] = m.act(x, g) ^ x;
  }
  out.u_order = u_elems.size();
  if (u_elems.size() != (std::size_t{1} << n))
    throw Error(ErrorKind::ShapeMismatch, "the quotient does not contain all of U");
  std::vector<char> is_u(m.order(), 0);
  for (std::uint32_t u : u_elems) is_u[u] = 1;

  std::vector<ExtElement> xs;
  for (std::uint32_t u : u_elems)
    for (Vec e = 0; e < h.base_order(); ++e) xs.push_back({e, u});
  out.x_order = xs.size();

  // [x, -] on X.
  const ExtElement xh = h.base(x);
  std::vector<Vec> comm_of(m.order(), 0);
  std::vector<char> comm_set(m.order(), 0);
  out.comm_map_well_defined = true;
  out.x_central_mod_v = true;
  for (const ExtElement& y : xs) {
    const ExtElement c = h.comm(xh, y);
    if (!h.in_base(c) || !in_v(c.e)) {
      out.x_central_mod_v = false;
      out.comm_map_well_defined = false;
      continue;
    }
    if (!comm_set[y.g]) {
      comm_set[y.g] = 1;
      comm_of[y.g] = c.e;
    } else if (comm_of[y.g] != c.e) {
      out.comm_map_well_defined = false;
    }
  }
  {
    std::set<Vec> image;
    for (std::uint32_t u : u_elems) image.insert(comm_of[u]);
    out.comm_map_bijective = image.size() == u_elems.size();
  }
  out.comm_map_equivariant = out.comm_map_well_defined;
  for (std::uint32_t g : g_gens)
    for (std::uint32_t u : u_elems) {
      const std::uint32_t ug = m.mul(m.inv(g), m.mul(u, g));
      if (!is_u[ug] || comm_of[ug] != m.act(comm_of[u], g)) out.comm_map_equivariant = false;
    }

  // X/V elementary abelian: squares and commutators land in V.
  auto in_vhat = [&](const ExtElement& a) { return h.in_base(a) && in_v(a.e); };
  out.xbar_elementary = true;
  for (const ExtElement& y : xs)
    if (!in_vhat(h.mul(y, y))) {
      out.xbar_elementary = false;
      break;
    }
  if (out.xbar_elementary)
    for (std::size_t i = 0; i < xs.size() && out.xbar_elementary; ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j)
        if (!in_vhat(h.comm(xs[i], xs[j]))) {
          out.xbar_elementary = false;
          break;
        }
  if (!out.xbar_elementary) return out;

  // Coordinates on X/V: the lifts of the U-elements shifting x by v_i,
  // then x itself in the last slot.
  std::vector<std::uint32_t> u_basis;
  for (Vec v : v_basis)
    for (std::uint32_t u : u_elems)
      if (u_shift[u] == v) u_basis.push_back(u);
  if (u_basis.size() != v_basis.size())
    throw Error(ErrorKind::ShapeMismatch, "U is not parametrized by V");
  auto v_coords = [&](Vec v) {
    // Coefficients of v in v_basis (v in V).
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Vec s = 0;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) s ^= v_basis[i];
      if (s == v) return mask;
    }
    throw Error(ErrorKind::ShapeMismatch, "vector outside V");
  };
  std::vector<std::uint32_t> u_coord(m.order(), 0);
  for (std::uint32_t u : u_elems) u_coord[u] = v_coords(u_shift[u]);
  auto coord = [&](const ExtElement& y) -> std::uint32_t {
    const std::uint32_t a = u_coord[y.g];
    ExtElement p = h.identity();
    for (int i = 0; i < n; ++i)
      if (a >> i & 1u) p = h.mul(p, h.lift(u_basis[i]));
    const ExtElement rest = h.mul(y, h.inv(p));
    const bool b = !in_v(rest.e);  // rest.e lies in E = V + <x>
    return a | (static_cast<std::uint32_t>(b) << n);
  };

  // G acts on X/V; invariant functionals phi with phi(xbar) = 1 cut out
  // the G-invariant complements to <xbar>.
  std::vector<MatF2> g_on_xbar;
  for (std::uint32_t g : g_gens) {
    MatF2 mg(dim);
    const ExtElement gh = h.lift(g);
    for (int i = 0; i < n; ++i) mg.set_row(i, coord(h.conj(h.lift(u_basis[i]), gh)));
    mg.set_row(n, coord(h.conj(xh, gh)));
    g_on_xbar.push_back(mg.transpose());
  }
  const mod::Subspace fixed = mod::fixed_subspace(dim, g_on_xbar);
  std::vector<Vec> functionals;
  for (Vec phi : fixed.elements())
    if (phi >> n & 1u) functionals.push_back(phi);
  out.invariant_complements = functionals.size();
  if (functionals.empty()) return out;

  std::vector<std::uint32_t> coords;
  coords.reserve(xs.size());
  for (const ExtElement& y : xs) coords.push_back(coord(y));

  bool first = true;
  out.all_complements_same_type = true;
  for (Vec phi : functionals) {
    std::vector<ExtElement> ys;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (!(std::popcount(coords[i] & phi) & 1)) ys.push_back(xs[i]);

    std::uint32_t expo = 1;
    for (const ExtElement& y : ys) expo = std::max(expo, h.element_order(y));
    bool abelian = true;
    for (std::size_t i = 0; i < ys.size() && abelian; ++i)
      for (std::size_t j = i + 1; j < ys.size(); ++j)
        if (h.mul(ys[i], ys[j]) != h.mul(ys[j], ys[i])) {
          abelian = false;
          break;
        }
    std::vector<ExtElement> invols;
    for (const ExtElement& y : ys)
      if (h.element_order(y) <= 2) invols.push_back(y);
    const std::set<std::uint64_t> omega = ext_closure(h, invols);
    YType type = YType::Other;
    if (abelian && expo <= 2)
      type = YType::Elementary;
    else if (abelian && expo == 4 && omega.size() * omega.size() == ys.size())
      type = YType::Homocyclic;

    if (!first) {
      if (type != out.y_type) out.all_complements_same_type = false;
      continue;
    }
    first = false;
    out.found = true;
    out.y_order = ys.size();
    out.y_type = type;
    out.y_exponent = expo;
    out.y_omega1_order = omega.size();
    std::set<std::uint64_t> vset;
    for (Vec v : vspan.elements()) vset.insert(h.index(h.base(v)));
    out.y_omega1_contains_v = std::includes(omega.begin(), omega.end(), vset.begin(), vset.end());
    out.y_omega1_is_v = omega == vset;
    std::set<std::uint64_t> yset;
    for (const ExtElement& y : ys) yset.insert(h.index(y));
    out.y_meets_x_trivially = !yset.count(h.index(xh));
    out.y_g_invariant = true;
    for (std::uint32_t g : g_gens)
      for (const ExtElement& y : ys)
        if (!yset.count(h.index(h.conj(y, h.lift(g))))) out.y_g_invariant = false;
  }
  return out;
}

Lemma32Scenario make_lemma32_scenario(const MatGroupF2& g) {
  const int n = g.dim();
  if (n + 1 > mod::kMaxDim) throw Error(ErrorKind::TooLarge, "E would exceed dimension 8");
  const Vec xbit = Vec{1} << n;
  std::vector<MatF2> gens;
  for (const MatF2& a : g.generators()) {
    MatF2 b(n + 1);
    for (int i = 0; i < n; ++i) b.set_row(i, a.row(i));
    b.set_row(n, xbit);
    gens.push_back(b);
  }
  const std::size_t ng = gens.size();
  for (int i = 0; i < n; ++i) {
    MatF2 u = MatF2::identity(n + 1);
    u.set_row(n, xbit | (Vec{1} << i));
    gens.push_back(u);
  }
  auto gamma = std::make_shared<const MatGroupF2>(enumerate_group(gens, "U" + g.name()));
  Lemma32Scenario s{gamma, ExtensionGroup::build(Module::natural(gamma), Cocycle2{}), xbit, {}, {}};
  for (int i = 0; i < n; ++i) s.v_basis.push_back(Vec{1} << i);
  for (std::size_t i = 0; i < ng; ++i)
    s.g_gens.push_back(static_cast<std::uint32_t>(*gamma->index_of(gens[i])));
  return s;
}

// ---------------------------------------------------------------------------

TriangleWitness find_sl24_witness(const MatGroupF2& g) {
  const int n = g.dim();
  const MatF2 id = MatF2::identity(n);
  std::vector<MatF2> involutions, fpf3;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const MatF2 m = g.element(i);
    if (m == id) continue;
    if (m * m == id) involutions.push_back(m);
    const MatF2 m3 = m * m * m;
    if (m3 == id) {
      const MatF2 gens[1] = {m};
      if (mod::fixed_subspace(n, gens).dim() == 0) fpf3.push_back(m);
    }
  }
  if (fpf3.empty()) throw Error(ErrorKind::NoFpfElement, "no fixed-point-free element of order 3");
  for (const MatF2& b : fpf3)
    for (const MatF2& a : involutions) {
      if ((a * b).order() != 5) continue;
      const MatF2 gens[2] = {a, b};
      auto cl = mod::closure_capped(gens, 60);
      if (cl && cl->size() == 60) return {a, b, 5};
    }
  throw Error(ErrorKind::NoFpfElement, "no A5 generated by a fixed-point-free element of order 3");
}

namespace {

// n x n matrices over Z/4.
struct Mat4 {
  int n = 0;
  std::array<std::uint8_t, 64> e{};
  std::uint8_t& at(int i, int j) { return e[i * 8 + j]; }
  std::uint8_t at(int i, int j) const { return e[i * 8 + j]; }
};

Mat4 to_mat4(const MatF2& m) {
  Mat4 r{m.dim(), {}};
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r.at(i, j) = m.get(i, j);
  return r;
}

Mat4 mul4(const Mat4& a, const Mat4& b) {
  Mat4 r{a.n, {}};
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k)
      if (a.at(i, k))
        for (int j = 0; j < a.n; ++j) r.at(i, j) = (r.at(i, j) + a.at(i, k) * b.at(k, j)) & 3;
  return r;
}

}  // namespace

bool higman_instance_check(const TriangleWitness& w, int y_exponent) {
  const int n = w.a.dim();
  const MatF2 id = MatF2::identity(n);
  {
    const MatF2 gens[1] = {w.b};
    if (mod::fixed_subspace(n, gens).dim() != 0)
      throw Error(ErrorKind::NoFpfElement, "b fixes a nonzero vector");
  }
  if (w.a * w.a != id || w.b * w.b * w.b != id)
    throw Error(ErrorKind::ShapeMismatch, "witness does not satisfy a^2 = b^3 = 1");
  {
    MatF2 p = id;
    for (int i = 0; i < w.k; ++i) p = p * w.a * w.b;
    if (p != id) throw Error(ErrorKind::ShapeMismatch, "witness does not satisfy (ab)^k = 1");
  }
  if (y_exponent <= 2) return true;

  // Lifts A = a + 2 N_a, B = b + 2 N_b. For a relator word x_1 ... x_k,
  //   prod (M_i + 2 N_i) = prod M_i + 2 sum_i P_i N_i S_i   (mod 4)
  // with prefix P_i and suffix S_i products mod 2. Writing prod M_i = I + 2K
  // the relator holds iff K + sum_i P_i N_i S_i = 0 over F2.
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  f2::LinearSystem sys(2 * nn);
  std::vector<std::vector<int>> words{{0, 0}, {1, 1, 1}, {}};
  for (int i = 0; i < w.k; ++i) {
    words[2].push_back(0);
    words[2].push_back(1);
  }
  const MatF2 letter[2] = {w.a, w.b};
  for (const auto& word : words) {
    Mat4 prod = to_mat4(id);
    for (int l : word) prod = mul4(prod, to_mat4(letter[l]));
    std::vector<MatF2> prefix{id}, suffix(word.size() + 1, id);
    for (int l : word) prefix.push_back(prefix.back() * letter[l]);
    for (std::size_t i = word.size(); i-- > 0;) suffix[i] = letter[word[i]] * suffix[i + 1];
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        f2::BitVector eq(2 * nn);
        for (std::size_t i = 0; i < word.size(); ++i) {
          const MatF2& p = prefix[i];
          const MatF2& s = suffix[i + 1];
          const std::size_t off = static_cast<std::size_t>(word[i]) * nn;
          for (int pi = 0; pi < n; ++pi) {
            if (!p.get(r, pi)) continue;
            for (int q = 0; q < n; ++q)
              if (s.get(q, c)) eq.flip(off + static_cast<std::size_t>(pi) * n + q);
          }
        }
        const int diag = r == c ? 1 : 0;
        const bool k_rc = ((prod.at(r, c) - diag) & 3) == 2;
        sys.add(std::move(eq), k_rc);
      }
  }
  return !sys.solve().has_value();
}

}  // namespace fusionkit::coh
