#include "fusionkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <set>

#include "fusionkit/cayley.hpp"
#include "fusionkit/cohomology.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/fusion.hpp"
#include "fusionkit/modrep.hpp"

namespace fusionkit::verify {

using mod::MatF2;
using mod::MatGroupF2;
using perm::Perm;
using perm::PermGroup;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

Json CheckReport::to_json() const {
  Json j = to_json_untimed();
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

Json CheckReport::to_json_untimed() const {
  Json j{{"check_id", check_id}, {"status", to_string(status)}, {"details", details}};
  if (seed) j["seed"] = *seed;
  return j;
}

namespace {

// Runs `body`, which fills details and returns whether every assertion held.
template <class F>
CheckReport timed(std::string id, std::optional<std::uint64_t> seed, F&& body) {
  CheckReport r;
  r.check_id = std::move(id);
  r.seed = seed;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.status = body(r.details) ? Status::Pass : Status::Fail;
  } catch (const Error& e) {
    r.status = Status::Error;
    r.details["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
  } catch (const std::exception& e) {
    r.status = Status::Error;
    r.details["error"] = {{"kind", "internal"}, {"message", e.what()}};
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

// Records a named assertion and folds it into `ok`.
struct Asserts {
  Json& out;
  bool ok = true;
  void operator()(const std::string& name, bool value) {
    out[name] = value;
    ok = ok && value;
  }
};

Json matrix_rows(const MatF2& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) rows.push_back(m.row(i));
  return rows;
}

// ---------------------------------------------------------------------------
// Module facts for A7 and GL2(4)

bool lemma31_group(const MatGroupF2& g, std::size_t expected_commutant, Json& d) {
  Json& a = d["assertions"];
  Asserts check{a};
  d["order"] = g.order();
  const auto orbits = mod::orbits_on_vectors(g);
  Json sizes = Json::array();
  for (const auto& o : orbits) sizes.push_back(o.size());
  d["orbit_sizes"] = sizes;
  check("transitive_on_nonzero_vectors", orbits.size() == 1 && orbits[0].size() == 15);

  const MatGroupF2 comm = mod::centralizer_in_gl(g);
  d["commutant_order"] = comm.order();
  check("commutant_order_expected", comm.order() == expected_commutant);
  check("irreducible", mod::is_irreducible(g));

  auto gamma = std::make_shared<const MatGroupF2>(g);
  const auto h1 = coh::first_cohomology(coh::Module::natural(gamma));
  d["dim_z1"] = h1.dim_z1;
  d["dim_b1"] = h1.dim_b1;
  d["dim_h0"] = h1.dim_h0;
  d["h1"] = h1.dim_h1;
  check("h1_zero", h1.dim_h1 == 0);

  try {
    const auto w = coh::find_sl24_witness(g);
    d["sl24_witness"] = {{"a", matrix_rows(w.a)}, {"b", matrix_rows(w.b)}, {"k", w.k}};
    check("higman_no_homocyclic_lift", coh::higman_instance_check(w));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoFpfElement) throw;
    d["sl24_witness"] = nullptr;
    check("higman_no_homocyclic_lift", false);
  }
  return check.ok;
}

CheckReport lemma31_impl(std::uint64_t seed, bool corrupt) {
  return timed(corrupt ? "check_lemma31:corrupted" : "check_lemma31", seed, [&](Json& d) {
    MatGroupF2 a7 = mod::find_a7_in_gl42(seed);
    if (corrupt) {
      std::vector<MatF2> gens = a7.generators();
      gens[0] = MatF2::identity(4);
      a7 = mod::enumerate_group(gens, "A7-corrupted");
    }
    const MatGroupF2 gl24 = mod::build_gl24_in_gl42();
    bool ok = lemma31_group(a7, 1, d["A7"]);
    ok = lemma31_group(gl24, 3, d["GL2(4)"]) && ok;
    const std::size_t gl_order = mod::general_linear_group(4).order();
    d["GL4(2)_order"] = gl_order;
    d["A7"]["index_in_GL4(2)"] = gl_order / a7.order();
    const bool index8 = gl_order == 8 * a7.order();
    d["A7"]["assertions"]["index_8_in_GL4(2)"] = index8;
    d["A7"]["generators"] = Json::array();
    for (const MatF2& m : a7.generators()) d["A7"]["generators"].push_back(matrix_rows(m));
    d["input_data"] = {
        {"expected_commutant_orders", "A7: 1 (absolute irreducibility), GL2(4): 3 (F4^x)"},
    };
    return ok && index8;
  });
}

// ---------------------------------------------------------------------------
// Invariant complements in the split extensions

bool lemma32_group(const MatGroupF2& g, Json& d) {
  Json& a = d["assertions"];
  Asserts check{a};
  const auto sc = coh::make_lemma32_scenario(g);
  const auto v =
      coh::lemma32_conclusion_check(sc.extension, sc.x, sc.v_basis, sc.g_gens);
  d["E_order"] = sc.extension.base_order();
  d["quotient_order"] = sc.gamma->order();
  d["H_order"] = v.h_order;
  d["U_order"] = v.u_order;
  d["X_order"] = v.x_order;
  d["invariant_complements"] = v.invariant_complements;
  d["Y"] = {{"order", v.y_order},
            {"type", coh::to_string(v.y_type)},
            {"exponent", v.y_exponent},
            {"omega1_order", v.y_omega1_order}};
  check("E_order_32", sc.extension.base_order() == 32);
  check("U_order_16", v.u_order == 16);
  check("X_order_512", v.x_order == 512);
  check("Xbar_elementary_abelian", v.xbar_elementary);
  check("x_central_mod_V", v.x_central_mod_v);
  check("commutator_map_well_defined", v.comm_map_well_defined);
  check("commutator_map_bijective", v.comm_map_bijective);
  check("commutator_map_equivariant", v.comm_map_equivariant);
  check("invariant_complement_found", v.found);
  check("Y_order_256", v.y_order == 256);
  check("Y_elementary_abelian", v.y_type == coh::YType::Elementary);
  check("Y_omega1_contains_V", v.y_omega1_contains_v);
  check("Y_G_invariant", v.y_g_invariant);
  check("Y_meets_x_trivially", v.y_meets_x_trivially);
  check("all_invariant_complements_same_type", v.all_complements_same_type);
  check("verdict_holds", v.holds());

  const auto w = coh::find_sl24_witness(g);
  check("homocyclic_branch_excluded", coh::higman_instance_check(w));
  return check.ok;
}

// ---------------------------------------------------------------------------
// Sylow structure of the L3(4) extensions

Json subgroup_json(const pc::PcGroup& g, const pc::SubgroupHandle& h) {
  Json gens = Json::array();
  for (pc::PcElement e : h.generators()) gens.push_back(g.format(e));
  return {{"order", h.order()}, {"generators", gens}};
}

Json lemma33_input_data(pc::SylowKind kind) {
  Json j;
  switch (kind) {
    case pc::SylowKind::L34:
      j["realized_by"] = "L3(4)";
      break;
    case pc::SylowKind::L34_f:
      j["realized_by"] = "M23, McL";
      j["Aut_K(F1)"] = "A7";
      j["Out(K)"] = "M23: 1; McL: C2";
      j["C_K(alpha)"] = "McL: M11";
      break;
    case pc::SylowKind::L34_u:
      j["realized_by"] = "J3";
      j["Aut_K(F1)"] = "GL2(4)";
      j["Out(K)"] = "C2";
      j["C_K(alpha)"] = "L2(17)";
      break;
    case pc::SylowKind::L34_fu:
      j["realized_by"] = "Ly";
      j["Aut_K(F1)"] = "A7";
      j["Out(K)"] = "1";
      break;
  }
  j["sylow_isomorphism"] = "not verified against the sporadic groups";
  if (kind != pc::SylowKind::L34)
    j["F1_F2_labeling"] = "which of F1, F2 carries Aut_K(F1) is not decided for a given K";
  j["Aut_K(J)_pattern"] =
      "t1->t2, t2->t1t2, a1->a2, a2->a1a2, b1->b1, b2->b2 (order-3 automorphism of T0)";
  return j;
}

bool lemma33_group(const pc::PcGroup& g, bool base_kind, Json& d) {
  Json& a = d["assertions"];
  Asserts check{a};
  d["order"] = g.order();
  const auto z = pc::characteristic_subgroup(g, pc::CharacteristicKind::Center);
  d["center"] = subgroup_json(g, z);
  if (base_kind)
    check("Z_is_t1_t2", z == g.subgroup({"t1", "t2"}));
  else
    check("Z_is_t1", z == g.subgroup({"t1"}) && z.order() == 2);

  const auto f1 = g.subgroup({"t1", "t2", "a1", "a2"});
  const auto f2 = g.subgroup({"t1", "t2", "b1", "b2"});
  const auto as = pc::max_elementary_abelians(g);
  d["max_elementary_abelians"] = Json::array();
  for (const auto& h : as) d["max_elementary_abelians"].push_back(subgroup_json(g, h));
  std::vector<pc::SubgroupHandle> expected{f1, f2};
  std::sort(expected.begin(), expected.end());
  check("A_is_F1_F2", as == expected);

  const auto j = pc::thompson_subgroup(g);
  const auto t0 = g.subgroup({"t1", "t2", "a1", "a2", "b1", "b2"});
  d["thompson_subgroup"] = subgroup_json(g, j);
  check("J_is_T0", j == t0);
  const std::size_t m = pc::two_rank(g);
  d["two_rank"] = m;
  check("two_rank_4", m == 4);
  return check.ok;
}

// Involutions of <t1,t2> under the order-3 pattern automorphism of T0.
bool lemma33_fusion(Json& d) {
  const pc::PcGroup t0 = pc::builtin_sylow(pc::SylowKind::L34);
  const std::vector<pc::PcElement> images{
      t0.parse("t2"), t0.parse("t1*t2"), t0.parse("a2"),
      t0.parse("a1*a2"), t0.parse("b1"), t0.parse("b2")};
  const pc::Automorphism sigma = pc::automorphism_from_generator_images(t0, images);
  const std::set<pc::PcElement> target{t0.parse("t1"), t0.parse("t2"), t0.parse("t1*t2")};
  auto class_of_t1 = [&](std::span<const pc::Automorphism> autos) {
    for (const auto& cls : pc::involution_classes_under(t0, autos))
      if (std::find(cls.begin(), cls.end(), t0.parse("t1")) != cls.end())
        return std::set<pc::PcElement>(cls.begin(), cls.end());
    return std::set<pc::PcElement>{};
  };
  auto names = [&](const std::set<pc::PcElement>& s) {
    Json out = Json::array();
    for (pc::PcElement e : s) out.push_back(t0.format(e));
    return out;
  };
  const auto inner = class_of_t1({});
  const pc::Automorphism autos[1] = {sigma};
  const auto fused = class_of_t1(autos);
  d["class_of_t1_inner_only"] = names(inner);
  d["class_of_t1_with_pattern"] = names(fused);
  const bool ok = fused == target;
  d["assertions"]["t1_t2_t1t2_fused"] = ok;
  return ok;
}

CheckReport lemma33_impl(std::string id, const pc::PcGroup& g, pc::SylowKind kind) {
  return timed(std::move(id), std::nullopt, [&](Json& d) {
    d["kind"] = pc::to_string(kind);
    d["input_data"] = lemma33_input_data(kind);
    bool ok = lemma33_group(g, kind == pc::SylowKind::L34, d);
    ok = lemma33_fusion(d["involution_fusion"]) && ok;
    return ok;
  });
}

// ---------------------------------------------------------------------------
// Wreath model

std::vector<Perm> least_max_elementary(const std::vector<Perm>& elems) {
  const auto t = perm::table_of(elems);
  const auto as = grp::max_elementary_abelians(t, t.all());
  std::vector<Perm> out;
  for (grp::Elem e : as.front()) out.push_back(elems[e]);
  return out;
}

std::size_t two_rank_of(const std::vector<Perm>& elems) {
  const auto t = perm::table_of(elems);
  return grp::two_rank(t, t.all());
}

bool wreath_impl(const PermGroup& k, const std::optional<Perm>& x_override, Json& d) {
  Json& a = d["assertions"];
  Asserts check{a};
  const perm::WreathModel w = perm::make_wreath_model(k);
  const PermGroup& g = w.ambient;
  const Perm x = x_override.value_or(w.x);
  const std::size_t deg = g.degree();
  d["label"] = "strategy analogue in a stand-in wreath product, not a lemma verification";
  d["K'"] = k.name();
  d["K'_order"] = k.order();
  d["G_order"] = g.order();
  check("G_order_2_K_squared", g.order() == 2 * k.order() * k.order());
  check("x_involution", x.order() == 2);
  bool swaps = true;
  for (std::size_t i = 0; i + 1 < g.generators().size(); i += 2)
    swaps = swaps && g.generators()[i].conj(x) == g.generators()[i + 1];
  check("K1_conjugates_to_K2", swaps);

  // C_G(x) = <x> x diag(K').
  const Perm xs[1] = {x};
  const auto cx = perm::centralizer(g, xs);
  std::vector<Perm> xd{x};
  xd.insert(xd.end(), w.diag_gens.begin(), w.diag_gens.end());
  const auto expected = perm::closure(deg, xd);
  const auto diag = perm::closure(deg, w.diag_gens);
  d["C_G(x)_order"] = cx.size();
  d["diag_order"] = diag.size();
  check("C_G(x)_is_x_times_diag",
        cx == expected && !std::binary_search(diag.begin(), diag.end(), x) &&
            std::all_of(w.diag_gens.begin(), w.diag_gens.end(),
                        [&](const Perm& p) { return p * x == x * p; }));

  // Sylow data.
  const PermGroup diag_group(deg, w.diag_gens);
  const auto diag_sylow = perm::sylow2(diag_group);
  std::vector<Perm> seed{x};
  seed.insert(seed.end(), diag_sylow.begin(), diag_sylow.end());
  const auto s = perm::sylow2(g, seed);
  std::vector<Perm> cs;
  for (const Perm& p : s)
    if (p * x == x * p) cs.push_back(p);
  d["S_order"] = s.size();
  d["m(S)"] = two_rank_of(s);
  d["m(C_S(x))"] = two_rank_of(cs);

  // F in A(diagonal Sylow), E = <x>F, rank of O_2(N_G(E)).
  const auto f = least_max_elementary(diag_sylow);
  std::size_t mf = 0;
  while ((std::size_t{1} << mf) < f.size()) ++mf;
  std::vector<Perm> eg{x};
  eg.insert(eg.end(), f.begin(), f.end());
  const auto e = perm::closure(deg, eg);
  const auto n = perm::normalizer(g, e);
  const auto nt = perm::table_of(n);
  const auto o2 = grp::o2(nt, nt.all());
  const std::size_t rank = grp::two_rank(nt, o2);
  d["F_order"] = f.size();
  d["m(F)"] = mf;
  d["E_order"] = e.size();
  d["N_G(E)_order"] = n.size();
  d["O2(N_G(E))_order"] = o2.size();
  d["m(O2(N_G(E)))"] = rank;
  check("E_is_x_times_F", e.size() == 2 * f.size());
  check("rank_doubling", rank >= 2 * mf);
  return check.ok;
}

PermGroup wreath_base(std::string_view base) {
  if (base == "a6") return perm::alternating_group(6).with_name("A6");
  if (base == "l32") return perm::l32_group().with_name("L3(2)");
  throw Error(ErrorKind::Parse, "unknown wreath base '" + std::string(base) + "'");
}

// ---------------------------------------------------------------------------
// Fusion axioms

bool fusion_impl(const PermGroup& g, bool corrupt, Json& d) {
  Json& a = d["assertions"];
  Asserts check{a};
  if (g.order() > 100'000) throw Error(ErrorKind::TooLarge, "full sweep needs |G| <= 10^5");
  const fus::FusionSystem f(g);
  const auto& subs = f.subgroups();
  const auto s = f.whole();
  d["group"] = g.name();
  d["G_order"] = g.order();
  d["S_order"] = s.size();
  d["subgroup_count"] = subs.size();

  // Oracle equivalence. The corrupted variant uses conjugation by S only.
  std::size_t discrepancies = 0;
  for (const auto& p : subs)
    for (const auto& q : subs) {
      const auto fast = f.hom_sets(p, q);
      const auto slow = corrupt ? f.hom_sets_by(f.s_elements(), p, q)
                                : f.hom_sets(p, q, fus::HomMethod::Exhaustive);
      if (fast != slow) ++discrepancies;
    }
  d["oracle_discrepancies"] = discrepancies;
  check("oracle_equivalence", discrepancies == 0);
  if (corrupt) return check.ok;

  // Classes, flags, fully normalized witnesses, saturation witnesses.
  std::set<fus::ElementSet> seen;
  std::size_t classes = 0, centric = 0, radical = 0, essential = 0, weakly_closed = 0;
  bool flags_constant = true, class_has_fn = true, class_has_fc = true;
  bool witnesses = true, targeted = true, sylow_condition = true, extension = true;
  bool burnside = true;
  for (const auto& p : subs) {
    if (seen.count(p)) continue;
    ++classes;
    const auto cls = f.conjugates(p);
    seen.insert(cls.begin(), cls.end());
    const auto fp = f.classify(p);
    bool any_fn = false, any_fc = false;
    for (const auto& q : cls) {
      const auto fq = f.classify(q);
      flags_constant = flags_constant && fq.centric == fp.centric && fq.radical == fp.radical;
      any_fn = any_fn || fq.fully_normalized;
      any_fc = any_fc || fq.fully_centralized;
      if (fq.fully_normalized) {
        targeted = targeted && f.find_fully_normalized_rep(p, q).has_value();
        const auto ng = f.group_normalizer(q);
        const std::size_t idx = ng.size() / f.normalizer_in_s(q).size();
        sylow_condition = sylow_condition && ng.size() % f.normalizer_in_s(q).size() == 0 &&
                          idx % 2 == 1;
      }
      if (fq.fully_centralized) extension = extension && f.extension_axiom_holds(q);
    }
    class_has_fn = class_has_fn && any_fn;
    class_has_fc = class_has_fc && any_fc;
    const auto rep = f.find_fully_normalized_rep(p);
    witnesses = witnesses && rep && rep->alpha.source == f.normalizer_in_s(p) &&
                f.is_fully_normalized(rep->target);
    if (fp.centric) ++centric;
    if (fp.radical) ++radical;
    if (fp.centric && fp.radical) ++essential;
    if (fp.weakly_closed) {
      ++weakly_closed;
      burnside = burnside && f.burnside_control_check(p);
    }
  }
  d["class_count"] = classes;
  d["centric_classes"] = centric;
  d["radical_classes"] = radical;
  d["centric_radical_classes"] = essential;
  d["weakly_closed_subgroups"] = weakly_closed;
  check("centric_radical_constant_on_classes", flags_constant);
  check("class_has_fully_normalized_member", class_has_fn);
  check("class_has_fully_centralized_member", class_has_fc);
  check("fully_normalized_witness_found", witnesses);
  check("targeted_witness_found", targeted);
  check("sylow_in_normalizer_of_fully_normalized", sylow_condition);
  check("extension_axiom", extension);
  check("burnside_weakly_closed", burnside);

  // Local subsystem identities on every hom-set of the carrier.
  std::size_t local_checked = 0, local_failures = 0;
  for (const auto& p : subs)
    for (fus::LocalKind kind : {fus::LocalKind::Normalizer, fus::LocalKind::Centralizer}) {
      const auto view = f.local_subsystem(p, kind);
      if (!view.precondition_ok()) continue;
      ++local_checked;
      const auto h = kind == fus::LocalKind::Normalizer ? f.group_normalizer(p)
                                                        : f.group_centralizer(p);
      for (const auto& q : subs) {
        if (!grp::is_subset(q, view.carrier())) continue;
        for (const auto& r : subs) {
          if (!grp::is_subset(r, view.carrier())) continue;
          if (view.hom_set(q, r) != f.hom_sets_by(h, q, r)) ++local_failures;
        }
      }
    }
  d["local_subsystems_checked"] = local_checked;
  d["local_identity_failures"] = local_failures;
  check("local_subsystem_identities", local_failures == 0);

  const auto core = f.core_subgroups();
  const auto go2 = f.group_o2();
  d["O2(F)_order"] = core.o2.size();
  d["Z(F)_order"] = core.z.size();
  d["O2(G)_order"] = go2.size();
  d["O2(G)_strictly_smaller"] = go2.size() < core.o2.size();
  check("O2(G)_in_O2(F)", grp::is_subset(go2, core.o2));
  d["constrained"] = f.constrained_check();
  check("alperin_generation", f.alperin_generation_check());
  if (g.order() == s.size()) check("two_group_O2_is_S", core.o2 == s);
  return check.ok;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

CheckReport check_lemma31(std::uint64_t seed) { return lemma31_impl(seed, false); }
CheckReport check_lemma31_corrupted(std::uint64_t seed) { return lemma31_impl(seed, true); }

CheckReport check_lemma32_scenarios(std::uint64_t seed) {
  return timed("check_lemma32_scenarios", seed, [&](Json& d) {
    d["input_data"] = {{"automizer_types", "Aut_K(F1) is A7 or GL2(4)"}};
    bool ok = lemma32_group(mod::find_a7_in_gl42(seed), d["A7"]);
    ok = lemma32_group(mod::build_gl24_in_gl42(), d["GL2(4)"]) && ok;
    return ok;
  });
}

CheckReport check_lemma32_corrupted() {
  return timed("check_lemma32_scenarios:corrupted", std::nullopt, [&](Json& d) {
    const mod::Vec a_rows[2] = {2, 1}, b_rows[2] = {2, 3};
    const coh::TriangleWitness w{MatF2::from_rows(a_rows), MatF2::from_rows(b_rows), 2};
    const bool excluded = coh::higman_instance_check(w);
    d["assertions"]["homocyclic_branch_excluded"] = excluded;
    return excluded;
  });
}

CheckReport check_lemma33(pc::SylowKind kind) {
  return lemma33_impl("check_lemma33:" + std::string(pc::to_string(kind)), pc::builtin_sylow(kind),
                      kind);
}

CheckReport check_lemma33_corrupted() {
  pc::PcPresentation p = pc::sylow_presentation(pc::SylowKind::L34);
  p.set_commutator("a1", "b1", "");
  return lemma33_impl("check_lemma33:corrupted", pc::build_presented_group(p),
                      pc::SylowKind::L34);
}

CheckReport check_wreath_model(std::string_view base) {
  return timed("check_wreath_model:" + lower(base), std::nullopt,
               [&](Json& d) { return wreath_impl(wreath_base(lower(base)), std::nullopt, d); });
}

CheckReport check_wreath_corrupted(std::string_view base) {
  return timed("check_wreath_model:corrupted", std::nullopt, [&](Json& d) {
    const PermGroup k = wreath_base(lower(base));
    const auto w = perm::make_wreath_model(k);
    const auto diag = perm::closure(w.ambient.degree(), w.diag_gens);
    const auto inv = std::find_if(diag.begin(), diag.end(), [](const Perm& p) { return p.order() == 2; });
    return wreath_impl(k, *inv, d);
  });
}

CheckReport check_fusion_axioms(const PermGroup& g) {
  return timed("check_fusion_axioms:" + lower(g.name()), std::nullopt,
               [&](Json& d) { return fusion_impl(g, false, d); });
}

CheckReport check_fusion_corrupted() {
  return timed("check_fusion_axioms:corrupted", std::nullopt,
               [&](Json& d) { return fusion_impl(builtin_group("s4"), true, d); });
}

CheckReport negative_controls(std::uint64_t seed) {
  return timed("negative_controls", seed, [&](Json& d) {
    std::vector<CheckReport> controls{check_lemma31_corrupted(seed), check_lemma32_corrupted(),
                                      check_lemma33_corrupted(), check_wreath_corrupted("a6"),
                                      check_fusion_corrupted()};
    bool ok = true;
    d["controls"] = Json::array();
    for (const auto& c : controls) {
      d["controls"].push_back(
          {{"check_id", c.check_id}, {"status", to_string(c.status)}, {"details", c.details}});
      ok = ok && c.status == Status::Fail;
    }
    return ok;
  });
}

PermGroup builtin_group(std::string_view name) {
  const std::string n = lower(name);
  if (n == "s4") return perm::symmetric_group(4).with_name("S4");
  if (n == "d8") return perm::dihedral_perm_group(4).with_name("D8");
  if (n == "a6") return perm::alternating_group(6).with_name("A6");
  if (n == "l32") return perm::l32_group().with_name("L32");
  throw Error(ErrorKind::Parse, "unknown built-in group '" + std::string(name) + "'");
}

std::vector<CheckEntry> registry(std::uint64_t seed) {
  std::vector<CheckEntry> r;
  r.push_back({"check_lemma31", [seed] { return check_lemma31(seed); }});
  r.push_back({"check_lemma32_scenarios", [seed] { return check_lemma32_scenarios(seed); }});
  for (auto k : {pc::SylowKind::L34, pc::SylowKind::L34_f, pc::SylowKind::L34_u,
                 pc::SylowKind::L34_fu})
    r.push_back({"check_lemma33:" + std::string(pc::to_string(k)), [k] { return check_lemma33(k); }});
  for (const char* b : {"a6", "l32"})
    r.push_back({"check_wreath_model:" + std::string(b), [b] { return check_wreath_model(b); }});
  for (const char* g : {"s4", "d8", "a6", "l32"})
    r.push_back({"check_fusion_axioms:" + std::string(g),
                 [g] { return check_fusion_axioms(builtin_group(g)); }});
  r.push_back({"negative_controls", [seed] { return negative_controls(seed); }});
  return r;
}

std::vector<CheckReport> run_checks(std::uint64_t seed, const std::optional<std::string>& only) {
  std::vector<CheckEntry> chosen;
  for (auto& e : registry(seed))
    if (!only || e.id == *only || e.id.substr(0, e.id.find(':')) == *only)
      chosen.push_back(std::move(e));
  if (chosen.empty()) throw Error(ErrorKind::Parse, "no check matches '" + *only + "'");
  std::vector<std::future<CheckReport>> futures;
  for (auto& e : chosen) futures.push_back(std::async(std::launch::async, e.run));
  std::vector<CheckReport> out;
  for (auto& fu : futures) out.push_back(fu.get());
  return out;
}

int exit_code(const std::vector<CheckReport>& reports) {
  int code = 0;
  for (const auto& r : reports) {
    if (r.status == Status::Error) return 2;
    if (r.status == Status::Fail) code = 1;
  }
  return code;
}

int run_all(std::uint64_t seed, const std::string& output, const std::optional<std::string>& only) {
  std::ofstream out(output);
  if (!out) {
    std::cerr << "fusionkit: cannot open " << output << " for writing\n";
    return 2;
  }
  const auto reports = run_checks(seed, only);
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  out << arr.dump(2) << '\n';
  out.flush();
  if (!out) {
    std::cerr << "fusionkit: write to " << output << " failed\n";
    return 2;
  }
  for (const auto& r : reports)
    std::cout << to_string(r.status) << "  " << r.check_id << "  (" << r.elapsed_ms << " ms)\n";
  return exit_code(reports);
}

}  // namespace fusionkit::verify
