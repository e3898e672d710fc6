#include <doctest.h>

#include <set>

#include "fusionkit/error.hpp"
#include "fusionkit/fusion.hpp"

using namespace fusionkit;
using fus::ElementSet;
using fus::FusionSystem;
using fus::Morphism;
using perm::Perm;
using perm::PermGroup;

namespace {

// Hom-sets by looping over G and conjugating every element of P.
std::set<std::vector<grp::Elem>> hom_oracle(const FusionSystem& f, const ElementSet& p,
                                            const ElementSet& q) {
  std::set<std::vector<grp::Elem>> out;
  const auto& s = f.s_elements();
  for (const Perm& g : f.group().elements()) {
    std::vector<grp::Elem> img;
    bool ok = true;
    for (grp::Elem x : p) {
      const Perm y = g.inverse() * s[x] * g;
      const auto it = std::lower_bound(s.begin(), s.end(), y);
      if (it == s.end() || *it != y || !grp::contains(q, grp::Elem(it - s.begin()))) {
        ok = false;
        break;
      }
      img.push_back(grp::Elem(it - s.begin()));
    }
    if (ok) out.insert(img);
  }
  return out;
}

std::set<std::vector<grp::Elem>> image_lists(const std::vector<Morphism>& ms) {
  std::set<std::vector<grp::Elem>> out;
  for (const auto& m : ms) out.insert(m.images);
  return out;
}

// The normal four-group of S4 inside the Sylow.
ElementSet o2_s4(const FusionSystem& f) {
  const Perm gens[2] = {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})};
  return f.subgroup(gens);
}

std::vector<PermGroup> test_groups() {
  return {perm::symmetric_group(4), perm::dihedral_perm_group(4), perm::alternating_group(6),
          perm::l32_group(), perm::symmetric_group(3), perm::alternating_group(4),
          perm::symmetric_group(5)};
}

}  // namespace

TEST_CASE("transversal and exhaustive hom-sets agree with the oracle") {
  for (const PermGroup& g : test_groups()) {
    const FusionSystem f(g);
    for (const auto& p : f.subgroups())
      for (const auto& q : f.subgroups()) {
        const auto fast = f.hom_sets(p, q);
        const auto slow = f.hom_sets(p, q, fus::HomMethod::Exhaustive);
        CHECK(fast == slow);
        CHECK(image_lists(fast) == hom_oracle(f, p, q));
        for (const auto& m : fast) CHECK(std::set<grp::Elem>(m.images.begin(), m.images.end()).size() == p.size());
      }
  }
}

TEST_CASE("Sylow and subgroup bookkeeping") {
  const FusionSystem f(perm::symmetric_group(4));
  CHECK(f.s_elements().size() == 8);
  CHECK(f.subgroups().size() == 10);
  CHECK(f.subgroups().front().size() == 1);
  CHECK(f.subgroups().back() == f.whole());
  const Perm outside[1] = {Perm::from_cycles(4, {{0, 1, 2}})};
  CHECK_THROWS_AS(f.subgroup(outside), Error);
  const Perm not_sylow[1] = {Perm::from_cycles(4, {{0, 1}})};
  CHECK_THROWS_AS(FusionSystem(perm::symmetric_group(4), not_sylow), Error);
}

TEST_CASE("automizers in F_S(S4)") {
  const FusionSystem f(perm::symmetric_group(4));
  const auto z = grp::center(f.s_table(), f.whole());
  CHECK(z.size() == 2);
  CHECK(f.automizer(z).size() == 1);
  const auto v = o2_s4(f);
  CHECK(f.automizer(v).size() == 6);
  const auto flags = f.classify(v);
  CHECK(flags.centric);
  CHECK(flags.radical);
  CHECK(flags.weakly_closed);
}

TEST_CASE("classification of S") {
  for (const PermGroup& g : test_groups()) {
    const FusionSystem f(g);
    const auto flags = f.classify(f.whole());
    CHECK(flags.fully_normalized);
    CHECK(flags.fully_centralized);
    CHECK(flags.centric);
    CHECK(flags.weakly_closed);
  }
}

TEST_CASE("non-central transposition subgroup of S4 is not centric") {
  const FusionSystem f(perm::symmetric_group(4));
  const auto& s = f.s_elements();
  // A transposition in S: its centralizer in S is a four-group.
  bool seen = false;
  for (grp::Elem x = 0; x < s.size(); ++x) {
    const auto& cyc = s[x].to_string();
    if (s[x].order() != 2 || std::count(cyc.begin(), cyc.end(), '(') != 1) continue;
    const grp::Elem gen[1] = {x};
    const auto p = f.generated(gen);
    CHECK(!f.classify(p).centric);
    CHECK(f.centralizer_in_s(p).size() == 4);
    seen = true;
  }
  CHECK(seen);
}

TEST_CASE("flags are constant on classes and every class has fully normalized members") {
  for (const PermGroup& g : test_groups()) {
    const FusionSystem f(g);
    for (const auto& p : f.subgroups()) {
      const auto fp = f.classify(p);
      bool any_fn = false, any_fc = false;
      for (const auto& q : f.conjugates(p)) {
        const auto fq = f.classify(q);
        CHECK(fq.centric == fp.centric);
        CHECK(fq.radical == fp.radical);
        any_fn = any_fn || fq.fully_normalized;
        any_fc = any_fc || fq.fully_centralized;
      }
      CHECK(any_fn);
      CHECK(any_fc);
    }
  }
}

TEST_CASE("fully normalized representatives") {
  for (const PermGroup& g : test_groups()) {
    const FusionSystem f(g);
    for (const auto& p : f.subgroups()) {
      const auto rep = f.find_fully_normalized_rep(p);
      REQUIRE(rep.has_value());
      CHECK(rep->alpha.source == f.normalizer_in_s(p));
      CHECK(f.is_fully_normalized(rep->target));
      std::vector<grp::Elem> img;
      for (grp::Elem x : p) img.push_back(rep->alpha(x));
      std::sort(img.begin(), img.end());
      CHECK(img == rep->target);
      if (f.is_fully_normalized(p)) CHECK(rep->target == p);
      for (const auto& q : f.conjugates(p)) {
        if (!f.is_fully_normalized(q)) continue;
        const auto targeted = f.find_fully_normalized_rep(p, q);
        REQUIRE(targeted.has_value());
        CHECK(targeted->target == q);
      }
    }
  }
}

TEST_CASE("fully normalized subgroups have Sylow normalizers") {
  for (const PermGroup& g : test_groups()) {
    const FusionSystem f(g);
    for (const auto& p : f.subgroups()) {
      if (!f.is_fully_normalized(p)) continue;
      const auto n = f.group_normalizer(p);
      const auto ns = f.normalizer_in_s(p);
      CHECK(n.size() % ns.size() == 0);
      CHECK((n.size() / ns.size()) % 2 == 1);
    }
  }
}

TEST_CASE("local subsystems equal the fusion systems of local subgroups") {
  for (const PermGroup& g : test_groups()) {
    const FusionSystem f(g);
    for (const auto& p : f.subgroups())
      for (auto kind : {fus::LocalKind::Normalizer, fus::LocalKind::Centralizer}) {
        const auto view = f.local_subsystem(p, kind);
        if (!view.precondition_ok()) continue;
        const auto h = kind == fus::LocalKind::Normalizer ? f.group_normalizer(p)
                                                          : f.group_centralizer(p);
        CHECK(view.carrier() == (kind == fus::LocalKind::Normalizer ? f.normalizer_in_s(p)
                                                                    : f.centralizer_in_s(p)));
        for (const auto& q : f.subgroups())
          for (const auto& r : f.subgroups())
            if (grp::is_subset(q, view.carrier()) && grp::is_subset(r, view.carrier()))
              CHECK(view.hom_set(q, r) == f.hom_sets_by(h, q, r));
      }
  }
}

TEST_CASE("local subsystem examples in F_S(S4)") {
  const FusionSystem f(perm::symmetric_group(4));
  const auto s = f.whole();
  CHECK(f.local_subsystem(s, fus::LocalKind::Normalizer).carrier() == s);
  const auto z = grp::center(f.s_table(), s);
  CHECK(f.local_subsystem(z, fus::LocalKind::Centralizer).carrier() == s);
  // x in O2(S4): C_G(x) is a D8, the Sylow itself when x is central in S.
  const auto view = f.local_subsystem(z, fus::LocalKind::Centralizer);
  const auto cg = f.group_centralizer(z);
  CHECK(cg.size() == 8);
  for (const auto& q : f.subgroups())
    CHECK(view.hom_set(q, s) == f.hom_sets_by(cg, q, s));
}

TEST_CASE("cores") {
  {
    const FusionSystem f(perm::symmetric_group(4));
    const auto c = f.core_subgroups();
    CHECK(c.o2 == o2_s4(f));
    CHECK(c.z.size() == 1);
    CHECK(f.constrained_check());
  }
  {
    const FusionSystem f(perm::alternating_group(6));
    CHECK(f.core_subgroups().o2.size() == 1);
    CHECK(!f.constrained_check());
  }
  {
    const PermGroup d8 = perm::dihedral_perm_group(4);
    const FusionSystem f(d8);
    const auto c = f.core_subgroups();
    CHECK(c.o2 == f.whole());
    CHECK(c.z == grp::center(f.s_table(), f.whole()));
    CHECK(f.constrained_check());
  }
}

TEST_CASE("O2(G) lies in O2(F), strictly for S3") {
  for (const PermGroup& g : test_groups()) {
    const FusionSystem f(g);
    CHECK(grp::is_subset(f.group_o2(), f.core_subgroups().o2));
  }
  const FusionSystem f(perm::symmetric_group(3));
  CHECK(f.group_o2().size() == 1);
  CHECK(f.core_subgroups().o2.size() == 2);
}

TEST_CASE("Alperin generation") {
  for (const PermGroup& g : test_groups()) CHECK(FusionSystem(g).alperin_generation_check());
  // An abelian S with G = S.
  const PermGroup v4(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}})});
  CHECK(FusionSystem(v4).alperin_generation_check());
}

TEST_CASE("Burnside control in weakly closed subgroups") {
  const FusionSystem f(perm::symmetric_group(4));
  CHECK(f.burnside_control_check(f.whole()));
  CHECK(f.burnside_control_check(o2_s4(f)));
  const auto z = grp::center(f.s_table(), f.whole());
  CHECK_THROWS_AS(f.burnside_control_check(f.conjugates(z).size() > 1 ? z : f.subgroups()[1]),
                  Error);
  for (const PermGroup& g : test_groups()) {
    const FusionSystem h(g);
    for (const auto& p : h.subgroups())
      if (h.classify(p).weakly_closed) CHECK(h.burnside_control_check(p));
  }
}

TEST_CASE("extension axiom") {
  for (const PermGroup& g : test_groups()) {
    const FusionSystem f(g);
    for (const auto& p : f.subgroups()) CHECK(f.extension_axiom_holds(p));
  }
}
