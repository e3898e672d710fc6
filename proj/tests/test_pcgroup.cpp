#include <doctest.h>

#include <random>

#include "fusionkit/error.hpp"
#include "fusionkit/pcgroup.hpp"
#include "oracles.hpp"

using namespace fusionkit;
using pc::CharacteristicKind;
using pc::SylowKind;

namespace {

const SylowKind kAllKinds[] = {SylowKind::L34, SylowKind::L34_f, SylowKind::L34_u,
                               SylowKind::L34_fu};
const SylowKind kExtensions[] = {SylowKind::L34_f, SylowKind::L34_u, SylowKind::L34_fu};

// Sylow 2-subgroup of a group of automorphisms of L3(4) on PG(2,4).
oracle::Fingerprint plane_sylow(bool field, bool graph_field) {
  const oracle::ProjectivePlane4 plane;
  auto gens = plane.sl3_generators();
  if (field) gens.push_back(plane.field());
  if (graph_field) gens.push_back(field ? plane.graph() : plane.graph() * plane.field());
  const perm::PermGroup g(42, gens);
  return oracle::fingerprint(perm::table_of(perm::sylow2(g)));
}

}  // namespace

TEST_CASE("single involution presents C2") {
  pc::PcPresentation p;
  p.generators = {"g"};
  p.powers.resize(1);
  const auto g = pc::build_presented_group(p);
  CHECK(g.order() == 2);
  CHECK(g.element_order(g.generator(0)) == 2);
}

TEST_CASE("builtin Sylow orders") {
  CHECK(pc::builtin_sylow(SylowKind::L34).order() == 64);
  CHECK(pc::builtin_sylow(SylowKind::L34_f).order() == 128);
  CHECK(pc::builtin_sylow(SylowKind::L34_u).order() == 128);
  CHECK(pc::builtin_sylow(SylowKind::L34_fu).order() == 256);
}

TEST_CASE("presentations match Sylow subgroups of automorphism groups of L3(4)") {
  // The 2-parts: |L3(4)| = 20160, index 2 for field and graph-field, 4 for both.
  CHECK(oracle::fingerprint(pc::builtin_sylow(SylowKind::L34).table()) == plane_sylow(false, false));
  CHECK(oracle::fingerprint(pc::builtin_sylow(SylowKind::L34_f).table()) == plane_sylow(true, false));
  CHECK(oracle::fingerprint(pc::builtin_sylow(SylowKind::L34_u).table()) == plane_sylow(false, true));
  CHECK(oracle::fingerprint(pc::builtin_sylow(SylowKind::L34_fu).table()) == plane_sylow(true, true));
}

TEST_CASE("displayed relations hold verbatim") {
  for (SylowKind k : kAllKinds) {
    const auto g = pc::builtin_sylow(k);
    auto rel = [&](const char* a, const char* b, const char* w) {
      CHECK_MESSAGE(g.comm(g.parse(a), g.parse(b)) == g.parse(w), a, " ", b);
    };
    for (std::size_t i = 0; i < g.generator_count(); ++i)
      CHECK(g.element_order(g.generator(i)) == 2);
    rel("a1", "a2", "");
    rel("b1", "b2", "");
    rel("a1", "b1", "t1");
    rel("a2", "b2", "t1");
    rel("a2", "b1", "t2");
    rel("a1", "b2", "t1*t2");
    if (pc::to_string(k).find('f') != std::string_view::npos) {
      rel("a1", "f", "a1*a2");
      rel("a2", "f", "a1*a2");
      rel("b1", "f", "b1*b2");
      rel("b2", "f", "b1*b2");
      rel("t2", "f", "t1");
    }
    if (pc::to_string(k).find('u') != std::string_view::npos) {
      rel("a1", "u", "a1*b1");
      rel("u", "b1", "a1*b1");
      rel("a2", "u", "a2*b2");
      rel("u", "b2", "a2*b2");
      rel("t2", "u", "t1");
    }
    if (k == SylowKind::L34_fu) rel("f", "u", "");
  }
}

TEST_CASE("group axioms: identity and inverses exhaustively, associativity on a sample") {
  for (SylowKind k : kAllKinds) {
    const auto g = pc::builtin_sylow(k);
    const auto& t = g.table();
    for (grp::Elem a = 0; a < t.order(); ++a) {
      CHECK(t.mul(a, 0) == a);
      CHECK(t.mul(0, a) == a);
      CHECK(t.mul(a, t.inv(a)) == 0);
    }
    std::mt19937_64 rng(1);
    bool assoc = true;
    for (int i = 0; i < 10000; ++i) {
      const grp::Elem a = rng() % t.order(), b = rng() % t.order(), c = rng() % t.order();
      assoc = assoc && t.mul(t.mul(a, b), c) == t.mul(a, t.mul(b, c));
    }
    CHECK(assoc);
  }
}

TEST_CASE("centers") {
  const auto t0 = pc::builtin_sylow(SylowKind::L34);
  CHECK(pc::characteristic_subgroup(t0, CharacteristicKind::Center) == t0.subgroup({"t1", "t2"}));
  for (SylowKind k : kExtensions) {
    const auto g = pc::builtin_sylow(k);
    const auto z = pc::characteristic_subgroup(g, CharacteristicKind::Center);
    CHECK(z == g.subgroup({"t1"}));
    CHECK(z.order() == 2);
  }
}

TEST_CASE("maximal elementary abelian subgroups and the Thompson subgroup") {
  for (SylowKind k : kAllKinds) {
    const auto g = pc::builtin_sylow(k);
    std::vector<pc::SubgroupHandle> expected{g.subgroup({"t1", "t2", "a1", "a2"}),
                                             g.subgroup({"t1", "t2", "b1", "b2"})};
    std::sort(expected.begin(), expected.end());
    CHECK(pc::max_elementary_abelians(g) == expected);
    const auto t0 = g.subgroup({"t1", "t2", "a1", "a2", "b1", "b2"});
    CHECK(pc::thompson_subgroup(g) == t0);
    CHECK(pc::two_rank(g) == 4);
  }
}

TEST_CASE("characteristic subgroup identities") {
  for (SylowKind k : kAllKinds) {
    const auto g = pc::builtin_sylow(k);
    const auto& t = g.table();
    const auto z = pc::characteristic_subgroup(g, CharacteristicKind::Center);
    CHECK(grp::is_subset(grp::omega1(t, z.elements()), z.elements()));
    const auto der = pc::characteristic_subgroup(g, CharacteristicKind::Derived);
    const auto agemo = pc::characteristic_subgroup(g, CharacteristicKind::Agemo1);
    const auto phi = pc::characteristic_subgroup(g, CharacteristicKind::Frattini);
    std::vector<grp::Elem> both(der.elements());
    both.insert(both.end(), agemo.elements().begin(), agemo.elements().end());
    CHECK(phi.elements() == grp::closure(t, both));
  }
  const auto e3 = pc::elementary_abelian_group(3);
  CHECK(pc::characteristic_subgroup(e3, CharacteristicKind::Agemo1).order() == 1);
}

TEST_CASE("direct products") {
  const auto c2 = pc::cyclic_group(2, "x");
  const auto r = pc::direct_product(c2, pc::builtin_sylow(SylowKind::L34_f));
  CHECK(r.order() == 256);
  CHECK(pc::characteristic_subgroup(r, CharacteristicKind::Center) == r.subgroup({"x", "t1"}));
  CHECK(pc::two_rank(r) == 5);
  CHECK(pc::two_rank(pc::direct_product(c2, pc::builtin_sylow(SylowKind::L34_u))) == 5);
  const auto c4t0 = pc::direct_product(pc::cyclic_group(4), pc::builtin_sylow(SylowKind::L34));
  CHECK(c4t0.order() == 256);
  // Agemo of a direct product is the product of the agemos.
  const auto t0_agemo =
      pc::characteristic_subgroup(pc::builtin_sylow(SylowKind::L34), CharacteristicKind::Agemo1);
  CHECK(pc::characteristic_subgroup(c4t0, CharacteristicKind::Agemo1).order() ==
        2 * t0_agemo.order());
  const auto v4 = pc::direct_product(c2, pc::cyclic_group(2, "y"));
  CHECK(pc::isomorphism_type_small(v4).type == pc::SmallType::Elementary);
}

TEST_CASE("local subgroups") {
  const auto t1 = pc::builtin_sylow(SylowKind::L34_f);
  const auto t0 = t1.subgroup({"t1", "t2", "a1", "a2", "b1", "b2"});
  std::vector<pc::PcElement> commuting;
  for (std::uint32_t b = 0; b < t1.order(); ++b) {
    const pc::PcElement e{b};
    if (std::all_of(t0.generators().begin(), t0.generators().end(),
                    [&](pc::PcElement g) { return t1.mul(e, g) == t1.mul(g, e); }))
      commuting.push_back(e);
  }
  const auto c = pc::local_subgroup(t1, t0, pc::LocalKind::Centralizer);
  CHECK(c.order() == commuting.size());
  CHECK(c == t1.subgroup(commuting));
  CHECK(pc::local_subgroup(t1, t1.whole(), pc::LocalKind::Normalizer) == t1.whole());
  const auto r = pc::direct_product(pc::cyclic_group(2, "x"), pc::builtin_sylow(SylowKind::L34));
  const auto t0r = r.subgroup({"t1", "t2", "a1", "a2", "b1", "b2"});
  CHECK(pc::local_subgroup(r, t0r, pc::LocalKind::Centralizer) == r.subgroup({"x", "t1", "t2"}));
}

TEST_CASE("involution fusion in Z(T0)") {
  const auto t0 = pc::builtin_sylow(SylowKind::L34);
  // Inner automorphisms fix the central involutions.
  for (const auto& cls : pc::involution_classes_under(t0, {}))
    if (std::find(cls.begin(), cls.end(), t0.parse("t1")) != cls.end()) CHECK(cls.size() == 1);
  const std::vector<pc::PcElement> images{t0.parse("t2"), t0.parse("t1*t2"), t0.parse("a2"),
                                          t0.parse("a1*a2"), t0.parse("b1"), t0.parse("b2")};
  const pc::Automorphism sigma[1] = {pc::automorphism_from_generator_images(t0, images)};
  bool fused = false;
  for (const auto& cls : pc::involution_classes_under(t0, sigma))
    if (std::find(cls.begin(), cls.end(), t0.parse("t1")) != cls.end())
      fused = cls.size() == 3 && std::find(cls.begin(), cls.end(), t0.parse("t1*t2")) != cls.end();
  CHECK(fused);
  // The pattern permutes the members of A(T0).
  const auto as = pc::max_elementary_abelians(t0);
  for (const auto& a : as) {
    std::vector<pc::PcElement> img;
    for (grp::Elem e : a.elements()) img.push_back(sigma[0](pc::PcElement{e}));
    const auto h = t0.subgroup(img);
    CHECK(std::find(as.begin(), as.end(), h) != as.end());
  }
}

TEST_CASE("non-automorphisms are rejected") {
  const auto t0 = pc::builtin_sylow(SylowKind::L34);
  std::vector<pc::PcElement> images;
  for (std::size_t i = 0; i < t0.generator_count(); ++i) images.push_back(t0.generator(i));
  images[2] = t0.parse("b1");  // a1 -> b1 breaks [a1, b1] = t1
  CHECK_THROWS_AS(pc::automorphism_from_generator_images(t0, images), Error);
}

TEST_CASE("elementary abelian rank 2 under GL2(2)") {
  const auto v = pc::elementary_abelian_group(2);
  const auto x = v.generator(0), y = v.generator(1), xy = v.mul(x, y);
  const pc::Automorphism autos[2] = {
      pc::automorphism_from_generator_images(v, std::vector<pc::PcElement>{y, x}),
      pc::automorphism_from_generator_images(v, std::vector<pc::PcElement>{y, xy})};
  const auto classes = pc::involution_classes_under(v, autos);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].size() == 3);
}

TEST_CASE("small isomorphism types") {
  CHECK(pc::isomorphism_type_small(pc::dihedral_group(16)).type == pc::SmallType::Dihedral);
  CHECK(pc::isomorphism_type_small(pc::semidihedral_group(16)).type == pc::SmallType::Semidihedral);
  CHECK(pc::isomorphism_type_small(pc::quaternion_group(8)).type == pc::SmallType::Quaternion);
  const auto c4c4 = pc::direct_product(pc::cyclic_group(4, "c"), pc::cyclic_group(4, "d"));
  const auto t = pc::isomorphism_type_small(c4c4);
  CHECK(t.type == pc::SmallType::Homocyclic);
  CHECK(t.exponent == 4);
  const auto q8 = pc::quaternion_group(8);
  CHECK(pc::thompson_subgroup(q8).order() == 2);
}

TEST_CASE("inconsistent presentations are rejected") {
  pc::PcPresentation p;
  p.generators = {"a", "b"};
  p.powers.resize(2);
  // Both generators are involutions, so [b, a] = a would force a^b = 1.
  p.set_commutator("b", "a", "a");
  CHECK_THROWS_AS(pc::build_presented_group(p), Error);
}
