#include <doctest.h>

#include <set>

#include "fusionkit/cayley.hpp"
#include "fusionkit/perm.hpp"

using namespace fusionkit;
using grp::CayleyTable;
using grp::ElementSet;

namespace {

CayleyTable table(const perm::PermGroup& g) { return perm::table_of(g.elements()); }

// Subgroups by brute force over all subsets closed under products, for tiny groups.
std::size_t subgroup_count_oracle(const CayleyTable& t) {
  const std::size_t n = t.order();
  std::set<ElementSet> found;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask & 1u)) continue;
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a)
      if (mask >> a & 1u)
        for (std::size_t b = 0; b < n && closed; ++b)
          if (mask >> b & 1u) closed = mask >> t.mul(grp::Elem(a), grp::Elem(b)) & 1u;
    if (closed) {
      ElementSet s;
      for (std::size_t a = 0; a < n; ++a)
        if (mask >> a & 1u) s.push_back(grp::Elem(a));
      found.insert(s);
    }
  }
  return found.size();
}

}  // namespace

TEST_CASE("subgroup enumeration matches a subset oracle") {
  for (const auto& g : {perm::dihedral_perm_group(4), perm::symmetric_group(3),
                        perm::dihedral_perm_group(6)}) {
    const auto t = table(g);
    if (t.order() > 16) continue;
    CHECK(grp::all_subgroups(t, t.all()).size() == subgroup_count_oracle(t));
  }
}

TEST_CASE("subgroup counts of S4") {
  const auto t = table(perm::symmetric_group(4));
  const auto subs = grp::all_subgroups(t, t.all());
  CHECK(subs.size() == 30);
  CHECK(std::is_sorted(subs.begin(), subs.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() < b.size() || (a.size() == b.size() && a < b);
  }));
}

TEST_CASE("structural subgroups of S4") {
  const auto t = table(perm::symmetric_group(4));
  const auto all = t.all();
  CHECK(grp::center(t, all).size() == 1);
  CHECK(grp::derived_subgroup(t, all).size() == 12);
  CHECK(grp::o2(t, all).size() == 4);
  CHECK(grp::conjugacy_classes(t, all).size() == 5);
  CHECK(grp::two_rank(t, all) == 2);
  CHECK(grp::exponent(t, all) == 12);
  CHECK(!grp::is_abelian(t, all));
}

TEST_CASE("dihedral group of order 8") {
  const auto t = table(perm::dihedral_perm_group(4));
  const auto all = t.all();
  CHECK(grp::center(t, all).size() == 2);
  CHECK(grp::omega1(t, all).size() == 8);
  CHECK(grp::agemo1(t, all).size() == 2);
  const auto as = grp::max_elementary_abelians(t, all);
  CHECK(as.size() == 2);
  for (const auto& a : as) {
    CHECK(a.size() == 4);
    CHECK(grp::is_elementary_abelian(t, a));
    CHECK(grp::is_normal(t, all, a));
  }
}

TEST_CASE("every normal closure is normal and contains its seed") {
  const auto t = table(perm::symmetric_group(4));
  const auto all = t.all();
  for (const auto& h : grp::all_subgroups(t, all)) {
    const auto n = grp::normal_closure(t, all, h);
    CHECK(grp::is_subset(h, n));
    CHECK(grp::is_normal(t, all, n));
    CHECK(grp::is_subset(h, grp::normalizer(t, all, h)));
    CHECK(grp::is_subset(grp::centralizer(t, all, h), grp::normalizer(t, all, h)));
  }
}

TEST_CASE("generators_of regenerates the subgroup") {
  const auto t = table(perm::alternating_group(5));
  for (const auto& cls : grp::conjugacy_classes(t, t.all())) {
    const grp::Elem seed[1] = {cls.front()};
    const auto h = grp::closure(t, seed);
    const auto gens = grp::generators_of(t, h);
    CHECK(grp::closure(t, gens) == h);
  }
}
