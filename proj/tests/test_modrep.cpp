#include <doctest.h>

#include <set>

#include "fusionkit/error.hpp"
#include "fusionkit/modrep.hpp"

using namespace fusionkit;
using mod::MatF2;
using mod::MatGroupF2;
using mod::Vec;

namespace {

// All 2^16 matrices commuting with the generators, filtered to invertibles.
std::size_t commutant_oracle(const MatGroupF2& g) {
  std::size_t count = 0;
  for (std::uint64_t key = 0; key < (1u << 16); ++key) {
    MatF2 a(4);
    for (int i = 0; i < 4; ++i) a.set_row(i, static_cast<Vec>((key >> (4 * i)) & 0xF));
    if (!a.invertible()) continue;
    bool ok = true;
    for (const MatF2& m : g.generators()) ok = ok && a * m == m * a;
    count += ok;
  }
  return count;
}

// Orbit of a vector under the generators, by plain search.
std::set<Vec> orbit_oracle(const MatGroupF2& g, Vec v) {
  std::set<Vec> seen{v};
  std::vector<Vec> stack{v};
  while (!stack.empty()) {
    const Vec x = stack.back();
    stack.pop_back();
    for (const MatF2& m : g.generators())
      if (seen.insert(m.apply(x)).second) stack.push_back(m.apply(x));
  }
  return seen;
}

// Every subspace of F2^4 as a sorted vector set.
std::set<std::set<Vec>> all_subspaces() {
  std::set<std::set<Vec>> out;
  for (std::uint32_t mask = 0; mask < (1u << 16); ++mask) {
    if (!(mask & 1u)) continue;
    bool closed = true;
    for (Vec a = 0; a < 16 && closed; ++a)
      for (Vec b = 0; b < 16 && closed; ++b)
        if ((mask >> a & 1u) && (mask >> b & 1u)) closed = mask >> (a ^ b) & 1u;
    if (!closed) continue;
    std::set<Vec> s;
    for (Vec a = 0; a < 16; ++a)
      if (mask >> a & 1u) s.insert(a);
    out.insert(s);
  }
  return out;
}

bool irreducible_oracle(const MatGroupF2& g) {
  for (const auto& s : all_subspaces()) {
    if (s.size() == 1 || s.size() == 16) continue;
    bool invariant = true;
    for (const MatF2& m : g.generators())
      for (Vec v : s) invariant = invariant && s.count(m.apply(v));
    if (invariant) return false;
  }
  return true;
}

MatGroupF2 trivial4() { return mod::enumerate_group({MatF2::identity(4)}, "1"); }

}  // namespace

TEST_CASE("matrix arithmetic") {
  const Vec rows[3] = {0b011, 0b001, 0b100};
  const MatF2 a = MatF2::from_rows(rows);
  CHECK(a.invertible());
  CHECK(a * a.inverse() == MatF2::identity(3));
  CHECK(a.transpose().transpose() == a);
  CHECK(a.apply(0b001) == 0b011);
  MatF2 power = a;
  std::uint64_t k = 1;
  for (; !(power == MatF2::identity(3)); ++k) power = power * a;
  CHECK(a.order() == k);
  const Vec singular[2] = {0b11, 0b11};
  CHECK(MatF2::from_rows(singular).rank() == 1);
}

TEST_CASE("general linear group orders") {
  CHECK(mod::general_linear_group(1).order() == 1);
  CHECK(mod::general_linear_group(2).order() == 6);
  CHECK(mod::general_linear_group(3).order() == 168);
  CHECK(mod::general_linear_group(4).order() == (16 - 1) * (16 - 2) * (16 - 4) * (16 - 8));
  CHECK(trivial4().order() == 1);
  CHECK_THROWS_AS(mod::enumerate_group(mod::general_linear_group(4).generators(), "", 1000), Error);
}

TEST_CASE("GL2(4) and SL2(4) inside GL4(2)") {
  const auto gl = mod::build_gl24_in_gl42();
  const auto sl = mod::build_sl24_in_gl42();
  CHECK(gl.order() == (16 - 1) * (16 - 4));
  CHECK(sl.order() == 60);
  const MatF2 w = mod::omega_scalar();
  CHECK(w.order() == 3);
  const MatF2 gens[1] = {w};
  CHECK(mod::fixed_subspace(4, gens).dim() == 0);
  CHECK(gl.contains(w));
  const auto scalars = mod::enumerate_group({w}, "F4x");
  const auto orbits = mod::orbits_on_vectors(scalars);
  CHECK(orbits.size() == 5);
  for (const auto& o : orbits) CHECK(o.size() == 3);
}

TEST_CASE("F4 embedding is a ring map") {
  for (mod::F4 a = 0; a < 4; ++a)
    for (mod::F4 b = 0; b < 4; ++b) {
      CHECK(mod::f4_scalar_block(a) * mod::f4_scalar_block(b) ==
            mod::f4_scalar_block(mod::f4_mul(a, b)));
      CHECK(mod::f4_scalar_block(a) + mod::f4_scalar_block(b) ==
            mod::f4_scalar_block(static_cast<mod::F4>(a ^ b)));
    }
}

TEST_CASE("A7 inside GL4(2)") {
  const auto a7 = mod::find_a7_in_gl42(0);
  CHECK(a7.order() == 2520);
  CHECK(mod::general_linear_group(4).order() / a7.order() == 8);
  const auto orbits = mod::orbits_on_vectors(a7);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].size() == 15);
  CHECK(orbit_oracle(a7, 1).size() == 15);
  CHECK(mod::fixed_subspace(a7).dim() == 0);
  // A Sylow 3-subgroup (order 9) has no nonzero fixed vector.
  std::vector<MatF2> threes;
  for (std::size_t i = 0; i < a7.order(); ++i)
    if (a7.element(i).order() == 3) threes.push_back(a7.element(i));
  bool found_sylow3 = false;
  for (std::size_t i = 0; i < threes.size() && !found_sylow3; ++i)
    for (std::size_t j = i + 1; j < threes.size() && !found_sylow3; ++j) {
      const MatF2 pair[2] = {threes[i], threes[j]};
      auto h = mod::closure_capped(pair, 10);
      if (h && h->size() == 9) {
        CHECK(mod::fixed_subspace(4, pair).dim() == 0);
        found_sylow3 = true;
      }
    }
  CHECK(found_sylow3);
}

TEST_CASE("A7 search is deterministic in the seed") {
  CHECK(mod::find_a7_in_gl42(3).generators() == mod::find_a7_in_gl42(3).generators());
}

TEST_CASE("commutants agree with a brute-force oracle") {
  const auto a7 = mod::find_a7_in_gl42(0);
  const auto gl = mod::build_gl24_in_gl42();
  CHECK(mod::centralizer_in_gl(a7).order() == 1);
  CHECK(mod::centralizer_in_gl(gl).order() == 3);
  CHECK(commutant_oracle(a7) == 1);
  CHECK(commutant_oracle(gl) == 3);
  CHECK(mod::centralizer_in_gl(trivial4()).order() == 20160);
}

TEST_CASE("irreducibility agrees with a subspace oracle") {
  const auto subspaces = all_subspaces();
  CHECK(subspaces.size() - 2 == 65);  // proper nonzero subspaces of F2^4
  const auto a7 = mod::find_a7_in_gl42(0);
  const auto gl = mod::build_gl24_in_gl42();
  CHECK(mod::is_irreducible(a7));
  CHECK(mod::is_irreducible(gl));
  CHECK(!mod::is_irreducible(trivial4()));
  CHECK(irreducible_oracle(a7));
  CHECK(irreducible_oracle(gl));
  const auto u = mod::enumerate_group({mod::embed_f4_matrix(1, 1, 0, 1)}, "u");
  CHECK(mod::is_irreducible(u) == irreducible_oracle(u));
}

TEST_CASE("trivial group orbits and fixed space") {
  const auto t = trivial4();
  CHECK(mod::orbits_on_vectors(t).size() == 15);
  CHECK(mod::fixed_subspace(t).dim() == 4);
}

TEST_CASE("matrix file round trip") {
  const auto gl = mod::build_gl24_in_gl42();
  const auto text = mod::format_matrices(gl.generators(), "GL2(4)");
  const auto parsed = mod::parse_matrices(text);
  CHECK(parsed.dim == 4);
  CHECK(parsed.name == "GL2(4)");
  CHECK(parsed.matrices == gl.generators());
  CHECK_THROWS_AS(mod::parse_matrices("dim 4\nzz\n"), Error);
}
