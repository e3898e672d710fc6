#include <doctest.h>

#include <bit>
#include <random>

#include "fusionkit/f2.hpp"

using fusionkit::f2::BitVector;
using fusionkit::f2::LinearSystem;
using fusionkit::f2::SmallSpan;

namespace {

BitVector from_mask(std::size_t n, std::uint64_t m) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, (m >> i) & 1u);
  return v;
}

// Brute force over all 2^n assignments.
std::size_t count_solutions(const std::vector<std::uint64_t>& rows, const std::vector<bool>& rhs,
                            std::size_t n) {
  std::size_t count = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    bool ok = true;
    for (std::size_t r = 0; r < rows.size() && ok; ++r)
      ok = (std::popcount(rows[r] & x) & 1) == rhs[r];
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("bit vector basics across word boundaries") {
  BitVector v(130);
  v.set(0);
  v.set(64);
  v.set(129);
  CHECK(v.get(64));
  CHECK(v.first_set() == 0);
  v.flip(0);
  CHECK(v.first_set() == 64);
  BitVector w(130);
  w.set(64);
  CHECK(v.dot(w));
  v ^= w;
  CHECK(v.first_set() == 129);
  CHECK(!BitVector(7).any());
}

TEST_CASE("linear systems agree with brute-force solution counts") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const std::size_t m = rng() % 12;
    std::vector<std::uint64_t> rows;
    std::vector<bool> rhs;
    LinearSystem sys(n);
    for (std::size_t r = 0; r < m; ++r) {
      rows.push_back(rng() & ((std::uint64_t{1} << n) - 1));
      rhs.push_back(rng() & 1u);
      sys.add(from_mask(n, rows.back()), rhs.back());
    }
    const std::size_t count = count_solutions(rows, rhs, n);
    const auto sol = sys.solve();
    CHECK(sol.has_value() == (count > 0));
    if (count) {
      CHECK(count == (std::size_t{1} << (n - sys.rank())));
      for (std::size_t r = 0; r < m; ++r) CHECK(from_mask(n, rows[r]).dot(*sol) == rhs[r]);
    }
    CHECK(sys.nullspace().size() == n - sys.rank());
    for (const auto& k : sys.nullspace())
      for (std::size_t r = 0; r < m; ++r) CHECK(!from_mask(n, rows[r]).dot(k));
  }
}

TEST_CASE("small span membership and enumeration") {
  SmallSpan s;
  CHECK(s.insert(0b0011));
  CHECK(s.insert(0b0110));
  CHECK(!s.insert(0b0101));
  CHECK(!s.insert(0));
  CHECK(s.dim() == 2);
  CHECK(s.contains(0b0101));
  CHECK(!s.contains(0b1000));
  CHECK(s.elements().size() == 4);
}
