#include "fusionkit/f2.hpp"

#include <algorithm>
#include <bit>

namespace fusionkit::f2 {

bool BitVector::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::first_set() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
  return nbits_;
}

bool BitVector::dot(const BitVector& o) const noexcept {
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
  return std::popcount(acc) & 1;
}

void LinearSystem::add(BitVector coeffs, bool rhs) {
  if (coeffs.size() != ncols_) {
    BitVector c(ncols_);
    for (std::size_t i = 0; i < std::min(ncols_, coeffs.size()); ++i)
      if (coeffs.get(i)) c.set(i);
    coeffs = std::move(c);
  }
  rows_.push_back(std::move(coeffs));
  rhs_.push_back(rhs);
}

LinearSystem::Reduced LinearSystem::reduce() const {
  Reduced r{rows_, rhs_, {}, true};
  std::size_t next = 0;
  for (std::size_t col = 0; col < ncols_ && next < r.rows.size(); ++col) {
    std::size_t piv = next;
    while (piv < r.rows.size() && !r.rows[piv].get(col)) ++piv;
    if (piv == r.rows.size()) continue;
    std::swap(r.rows[piv], r.rows[next]);
    {
      const bool t = r.rhs[piv];
      r.rhs[piv] = r.rhs[next];
      r.rhs[next] = t;
    }
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      if (i != next && r.rows[i].get(col)) {
        r.rows[i] ^= r.rows[next];
        r.rhs[i] = r.rhs[i] != r.rhs[next];
      }
    }
    r.pivots.push_back(col);
    ++next;
  }
  for (std::size_t i = next; i < r.rows.size(); ++i)
    if (r.rhs[i]) r.consistent = false;
  r.rows.resize(next);
  r.rhs.resize(next);
  return r;
}

std::size_t LinearSystem::rank() const { return reduce().pivots.size(); }

std::optional<BitVector> LinearSystem::solve() const {
  const Reduced r = reduce();
  if (!r.consistent) return std::nullopt;
  BitVector x(ncols_);
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    if (r.rhs[i]) x.set(r.pivots[i]);
  return x;
}

std::vector<BitVector> LinearSystem::nullspace() const {
  const Reduced r = reduce();
  std::vector<bool> is_pivot(ncols_, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < ncols_; ++free) {
    if (is_pivot[free]) continue;
    BitVector v(ncols_);
    v.set(free);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      if (r.rows[i].get(free)) v.set(r.pivots[i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::uint64_t SmallSpan::reduce(std::uint64_t v) const {
  for (std::uint64_t b : basis_) {
    const std::uint64_t lead = std::uint64_t{1} << (63 - std::countl_zero(b));
    if (v & lead) v ^= b;
  }
  return v;
}

bool SmallSpan::insert(std::uint64_t v) {
  v = reduce(v);
  if (!v) return false;
  const std::uint64_t lead = std::uint64_t{1} << (63 - std::countl_zero(v));
  for (std::uint64_t& b : basis_)
    if (b & lead) b ^= v;
  basis_.push_back(v);
  std::sort(basis_.begin(), basis_.end(), std::greater<>());
  return true;
}

bool SmallSpan::contains(std::uint64_t v) const { return reduce(v) == 0; }

std::vector<std::uint64_t> SmallSpan::elements() const {
  std::vector<std::uint64_t> out{0};
  for (std::uint64_t b : basis_) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] ^ b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fusionkit::f2
