#pragma once

// Linear algebra over the field with two elements.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace fusionkit::f2 {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return nbits_; }

  bool get(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool v = true) noexcept {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) noexcept {
    words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
  }

  BitVector& operator^=(const BitVector& o) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }

  bool any() const noexcept;
  // Index of the lowest set bit, or size() when zero.
  std::size_t first_set() const noexcept;
  bool dot(const BitVector& o) const noexcept;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Affine system A x = b over F2. Each equation stores its coefficients in
/// bits [0, ncols) and the right-hand side separately.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t ncols) : ncols_(ncols) {}

  std::size_t ncols() const noexcept { return ncols_; }
  std::size_t nequations() const noexcept { return rows_.size(); }

  void add(BitVector coeffs, bool rhs);

  /// Rank of the coefficient matrix.
  std::size_t rank() const;
  /// A particular solution, or nullopt if inconsistent.
  std::optional<BitVector> solve() const;
  /// Basis of the solution space of the homogeneous system.
  std::vector<BitVector> nullspace() const;

 private:
  struct Reduced {
    std::vector<BitVector> rows;
    std::vector<bool> rhs;
    std::vector<std::size_t> pivots;
    bool consistent = true;
  };
  Reduced reduce() const;

  std::size_t ncols_;
  std::vector<BitVector> rows_;
  std::vector<bool> rhs_;
};

/// Echelon basis for subspaces of F2^n with n <= 64, vectors as bit masks.
class SmallSpan {
 public:
  /// Returns true if v was independent of the current span.
  bool insert(std::uint64_t v);
  bool contains(std::uint64_t v) const;
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<std::uint64_t>& basis() const noexcept { return basis_; }
  /// All 2^dim vectors of the span, sorted.
  std::vector<std::uint64_t> elements() const;

 private:
  std::uint64_t reduce(std::uint64_t v) const;
  std::vector<std::uint64_t> basis_;  // each with a distinct leading bit
};

}  // namespace fusionkit::f2
