#pragma once

// Matrix groups over F2 acting on row vectors from the right.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fusionkit::mod {

/// Row vector of F2^n as a bit mask, bit j = coordinate j.
using Vec = std::uint32_t;

inline constexpr int kMaxDim = 8;

/// n x n matrix over F2, n <= 8. Row i occupies bits [8i, 8i+8).
class MatF2 {
 public:
  MatF2() = default;
  explicit MatF2(int n) : n_(n) {}

  static MatF2 identity(int n);
  static MatF2 from_rows(std::span<const Vec> rows);
  static MatF2 from_key(int n, std::uint64_t key) {
    MatF2 m(n);
    m.bits_ = key;
    return m;
  }

  int dim() const noexcept { return n_; }
  std::uint64_t key() const noexcept { return bits_; }
  Vec row(int i) const noexcept { return static_cast<Vec>((bits_ >> (8 * i)) & 0xFFu); }
  bool get(int i, int j) const noexcept { return (bits_ >> (8 * i + j)) & 1u; }
  void set(int i, int j, bool v = true) noexcept;
  void set_row(int i, Vec r) noexcept;

  /// v * M
  Vec apply(Vec v) const noexcept {
    Vec out = 0;
    for (int i = 0; v; ++i, v >>= 1)
      if (v & 1u) out ^= row(i);
    return out;
  }

  friend MatF2 operator*(const MatF2& a, const MatF2& b) {
    MatF2 out(a.n_);
    for (int i = 0; i < a.n_; ++i) out.set_row(i, b.apply(a.row(i)));
    return out;
  }
  friend MatF2 operator+(const MatF2& a, const MatF2& b) {
    return from_key(a.n_, a.bits_ ^ b.bits_);
  }

  MatF2 transpose() const;
  int rank() const;
  bool invertible() const { return rank() == n_; }
  /// Throws Singular.
  MatF2 inverse() const;
  std::uint32_t order() const;

  friend bool operator==(const MatF2&, const MatF2&) = default;
  friend auto operator<=>(const MatF2& a, const MatF2& b) { return a.bits_ <=> b.bits_; }

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

/// A finite subgroup of GL_n(2) with its elements enumerated and sorted.
class MatGroupF2 {
 public:
  MatGroupF2() = default;

  int dim() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<MatF2>& generators() const noexcept { return gens_; }
  std::size_t order() const noexcept { return keys_.size(); }

  MatF2 element(std::size_t i) const { return MatF2::from_key(n_, keys_[i]); }
  std::optional<std::size_t> index_of(const MatF2& m) const;
  bool contains(const MatF2& m) const { return index_of(m).has_value(); }
  std::size_t identity_index() const { return *index_of(MatF2::identity(n_)); }
  std::size_t mul(std::size_t a, std::size_t b) const { return *index_of(element(a) * element(b)); }
  std::size_t inv(std::size_t a) const { return *index_of(element(a).inverse()); }

  /// Index of each generator in the element list.
  std::vector<std::size_t> generator_indices() const;

  MatGroupF2 with_name(std::string name) const {
    MatGroupF2 g = *this;
    g.name_ = std::move(name);
    return g;
  }

  /// Builds the group from an already closed element list.
  static MatGroupF2 from_closed_set(int n, std::vector<MatF2> elements, std::string name);

 private:
  friend MatGroupF2 enumerate_group(std::vector<MatF2> gens, std::string name, std::size_t limit);

  int n_ = 0;
  std::string name_;
  std::vector<MatF2> gens_;
  std::vector<std::uint64_t> keys_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

/// Orbit closure on words in the generators. Throws Singular for a
/// non-invertible generator, TooLarge past `limit` elements.
MatGroupF2 enumerate_group(std::vector<MatF2> gens, std::string name = "",
                           std::size_t limit = 1'000'000);

/// Group generated by `gens`, or nullopt once it exceeds `cap` elements.
std::optional<std::vector<MatF2>> closure_capped(std::span<const MatF2> gens, std::size_t cap);

/// GL_n(2) from an elementary transvection and a Singer-type element.
MatGroupF2 general_linear_group(int n);

// F4 = {0, 1, w, w^2} encoded as 2-bit integers a0 + 2*a1 <-> a0 + a1 w.
using F4 = std::uint8_t;
F4 f4_mul(F4 a, F4 b);
/// 2x2 F2-matrix of x -> x*a in the basis (1, w).
MatF2 f4_scalar_block(F4 a);
/// The 2x2 matrix [[a, b], [c, d]] over F4 as a 4x4 matrix over F2.
MatF2 embed_f4_matrix(F4 a, F4 b, F4 c, F4 d);
/// Image of the scalar matrix w*I.
MatF2 omega_scalar();

MatGroupF2 build_gl24_in_gl42();
MatGroupF2 build_sl24_in_gl42();

/// Seeded random search for a subgroup of GL4(2) of order 2520 that is
/// simple and transitive on nonzero vectors. Throws SearchExhausted.
MatGroupF2 find_a7_in_gl42(std::uint64_t seed, std::size_t budget = 20000);

/// Orbits on the nonzero vectors, each sorted, ordered by least vector.
std::vector<std::vector<Vec>> orbits_on_vectors(const MatGroupF2& g);

/// All invertible matrices commuting with every generator.
MatGroupF2 centralizer_in_gl(const MatGroupF2& g);

bool is_irreducible(const MatGroupF2& g);

struct Subspace {
  int ambient_dim = 0;
  std::vector<Vec> basis;
  int dim() const { return static_cast<int>(basis.size()); }
  std::vector<Vec> elements() const;
};

Subspace fixed_subspace(const MatGroupF2& g);
Subspace fixed_subspace(int n, std::span<const MatF2> gens);

// Hex-row text format: a "dim N" header line, an optional "name TAG" line,
// then one matrix per line as N hexadecimal row masks (bit j = column j).
// Blank lines and lines starting with '#' are ignored.
std::string format_matrices(std::span<const MatF2> mats, std::string_view name = "");
struct MatrixFile {
  int dim = 0;
  std::string name;
  std::vector<MatF2> matrices;
};
MatrixFile parse_matrices(std::string_view text);

}  // namespace fusionkit::mod
