#include "fusionkit/modrep.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

#include "fusionkit/error.hpp"
#include "fusionkit/f2.hpp"

namespace fusionkit::mod {

void MatF2::set(int i, int j, bool v) noexcept {
  const std::uint64_t m = std::uint64_t{1} << (8 * i + j);
  bits_ = v ? (bits_ | m) : (bits_ & ~m);
}

void MatF2::set_row(int i, Vec r) noexcept {
  bits_ &= ~(std::uint64_t{0xFF} << (8 * i));
  bits_ |= std::uint64_t{r & 0xFFu} << (8 * i);
}

MatF2 MatF2::identity(int n) {
  MatF2 m(n);
  for (int i = 0; i < n; ++i) m.set(i, i);
  return m;
}

MatF2 MatF2::from_rows(std::span<const Vec> rows) {
  const int n = static_cast<int>(rows.size());
  if (n > kMaxDim) throw Error(ErrorKind::TooLarge, "matrix dimension above 8");
  MatF2 m(n);
  for (int i = 0; i < n; ++i) {
    if (rows[i] >> n) throw Error(ErrorKind::Parse, "row has bits beyond the dimension");
    m.set_row(i, rows[i]);
  }
  return m;
}

MatF2 MatF2::transpose() const {
  MatF2 t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (get(i, j)) t.set(j, i);
  return t;
}

int MatF2::rank() const {
  f2::SmallSpan s;
  for (int i = 0; i < n_; ++i) s.insert(row(i));
  return static_cast<int>(s.dim());
}

MatF2 MatF2::inverse() const {
  // Gauss-Jordan on [M | I].
  std::vector<Vec> a(n_), b(n_);
  for (int i = 0; i < n_; ++i) {
    a[i] = row(i);
    b[i] = Vec{1} << i;
  }
  for (int col = 0; col < n_; ++col) {
    int piv = col;
    while (piv < n_ && !(a[piv] >> col & 1u)) ++piv;
    if (piv == n_) throw Error(ErrorKind::Singular, "matrix is not invertible");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int i = 0; i < n_; ++i)
      if (i != col && (a[i] >> col & 1u)) {
        a[i] ^= a[col];
        b[i] ^= b[col];
      }
  }
  return from_rows(b);
}

std::uint32_t MatF2::order() const {
  if (!invertible()) throw Error(ErrorKind::Singular, "order of a singular matrix");
  const MatF2 id = identity(n_);
  MatF2 p = *this;
  std::uint32_t k = 1;
  while (p != id) {
    p = p * *this;
    ++k;
  }
  return k;
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> MatGroupF2::index_of(const MatF2& m) const {
  if (m.dim() != n_) return std::nullopt;
  auto it = index_.find(m.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> MatGroupF2::generator_indices() const {
  std::vector<std::size_t> out;
  for (const MatF2& g : gens_) out.push_back(*index_of(g));
  return out;
}

namespace {

void index_keys(std::vector<std::uint64_t>& keys,
                std::unordered_map<std::uint64_t, std::uint32_t>& index) {
  std::sort(keys.begin(), keys.end());
  index.clear();
  index.reserve(keys.size());
  for (std::uint32_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], i);
}

}  // namespace

std::optional<std::vector<MatF2>> closure_capped(std::span<const MatF2> gens, std::size_t cap) {
  if (gens.empty()) return std::vector<MatF2>{};
  const int n = gens.front().dim();
  std::unordered_set<std::uint64_t> seen;
  std::vector<MatF2> out{MatF2::identity(n)};
  seen.insert(out.front().key());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const MatF2& g : gens) {
      const MatF2 p = out[i] * g;
      if (seen.insert(p.key()).second) {
        out.push_back(p);
        if (out.size() > cap) return std::nullopt;
      }
    }
  return out;
}

MatGroupF2 enumerate_group(std::vector<MatF2> gens, std::string name, std::size_t limit) {
  if (gens.empty()) throw Error(ErrorKind::Parse, "a matrix group needs at least one generator");
  const int n = gens.front().dim();
  for (const MatF2& g : gens) {
    if (g.dim() != n) throw Error(ErrorKind::Parse, "generators of different dimensions");
    if (!g.invertible()) throw Error(ErrorKind::Singular, "generator is not invertible");
  }
  auto elems = closure_capped(gens, limit);
  if (!elems) throw Error(ErrorKind::TooLarge, "matrix group exceeds " + std::to_string(limit));
  MatGroupF2 grp;
  grp.n_ = n;
  grp.name_ = std::move(name);
  grp.gens_ = std::move(gens);
  for (const MatF2& m : *elems) grp.keys_.push_back(m.key());
  index_keys(grp.keys_, grp.index_);
  return grp;
}

MatGroupF2 MatGroupF2::from_closed_set(int n, std::vector<MatF2> elements, std::string name) {
  MatGroupF2 g;
  g.n_ = n;
  g.name_ = std::move(name);
  for (const MatF2& m : elements) g.keys_.push_back(m.key());
  index_keys(g.keys_, g.index_);
  // Greedy generators, scanning in sorted order.
  std::unordered_set<std::uint64_t> reached{MatF2::identity(n).key()};
  for (std::uint64_t k : g.keys_) {
    if (reached.count(k)) continue;
    g.gens_.push_back(MatF2::from_key(n, k));
    auto cl = closure_capped(g.gens_, g.keys_.size());
    reached.clear();
    for (const MatF2& m : *cl) reached.insert(m.key());
    if (reached.size() == g.keys_.size()) break;
  }
  if (g.gens_.empty()) g.gens_.push_back(MatF2::identity(n));
  return g;
}

MatGroupF2 general_linear_group(int n) {
  if (n < 1 || n > kMaxDim) throw Error(ErrorKind::TooLarge, "dimension out of range");
  if (n == 1) return enumerate_group({MatF2::identity(1)}, "GL1(2)");
  // x^n = sum of the listed lower powers, for a primitive polynomial.
  static const std::vector<std::vector<int>> primitive = {
      {}, {0}, {0, 1}, {0, 1}, {0, 1}, {0, 2}, {0, 1}, {0, 1}, {0, 2, 3, 4}};
  MatF2 singer(n);
  for (int i = 0; i + 1 < n; ++i) singer.set(i, i + 1);
  for (int c : primitive[n]) singer.set(n - 1, c);
  MatF2 transvection = MatF2::identity(n);
  transvection.set(0, 1);
  return enumerate_group({transvection, singer}, "GL" + std::to_string(n) + "(2)");
}

// ---------------------------------------------------------------------------
// F4 and GL2(4)

F4 f4_mul(F4 a, F4 b) {
  // (a0 + a1 w)(b0 + b1 w) with w^2 = w + 1
  const int a0 = a & 1, a1 = a >> 1 & 1, b0 = b & 1, b1 = b >> 1 & 1;
  const int c0 = (a0 & b0) ^ (a1 & b1);
  const int c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
  return static_cast<F4>(c0 | c1 << 1);
}

MatF2 f4_scalar_block(F4 a) {
  const Vec rows[2] = {f4_mul(1, a), f4_mul(2, a)};
  return MatF2::from_rows(rows);
}

MatF2 embed_f4_matrix(F4 a, F4 b, F4 c, F4 d) {
  // (x1, x2) -> (x1 a + x2 c, x1 b + x2 d); block (i, j) is the entry (i, j).
  const F4 entries[2][2] = {{a, b}, {c, d}};
  MatF2 m(4);
  for (int bi = 0; bi < 2; ++bi)
    for (int bj = 0; bj < 2; ++bj) {
      const MatF2 blk = f4_scalar_block(entries[bi][bj]);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          if (blk.get(i, j)) m.set(2 * bi + i, 2 * bj + j);
    }
  return m;
}

MatF2 omega_scalar() { return embed_f4_matrix(2, 0, 0, 2); }

MatGroupF2 build_sl24_in_gl42() {
  return enumerate_group({embed_f4_matrix(1, 1, 0, 1), embed_f4_matrix(1, 2, 0, 1),
                          embed_f4_matrix(1, 0, 1, 1), embed_f4_matrix(1, 0, 2, 1)},
                         "SL2(4)");
}

MatGroupF2 build_gl24_in_gl42() {
  return enumerate_group({embed_f4_matrix(2, 0, 0, 1), embed_f4_matrix(1, 1, 0, 1),
                          embed_f4_matrix(1, 0, 1, 1), embed_f4_matrix(1, 2, 0, 1)},
                         "GL2(4)");
}

// ---------------------------------------------------------------------------
// A7 inside GL4(2)

namespace {

bool transitive_on_nonzero(int n, std::span<const MatF2> gens) {
  const Vec total = (Vec{1} << n) - 1;
  std::vector<char> seen(total + 1, 0);
  std::vector<Vec> queue{1};
  seen[1] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const MatF2& g : gens) {
      const Vec w = g.apply(queue[i]);
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  return queue.size() == total;
}

// Every nontrivial conjugacy class generates the whole group.
bool is_simple(std::span<const MatF2> gens, const std::vector<MatF2>& elements) {
  std::unordered_set<std::uint64_t> done{MatF2::identity(gens.front().dim()).key()};
  std::vector<MatF2> inv;
  for (const MatF2& g : gens) inv.push_back(g.inverse());
  for (const MatF2& x : elements) {
    if (done.count(x.key())) continue;
    std::vector<MatF2> cls{x};
    done.insert(x.key());
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const MatF2 c = inv[s] * cls[i] * gens[s];
        if (done.insert(c.key()).second) cls.push_back(c);
      }
    auto cl = closure_capped(cls, elements.size());
    if (!cl || cl->size() != elements.size()) return false;
  }
  return true;
}

}  // namespace

MatGroupF2 find_a7_in_gl42(std::uint64_t seed, std::size_t budget) {
  const MatGroupF2 gl = general_linear_group(4);
  std::mt19937_64 rng(seed);
  for (std::size_t trial = 0; trial < budget; ++trial) {
    const MatF2 a = gl.element(rng() % gl.order());
    const MatF2 b = gl.element(rng() % gl.order());
    const MatF2 gens[2] = {a, b};
    auto cl = closure_capped(gens, 2520);
    if (!cl || cl->size() != 2520) continue;
    if (!transitive_on_nonzero(4, gens) || !is_simple(gens, *cl)) continue;
    return enumerate_group({a, b}, "A7");
  }
  throw Error(ErrorKind::SearchExhausted,
              "no A7 found in " + std::to_string(budget) + " trials (seed " +
                  std::to_string(seed) + ")");
}

// ---------------------------------------------------------------------------
// Module-theoretic queries

std::vector<std::vector<Vec>> orbits_on_vectors(const MatGroupF2& g) {
  const Vec top = Vec{1} << g.dim();
  std::vector<char> seen(top, 0);
  std::vector<std::vector<Vec>> out;
  for (Vec v = 1; v < top; ++v) {
    if (seen[v]) continue;
    std::vector<Vec> orbit{v};
    seen[v] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const MatF2& s : g.generators()) {
        const Vec w = s.apply(orbit[i]);
        if (!seen[w]) {
          seen[w] = 1;
          orbit.push_back(w);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

MatGroupF2 centralizer_in_gl(const MatGroupF2& g) {
  const int n = g.dim();
  // Unknown X with entry (i, k) at index i*n + k; XA = AX for each generator A.
  f2::LinearSystem sys(static_cast<std::size_t>(n * n));
  for (const MatF2& a : g.generators())
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        f2::BitVector eq(n * n);
        for (int k = 0; k < n; ++k) {
          if (a.get(k, j)) eq.flip(i * n + k);  // (XA)_ij
          if (a.get(i, k)) eq.flip(k * n + j);  // (AX)_ij
        }
        sys.add(std::move(eq), false);
      }
  const auto basis = sys.nullspace();
  if (basis.size() > 20) throw Error(ErrorKind::TooLarge, "commutant too large to enumerate");
  std::vector<std::uint64_t> basis_keys;
  for (const auto& b : basis) {
    MatF2 m(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (b.get(i * n + k)) m.set(i, k);
    basis_keys.push_back(m.key());
  }
  std::vector<MatF2> units;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask) {
    std::uint64_t key = 0;
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (mask >> b & 1u) key ^= basis_keys[b];
    const MatF2 m = MatF2::from_key(n, key);
    if (m.invertible()) units.push_back(m);
  }
  return MatGroupF2::from_closed_set(n, std::move(units), "C_GL(" + g.name() + ")");
}

bool is_irreducible(const MatGroupF2& g) {
  const int n = g.dim();
  // Some nonzero v generates a proper submodule iff V is reducible.
  for (Vec v = 1; v < (Vec{1} << n); ++v) {
    f2::SmallSpan span;
    std::vector<Vec> queue{v};
    span.insert(v);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const MatF2& s : g.generators()) {
        const Vec w = s.apply(queue[i]);
        if (span.insert(w)) queue.push_back(w);
      }
    if (static_cast<int>(span.dim()) < n) return false;
  }
  return true;
}

std::vector<Vec> Subspace::elements() const {
  f2::SmallSpan s;
  for (Vec b : basis) s.insert(b);
  std::vector<Vec> out;
  for (std::uint64_t e : s.elements()) out.push_back(static_cast<Vec>(e));
  return out;
}

Subspace fixed_subspace(int n, std::span<const MatF2> gens) {
  // v (g + 1) = 0 for every generator g.
  f2::LinearSystem sys(static_cast<std::size_t>(n));
  for (const MatF2& g : gens) {
    const MatF2 d = g + MatF2::identity(n);
    for (int j = 0; j < n; ++j) {
      f2::BitVector eq(n);
      for (int i = 0; i < n; ++i)
        if (d.get(i, j)) eq.set(i);
      sys.add(std::move(eq), false);
    }
  }
  Subspace out{n, {}};
  for (const auto& b : sys.nullspace()) {
    Vec v = 0;
    for (int i = 0; i < n; ++i)
      if (b.get(i)) v |= Vec{1} << i;
    out.basis.push_back(v);
  }
  return out;
}

Subspace fixed_subspace(const MatGroupF2& g) { return fixed_subspace(g.dim(), g.generators()); }

// ---------------------------------------------------------------------------
// Text I/O

std::string format_matrices(std::span<const MatF2> mats, std::string_view name) {
  std::ostringstream os;
  os << "dim " << (mats.empty() ? 0 : mats.front().dim()) << '\n';
  if (!name.empty()) os << "name " << name << '\n';
  for (const MatF2& m : mats) {
    for (int i = 0; i < m.dim(); ++i) os << (i ? " " : "") << std::hex << m.row(i);
    os << std::dec << '\n';
  }
  return os.str();
}

MatrixFile parse_matrices(std::string_view text) {
  MatrixFile out;
  std::istringstream is{std::string(text)};
  std::string line;
  bool have_dim = false;
  while (std::getline(is, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "dim") {
      if (!(ls >> out.dim) || out.dim < 1 || out.dim > kMaxDim)
        throw Error(ErrorKind::Parse, "bad dim header");
      have_dim = true;
      continue;
    }
    if (tok == "name") {
      ls >> out.name;
      continue;
    }
    if (!have_dim) throw Error(ErrorKind::Parse, "matrix line before dim header");
    std::vector<Vec> rows;
    std::istringstream rs(line);
    while (rs >> tok) {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(tok, &used, 16);
      } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "bad hex row '" + tok + "'");
      }
      if (used != tok.size()) throw Error(ErrorKind::Parse, "bad hex row '" + tok + "'");
      rows.push_back(static_cast<Vec>(v));
    }
    if (static_cast<int>(rows.size()) != out.dim)
      throw Error(ErrorKind::Parse, "matrix line with " + std::to_string(rows.size()) +
                                        " rows, expected " + std::to_string(out.dim));
    out.matrices.push_back(MatF2::from_rows(rows));
  }
  if (!have_dim) throw Error(ErrorKind::Parse, "missing dim header");
  return out;
}

}  // namespace fusionkit::mod
