#include "fusionkit/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fusionkit/error.hpp"

namespace fusionkit::grp {

CayleyTable::CayleyTable(std::size_t order, std::vector<std::uint16_t> table)
    : order_(order), table_(std::move(table)) {
  if (order_ == 0 || order_ > kMaxTableOrder)
    throw Error(ErrorKind::TooLarge,
                "table group of order " + std::to_string(order_));
  inverse_.assign(order_, 0);
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b)
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
  orders_.assign(order_, 1);
  for (Elem a = 1; a < order_; ++a) {
    Elem p = a;
    std::uint32_t k = 1;
    while (p != 0) {
      p = mul(p, a);
      ++k;
    }
    orders_[a] = k;
  }
}

ElementSet CayleyTable::all() const {
  ElementSet out(order_);
  std::iota(out.begin(), out.end(), Elem{0});
  return out;
}

bool contains(const ElementSet& set, Elem e) {
  return std::binary_search(set.begin(), set.end(), e);
}

bool is_subset(const ElementSet& small, const ElementSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace {

ElementSet closure_from(const CayleyTable& g, std::vector<char>& seen,
                        std::vector<Elem> frontier, std::span<const Elem> gens) {
  std::vector<Elem> out = frontier;
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem a : frontier)
      for (Elem s : gens) {
        const Elem p = g.mul(a, s);
        if (!seen[p]) {
          seen[p] = 1;
          next.push_back(p);
          out.push_back(p);
        }
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ElementSet closure(const CayleyTable& g, std::span<const Elem> gens) {
  std::vector<char> seen(g.order(), 0);
  seen[0] = 1;
  return closure_from(g, seen, {0}, gens);
}

ElementSet join(const CayleyTable& g, const ElementSet& base, Elem extra) {
  if (contains(base, extra)) return base;
  std::vector<Elem> gens = generators_of(g, base);
  gens.push_back(extra);
  return closure(g, gens);
}

std::vector<Elem> generators_of(const CayleyTable& g, const ElementSet& h) {
  std::vector<Elem> gens;
  ElementSet cur{0};
  for (Elem e : h) {
    if (contains(cur, e)) continue;
    gens.push_back(e);
    cur = closure(g, gens);
    if (cur.size() == h.size()) break;
  }
  return gens;
}

bool is_abelian(const CayleyTable& g, const ElementSet& h) {
  const auto gens = generators_of(g, h);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

bool is_elementary_abelian(const CayleyTable& g, const ElementSet& h) {
  for (Elem e : h)
    if (g.element_order(e) > 2) return false;
  return true;  // exponent 2 forces commutativity
}

std::uint32_t exponent(const CayleyTable& g, const ElementSet& h) {
  std::uint32_t e = 1;
  for (Elem a : h) e = std::lcm(e, g.element_order(a));
  return e;
}

ElementSet centralizer(const CayleyTable& g, const ElementSet& h, const ElementSet& x) {
  const auto gens = generators_of(g, x);
  ElementSet out;
  for (Elem a : h)
    if (std::all_of(gens.begin(), gens.end(),
                    [&](Elem s) { return g.mul(a, s) == g.mul(s, a); }))
      out.push_back(a);
  return out;
}

ElementSet center(const CayleyTable& g, const ElementSet& h) {
  return centralizer(g, h, h);
}

ElementSet normalizer(const CayleyTable& g, const ElementSet& h, const ElementSet& x) {
  ElementSet out;
  for (Elem a : h) {
    bool ok = true;
    for (Elem s : x)
      if (!contains(x, g.conj(s, a))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(a);
  }
  return out;
}

ElementSet derived_subgroup(const CayleyTable& g, const ElementSet& h) {
  // [H,H] is the normal closure of the commutators of generators.
  const auto gens = generators_of(g, h);
  ElementSet comms{0};
  for (Elem a : gens)
    for (Elem b : gens) comms.push_back(g.comm(a, b));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return normal_closure(g, h, comms);
}

ElementSet agemo1(const CayleyTable& g, const ElementSet& h) {
  std::vector<Elem> squares;
  for (Elem a : h) squares.push_back(g.mul(a, a));
  return closure(g, squares);
}

ElementSet omega1(const CayleyTable& g, const ElementSet& h) {
  std::vector<Elem> invs;
  for (Elem a : h)
    if (g.element_order(a) <= 2) invs.push_back(a);
  return closure(g, invs);
}

ElementSet normal_closure(const CayleyTable& g, const ElementSet& h, const ElementSet& x) {
  const auto hgens = generators_of(g, h);
  std::vector<Elem> gens(x.begin(), x.end());
  ElementSet cur = closure(g, gens);
  for (;;) {
    std::vector<Elem> extra;
    for (Elem a : generators_of(g, cur))
      for (Elem s : hgens) {
        const Elem c = g.conj(a, s);
        if (!contains(cur, c)) extra.push_back(c);
      }
    if (extra.empty()) return cur;
    gens = generators_of(g, cur);
    gens.insert(gens.end(), extra.begin(), extra.end());
    cur = closure(g, gens);
  }
}

bool is_normal(const CayleyTable& g, const ElementSet& h, const ElementSet& n) {
  for (Elem s : generators_of(g, h))
    for (Elem a : generators_of(g, n))
      if (!contains(n, g.conj(a, s))) return false;
  return true;
}

std::vector<ElementSet> conjugacy_classes(const CayleyTable& g, const ElementSet& h) {
  const auto gens = generators_of(g, h);
  std::vector<char> seen(g.order(), 0);
  std::vector<ElementSet> classes;
  for (Elem a : h) {
    if (seen[a]) continue;
    ElementSet cls{a};
    seen[a] = 1;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (Elem s : gens) {
        const Elem c = g.conj(cls[i], s);
        if (!seen[c]) {
          seen[c] = 1;
          cls.push_back(c);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

ElementSet o2(const CayleyTable& g, const ElementSet& h) {
  // a lies in O_2(H) iff its normal closure in H is a 2-group.
  std::vector<Elem> members;
  for (const ElementSet& cls : conjugacy_classes(g, h)) {
    if (!is_power_of_two(g.element_order(cls.front()))) continue;
    if (is_power_of_two(normal_closure(g, h, {cls.front()}).size()))
      members.insert(members.end(), cls.begin(), cls.end());
  }
  return closure(g, members);
}

std::vector<ElementSet> max_elementary_abelians(const CayleyTable& g, const ElementSet& h) {
  if (is_elementary_abelian(g, h)) return {h};
  std::vector<Elem> involutions;
  for (Elem a : h)
    if (g.is_involution(a)) involutions.push_back(a);
  std::set<ElementSet> level{ElementSet{0}};
  for (;;) {
    std::set<ElementSet> next;
    for (const ElementSet& e : level) {
      for (Elem t : involutions) {
        if (contains(e, t)) continue;
        bool commutes = true;
        for (Elem a : e)
          if (g.mul(a, t) != g.mul(t, a)) {
            commutes = false;
            break;
          }
        if (!commutes) continue;
        ElementSet bigger = e;
        for (Elem a : e) bigger.push_back(g.mul(a, t));
        std::sort(bigger.begin(), bigger.end());
        next.insert(std::move(bigger));
      }
    }
    if (next.empty()) return {level.begin(), level.end()};
    level = std::move(next);
  }
}

std::size_t two_rank(const CayleyTable& g, const ElementSet& h) {
  const auto top = max_elementary_abelians(g, h);
  std::size_t r = 0;
  while ((std::size_t{1} << r) < top.front().size()) ++r;
  return r;
}

std::vector<ElementSet> all_subgroups(const CayleyTable& g, const ElementSet& h,
                                      std::size_t limit) {
  if (h.size() > limit)
    throw Error(ErrorKind::TooLarge,
                "subgroup lattice of a group of order " + std::to_string(h.size()));
  std::set<ElementSet> found{ElementSet{0}};
  std::vector<ElementSet> queue{ElementSet{0}};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const ElementSet cur = queue[qi];
    std::vector<char> covered(g.order(), 0);
    for (Elem a : h) {
      if (covered[a] || contains(cur, a)) continue;
      for (Elem c : cur) covered[g.mul(c, a)] = 1;  // same coset, same join
      ElementSet j = join(g, cur, a);
      if (found.insert(j).second) queue.push_back(std::move(j));
    }
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() < b.size();
  });
  return out;
}

}  // namespace fusionkit::grp
