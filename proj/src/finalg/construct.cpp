#include "catnorm/finalg/construct.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "catnorm/error.hpp"

namespace catnorm {

namespace {

FiniteGroup from_rule(int n, std::string name, auto&& mul) {
  std::vector<elem_t> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = mul(i, j);
  return FiniteGroup::from_flat_table(n, std::move(table), std::move(name));
}

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

FiniteGroup cyclic_group(int n) {
  return from_rule(n, "Z" + std::to_string(n), [n](int a, int b) { return (a + b) % n; });
}

FiniteGroup dihedral_group(int n) {
  return from_rule(2 * n, "D" + std::to_string(n), [n](int x, int y) {
    int const a = x % n, b = y % n;
    bool const fx = x >= n, fy = y >= n;
    if (!fx && !fy) return mod(a + b, n);
    if (!fx && fy) return n + mod(a + b, n);
    if (fx && !fy) return n + mod(a - b, n);
    return mod(a - b, n);
  });
}

FiniteGroup dicyclic_group(int n) {
  int const m = 2 * n;
  std::string name = n == 2 ? "Q8" : "Q" + std::to_string(4 * n);
  return from_rule(2 * m, std::move(name), [n, m](int x, int y) {
    int const i = x % m, k = y % m;
    bool const jx = x >= m, jy = y >= m;
    if (!jx && !jy) return mod(i + k, m);
    if (!jx && jy) return m + mod(i + k, m);
    if (jx && !jy) return m + mod(i - k, m);
    return mod(i - k + n, m);
  });
}

FiniteGroup quaternion_group() { return dicyclic_group(2); }

std::vector<std::vector<int>> permutation_group_elements(int degree,
                                                         std::vector<std::vector<int>> const& gens) {
  std::vector<int> id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> queue{id};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (auto const& g : gens) {
      std::vector<int> p(degree);
      for (int i = 0; i < degree; ++i) p[i] = g[queue[q][i]];  // g ∘ queue[q]
      if (seen.insert(p).second) queue.push_back(std::move(p));
    }
  }
  return {seen.begin(), seen.end()};
}

FiniteGroup permutation_group(int degree, std::vector<std::vector<int>> const& gens,
                              std::string name) {
  auto elems = permutation_group_elements(degree, gens);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<int>(i));
  int const n = static_cast<int>(elems.size());
  return from_rule(n, std::move(name), [&](int a, int b) {
    // a·b = a ∘ b: apply b first
    std::vector<int> p(degree);
    for (int i = 0; i < degree; ++i) p[i] = elems[a][elems[b][i]];
    return index.at(p);
  });
}

FiniteGroup symmetric_group(int degree) {
  std::vector<std::vector<int>> gens;
  if (degree >= 2) {
    std::vector<int> swap(degree), cycle(degree);
    for (int i = 0; i < degree; ++i) {
      swap[i] = i;
      cycle[i] = (i + 1) % degree;
    }
    std::swap(swap[0], swap[1]);
    gens = {swap, cycle};
  }
  return permutation_group(degree, gens, "S" + std::to_string(degree));
}

FiniteGroup alternating_group(int degree) {
  std::vector<std::vector<int>> gens;
  for (int k = 2; k < degree; ++k) {
    std::vector<int> c(degree);
    for (int i = 0; i < degree; ++i) c[i] = i;
    c[0] = 1;
    c[1] = k;
    c[k] = 0;  // 3-cycle (0 1 k)
    gens.push_back(c);
  }
  return permutation_group(degree, gens, "A" + std::to_string(degree));
}

GroupHom DirectProduct::p0() const {
  std::vector<elem_t> m(group.order());
  for (elem_t p = 0; p < group.order(); ++p) m[p] = first(p);
  return GroupHom::unchecked(group, a, std::move(m));
}

GroupHom DirectProduct::p1() const {
  std::vector<elem_t> m(group.order());
  for (elem_t p = 0; p < group.order(); ++p) m[p] = second(p);
  return GroupHom::unchecked(group, b, std::move(m));
}

GroupHom DirectProduct::in0() const {
  std::vector<elem_t> m(a.order());
  for (elem_t x = 0; x < a.order(); ++x) m[x] = pair(x, kIdentity);
  return GroupHom::unchecked(a, group, std::move(m));
}

GroupHom DirectProduct::in1() const {
  std::vector<elem_t> m(b.order());
  for (elem_t y = 0; y < b.order(); ++y) m[y] = pair(kIdentity, y);
  return GroupHom::unchecked(b, group, std::move(m));
}

GroupHom DirectProduct::diagonal() const {
  ensure(a == b, "diagonal of a product of distinct groups");
  std::vector<elem_t> m(a.order());
  for (elem_t x = 0; x < a.order(); ++x) m[x] = pair(x, x);
  return GroupHom::unchecked(a, group, std::move(m));
}

DirectProduct direct_product(FiniteGroup const& a, FiniteGroup const& b) {
  int const na = a.order(), nb = b.order(), n = na * nb;
  std::vector<elem_t> table(static_cast<std::size_t>(n) * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      table[static_cast<std::size_t>(p) * n + q] =
          a.mul(p / nb, q / nb) * nb + b.mul(p % nb, q % nb);
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + "x" + b.name();
  return {a, b, FiniteGroup::from_trusted_table(n, std::move(table), std::move(name))};
}

elem_t PairGroup::index_of(elem_t x, elem_t y) const {
  return lookup[static_cast<std::size_t>(x) * b.order() + y];
}

GroupHom PairGroup::p0() const {
  std::vector<elem_t> m(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) m[i] = pairs[i].first;
  return GroupHom::unchecked(group, a, std::move(m));
}

GroupHom PairGroup::p1() const {
  std::vector<elem_t> m(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) m[i] = pairs[i].second;
  return GroupHom::unchecked(group, b, std::move(m));
}

PairGroup pair_group(FiniteGroup const& a, FiniteGroup const& b,
                     std::vector<std::pair<elem_t, elem_t>> pairs, std::string name) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  PairGroup out{a, b, FiniteGroup{}, std::move(pairs), {}};
  out.lookup.assign(static_cast<std::size_t>(a.order()) * b.order(), -1);
  for (std::size_t i = 0; i < out.pairs.size(); ++i)
    out.lookup[static_cast<std::size_t>(out.pairs[i].first) * b.order() + out.pairs[i].second] =
        static_cast<elem_t>(i);
  int const n = static_cast<int>(out.pairs.size());
  if (n == 0 || out.pairs[0] != std::make_pair(kIdentity, kIdentity))
    throw Error(ErrorKind::NotSubgroup, "pair set lacks the identity");
  std::vector<elem_t> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto [x1, y1] = out.pairs[i];
      auto [x2, y2] = out.pairs[j];
      elem_t k = out.index_of(a.mul(x1, x2), b.mul(y1, y2));
      if (k < 0) throw Error(ErrorKind::NotSubgroup, "pair set not closed");
      table[static_cast<std::size_t>(i) * n + j] = k;
    }
  out.group = FiniteGroup::from_trusted_table(n, std::move(table), std::move(name));
  return out;
}

namespace {

FiniteGroup named(FiniteGroup g, std::string name) { return g.renamed(std::move(name)); }

std::vector<FiniteGroup> const& all_builtin() {
  static std::vector<FiniteGroup> const groups = [] {
    std::vector<FiniteGroup> gs;
    for (int n = 1; n <= 16; ++n) gs.push_back(cyclic_group(n));
    auto z2 = cyclic_group(2);
    auto v4 = named(direct_product(z2, z2).group, "Z2xZ2");
    gs.push_back(v4);
    gs.push_back(named(direct_product(z2, cyclic_group(4)).group, "Z2xZ4"));
    gs.push_back(named(direct_product(v4, z2).group, "Z2xZ2xZ2"));
    gs.push_back(symmetric_group(3));
    gs.push_back(dihedral_group(4));
    gs.push_back(quaternion_group());
    gs.push_back(dihedral_group(5));
    gs.push_back(dihedral_group(6));
    gs.push_back(alternating_group(4));
    gs.push_back(dicyclic_group(3));
    std::stable_sort(gs.begin(), gs.end(),
                     [](auto const& x, auto const& y) { return x.order() < y.order(); });
    return gs;
  }();
  return groups;
}

}  // namespace

std::vector<FiniteGroup> builtin_groups(int max_order) {
  std::vector<FiniteGroup> out;
  for (auto const& g : all_builtin())
    if (g.order() <= max_order) out.push_back(g);
  return out;
}

FiniteGroup builtin_group(std::string const& name) {
  for (auto const& g : all_builtin())
    if (g.name() == name) return g;
  throw Error(ErrorKind::ParseError, "unknown built-in group '" + name + "'");
}

}  // namespace catnorm
