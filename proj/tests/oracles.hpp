#pragma once

// Brute-force reference computations used only by the tests. They touch the
// library solely through FiniteGroup::mul / inv so they stay independent of
// the enumeration code they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "catnorm/finalg/group.hpp"

namespace oracle {

using catnorm::elem_t;
using catnorm::FiniteGroup;

/// All subsets closed under product and inverse (powerset scan, order <= 16).
inline std::vector<std::vector<elem_t>> subgroups_by_powerset(FiniteGroup const& g) {
  int const n = g.order();
  std::vector<std::vector<elem_t>> out;
  for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
    if (!(bits & 1u)) continue;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (!(bits >> a & 1u)) continue;
      if (!(bits >> g.inv(a) & 1u)) ok = false;
      for (int b = 0; b < n && ok; ++b)
        if ((bits >> b & 1u) && !(bits >> g.mul(a, b) & 1u)) ok = false;
    }
    if (!ok) continue;
    std::vector<elem_t> s;
    for (int a = 0; a < n; ++a)
      if (bits >> a & 1u) s.push_back(a);
    out.push_back(std::move(s));
  }
  return out;
}

inline bool closed_under_conjugation(FiniteGroup const& g, std::vector<elem_t> const& s) {
  std::set<elem_t> set(s.begin(), s.end());
  for (elem_t t = 0; t < g.order(); ++t)
    for (elem_t x : s)
      if (!set.count(g.mul(g.mul(t, x), g.inv(t)))) return false;
  return true;
}

/// All homomorphisms by scanning every function A -> B (|B|^|A|, keep small).
inline std::vector<std::vector<elem_t>> homs_by_function_scan(FiniteGroup const& a,
                                                              FiniteGroup const& b) {
  int const na = a.order(), nb = b.order();
  std::vector<std::vector<elem_t>> out;
  std::vector<elem_t> f(na, 0);
  while (true) {
    bool ok = true;
    for (int x = 0; x < na && ok; ++x)
      for (int y = 0; y < na && ok; ++y) ok = f[a.mul(x, y)] == b.mul(f[x], f[y]);
    if (ok) out.push_back(f);
    int i = 0;
    while (i < na && ++f[i] == nb) f[i++] = 0;
    if (i == na) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Bijective homomorphisms G -> G by scanning permutations.
inline std::vector<std::vector<elem_t>> automorphisms_by_permutation_scan(FiniteGroup const& g) {
  std::vector<elem_t> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<elem_t>> out;
  do {
    bool ok = true;
    for (int x = 0; x < g.order() && ok; ++x)
      for (int y = 0; y < g.order() && ok; ++y) ok = p[g.mul(x, y)] == g.mul(p[x], p[y]);
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Isomorphism test by permutation scan of G's elements.
inline bool isomorphic_by_permutation_scan(FiniteGroup const& g, FiniteGroup const& h) {
  if (g.order() != h.order()) return false;
  std::vector<elem_t> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < g.order() && ok; ++x)
      for (int y = 0; y < g.order() && ok; ++y) ok = p[g.mul(x, y)] == h.mul(p[x], p[y]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool is_cyclic(FiniteGroup const& g) {
  for (elem_t x = 0; x < g.order(); ++x) {
    int k = 1;
    for (elem_t y = x; y != 0; y = g.mul(y, x)) ++k;
    if (k == g.order() || g.order() == 1) return true;
  }
  return false;
}

}  // namespace oracle
