#include "catnorm/topgrp/topgrp.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "catnorm/error.hpp"

namespace catnorm {

namespace {

mask_t bit(int i) { return mask_t{1} << i; }

void check_carrier(int n) {
  if (n < 0 || n > 64) throw Error(ErrorKind::NotTopology, "carrier size " + std::to_string(n));
}

std::string mask_string(mask_t m) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 64; ++i)
    if (m & bit(i)) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
  return s + "}";
}

// Image of a mask of group elements under x -> b x b^-1, in ambient labels.
std::vector<elem_t> conj_set(FiniteGroup const& g, elem_t b, std::vector<elem_t> const& xs) {
  std::vector<elem_t> out;
  out.reserve(xs.size());
  for (elem_t x : xs) out.push_back(g.conj(b, x));
  return out;
}

}  // namespace

FiniteTopology FiniteTopology::discrete(int n) {
  check_carrier(n);
  FiniteTopology t;
  t.n_ = n;
  for (int i = 0; i < n; ++i) t.minimal_.push_back(bit(i));
  return t;
}

FiniteTopology FiniteTopology::indiscrete(int n) {
  check_carrier(n);
  FiniteTopology t;
  t.n_ = n;
  t.minimal_.assign(n, t.carrier());
  return t;
}

FiniteTopology FiniteTopology::from_opens(int n, std::vector<mask_t> const& opens) {
  check_carrier(n);
  FiniteTopology t;
  t.n_ = n;
  std::set<mask_t> family(opens.begin(), opens.end());
  for (mask_t o : family)
    if (o & ~t.carrier()) throw Error(ErrorKind::NotTopology, "open outside carrier " + mask_string(o));
  if (!family.count(0)) throw Error(ErrorKind::NotTopology, "empty set is not open");
  if (!family.count(t.carrier())) throw Error(ErrorKind::NotTopology, "carrier is not open");
  for (mask_t a : family)
    for (mask_t b : family) {
      if (!family.count(a | b))
        throw Error(ErrorKind::NotTopology, "union " + mask_string(a | b) + " missing");
      if (!family.count(a & b))
        throw Error(ErrorKind::NotTopology, "intersection " + mask_string(a & b) + " missing");
    }
  t.minimal_.assign(n, t.carrier());
  for (mask_t o : family)
    for (int i = 0; i < n; ++i)
      if (o & bit(i)) t.minimal_[i] &= o;
  return t;
}

FiniteTopology FiniteTopology::from_partition(int n, std::vector<int> const& block_of) {
  check_carrier(n);
  if (static_cast<int>(block_of.size()) != n) throw Error(ErrorKind::NotTopology, "partition size");
  FiniteTopology t;
  t.n_ = n;
  t.minimal_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (block_of[i] == block_of[j]) t.minimal_[i] |= bit(j);
  return t;
}

FiniteTopology FiniteTopology::product(FiniteTopology const& a, FiniteTopology const& b) {
  int n = a.n_ * b.n_;
  check_carrier(n);
  FiniteTopology t;
  t.n_ = n;
  t.minimal_.assign(n, 0);
  for (int x = 0; x < a.n_; ++x)
    for (int y = 0; y < b.n_; ++y)
      for (int u = 0; u < a.n_; ++u)
        if (a.minimal_[x] & bit(u))
          for (int v = 0; v < b.n_; ++v)
            if (b.minimal_[y] & bit(v)) t.minimal_[x * b.n_ + y] |= bit(u * b.n_ + v);
  return t;
}

FiniteTopology FiniteTopology::subspace(std::vector<elem_t> const& points) const {
  FiniteTopology t;
  t.n_ = static_cast<int>(points.size());
  t.minimal_.assign(t.n_, 0);
  for (int i = 0; i < t.n_; ++i)
    for (int j = 0; j < t.n_; ++j)
      if (minimal_[points[i]] & bit(points[j])) t.minimal_[i] |= bit(j);
  return t;
}

bool FiniteTopology::is_open(mask_t m) const {
  if (m & ~carrier()) return false;
  for (int i = 0; i < n_; ++i)
    if ((m & bit(i)) && (minimal_[i] & ~m)) return false;
  return true;
}

std::vector<mask_t> FiniteTopology::opens() const {
  // distinct minimal opens, then all their unions
  std::vector<mask_t> basis(minimal_.begin(), minimal_.end());
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  std::set<mask_t> seen{0};
  std::vector<mask_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<mask_t> next;
    for (mask_t o : frontier)
      for (mask_t m : basis)
        if ((o | m) != o && seen.insert(o | m).second) {
          ensure(seen.size() <= (std::size_t{1} << 20), "too many opens to enumerate");
          next.push_back(o | m);
        }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool FiniteTopology::is_discrete() const {
  for (int i = 0; i < n_; ++i)
    if (minimal_[i] != bit(i)) return false;
  return true;
}

bool FiniteTopology::is_indiscrete() const {
  for (int i = 0; i < n_; ++i)
    if (minimal_[i] != carrier()) return false;
  return true;
}

bool is_continuous(std::vector<elem_t> const& map, FiniteTopology const& src, FiniteTopology const& tgt) {
  for (mask_t o : tgt.opens()) {
    mask_t pre = 0;
    for (int x = 0; x < src.size(); ++x)
      if (o & bit(map[x])) pre |= bit(x);
    if (!src.is_open(pre)) return false;
  }
  return true;
}

bool is_continuous_local(std::vector<elem_t> const& map, FiniteTopology const& src,
                         FiniteTopology const& tgt) {
  for (int x = 0; x < src.size(); ++x) {
    mask_t target = tgt.minimal_open(map[x]);
    for (int y = 0; y < src.size(); ++y)
      if ((src.minimal_open(x) & bit(y)) && !(target & bit(map[y]))) return false;
  }
  return true;
}

namespace {

// Multiplication and inversion continuous, via minimal neighbourhoods of the
// product: min(a) · min(b) ⊆ min(ab).
std::string group_topology_failure(FiniteGroup const& g, FiniteTopology const& t) {
  if (t.size() != g.order()) return "carrier size differs from group order";
  int n = g.order();
  for (elem_t a = 0; a < n; ++a)
    for (elem_t b = 0; b < n; ++b) {
      mask_t target = t.minimal_open(g.mul(a, b));
      for (elem_t u = 0; u < n; ++u)
        if (t.minimal_open(a) & bit(u))
          for (elem_t v = 0; v < n; ++v)
            if ((t.minimal_open(b) & bit(v)) && !(target & bit(g.mul(u, v))))
              return "multiplication not continuous at (" + std::to_string(a) + "," +
                     std::to_string(b) + ")";
    }
  std::vector<elem_t> inv(n);
  for (elem_t a = 0; a < n; ++a) inv[a] = g.inv(a);
  if (!is_continuous_local(inv, t, t)) return "inversion not continuous";
  return {};
}

}  // namespace

TopGroup::TopGroup(FiniteGroup group, FiniteTopology topology)
    : group_(std::move(group)), topology_(std::move(topology)) {
  auto why = group_topology_failure(group_, topology_);
  if (!why.empty()) throw Error(ErrorKind::NotTopologicalGroup, group_.name() + ": " + why);
}

std::vector<TopGroup> topological_groups(FiniteGroup const& g) {
  int n = g.order();
  std::vector<FiniteTopology> candidates{FiniteTopology::discrete(n), FiniteTopology::indiscrete(n)};
  for (auto const& h : subgroups(g))
    for (bool left : {true, false}) {
      std::vector<int> block(n, -1);
      int next = 0;
      for (elem_t x = 0; x < n; ++x) {
        if (block[x] >= 0) continue;
        for (elem_t y : h.elements()) block[left ? g.mul(x, y) : g.mul(y, x)] = next;
        ++next;
      }
      candidates.push_back(FiniteTopology::from_partition(n, block));
    }
  std::vector<TopGroup> out;
  for (auto const& t : candidates) {
    if (std::any_of(out.begin(), out.end(), [&](TopGroup const& o) { return o.topology() == t; }))
      continue;
    if (group_topology_failure(g, t).empty()) out.emplace_back(g, t);
  }
  return out;
}

TopSubgroup TopSubgroup::with_subspace(Subgroup const& s, TopGroup const& b) {
  if (!s.ambient().same_object(b.group()) && !(s.ambient() == b.group()))
    throw Error(ErrorKind::NotSubgroup, "subgroup of another group");
  return {s, b.topology().subspace(s.elements())};
}

namespace {

void check_sub(TopSubgroup const& a, TopGroup const& b) {
  if (!(a.sub.ambient() == b.group()))
    throw Error(ErrorKind::NotSubgroup, "A is not a subgroup of " + b.group().name());
  if (a.topology.size() != a.sub.order())
    throw Error(ErrorKind::NotSubgroup, "topology carrier differs from |A|");
}

// Local mask of A for a list of ambient elements, or nullopt-like sentinel
// when some element leaves A.
bool local_mask(Subgroup const& a, std::vector<elem_t> const& xs, mask_t& out) {
  out = 0;
  for (elem_t x : xs) {
    if (!a.contains(x)) return false;
    out |= bit(a.local_index(x));
  }
  return true;
}

std::vector<elem_t> ambient_of(Subgroup const& a, mask_t m) {
  std::vector<elem_t> xs;
  for (int i = 0; i < a.order(); ++i)
    if (m & bit(i)) xs.push_back(a.elements()[i]);
  return xs;
}

// b U b^-1 is an open subset of A for every b and open U.
bool condition_a(TopSubgroup const& a, TopGroup const& b, std::vector<mask_t> const& opens_a) {
  for (mask_t u : opens_a) {
    auto xs = ambient_of(a.sub, u);
    for (elem_t g = 0; g < b.group().order(); ++g) {
      mask_t m;
      if (!local_mask(a.sub, conj_set(b.group(), g, xs), m) || !a.topology.is_open(m)) return false;
    }
  }
  return true;
}

bool condition_b_with(TopSubgroup const& a, TopGroup const& b, std::vector<mask_t> const& opens_a,
                      std::vector<mask_t> const& opens_b) {
  auto const& g = b.group();
  for (mask_t u : opens_a)
    for (int i = 0; i < a.sub.order(); ++i) {
      if (!(u & bit(i))) continue;
      bool found = false;
      for (mask_t v : opens_b) {
        if (!(v & 1)) continue;
        for (mask_t ua : opens_a) {
          if (!(ua & bit(i))) continue;
          auto xs = ambient_of(a.sub, ua);
          bool inside = true;
          for (elem_t y = 0; inside && y < g.order(); ++y) {
            if (!(v & bit(y))) continue;
            mask_t m;
            inside = local_mask(a.sub, conj_set(g, g.inv(y), xs), m) && (m & ~u) == 0;
          }
          if (inside) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) return false;
    }
  return true;
}

}  // namespace

bool condition_b(TopSubgroup const& a, TopGroup const& b) {
  check_sub(a, b);
  return condition_b_with(a, b, a.topology.opens(), b.topology().opens());
}

NormalityVerdicts normal_topsub_verdicts(TopSubgroup const& a, TopGroup const& b) {
  check_sub(a, b);
  NormalityVerdicts v;
  auto const& g = b.group();

  if (a.sub.is_normal()) {
    // φ(x, y) = y^-1 x y on A × B, pairs labelled x * |B| + y
    int na = a.sub.order(), nb = g.order();
    bool cont = true;
    for (int x = 0; cont && x < na; ++x)
      for (elem_t y = 0; cont && y < nb; ++y) {
        elem_t img = a.sub.local_index(g.conj(g.inv(y), a.sub.elements()[x]));
        mask_t target = a.topology.minimal_open(img);
        for (int x2 = 0; cont && x2 < na; ++x2) {
          if (!(a.topology.minimal_open(x) & bit(x2))) continue;
          for (elem_t y2 = 0; cont && y2 < nb; ++y2)
            if (b.topology().minimal_open(y) & bit(y2))
              cont = target & bit(a.sub.local_index(g.conj(g.inv(y2), a.sub.elements()[x2])));
        }
      }
    v.by_conjugation_map = cont;
  }

  auto opens_a = a.topology.opens();
  v.by_opens = condition_a(a, b, opens_a) && condition_b_with(a, b, opens_a, b.topology().opens());
  return v;
}

bool is_normal_topsub(TopSubgroup const& a, TopGroup const& b) {
  auto v = normal_topsub_verdicts(a, b);
  ensure(v.by_conjugation_map == v.by_opens,
         "normality routes disagree for a subgroup of order " + std::to_string(a.sub.order()) +
             " in " + b.group().name());
  return v.by_opens;
}

TopSubgroup top_normalizer(TopSubgroup const& a, TopGroup const& b) {
  check_sub(a, b);
  auto const& g = b.group();
  // A must itself be a topological group for A ⊆ N.
  auto why = group_topology_failure(a.sub.as_group(), a.topology);
  if (!why.empty()) throw Error(ErrorKind::NotTopologicalGroup, "A: " + why);
  auto opens_a = a.topology.opens();
  if (!condition_b_with(a, b, opens_a, b.topology().opens()))
    throw Error(ErrorKind::ConditionBFails, "condition (b) fails for a subgroup of order " +
                                                std::to_string(a.sub.order()) + " in " + g.name());
  std::vector<bool> in(g.order(), true);
  for (elem_t y = 0; y < g.order(); ++y)
    for (mask_t u : opens_a) {
      auto xs = ambient_of(a.sub, u);
      mask_t m1, m2;
      if (!local_mask(a.sub, conj_set(g, y, xs), m1) || !a.topology.is_open(m1) ||
          !local_mask(a.sub, conj_set(g, g.inv(y), xs), m2) || !a.topology.is_open(m2)) {
        in[y] = false;
        break;
      }
    }
  return TopSubgroup::with_subspace(Subgroup::from_mask(g, in), b);
}

Report verify_top_normalizer(TopSubgroup const& a, TopGroup const& b, TopSubgroup const& n) {
  Report r;
  r.name = "top-normalizer";
  r.bound = "subgroups of " + b.group().name();
  auto const& g = b.group();
  auto n_group = n.sub.as_group();
  TopGroup n_top(n_group, n.topology);
  std::vector<elem_t> a_in_n;
  for (elem_t x : a.sub.elements()) a_in_n.push_back(n.sub.local_index(x));
  bool a_inside = std::all_of(a.sub.elements().begin(), a.sub.elements().end(),
                              [&](elem_t x) { return n.sub.contains(x); });
  r.add("contains-A", a_inside);
  if (a_inside) {
    // A with its own topology, relabelled inside N
    std::vector<bool> mask(n_group.order(), false);
    for (elem_t x : a_in_n) mask[x] = true;
    auto a_local = Subgroup::from_mask(n_group, mask);
    std::vector<mask_t> opens;
    for (mask_t u : a.topology.opens()) {
      mask_t m = 0;
      for (int i = 0; i < a.sub.order(); ++i)
        if (u & bit(i)) m |= bit(a_local.local_index(a_in_n[i]));
      opens.push_back(m);
    }
    TopSubgroup a_in{a_local, FiniteTopology::from_opens(a_local.order(), opens)};
    auto v = normal_topsub_verdicts(a_in, n_top);
    r.add("normal-in-N", v.by_conjugation_map && v.by_opens,
          v.by_conjugation_map == v.by_opens ? "" : "routes disagree");
  }
  for (auto const& h : subgroups(g)) {
    if (!a.sub.is_subset_of(h)) continue;
    auto h_group = h.as_group();
    std::vector<bool> mask(h_group.order(), false);
    for (elem_t x : a.sub.elements()) mask[h.local_index(x)] = true;
    auto a_local = Subgroup::from_mask(h_group, mask);
    std::vector<mask_t> opens;
    for (mask_t u : a.topology.opens()) {
      mask_t m = 0;
      for (int i = 0; i < a.sub.order(); ++i)
        if (u & bit(i)) m |= bit(a_local.local_index(h.local_index(a.sub.elements()[i])));
      opens.push_back(m);
    }
    TopSubgroup a_in{a_local, FiniteTopology::from_opens(a_local.order(), opens)};
    TopGroup h_top(h_group, b.topology().subspace(h.elements()));
    auto v = normal_topsub_verdicts(a_in, h_top);
    std::string id = "maximal/order-" + std::to_string(h.order()) + "/" + mask_string([&] {
      mask_t m = 0;
      for (elem_t x : h.elements()) m |= bit(x);
      return m;
    }());
    bool ok = v.by_conjugation_map == v.by_opens && (!v.by_opens || h.is_subset_of(n.sub));
    r.add(id, ok, ok ? "" : "A normal in a subgroup not inside N");
  }
  return r;
}

}  // namespace catnorm
