#include "catnorm/mset/mset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "catnorm/error.hpp"
#include "catnorm/finalg/hom.hpp"

namespace catnorm {

FiniteMonoid::FiniteMonoid() = default;

FiniteMonoid FiniteMonoid::from_table(std::vector<std::vector<elem_t>> const& rows, std::string name) {
  int const n = static_cast<int>(rows.size());
  if (n == 0) throw Error(ErrorKind::MalformedTable, "empty monoid table");
  for (auto const& r : rows) {
    if (static_cast<int>(r.size()) != n) throw Error(ErrorKind::MalformedTable, "table is not square");
    for (auto x : r)
      if (x < 0 || x >= n) throw Error(ErrorKind::MalformedTable, "entry out of range");
  }
  elem_t e = -1;
  for (elem_t c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (elem_t a = 0; ok && a < n; ++a) ok = rows[c][a] == a && rows[a][c] == a;
    if (ok) e = c;
  }
  if (e < 0) throw Error(ErrorKind::NoIdentity, "monoid has no identity");
  for (elem_t a = 0; a < n; ++a)
    for (elem_t b = 0; b < n; ++b)
      for (elem_t c = 0; c < n; ++c)
        if (rows[rows[a][b]][c] != rows[a][rows[b][c]])
          throw Error(ErrorKind::NotAssociative, "monoid table is not associative");

  std::vector<elem_t> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::swap(relabel[0], relabel[e]);  // relabel is an involution
  FiniteMonoid m;
  m.order_ = n;
  m.name_ = std::move(name);
  m.table_.assign(static_cast<std::size_t>(n) * n, 0);
  for (elem_t a = 0; a < n; ++a)
    for (elem_t b = 0; b < n; ++b)
      m.table_[static_cast<std::size_t>(a) * n + b] = relabel[rows[relabel[a]][relabel[b]]];
  return m;
}

std::vector<FiniteMonoid> monoids_of_order(int order) {
  ensure(order >= 1 && order <= 4, "monoids are enumerated up to order 4");
  int const n = order;
  int const free = (n - 1) * (n - 1);
  long long total = 1;
  for (int i = 0; i < free; ++i) total *= n;

  std::vector<std::vector<int>> perms;  // permutations fixing 0
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin() + 1, perm.end()));

  std::set<std::vector<elem_t>> found;
  std::vector<elem_t> table(static_cast<std::size_t>(n) * n);
  auto at = [&](elem_t a, elem_t b) { return table[static_cast<std::size_t>(a) * n + b]; };
  for (long long code = 0; code < total; ++code) {
    for (int a = 0; a < n; ++a) {
      table[a] = a;
      table[static_cast<std::size_t>(a) * n] = a;
    }
    long long c = code;
    for (int a = 1; a < n; ++a)
      for (int b = 1; b < n; ++b) {
        table[static_cast<std::size_t>(a) * n + b] = static_cast<elem_t>(c % n);
        c /= n;
      }
    bool assoc = true;
    for (elem_t a = 1; assoc && a < n; ++a)
      for (elem_t b = 1; assoc && b < n; ++b)
        for (elem_t d = 1; assoc && d < n; ++d) assoc = at(at(a, b), d) == at(a, at(b, d));
    if (!assoc) continue;

    std::vector<elem_t> canonical;
    for (auto const& p : perms) {
      std::vector<int> inv(n);
      for (int i = 0; i < n; ++i) inv[p[i]] = i;
      std::vector<elem_t> t(table.size());
      for (elem_t a = 0; a < n; ++a)
        for (elem_t b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = p[at(inv[a], inv[b])];
      if (canonical.empty() || t < canonical) canonical = std::move(t);
    }
    found.insert(std::move(canonical));
  }

  std::vector<FiniteMonoid> out;
  for (auto const& t : found) {
    std::vector<std::vector<elem_t>> rows(n, std::vector<elem_t>(n));
    for (elem_t a = 0; a < n; ++a)
      for (elem_t b = 0; b < n; ++b) rows[a][b] = t[static_cast<std::size_t>(a) * n + b];
    out.push_back(FiniteMonoid::from_table(rows, "M" + std::to_string(n) + "." + std::to_string(out.size())));
  }
  return out;
}

InternalGroup::InternalGroup(FiniteMonoid monoid, FiniteGroup group, std::vector<elem_t> act)
    : monoid_(std::move(monoid)), group_(std::move(group)), act_(std::move(act)) {
  int const nt = group_.order();
  int const nm = monoid_.order();
  if (static_cast<long long>(act_.size()) != static_cast<long long>(nt) * nm)
    throw Error(ErrorKind::NotMonoidAction, "action table has the wrong size");
  for (auto x : act_)
    if (x < 0 || x >= nt) throw Error(ErrorKind::NotMonoidAction, "action entry out of range");
  for (elem_t t = 0; t < nt; ++t)
    if (apply(0, t) != t) throw Error(ErrorKind::NotMonoidAction, "identity does not act trivially");
  for (elem_t m = 0; m < nm; ++m)
    for (elem_t n = 0; n < nm; ++n)
      for (elem_t t = 0; t < nt; ++t)
        if (apply(monoid_.mul(m, n), t) != apply(m, apply(n, t)))
          throw Error(ErrorKind::NotMonoidAction, "action is not compatible with the monoid product");
  for (elem_t m = 0; m < nm; ++m)
    for (elem_t a = 0; a < nt; ++a)
      for (elem_t b = 0; b < nt; ++b)
        if (apply(m, group_.mul(a, b)) != group_.mul(apply(m, a), apply(m, b)))
          throw Error(ErrorKind::NotMonoidAction, "monoid does not act by endomorphisms");
}

InternalGroup InternalGroup::trivial_action(FiniteMonoid const& monoid, FiniteGroup const& group) {
  std::vector<elem_t> act(static_cast<std::size_t>(monoid.order()) * group.order());
  for (std::size_t i = 0; i < act.size(); ++i) act[i] = static_cast<elem_t>(i % group.order());
  return InternalGroup(monoid, group, std::move(act));
}

bool InternalGroup::is_stable(std::vector<bool> const& subset) const {
  for (elem_t t = 0; t < group_.order(); ++t)
    if (subset[t])
      for (elem_t m = 0; m < monoid_.order(); ++m)
        if (!subset[apply(m, t)]) return false;
  return true;
}

std::vector<InternalGroup> internal_groups_over(FiniteMonoid const& monoid, FiniteGroup const& group) {
  auto ends = hom_maps(group, group);
  int const ne = static_cast<int>(ends.size());
  int const nt = group.order();
  int const nm = monoid.order();
  std::map<std::vector<elem_t>, int> index;
  for (int i = 0; i < ne; ++i) index.emplace(ends[i], i);
  int id = index.at(GroupHom::identity(group).map());
  std::vector<int> comp(static_cast<std::size_t>(ne) * ne);
  std::vector<elem_t> tmp(nt);
  for (int i = 0; i < ne; ++i)
    for (int j = 0; j < ne; ++j) {
      for (elem_t t = 0; t < nt; ++t) tmp[t] = ends[i][ends[j][t]];
      comp[static_cast<std::size_t>(i) * ne + j] = index.at(tmp);
    }

  std::vector<InternalGroup> out;
  std::vector<int> choice(nm, -1);
  choice[0] = id;
  auto consistent = [&](int upto) {
    for (int a = 0; a <= upto; ++a)
      for (int b = 0; b <= upto; ++b) {
        int ab = monoid.mul(a, b);
        if (ab > upto) continue;
        if (comp[static_cast<std::size_t>(choice[a]) * ne + choice[b]] != choice[ab]) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, int m) -> void {
    if (m == nm) {
      std::vector<elem_t> act(static_cast<std::size_t>(nm) * nt);
      for (int a = 0; a < nm; ++a)
        for (elem_t t = 0; t < nt; ++t) act[static_cast<std::size_t>(a) * nt + t] = ends[choice[a]][t];
      out.emplace_back(monoid, group, std::move(act));
      return;
    }
    for (int e = 0; e < ne; ++e) {
      choice[m] = e;
      if (consistent(m)) self(self, m + 1);
    }
    choice[m] = -1;
  };
  rec(rec, 1);
  return out;
}

MSubgroup::MSubgroup(InternalGroup parent, Subgroup sub) : parent_(std::move(parent)), sub_(std::move(sub)) {
  if (!(sub_.ambient() == parent_.group()))
    throw Error(ErrorKind::AmbientMismatch, "subgroup of a different group");
  if (!parent_.is_stable(sub_.mask())) throw Error(ErrorKind::NotStable, "subgroup is not M-stable");
}

std::vector<MSubgroup> m_subgroups(InternalGroup const& g) {
  std::vector<MSubgroup> out;
  for (auto& s : subgroups(g.group()))
    if (g.is_stable(s.mask())) out.emplace_back(g, std::move(s));
  return out;
}

std::vector<bool> pi_along_projection(InternalGroup const& parent, Subgroup const& u,
                                      std::vector<bool> const& s) {
  int const nt = parent.group().order();
  int const nu = u.order();
  if (static_cast<long long>(s.size()) != static_cast<long long>(nt) * nu)
    throw Error(ErrorKind::MalformedTable, "S has the wrong size");
  if (!parent.is_stable(u.mask())) throw Error(ErrorKind::NotStable, "U is not M-stable");
  auto const& ue = u.elements();
  for (elem_t t = 0; t < nt; ++t)
    for (int i = 0; i < nu; ++i)
      if (s[static_cast<std::size_t>(t) * nu + i])
        for (elem_t m = 0; m < parent.monoid().order(); ++m)
          if (!s[static_cast<std::size_t>(parent.apply(m, t)) * nu + u.local_index(parent.apply(m, ue[i]))])
            throw Error(ErrorKind::NotStable, "S is not M-stable");

  std::vector<bool> out(nt, false);
  for (elem_t t = 0; t < nt; ++t) {
    bool all = true;
    for (elem_t m = 0; all && m < parent.monoid().order(); ++m)
      for (int i = 0; all && i < nu; ++i) all = s[static_cast<std::size_t>(parent.apply(m, t)) * nu + i];
    out[t] = all;
  }
  return out;
}

Report verify_adjunction(InternalGroup const& parent, Subgroup const& u, std::vector<bool> const& s) {
  Report report;
  report.name = "adjunction";
  int const nt = parent.group().order();
  int const nu = u.order();
  ensure(nt <= 16, "adjunction check enumerates subsets of T");
  auto pi = pi_along_projection(parent, u, s);
  long long stable = 0;
  std::string failure;
  std::vector<bool> v(nt);
  for (unsigned bits = 0; bits < (1u << nt) && failure.empty(); ++bits) {
    for (int t = 0; t < nt; ++t) v[t] = (bits >> t) & 1u;
    if (!parent.is_stable(v)) continue;
    ++stable;
    bool inside = true, product = true;
    for (int t = 0; t < nt; ++t) {
      if (!v[t]) continue;
      inside = inside && pi[t];
      for (int i = 0; i < nu; ++i) product = product && s[static_cast<std::size_t>(t) * nu + i];
    }
    if (inside != product) failure = "subset mask " + std::to_string(bits) + " breaks the bijection";
  }
  report.add("adjunction", failure.empty(),
             failure.empty() ? std::to_string(stable) + " stable subsets" : failure);
  return report;
}

namespace {

std::vector<bool> conjugation_relation(MSubgroup const& v, bool inverse_first) {
  auto const& g = v.parent().group();
  auto const& u = v.subgroup();
  int const nu = u.order();
  std::vector<bool> s(static_cast<std::size_t>(g.order()) * nu, false);
  for (elem_t t = 0; t < g.order(); ++t)
    for (int i = 0; i < nu; ++i) {
      elem_t x = u.elements()[i];
      elem_t c = inverse_first ? g.mul(g.mul(g.inv(t), x), t) : g.conj(t, x);
      s[static_cast<std::size_t>(t) * nu + i] = u.contains(c);
    }
  return s;
}

}  // namespace

InternalNormalizer internal_normalizer(MSubgroup const& v) {
  auto const& parent = v.parent();
  auto const& g = parent.group();
  auto const& uu = v.subgroup();
  auto xv = pi_along_projection(parent, uu, conjugation_relation(v, false));
  auto xt = pi_along_projection(parent, uu, conjugation_relation(v, true));
  std::vector<elem_t> members;
  for (elem_t t = 0; t < g.order(); ++t)
    if (xv[t] && xt[t]) members.push_back(t);
  MSubgroup x(parent, Subgroup(g, std::move(members)));

  auto const& xs = x.subgroup();
  auto xg = xs.as_group();
  std::vector<elem_t> local;
  for (auto a : uu.elements()) local.push_back(xs.local_index(a));
  Congruence r(Subgroup(xg, local));
  auto u = GroupHom(uu.as_group(), xg, local);
  auto w = xs.inclusion();
  return {v, std::move(xv), std::move(xt), std::move(x), std::move(r), std::move(u), std::move(w)};
}

Report verify_internal_lemma(MSubgroup const& v) {
  Report report;
  report.name = "internal-lemma";
  auto const& g = v.parent().group();
  auto res = internal_normalizer(v);
  auto submonoid = [&](std::vector<bool> const& s) {
    if (!s[0]) return false;
    for (elem_t a = 0; a < g.order(); ++a)
      for (elem_t b = 0; b < g.order(); ++b)
        if (s[a] && s[b] && !s[g.mul(a, b)]) return false;
    return true;
  };
  report.add("X_v submonoid", submonoid(res.X_v));
  report.add("X~_v submonoid", submonoid(res.X_tilde_v));
  report.add("X M-stable subgroup", v.parent().is_stable(res.X.subgroup().mask()));
  auto const& uu = v.subgroup();
  report.add("U inside X", uu.is_subset_of(res.X.subgroup()));
  bool normal = std::all_of(res.X.subgroup().elements().begin(), res.X.subgroup().elements().end(),
                            [&](elem_t t) { return uu.normalized_by(t); });
  report.add("U normal in X", normal);
  report.add("U normal to R_v", is_normal_to(res.R_v.normal_subgroup(), res.R_v));
  return report;
}

Report verify_internal_universal(InternalNormalizer const& res, std::vector<InternalGroup> const& sources) {
  Report report;
  report.name = "internal-universal";
  auto const& parent = res.v.parent();
  auto const& g = parent.group();
  auto const& uu = res.v.subgroup();
  auto const& xs = res.X.subgroup();
  int const nm = parent.monoid().order();

  // maximality among M-stable subgroups normalizing U
  std::vector<Subgroup> candidates;
  for (auto const& h : m_subgroups(parent)) {
    auto const& hs = h.subgroup();
    if (!uu.is_subset_of(hs)) continue;
    if (std::all_of(hs.elements().begin(), hs.elements().end(), [&](elem_t t) { return uu.normalized_by(t); }))
      candidates.push_back(hs);
  }
  bool maximal = std::any_of(candidates.begin(), candidates.end(), [&](Subgroup const& h) { return h == xs; }) &&
                 std::all_of(candidates.begin(), candidates.end(), [&](Subgroup const& h) { return h.is_subset_of(xs); });
  report.add("maximal", maximal);

  auto xg = xs.as_group();
  for (std::size_t idx = 0; idx < sources.size(); ++idx) {
    auto const& src = sources[idx];
    if (!(src.monoid() == parent.monoid())) continue;
    auto const& xp = src.group();
    auto equivariant_into = [&](std::vector<elem_t> const& h, auto&& act_target) {
      for (elem_t m = 0; m < nm; ++m)
        for (elem_t a = 0; a < xp.order(); ++a)
          if (h[src.apply(m, a)] != act_target(m, h[a])) return false;
      return true;
    };
    auto act_t = [&](elem_t m, elem_t t) { return parent.apply(m, t); };
    auto act_x = [&](elem_t m, elem_t i) { return xs.local_index(parent.apply(m, xs.elements()[i])); };

    std::map<std::vector<elem_t>, int> over;
    for (auto const& hp : hom_maps(xp, xg)) {
      if (!equivariant_into(hp, act_x)) continue;
      std::vector<elem_t> key(hp.size());
      for (std::size_t i = 0; i < hp.size(); ++i) key[i] = xs.elements()[hp[i]];
      ++over[key];
    }
    std::vector<Subgroup> ups;
    for (auto& n : normal_subgroups(xp))
      if (n.order() == uu.order() && src.is_stable(n.mask())) ups.push_back(std::move(n));

    long long decompositions = 0;
    std::string failure;
    for (auto const& h : hom_maps(xp, g)) {
      if (!equivariant_into(h, act_t)) continue;
      for (auto const& up : ups) {
        std::vector<bool> hit(g.order(), false);
        bool ok = true;
        for (auto a : up.elements()) {
          ok = ok && uu.contains(h[a]) && !hit[h[a]];
          hit[h[a]] = true;
        }
        if (!ok) continue;
        ++decompositions;
        auto it = over.find(h);
        int count = it == over.end() ? 0 : it->second;
        if (count != 1 && failure.empty()) failure = std::to_string(count) + " factorizations";
      }
    }
    report.add("universal/" + std::to_string(idx), failure.empty(),
               failure.empty() ? std::to_string(decompositions) + " decompositions" : failure);
  }
  return report;
}

}  // namespace catnorm
