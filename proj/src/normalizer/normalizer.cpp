#include "catnorm/normalizer/normalizer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "catnorm/error.hpp"

namespace catnorm {

namespace {

std::string describe(Subgroup const& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.elements().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.elements()[i]);
  }
  return out + "}";
}

std::string group_label(FiniteGroup const& g) {
  return g.name().empty() ? "order" + std::to_string(g.order()) : g.name();
}

}  // namespace

NormalizerResult normalizer(Subgroup const& v) {
  auto const& t = v.ambient();
  std::vector<bool> mask(t.order(), false);
  for (elem_t x = 0; x < t.order(); ++x) mask[x] = v.normalized_by(x);
  auto n = Subgroup::from_closed_mask(t, std::move(mask));

  auto ng = n.as_group();
  std::vector<elem_t> local;
  local.reserve(v.elements().size());
  for (auto x : v.elements()) local.push_back(n.local_index(x));
  Congruence r(Subgroup(ng, local));
  auto u = GroupHom::unchecked(v.as_group(), ng, local);
  auto w = n.inclusion();
  return {v, std::move(n), std::move(r), std::move(u), std::move(w)};
}

RelationExtension relation_extension(Congruence const& r) {
  auto const& x = r.ambient();
  std::vector<std::pair<elem_t, elem_t>> related;
  for (elem_t a = 0; a < x.order(); ++a)
    for (elem_t b = 0; b < x.order(); ++b)
      if (r.related(a, b)) related.emplace_back(a, b);
  auto pg = pair_group(x, x, std::move(related));

  std::vector<elem_t> s0(x.order());
  for (elem_t a = 0; a < x.order(); ++a) s0[a] = pg.index_of(a, a);
  auto const& m = r.normal_subgroup();
  std::vector<elem_t> k;
  k.reserve(m.elements().size());
  for (auto b : m.elements()) k.push_back(pg.index_of(0, b));

  Point pt(pg.p0(), GroupHom::unchecked(x, pg.group, std::move(s0)));
  SplitExtension ext(pt, GroupHom::unchecked(m.as_group(), pg.group, std::move(k)));
  auto d1 = pg.p1();
  return {r, std::move(pg), std::move(ext), std::move(d1)};
}

Congruence congruence_from_relation(FiniteGroup const& x,
                                    std::vector<std::pair<elem_t, elem_t>> const& pairs) {
  std::set<std::pair<elem_t, elem_t>> rel;
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= x.order() || b >= x.order())
      throw Error(ErrorKind::MalformedTable, "relation pair out of range");
    rel.emplace(a, b);
  }
  for (elem_t a = 0; a < x.order(); ++a)
    if (!rel.count({a, a}))
      throw Error(ErrorKind::NotReflexive, "(" + std::to_string(a) + "," + std::to_string(a) +
                                               ") is missing");
  for (auto [a, b] : rel)
    for (auto [c, d] : rel)
      if (!rel.count({x.mul(a, c), x.mul(b, d)}))
        throw Error(ErrorKind::NotSubgroup, "relation is not closed under multiplication");

  std::vector<elem_t> m;
  for (elem_t b = 0; b < x.order(); ++b)
    if (rel.count({0, b})) m.push_back(b);
  Congruence r(Subgroup(x, std::move(m)));
  ensure(static_cast<int>(rel.size()) == r.size(), "reflexive subgroup relation is a congruence");
  return r;
}

SEMorphism relation_into_J(RelationExtension const& rel) {
  auto const& x = rel.ext.base();
  auto jx = J(x);
  std::vector<elem_t> total(rel.pairs.pairs.size());
  for (std::size_t i = 0; i < total.size(); ++i)
    total[i] = rel.pairs.pairs[i].first * x.order() + rel.pairs.pairs[i].second;
  std::vector<elem_t> kernel(rel.ext.kernel_group().order());
  for (elem_t i = 0; i < rel.ext.kernel_group().order(); ++i)
    kernel[i] = rel.pairs.pairs[rel.ext.k()(i)].second;
  return SEMorphism(rel.ext, jx, GroupHom::unchecked(rel.ext.kernel_group(), x, std::move(kernel)),
                    GroupHom::unchecked(rel.ext.total(), jx.total(), std::move(total)),
                    GroupHom::identity(x));
}

SEMorphism k_cartesian_lift(NormalizerResult const& res) {
  return compose(J(res.w), relation_into_J(relation_extension(res.R_v)));
}

SEMorphism k_cartesian_lift(Subgroup const& v) { return k_cartesian_lift(normalizer(v)); }

Report verify_normalizer_universal(Subgroup const& v, NormalizerResult const& res,
                                   Catalog const& cat) {
  Report report;
  report.name = "normalizer-universal";
  report.bound = "catalog groups of order <= " + std::to_string(cat.max_group_order);
  auto const& t = v.ambient();
  auto const ng = res.N.as_group();
  auto const& w = res.w.map();
  auto const& u_in_n = res.u_in_N();

  for (auto const& xp : cat.groups) {
    // candidates h' grouped by w ∘ h'
    std::map<std::vector<elem_t>, std::vector<std::vector<elem_t>>> over;
    for (auto const& hp : hom_maps(xp, ng)) {
      std::vector<elem_t> key(hp.size());
      for (std::size_t i = 0; i < hp.size(); ++i) key[i] = w[hp[i]];
      over[key].push_back(hp);
    }

    std::vector<Congruence> ss;
    for (auto& s : congruences(xp))
      if (s.normal_subgroup().order() == v.order()) ss.push_back(std::move(s));

    long long decompositions = 0;
    std::string failure;
    for (auto const& h : hom_maps(xp, t)) {
      for (auto const& s : ss) {
        auto const up = normalization(s);
        if (!is_normal_to(up, s)) {
          failure = "normalization not normal to its relation";
          break;
        }
        std::set<elem_t> img;
        for (auto a : up.elements()) img.insert(h[a]);
        if (static_cast<int>(img.size()) != up.order()) continue;
        if (!std::all_of(img.begin(), img.end(), [&](elem_t y) { return v.contains(y); }))
          continue;
        ++decompositions;

        int factorizations = 0;
        if (auto it = over.find(h); it != over.end()) {
          for (auto const& hp : it->second) {
            bool ok = true;
            for (auto a : up.elements())
              ok = ok && hp[a] == res.N.local_index(h[a]) && u_in_n.contains(hp[a]);
            for (elem_t x = 0; ok && x < xp.order(); ++x)
              for (auto a : up.elements())
                if (!res.R_v.related(hp[xp.mul(a, x)], hp[x])) {
                  ok = false;
                  break;
                }
            factorizations += ok;
          }
        }
        if (factorizations != 1 && failure.empty())
          failure = std::to_string(factorizations) + " factorizations for a decomposition";
      }
      if (!failure.empty()) break;
    }
    report.add("universal/" + group_label(xp), failure.empty(),
               failure.empty() ? std::to_string(decompositions) + " decompositions" : failure);
  }

  // intermediate subgroups U ⊆ H with U normal in H
  std::vector<Subgroup> intermediate;
  for (auto const& h : subgroups(t)) {
    if (!v.is_subset_of(h)) continue;
    bool normal_in_h = std::all_of(h.elements().begin(), h.elements().end(),
                                   [&](elem_t x) { return v.normalized_by(x); });
    if (!normal_in_h) continue;
    intermediate.push_back(h);
    auto inc = h.inclusion();
    int factorizations = 0;
    for (auto const& hp : hom_maps(h.as_group(), ng)) {
      bool ok = true;
      for (std::size_t i = 0; ok && i < hp.size(); ++i) ok = w[hp[i]] == inc(i);
      factorizations += ok;
    }
    bool inside = h.is_subset_of(res.N);
    report.add("intermediate/" + describe(h), inside == (factorizations == 1) && inside,
               std::to_string(factorizations) + " factorizations, inside N: " +
                   (inside ? "yes" : "no"));
  }

  // maximality: N is the largest intermediate subgroup and contains the rest
  int best = 0;
  for (auto const& h : intermediate) best = std::max(best, h.order());
  std::vector<Subgroup> largest;
  for (auto const& h : intermediate)
    if (h.order() == best) largest.push_back(h);
  bool contains_all = std::all_of(intermediate.begin(), intermediate.end(),
                                  [&](Subgroup const& h) { return h.is_subset_of(res.N); });
  bool maximal = largest.size() == 1 && largest.front() == res.N && contains_all;
  report.add("maximal", maximal,
             maximal ? "" : "largest intermediate " + (largest.empty() ? "none" : describe(largest.front())) +
                                " vs N " + describe(res.N));
  return report;
}

SEMorphism restrict_lift(SEMorphism const& m, SEMorphism const& t) {
  if (!t.is_mono()) throw Error(ErrorKind::NotMorphism, "restrict_lift: t must be a mono");
  auto const through = image(t.on_kernel());
  for (auto y : m.on_kernel().map())
    if (!through.contains(y))
      throw Error(ErrorKind::NoFactorization, "kernel of m does not factor through t");
  return pullback_se(m, t).to_second;
}

SEMorphism embed_in_J(SplitExtension const& e) {
  auto const& x = e.total();
  auto jx = J(x);
  std::vector<elem_t> total(x.order());
  for (elem_t a = 0; a < x.order(); ++a) total[a] = e.s()(e.f()(a)) * x.order() + a;
  return SEMorphism(e, jx, e.k(), GroupHom::unchecked(x, jx.total(), std::move(total)), e.s());
}

SEMorphism lift_into(SplitExtension const& e, Subgroup const& v) {
  return restrict_lift(k_cartesian_lift(image(e.k(), v)), embed_in_J(e));
}

namespace {

std::string check_lift(SEMorphism const& lift, Subgroup const& v, Catalog const& cat) {
  auto const& kmap = lift.on_kernel();
  if (!kmap.is_injective()) return "kernel component not injective";
  if (!(image(kmap).elements() == v.elements())) return "kernel component has the wrong image";
  if (!lift.is_mono()) return "lift above a mono is not a mono";
  auto r = k_cartesian_report(lift, cat);
  if (!r.cartesian) return r.witness;
  return {};
}

}  // namespace

Report fibrancy_suite(Catalog const& cat) {
  Report report;
  report.name = "fibrancy";
  report.bound = "split extensions with total order <= " + std::to_string(cat.max_total_order);
  for (auto const& t : cat.groups)
    for (auto const& u : subgroups(t)) {
      auto why = check_lift(k_cartesian_lift(u), u, cat);
      report.add("J(" + group_label(t) + ")/" + describe(u), why.empty(), why);
    }
  for (std::size_t i = 0; i < cat.extensions.size(); ++i) {
    auto const& e = cat.extensions[i];
    auto const& kg = e.kernel_group();
    for (auto const& v : subgroups(kg)) {
      std::string why;
      try {
        why = check_lift(lift_into(e, v), v, cat);
      } catch (Error const& err) {
        why = err.what();
      }
      report.add("E" + std::to_string(i) + "(" + group_label(kg) + " by " +
                     group_label(e.base()) + ")/" + describe(v),
                 why.empty(), why);
    }
  }
  return report;
}

bool reflexive_cartesian_check(Congruence const& r, Catalog const& cat) {
  auto m = relation_into_J(relation_extension(r));
  if (!is_K_cartesian(m, cat)) return false;
  auto const n = normalization(r);
  int sharing = 0;
  for (auto const& other : congruences(r.ambient())) sharing += normalization(other) == n;
  return sharing == 1;
}

}  // namespace catnorm
