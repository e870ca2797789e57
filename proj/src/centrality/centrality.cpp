#include "catnorm/centrality/centrality.hpp"

#include <algorithm>
#include <map>

#include "catnorm/error.hpp"
#include "catnorm/finalg/automorphism.hpp"
#include "catnorm/finalg/construct.hpp"

namespace catnorm {

namespace {

bool elementwise_commute(FiniteGroup const& g, std::vector<elem_t> const& a,
                         std::vector<elem_t> const& b) {
  for (auto x : a)
    for (auto y : b)
      if (!g.commute(x, y)) return false;
  return true;
}

std::vector<elem_t> image_elements(GroupHom const& t) {
  std::vector<bool> hit(t.target().order(), false);
  for (auto y : t.map()) hit[y] = true;
  std::vector<elem_t> out;
  for (elem_t y = 0; y < t.target().order(); ++y)
    if (hit[y]) out.push_back(y);
  return out;
}

// The relation of a congruence as a pair group, with d0 and d1.
PairGroup relation_pairs(Congruence const& r) {
  auto const& x = r.ambient();
  std::vector<std::pair<elem_t, elem_t>> related;
  for (elem_t a = 0; a < x.order(); ++a)
    for (elem_t b = 0; b < x.order(); ++b)
      if (r.related(a, b)) related.emplace_back(a, b);
  return pair_group(x, x, std::move(related));
}

bool congruence_maps_into(GroupHom const& h, Congruence const& from, Congruence const& to) {
  for (auto a : from.normal_subgroup().elements())
    if (!to.normal_subgroup().contains(h(a))) return false;
  return true;
}

}  // namespace

std::optional<Cooperator> commutes(GroupHom const& t, Subgroup const& v) {
  if (!(t.target() == v.ambient()))
    throw Error(ErrorKind::CodomainMismatch, "commutes: t must land in v's ambient group");
  auto const& g = v.ambient();
  if (!elementwise_commute(g, image_elements(t), v.elements())) return std::nullopt;
  auto dp = direct_product(t.source(), v.as_group());
  std::vector<elem_t> phi(dp.group.order());
  for (elem_t p = 0; p < dp.group.order(); ++p)
    phi[p] = g.mul(t(dp.first(p)), v.elements()[dp.second(p)]);
  return Cooperator{t, v, GroupHom(dp.group, g, std::move(phi))};
}

GroupHom cooperator_to_psi(Cooperator const& c, RelationExtension const& rel) {
  if (!(rel.r.ambient() == c.v.ambient()))
    throw Error(ErrorKind::AmbientMismatch, "cooperator and relation live on different groups");
  if (!is_normal_to(c.v, rel.r)) throw Error(ErrorKind::NotNormal, "u is not normal to R");
  auto const& g = c.v.ambient();
  auto const& src = c.phi.source();
  int const nu = c.v.order();
  std::vector<elem_t> psi(src.order());
  for (elem_t p = 0; p < src.order(); ++p) {
    elem_t tx = c.t(p / nu);
    psi[p] = rel.pairs.index_of(tx, g.mul(tx, c.v.elements()[p % nu]));
    ensure(psi[p] >= 0, "cooperator pair is related");
  }
  return GroupHom(src, rel.pairs.group, std::move(psi));
}

Cooperator psi_to_cooperator(GroupHom const& psi, RelationExtension const& rel,
                             FiniteGroup const& tbar) {
  auto const u = normalization(rel.r);
  int const nu = u.order();
  if (psi.source().order() != tbar.order() * nu || !(psi.target() == rel.pairs.group))
    throw Error(ErrorKind::NotMorphism, "psi has the wrong shape");
  auto const& pairs = rel.pairs.pairs;
  for (elem_t i = 0; i < nu; ++i)
    if (pairs[psi(i)] != std::make_pair(elem_t{0}, u.elements()[i]))
      throw Error(ErrorKind::NotMorphism, "psi does not restrict to (0,u)");
  std::vector<elem_t> t(tbar.order());
  for (elem_t x = 0; x < tbar.order(); ++x) {
    auto [a, b] = pairs[psi(x * nu)];
    if (a != b) throw Error(ErrorKind::NotMorphism, "psi does not restrict to s0 t");
    t[x] = a;
  }
  std::vector<elem_t> phi(psi.source().order());
  for (elem_t p = 0; p < psi.source().order(); ++p) {
    if (pairs[psi(p)].first != t[p / nu])
      throw Error(ErrorKind::NotMorphism, "d0 psi differs from t p0");
    phi[p] = pairs[psi(p)].second;
  }
  auto const& x = rel.r.ambient();
  return Cooperator{GroupHom(tbar, x, std::move(t)), u,
                    GroupHom(psi.source(), x, std::move(phi))};
}

CentralizerResult centralizer_mono(Subgroup const& v) {
  auto const& t = v.ambient();
  auto dp = direct_product(t, t);
  std::vector<elem_t> diag;
  for (auto x : v.elements()) diag.push_back(dp.pair(x, x));
  std::sort(diag.begin(), diag.end());
  auto n = normalizer(Subgroup(dp.group, std::move(diag)));
  auto via_pair = preimage(dp.in1(), n.N);
  auto via_scan = classical_centralizer(v);
  auto zeta = via_scan.inclusion();
  return {via_scan, std::move(zeta), std::move(via_pair), std::move(via_scan)};
}

Report verify_centralizer_universal(Subgroup const& v, CentralizerResult const& c,
                                    Catalog const& cat) {
  Report report;
  report.name = "centralizer-universal";
  report.bound = "catalog groups of order <= " + std::to_string(cat.max_group_order);
  auto const& t = v.ambient();
  auto const zg = c.Z.as_group();
  for (auto const& xp : cat.groups) {
    std::map<std::vector<elem_t>, int> over;
    for (auto const& hp : hom_maps(xp, zg)) {
      std::vector<elem_t> key(hp.size());
      for (std::size_t i = 0; i < hp.size(); ++i) key[i] = c.zeta(hp[i]);
      ++over[key];
    }
    long long commuting = 0;
    std::string failure;
    for (auto const& h : hom_maps(xp, t)) {
      std::vector<elem_t> img(h.begin(), h.end());
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      bool comm = elementwise_commute(t, img, v.elements());
      commuting += comm;
      auto it = over.find(h);
      int count = it == over.end() ? 0 : it->second;
      if (count != (comm ? 1 : 0)) {
        failure = std::to_string(count) + " factorizations of a hom that " +
                  (comm ? "commutes" : "does not commute");
        break;
      }
    }
    report.add("universal/" + (xp.name().empty() ? std::to_string(xp.order()) : xp.name()),
               failure.empty(),
               failure.empty() ? std::to_string(commuting) + " commuting homs" : failure);
  }
  return report;
}

Congruence smith_centralizer(Congruence const& r) {
  auto const& x = r.ambient();
  auto const& m = r.normal_subgroup().elements();
  std::vector<Subgroup> candidates;
  for (auto& n : normal_subgroups(x))
    if (elementwise_commute(x, n.elements(), m)) candidates.push_back(std::move(n));
  auto best = *std::max_element(candidates.begin(), candidates.end(),
                                [](Subgroup const& a, Subgroup const& b) { return a.order() < b.order(); });
  for (auto const& c : candidates)
    ensure(c.is_subset_of(best), "commuting normal subgroups have a greatest element");
  return Congruence(best);
}

DistinctiveRelation distinctive_relation_by_scan(Point const& p) {
  auto const& x = p.total();
  auto const& y = p.base();
  auto cx = congruences(x);
  auto cy = congruences(y);

  std::vector<std::pair<std::size_t, std::size_t>> valid;
  for (std::size_t i = 0; i < cx.size(); ++i)
    for (std::size_t j = 0; j < cy.size(); ++j) {
      auto const& dx = cx[i];
      auto const& dy = cy[j];
      if (dx.normal_subgroup().order() != dy.normal_subgroup().order()) continue;
      if (!congruence_maps_into(p.f(), dx, dy) || !congruence_maps_into(p.s(), dy, dx)) continue;

      auto rx = relation_pairs(dx);
      auto ry = relation_pairs(dy);
      std::vector<elem_t> df(rx.pairs.size()), ds(ry.pairs.size());
      for (std::size_t k = 0; k < rx.pairs.size(); ++k)
        df[k] = ry.index_of(p.f()(rx.pairs[k].first), p.f()(rx.pairs[k].second));
      for (std::size_t k = 0; k < ry.pairs.size(); ++k)
        ds[k] = rx.index_of(p.s()(ry.pairs[k].first), p.s()(ry.pairs[k].second));
      Point rel(GroupHom::unchecked(rx.group, ry.group, std::move(df)),
                GroupHom::unchecked(ry.group, rx.group, std::move(ds)));
      bool legs = is_P_cartesian(PtMorphism(rel, p, rx.p0(), ry.p0())) &&
                  is_P_cartesian(PtMorphism(rel, p, rx.p1(), ry.p1()));
      if (legs) valid.emplace_back(i, j);
    }

  ensure(!valid.empty(), "the discrete relation is cartesian");
  auto greatest = valid.front();
  for (auto const& c : valid)
    if (cx[c.first].normal_subgroup().order() > cx[greatest.first].normal_subgroup().order())
      greatest = c;
  for (auto const& [i, j] : valid)
    ensure(cx[i].normal_subgroup().is_subset_of(cx[greatest.first].normal_subgroup()) &&
               cy[j].normal_subgroup().is_subset_of(cy[greatest.second].normal_subgroup()),
           "cartesian relations on a point have a greatest element");
  return {p, cx[greatest.first], cy[greatest.second]};
}

DistinctiveRelation distinctive_relation_by_lift(Point const& p) {
  auto const& x = p.total();
  auto const& y = p.base();
  auto const k = kernel(p.f());

  // (a, b) normalizes the diagonal of K in X × X iff a, b conjugate K alike
  auto normalizes_diagonal = [&](elem_t a, elem_t b) {
    for (auto c : k.elements())
      if (x.conj(a, c) != x.conj(b, c)) return false;
    return true;
  };
  std::vector<std::pair<elem_t, elem_t>> ry;
  std::vector<bool> ry_mask(static_cast<std::size_t>(y.order()) * y.order(), false);
  for (elem_t a = 0; a < y.order(); ++a)
    for (elem_t b = 0; b < y.order(); ++b)
      if (normalizes_diagonal(p.s()(a), p.s()(b))) {
        ry.emplace_back(a, b);
        ry_mask[static_cast<std::size_t>(a) * y.order() + b] = true;
      }

  auto part = [&](elem_t a) { return x.mul(p.s()(p.f()(a)), x.inv(a)); };
  std::vector<std::pair<elem_t, elem_t>> rx;
  for (elem_t a = 0; a < x.order(); ++a)
    for (elem_t b = 0; b < x.order(); ++b)
      if (ry_mask[static_cast<std::size_t>(p.f()(a)) * y.order() + p.f()(b)] && part(a) == part(b))
        rx.emplace_back(a, b);

  return {p, congruence_from_relation(x, rx), congruence_from_relation(y, ry)};
}

DistinctiveRelation distinctive_relation(Point const& p) {
  auto a = distinctive_relation_by_scan(p);
  auto b = distinctive_relation_by_lift(p);
  ensure(a.D_X == b.D_X && a.D_Y == b.D_Y, "distinctive relation routes agree");
  return a;
}

EccentricVerdicts eccentric_verdicts(Point const& p) {
  EccentricVerdicts v;
  auto d = distinctive_relation(p);
  v.distinctive_discrete = d.D_X.is_discrete() && d.D_Y.is_discrete();
  auto z = smith_centralizer(Congruence(kernel(p.f())));
  v.preimage_discrete = preimage(p.s(), normalization(z)).order() == 1;
  auto e = make_split_extension(p);
  v.action_injective = conjugation_action(e, automorphism_group(e.kernel_group())).is_injective();
  return v;
}

bool is_eccentric(Point const& p) {
  auto v = eccentric_verdicts(p);
  ensure(v.distinctive_discrete == v.preimage_discrete, "eccentricity characterizations agree");
  return v.distinctive_discrete;
}

FaithfulVerdict faithful_verdict(Point const& p, Catalog const& cat) {
  FaithfulVerdict verdict;
  auto e = make_split_extension(p);
  verdict.action_injective =
      conjugation_action(e, automorphism_group(e.kernel_group())).is_injective();

  verdict.by_catalog = true;
  for (std::size_t idx = 0; idx < cat.extensions.size() && verdict.by_catalog; ++idx) {
    auto const& probe = cat.extensions[idx];
    if (probe.kernel_group().order() != e.kernel_group().order()) continue;
    std::map<std::vector<elem_t>, int> by_kernel;
    for (auto const& c : se_morphism_components(probe, e)) {
      auto m = SEMorphism::from_components(probe, e,
                                           GroupHom::unchecked(probe.kernel_group(), e.kernel_group(), c.on_kernel),
                                           GroupHom::unchecked(probe.base(), e.base(), c.on_base));
      if (!is_P_cartesian(PtMorphism(probe.point(), p, m.on_total(), m.on_base()))) continue;
      if (++by_kernel[c.on_kernel] > 1) {
        verdict.by_catalog = false;
        verdict.diagnostic = "two cartesian maps from catalog extension #" + std::to_string(idx) +
                             " agree on kernels";
        break;
      }
    }
  }
  if (verdict.by_catalog != verdict.action_injective && verdict.diagnostic.empty())
    verdict.diagnostic = "catalog has no witness for a non-injective action";
  else if (verdict.by_catalog != verdict.action_injective)
    verdict.diagnostic += "; action verdict disagrees";
  return verdict;
}

bool is_faithful(Point const& p, Catalog const& cat) {
  auto v = faithful_verdict(p, cat);
  ensure(v.by_catalog == v.action_injective, "faithfulness routes disagree: " + v.diagnostic);
  return v.action_injective;
}

FaithfulCover faithful_cover(Point const& p) {
  auto d = distinctive_relation(p);
  auto qx = quotient(d.D_X);
  auto qy = quotient(d.D_Y);
  auto const& cx = d.D_X.class_of();
  auto const& cy = d.D_Y.class_of();
  std::vector<elem_t> f(qx.order()), s(qy.order());
  for (elem_t a = 0; a < p.total().order(); ++a) f[cx[a]] = cy[p.f()(a)];
  for (elem_t b = 0; b < p.base().order(); ++b) s[cy[b]] = cx[p.s()(b)];
  Point cover(GroupHom(qx, qy, std::move(f)), GroupHom(qy, qx, std::move(s)));
  PtMorphism map(p, cover, quotient_map(d.D_X, qx), quotient_map(d.D_Y, qy));
  return {std::move(cover), std::move(map)};
}

bool normcent_check(Subgroup const& u, Congruence const& r) {
  if (!is_normal_to(u, r)) throw Error(ErrorKind::NotNormal, "u is not normal to R");
  auto lhs = normalization(smith_centralizer(r));
  auto rhs = centralizer_mono(u);
  return rhs.agree() && lhs == rhs.Z && rhs.Z.is_normal();
}

GroupHom acc_factor_check(Subgroup const& v, GroupHom const& t) {
  if (!commutes(t, v)) throw Error(ErrorKind::NotCommuting, "t does not commute with v");
  auto res = normalizer(v);
  auto ng = res.N.as_group();
  std::vector<std::vector<elem_t>> found;
  for (auto const& hp : hom_maps(t.source(), ng)) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < hp.size(); ++i) ok = res.w(hp[i]) == t(static_cast<elem_t>(i));
    if (ok) found.push_back(hp);
  }
  if (found.empty())
    throw Error(ErrorKind::FactorizationMissing, "no factorization through the normalizer");
  ensure(found.size() == 1, "factorization through a mono is unique");
  return GroupHom::unchecked(t.source(), ng, found.front());
}

}  // namespace catnorm
