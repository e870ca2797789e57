#include <algorithm>

#include "catnorm/centrality/centrality.hpp"
#include "catnorm/error.hpp"
#include "catnorm/finalg/construct.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace catnorm;

namespace {

Catalog const& catalog16() {
  static Catalog const cat = Catalog::build(16, 16);
  return cat;
}

Subgroup find_subgroup(FiniteGroup const& g, int order, bool normal) {
  for (auto& s : subgroups(g))
    if (s.order() == order && s.is_normal() == normal) return s;
  FAIL("no such subgroup");
  return Subgroup::trivial(g);
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (Error const& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvariantViolation;
}

Point sign_point() {
  auto s3 = symmetric_group(3);
  Congruence r(find_subgroup(s3, 3, true));
  auto z2 = quotient(r);
  elem_t tr = 1;
  while (s3.element_order(tr) != 2) ++tr;
  return Point(quotient_map(r, z2), GroupHom(z2, s3, {0, tr}));
}

Point product_point(FiniteGroup const& t, FiniteGroup const& x) {
  return product_extension(t, x).point();
}

// Largest normal subgroup commuting elementwise with m, by powerset scan.
std::vector<elem_t> smith_by_powerset(FiniteGroup const& g, std::vector<elem_t> const& m) {
  std::vector<elem_t> best;
  for (auto const& n : oracle::subgroups_by_powerset(g)) {
    if (!oracle::closed_under_conjugation(g, n)) continue;
    bool ok = true;
    for (auto a : n)
      for (auto b : m) ok = ok && g.mul(a, b) == g.mul(b, a);
    if (ok && n.size() > best.size()) best = n;
  }
  return best;
}

// The classical answer: D_Y is the kernel of the action, D_X its image under s.
std::pair<std::vector<elem_t>, std::vector<elem_t>> distinctive_by_action(Point const& p) {
  auto const& x = p.total();
  std::vector<elem_t> ker_f, dy, dx;
  for (elem_t a = 0; a < x.order(); ++a)
    if (p.f()(a) == 0) ker_f.push_back(a);
  for (elem_t y = 0; y < p.base().order(); ++y) {
    elem_t sy = p.s()(y);
    bool trivial = std::all_of(ker_f.begin(), ker_f.end(),
                               [&](elem_t k) { return x.mul(sy, k) == x.mul(k, sy); });
    if (trivial) {
      dy.push_back(y);
      dx.push_back(sy);
    }
  }
  std::sort(dx.begin(), dx.end());
  return {dx, dy};
}

SplitExtension square_of(SplitExtension const& e) {
  auto tx = direct_product(e.total(), e.total());
  auto ty = direct_product(e.base(), e.base());
  auto tk = direct_product(e.kernel_group(), e.kernel_group());
  std::vector<elem_t> f(tx.group.order()), s(ty.group.order()), k(tk.group.order());
  for (elem_t p = 0; p < tx.group.order(); ++p)
    f[p] = ty.pair(e.f()(tx.first(p)), e.f()(tx.second(p)));
  for (elem_t p = 0; p < ty.group.order(); ++p)
    s[p] = tx.pair(e.s()(ty.first(p)), e.s()(ty.second(p)));
  for (elem_t p = 0; p < tk.group.order(); ++p)
    k[p] = tx.pair(e.k()(tk.first(p)), e.k()(tk.second(p)));
  Point pt(GroupHom(tx.group, ty.group, f), GroupHom(ty.group, tx.group, s));
  return SplitExtension(pt, GroupHom(tk.group, tx.group, k));
}

}  // namespace

TEST_CASE("commutes") {
  auto z6 = cyclic_group(6);
  for (auto const& h : homs(cyclic_group(3), z6))
    for (auto const& v : subgroups(z6)) CHECK(commutes(h, v).has_value());

  auto s3 = symmetric_group(3);
  auto a3 = find_subgroup(s3, 3, true);
  auto r12 = find_subgroup(s3, 2, false);
  CHECK_FALSE(commutes(a3.inclusion(), r12).has_value());
  CHECK(commutes(GroupHom::zero(cyclic_group(4), s3), r12).has_value());

  auto c = commutes(a3.inclusion(), a3);
  REQUIRE(c.has_value());
  for (elem_t x = 0; x < 3; ++x) CHECK(c->phi(x * 3) == a3.elements()[x]);
  for (elem_t i = 0; i < 3; ++i) CHECK(c->phi(i) == a3.elements()[i]);
}

TEST_CASE("cooperator and psi") {
  for (auto name : {"S3", "D4", "Q8", "A4"}) {
    auto x = builtin_group(name);
    auto z = center(x);
    auto rel = relation_extension(Congruence::indiscrete(x));
    auto c = commutes(z.inclusion(), Subgroup::whole(x));
    REQUIRE(c.has_value());
    auto psi = cooperator_to_psi(*c, rel);
    int nu = x.order();
    for (elem_t p = 0; p < psi.source().order(); ++p) {
      CHECK(rel.d1(psi(p)) == c->phi(p));
      CHECK(rel.ext.f()(psi(p)) == c->t(p / nu));
    }
    for (elem_t i = 0; i < nu; ++i) CHECK(psi(i) == rel.ext.k()(i));
    for (elem_t t = 0; t < z.order(); ++t) CHECK(psi(t * nu) == rel.ext.s()(c->t(t)));
    auto back = psi_to_cooperator(psi, rel, z.as_group());
    CHECK(back.phi == c->phi);
    CHECK(back.t == c->t);
  }

  auto s3 = symmetric_group(3);
  auto rel = relation_extension(Congruence::discrete(s3));
  for (auto const& t : homs(cyclic_group(2), s3)) {
    auto c = commutes(t, Subgroup::trivial(s3));
    REQUIRE(c.has_value());
    auto psi = cooperator_to_psi(*c, rel);
    CHECK(psi_to_cooperator(psi, rel, t.source()).phi == c->phi);
  }

  auto r12 = find_subgroup(s3, 2, false);
  auto c = commutes(GroupHom::zero(cyclic_group(2), s3), r12);
  REQUIRE(c.has_value());
  CHECK(kind_of([&] { cooperator_to_psi(*c, relation_extension(Congruence::indiscrete(s3))); }) ==
        ErrorKind::NotNormal);
}

TEST_CASE("centralizer_mono") {
  auto s3 = symmetric_group(3);
  CHECK(centralizer_mono(Subgroup::trivial(s3)).Z.order() == 6);
  auto a3 = find_subgroup(s3, 3, true);
  CHECK(centralizer_mono(a3).Z == a3);
  auto q8 = quaternion_group();
  CHECK(centralizer_mono(Subgroup::whole(q8)).Z.order() == 2);

  for (auto const& t : builtin_groups(16))
    for (auto const& v : subgroups(t)) CHECK(centralizer_mono(v).agree());

  auto const& cat = catalog16();
  for (auto const& v : subgroups(s3)) CHECK(verify_centralizer_universal(v, centralizer_mono(v), cat).ok());
  for (auto const& v : subgroups(builtin_group("D4")))
    CHECK(verify_centralizer_universal(v, centralizer_mono(v), cat).ok());
}

TEST_CASE("smith_centralizer") {
  auto s3 = symmetric_group(3);
  CHECK(smith_centralizer(Congruence::discrete(s3)).is_indiscrete());
  CHECK(smith_centralizer(Congruence::indiscrete(s3)).is_discrete());
  auto a3 = find_subgroup(s3, 3, true);
  CHECK(smith_centralizer(Congruence(a3)).normal_subgroup() == a3);

  for (auto const& g : builtin_groups(12))
    for (auto const& r : congruences(g)) {
      auto z = smith_centralizer(r);
      CHECK(z.normal_subgroup().elements() == smith_by_powerset(g, r.normal_subgroup().elements()));
      // the lower level of the distinctive relation of R ⇄ X
      if (g.order() <= 8)
        CHECK(distinctive_relation_by_scan(relation_extension(r).ext.point()).D_Y == z);
    }
}

TEST_CASE("distinctive_relation") {
  for (auto const& t : builtin_groups(8))
    for (auto const& x : builtin_groups(8)) {
      if (t.order() * x.order() > 16) continue;
      auto p = product_point(t, x);
      auto d = distinctive_relation(p);
      CHECK(d.D_Y.is_indiscrete());
      CHECK(d.D_X.normal_subgroup() == image(p.s()));
    }

  auto z2 = cyclic_group(2);
  auto id = distinctive_relation(Point(GroupHom::identity(z2), GroupHom::identity(z2)));
  CHECK(id.D_Y.is_indiscrete());

  auto sign = distinctive_relation(sign_point());
  CHECK(sign.D_X.is_discrete());
  CHECK(sign.D_Y.is_discrete());

  for (auto const& e : catalog16().extensions) {
    auto d = distinctive_relation(e.point());
    auto [dx, dy] = distinctive_by_action(e.point());
    CHECK(d.D_X.normal_subgroup().elements() == dx);
    CHECK(d.D_Y.normal_subgroup().elements() == dy);
  }
}

TEST_CASE("distinctive relation from the engine lift") {
  for (auto const& e : Catalog::build(6, 6).extensions) {
    auto sq = square_of(e);
    auto const& k = e.kernel_group();
    auto tk = direct_product(k, k);
    std::vector<elem_t> diag;
    for (elem_t a = 0; a < k.order(); ++a) diag.push_back(tk.pair(a, a));
    std::sort(diag.begin(), diag.end());
    auto lift = lift_into(sq, Subgroup(sq.kernel_group(), diag));

    auto d = distinctive_relation_by_lift(e.point());
    auto const n = e.total().order();
    auto const m = e.base().order();
    int rx = 0, ry = 0;
    auto const totals = image(lift.on_total());
    auto const bases = image(lift.on_base());
    for (auto p : totals.elements()) {
      CHECK(d.D_X.related(p / n, p % n));
      ++rx;
    }
    for (auto p : bases.elements()) {
      CHECK(d.D_Y.related(p / m, p % m));
      ++ry;
    }
    CHECK(rx == d.D_X.size());
    CHECK(ry == d.D_Y.size());
  }
}

TEST_CASE("eccentric and faithful") {
  auto const& cat = catalog16();
  CHECK(is_eccentric(sign_point()));
  CHECK(is_faithful(sign_point(), cat));

  auto z6 = semidirect(Action::trivial(cyclic_group(2), cyclic_group(3)));
  CHECK_FALSE(is_eccentric(z6.point()));
  CHECK_FALSE(is_faithful(z6.point(), cat));
  auto fv = faithful_verdict(z6.point(), cat);
  CHECK(fv.diagnostic.find("agree on kernels") != std::string::npos);

  auto over_trivial = semidirect(Action::trivial(FiniteGroup{}, cyclic_group(5)));
  CHECK(is_eccentric(over_trivial.point()));
  CHECK(is_faithful(over_trivial.point(), cat));

  for (auto const& e : cat.extensions) {
    auto v = eccentric_verdicts(e.point());
    CHECK(v.agree());
    auto f = faithful_verdict(e.point(), cat);
    CHECK(f.by_catalog == f.action_injective);
    CHECK(f.action_injective == v.action_injective);
  }
}

TEST_CASE("faithful_cover") {
  auto const& cat = catalog16();
  auto sign = faithful_cover(sign_point());
  CHECK(sign.cover.total().order() == 6);

  auto z6 = semidirect(Action::trivial(cyclic_group(2), cyclic_group(3)));
  auto c = faithful_cover(z6.point());
  CHECK(c.cover.total().order() == 3);
  CHECK(c.cover.base().order() == 1);
  CHECK(is_P_cartesian(c.map));

  auto z4 = cyclic_group(4);
  auto id = faithful_cover(Point(GroupHom::identity(z4), GroupHom::identity(z4)));
  CHECK(id.cover.total().order() == 1);

  for (auto const& e : cat.extensions) {
    auto cover = faithful_cover(e.point());
    CHECK(is_P_cartesian(cover.map));
    CHECK(is_faithful(cover.cover, cat));
  }
}

TEST_CASE("normcent_check") {
  auto s3 = symmetric_group(3);
  auto a3 = find_subgroup(s3, 3, true);
  CHECK(normcent_check(a3, Congruence(a3)));
  CHECK(normcent_check(Subgroup::trivial(s3), Congruence::discrete(s3)));
  auto z4 = cyclic_group(4);
  CHECK(normcent_check(Subgroup::whole(z4), Congruence::indiscrete(z4)));
  for (auto const& g : builtin_groups(16))
    for (auto const& n : normal_subgroups(g)) CHECK(normcent_check(n, Congruence(n)));
  CHECK(kind_of([&] { normcent_check(a3, Congruence::indiscrete(s3)); }) == ErrorKind::NotNormal);
}

TEST_CASE("acc_factor_check") {
  auto s3 = symmetric_group(3);
  auto a3 = find_subgroup(s3, 3, true);
  auto h = acc_factor_check(a3, a3.inclusion());
  CHECK(h.target().order() == 6);

  auto r12 = find_subgroup(s3, 2, false);
  auto zero = acc_factor_check(r12, GroupHom::zero(cyclic_group(3), s3));
  CHECK(zero.map() == std::vector<elem_t>{0, 0, 0});

  for (auto const& g : builtin_groups(12))
    for (auto const& v : subgroups(g)) {
      auto c = classical_centralizer(v);
      CHECK(compose(normalizer(v).w, acc_factor_check(v, c.inclusion())).map() == c.elements());
    }
  CHECK(kind_of([&] { acc_factor_check(r12, a3.inclusion()); }) == ErrorKind::NotCommuting);
}
