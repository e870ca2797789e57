#include <algorithm>

#include "catnorm/error.hpp"
#include "catnorm/finalg/construct.hpp"
#include "catnorm/mset/mset.hpp"
#include "catnorm/normalizer/normalizer.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace catnorm;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (Error const& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvariantViolation;
}

FiniteMonoid z2_monoid() { return FiniteMonoid::from_table({{0, 1}, {1, 0}}, "Z2"); }

// M = {1, σ} acting on S3 by conjugation with a transposition.
InternalGroup sigma_on_s3(elem_t& transposition) {
  auto s3 = symmetric_group(3);
  transposition = 1;
  while (s3.element_order(transposition) != 2) ++transposition;
  std::vector<elem_t> act(12);
  for (elem_t t = 0; t < 6; ++t) {
    act[t] = t;
    act[6 + t] = s3.conj(transposition, t);
  }
  return InternalGroup(z2_monoid(), s3, act);
}

std::vector<bool> full(int n) { return std::vector<bool>(n, true); }

std::vector<bool> conjugation_pairs(FiniteGroup const& g, Subgroup const& u) {
  std::vector<bool> s(static_cast<std::size_t>(g.order()) * u.order());
  for (elem_t t = 0; t < g.order(); ++t)
    for (int i = 0; i < u.order(); ++i) s[t * u.order() + i] = u.contains(g.conj(t, u.elements()[i]));
  return s;
}

// Largest M-stable subgroup containing U in which U is normal, by powerset scan.
std::vector<elem_t> internal_normalizer_by_powerset(InternalGroup const& ig, Subgroup const& u) {
  auto const& g = ig.group();
  std::vector<elem_t> best;
  for (auto const& h : oracle::subgroups_by_powerset(g)) {
    std::vector<bool> mask(g.order(), false);
    for (auto x : h) mask[x] = true;
    if (!ig.is_stable(mask)) continue;
    bool ok = std::all_of(u.elements().begin(), u.elements().end(), [&](elem_t x) { return mask[x]; });
    for (auto t : h)
      for (auto x : u.elements()) ok = ok && u.contains(g.conj(t, x));
    if (ok && h.size() > best.size()) best = h;
  }
  return best;
}

}  // namespace

TEST_CASE("FiniteMonoid") {
  CHECK(FiniteMonoid().order() == 1);
  auto m = FiniteMonoid::from_table({{0, 0}, {0, 1}});  // identity is 1
  CHECK(m.mul(0, 1) == 1);
  CHECK(m.mul(1, 1) == 1);
  CHECK(kind_of([] { FiniteMonoid::from_table({{0, 1}, {1, 1}, {0, 0}}); }) == ErrorKind::MalformedTable);
  CHECK(kind_of([] { FiniteMonoid::from_table({{1, 1}, {1, 1}}); }) == ErrorKind::NoIdentity);
  CHECK(kind_of([] { FiniteMonoid::from_table({{0, 1, 2}, {1, 2, 1}, {2, 1, 1}}); }) ==
        ErrorKind::NotAssociative);

  CHECK(monoids_of_order(1).size() == 1);
  CHECK(monoids_of_order(2).size() == 2);
  CHECK(monoids_of_order(3).size() == 7);
}

TEST_CASE("InternalGroup") {
  auto z3 = cyclic_group(3);
  auto ig = InternalGroup::trivial_action(z2_monoid(), z3);
  CHECK(ig.apply(1, 2) == 2);
  // inversion is an automorphism of order 2
  CHECK_NOTHROW(InternalGroup(z2_monoid(), z3, {0, 1, 2, 0, 2, 1}));
  // not an endomorphism
  CHECK(kind_of([&] { InternalGroup(z2_monoid(), z3, {0, 1, 2, 0, 2, 2}); }) == ErrorKind::NotMonoidAction);
  // σ² = 1 fails for the zero map
  CHECK(kind_of([&] { InternalGroup(z2_monoid(), z3, {0, 1, 2, 0, 0, 0}); }) == ErrorKind::NotMonoidAction);

  CHECK(internal_groups_over(z2_monoid(), z3).size() == 2);
  CHECK(internal_groups_over(FiniteMonoid(), symmetric_group(3)).size() == 1);

  elem_t tr = 0;
  auto sig = sigma_on_s3(tr);
  elem_t moved = 1;
  while (sig.group().element_order(moved) != 2 || sig.apply(1, moved) == moved) ++moved;
  CHECK(kind_of([&] { MSubgroup(sig, Subgroup(sig.group(), {0, moved})); }) == ErrorKind::NotStable);
}

TEST_CASE("pi_along_projection") {
  auto s3 = symmetric_group(3);
  auto trivial_m = InternalGroup::trivial_action(FiniteMonoid(), s3);
  for (auto const& u : subgroups(s3)) {
    auto whole = pi_along_projection(trivial_m, u, full(6 * u.order()));
    CHECK(std::count(whole.begin(), whole.end(), true) == 6);

    auto empty = pi_along_projection(trivial_m, u, std::vector<bool>(6 * u.order(), false));
    CHECK(std::count(empty.begin(), empty.end(), true) == 0);

    auto pi = pi_along_projection(trivial_m, u, conjugation_pairs(s3, u));
    for (elem_t t = 0; t < 6; ++t) CHECK(pi[t] == u.normalized_by(t));
    CHECK(verify_adjunction(trivial_m, u, conjugation_pairs(s3, u)).ok());
  }

  elem_t tr = 0;
  auto sig = sigma_on_s3(tr);
  auto u = Subgroup(s3, {0, tr});
  std::vector<bool> s(12, false);
  s[tr * 2 + 0] = true;  // (tr, e) alone is not σ-stable unless σ fixes tr
  s[0] = true;
  CHECK_NOTHROW(pi_along_projection(sig, u, s));
  std::vector<bool> bad(12, false);
  for (elem_t t = 0; t < 6; ++t)
    if (sig.apply(1, t) != t) {
      bad[t * 2] = true;
      break;
    }
  CHECK(kind_of([&] { pi_along_projection(sig, u, bad); }) == ErrorKind::NotStable);
}

TEST_CASE("adjunction over small monoids") {
  int checked = 0;
  for (int n = 1; n <= 3; ++n)
    for (auto const& m : monoids_of_order(n))
      for (auto const& t : builtin_groups(6))
        for (auto const& ig : internal_groups_over(m, t))
          for (auto const& v : m_subgroups(ig)) {
            auto const& u = v.subgroup();
            CHECK(verify_adjunction(ig, u, conjugation_pairs(t, u)).ok());
            CHECK(verify_adjunction(ig, u, full(t.order() * u.order())).ok());
            ++checked;
          }
  CHECK(checked > 100);
}

TEST_CASE("internal_normalizer") {
  for (auto const& t : builtin_groups(12)) {
    auto ig = InternalGroup::trivial_action(FiniteMonoid(), t);
    for (auto const& v : m_subgroups(ig)) {
      auto res = internal_normalizer(v);
      CHECK(res.X.subgroup() == normalizer(v.subgroup()).N);
    }
  }

  auto s3 = symmetric_group(3);
  auto whole = internal_normalizer(MSubgroup(InternalGroup::trivial_action(z2_monoid(), s3), Subgroup::whole(s3)));
  CHECK(whole.X.subgroup().order() == 6);
  CHECK(whole.R_v.is_indiscrete());

  elem_t tr = 0;
  auto sig = sigma_on_s3(tr);
  auto r12 = internal_normalizer(MSubgroup(sig, Subgroup(s3, {0, tr})));
  CHECK(r12.X.subgroup().order() == 2);
  for (auto const& v : m_subgroups(sig)) {
    auto res = internal_normalizer(v);
    CHECK(res.X.subgroup().elements() == internal_normalizer_by_powerset(sig, v.subgroup()));
    CHECK(verify_internal_lemma(v).ok());
  }
}

TEST_CASE("internal normalizer universality") {
  auto m = z2_monoid();
  std::vector<InternalGroup> sources;
  for (auto const& g : builtin_groups(6))
    for (auto& ig : internal_groups_over(m, g)) sources.push_back(std::move(ig));

  elem_t tr = 0;
  auto sig = sigma_on_s3(tr);
  for (auto const& v : m_subgroups(sig)) {
    auto rep = verify_internal_universal(internal_normalizer(v), sources);
    CHECK(rep.ok());
  }
  for (auto const& t : builtin_groups(8))
    for (auto const& ig : internal_groups_over(m, t))
      for (auto const& v : m_subgroups(ig)) {
        auto res = internal_normalizer(v);
        CHECK(res.X.subgroup().is_subset_of(normalizer(v.subgroup()).N));
        CHECK(res.X.subgroup().elements() == internal_normalizer_by_powerset(ig, v.subgroup()));
        CHECK(verify_internal_universal(res, sources).ok());
      }
}
