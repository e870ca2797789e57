#include <algorithm>

#include "catnorm/error.hpp"
#include "catnorm/finalg/construct.hpp"
#include "catnorm/topgrp/topgrp.hpp"
#include "doctest.h"

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

Subgroup find_subgroup(FiniteGroup const& g, int order, bool normal) {
  for (auto const& s : subgroups(g))
    if (s.order() == order && s.is_normal() == normal) return s;
  FAIL("no such subgroup");
  return Subgroup::trivial(g);
}

// Route (1) through the materialized product topology and literal preimages.
bool conjugation_map_oracle(TopSubgroup const& a, TopGroup const& b) {
  if (!a.sub.is_normal()) return false;
  auto const& g = b.group();
  auto prod = FiniteTopology::product(a.topology, b.topology());
  std::vector<elem_t> phi;
  for (int x = 0; x < a.sub.order(); ++x)
    for (elem_t y = 0; y < g.order(); ++y)
      phi.push_back(a.sub.local_index(g.conj(g.inv(y), a.sub.elements()[x])));
  return is_continuous(phi, prod, a.topology);
}

std::vector<FiniteTopology> sub_topologies(Subgroup const& s, TopGroup const& b) {
  return {FiniteTopology::discrete(s.order()), FiniteTopology::indiscrete(s.order()),
          b.topology().subspace(s.elements())};
}

}  // namespace

TEST_CASE("finite topologies") {
  auto d = FiniteTopology::discrete(4);
  auto i = FiniteTopology::indiscrete(4);
  CHECK(d.opens().size() == 16);
  CHECK(i.opens().size() == 2);
  CHECK(FiniteTopology::from_opens(4, d.opens()) == d);
  CHECK(FiniteTopology::from_opens(3, {0, 1, 3, 7}).opens() == std::vector<mask_t>{0, 1, 3, 7});
  CHECK(kind_of([] { FiniteTopology::from_opens(3, {0, 1, 2, 7}); }) == ErrorKind::NotTopology);
  CHECK(kind_of([] { FiniteTopology::from_opens(3, {1, 7}); }) == ErrorKind::NotTopology);
  CHECK(kind_of([] { FiniteTopology::from_opens(2, {0, 1}); }) == ErrorKind::NotTopology);

  auto p = FiniteTopology::product(FiniteTopology::from_opens(2, {0, 1, 3}), d);
  CHECK(p.size() == 8);
  CHECK(p.minimal_open(0) == 0b1);
  CHECK(p.minimal_open(4) == 0b10001);
  CHECK(d.subspace({1, 3}).is_discrete());
  CHECK(i.subspace({0, 2}).is_indiscrete());
}

TEST_CASE("is_continuous") {
  auto d = FiniteTopology::discrete(3);
  auto i = FiniteTopology::indiscrete(3);
  auto s = FiniteTopology::from_opens(3, {0, 1, 3, 7});
  std::vector<elem_t> id{0, 1, 2}, swap{1, 0, 2}, constant{2, 2, 2};
  for (auto const& t : {d, i, s}) {
    CHECK(is_continuous(id, t, t));
    CHECK(is_continuous(swap, t, i));
    CHECK(is_continuous(constant, t, d));
  }
  CHECK_FALSE(is_continuous(id, i, d));
  CHECK_FALSE(is_continuous(swap, s, s));
  // every map between the three, both tests agree
  for (auto const& src : {d, i, s})
    for (auto const& tgt : {d, i, s})
      for (int code = 0; code < 27; ++code) {
        std::vector<elem_t> f{code % 3, code / 3 % 3, code / 9};
        CHECK(is_continuous(f, src, tgt) == is_continuous_local(f, src, tgt));
      }
}

TEST_CASE("topological groups") {
  auto s3 = symmetric_group(3);
  CHECK(kind_of([&] {
          TopGroup(s3, FiniteTopology::from_opens(6, {0, 1, 63}));
        }) == ErrorKind::NotTopologicalGroup);
  // group topologies on a finite group are the coset topologies of normal subgroups
  for (auto const& g : builtin_groups(6)) {
    auto tops = topological_groups(g);
    CHECK(tops.size() == normal_subgroups(g).size());
    for (auto const& t : tops) {
      std::vector<elem_t> open_of_identity;
      for (elem_t x = 0; x < g.order(); ++x)
        if (t.topology().minimal_open(0) >> x & 1) open_of_identity.push_back(x);
      CHECK(Subgroup(g, open_of_identity).is_normal());
    }
  }
}

TEST_CASE("is_normal_topsub examples") {
  auto s3 = symmetric_group(3);
  TopGroup b(s3, FiniteTopology::discrete(6));
  auto a3 = find_subgroup(s3, 3, true);
  auto t2 = find_subgroup(s3, 2, false);
  CHECK(is_normal_topsub({a3, FiniteTopology::discrete(3)}, b));
  CHECK_FALSE(is_normal_topsub({t2, FiniteTopology::discrete(2)}, b));
  for (auto const& t : topological_groups(s3))
    CHECK(is_normal_topsub(TopSubgroup::with_subspace(Subgroup::whole(s3), t), t));

  // A3 indiscrete is normal in discrete S3; a non-central element in a discrete
  // subgroup of an indiscrete group breaks (b).
  CHECK(is_normal_topsub({a3, FiniteTopology::indiscrete(3)}, b));
  TopGroup ind(s3, FiniteTopology::indiscrete(6));
  CHECK_FALSE(condition_b({t2, FiniteTopology::discrete(2)}, ind));
  CHECK_FALSE(is_normal_topsub({a3, FiniteTopology::discrete(3)}, ind));

  CHECK(kind_of([&] { is_normal_topsub({a3, FiniteTopology::discrete(2)}, b); }) ==
        ErrorKind::NotSubgroup);
  auto z6 = cyclic_group(6);
  CHECK(kind_of([&] {
          is_normal_topsub({Subgroup::trivial(z6), FiniteTopology::discrete(1)}, b);
        }) == ErrorKind::NotSubgroup);
}

TEST_CASE("normality routes agree over the catalog") {
  int tuples = 0;
  for (auto const& g : builtin_groups(6))
    for (auto const& b : topological_groups(g))
      for (auto const& s : subgroups(g))
        for (auto const& t : sub_topologies(s, b)) {
          TopSubgroup a{s, t};
          auto v = normal_topsub_verdicts(a, b);
          CHECK(v.by_conjugation_map == v.by_opens);
          CHECK(v.by_conjugation_map == conjugation_map_oracle(a, b));
          ++tuples;
        }
  CHECK(tuples > 100);
}

TEST_CASE("top_normalizer") {
  auto s3 = symmetric_group(3);
  TopGroup disc(s3, FiniteTopology::discrete(6));
  TopGroup ind(s3, FiniteTopology::indiscrete(6));

  auto t2 = find_subgroup(s3, 2, false);
  auto n = top_normalizer({t2, FiniteTopology::discrete(2)}, disc);
  CHECK(n.sub.elements() == t2.elements());
  CHECK(n.topology.is_discrete());

  auto a3 = find_subgroup(s3, 3, true);
  auto na = top_normalizer({a3, FiniteTopology::indiscrete(3)}, ind);
  CHECK(na.sub.order() == 6);
  CHECK(na.topology.is_indiscrete());

  auto whole = top_normalizer(TopSubgroup::with_subspace(Subgroup::whole(s3), ind), ind);
  CHECK(whole.sub.order() == 6);

  CHECK(kind_of([&] { top_normalizer({t2, FiniteTopology::discrete(2)}, ind); }) ==
        ErrorKind::ConditionBFails);

  for (auto const& g : builtin_groups(6))
    for (auto const& b : topological_groups(g))
      for (auto const& s : subgroups(g))
        for (auto const& t : sub_topologies(s, b)) {
          TopSubgroup a{s, t};
          if (!condition_b(a, b)) continue;
          auto n = top_normalizer(a, b);
          auto classical = classical_normalizer(s);
          CHECK(n.sub.is_subset_of(classical));
          if (b.topology().is_discrete()) {
            CHECK(n.sub.elements() == classical.elements());
            CHECK(n.topology.is_discrete());
          }
          if (b.topology().is_indiscrete() && t.is_indiscrete())
            CHECK(n.sub.elements() == classical.elements());
          auto r = verify_top_normalizer(a, b, n);
          CHECK_MESSAGE(r.ok(), g.name());
        }
}
