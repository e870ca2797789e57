#include "catnorm/app/suites.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "catnorm/centrality/centrality.hpp"
#include "catnorm/error.hpp"
#include "catnorm/finalg/construct.hpp"
#include "catnorm/mset/mset.hpp"
#include "catnorm/normalizer/normalizer.hpp"
#include "catnorm/ptcat/cartesian.hpp"
#include "catnorm/topgrp/topgrp.hpp"

namespace catnorm {

namespace {

std::string set_label(std::vector<elem_t> const& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

std::string label(Subgroup const& s) { return set_label(s.elements()); }

std::string extension_label(std::size_t i, SplitExtension const& e) {
  return "E" + std::to_string(i) + "(" + e.kernel_group().name() + " by " + e.base().name() + ")";
}

Report make(std::string name, std::string bound) {
  Report r;
  r.name = std::move(name);
  r.bound = std::move(bound);
  return r;
}

std::string orders(int n) { return "order <= " + std::to_string(n); }

// Runs fn, turning a thrown Error into a failing case.
template <class Fn>
void guarded(Report& r, std::string const& id, Fn&& fn) {
  try {
    fn();
  } catch (Error const& e) {
    r.add(id, false, e.what());
  }
}

Report fibrancy(int n) { return fibrancy_suite(Catalog::build(n, n)); }

Report monicity(int n) {
  auto r = make("monicity", "catalog groups of " + orders(n));
  for (auto const& t : builtin_groups(n))
    for (auto const& u : subgroups(t)) {
      auto id = t.name() + "/" + label(u);
      guarded(r, id, [&] {
        auto res = normalizer(u);
        r.add(id, res.w.is_injective(), res.w.is_injective() ? "" : "w not injective");
      });
    }
  return r;
}

Report normalizer_universal(int n) {
  auto cat = Catalog::build(n, n);
  auto r = make("normalizer-universal", "catalog groups and homs of " + orders(n));
  for (auto const& t : cat.groups)
    for (auto const& u : subgroups(t)) {
      auto prefix = t.name() + "/" + label(u) + "/";
      guarded(r, prefix + "run", [&] {
        auto rep = verify_normalizer_universal(u, normalizer(u), cat);
        for (auto const& c : rep.cases) r.add(prefix + c.id, c.pass, c.witness);
      });
    }
  return r;
}

Report eccentric_faithful(int n) {
  auto cat = Catalog::build(n, n);
  auto r = make("eccentric-faithful", "points with total " + orders(n));
  for (std::size_t i = 0; i < cat.extensions.size(); ++i) {
    auto const& e = cat.extensions[i];
    auto id = extension_label(i, e);
    guarded(r, id, [&] {
      auto v = eccentric_verdicts(e.point());
      auto f = faithful_verdict(e.point(), cat);
      bool ok = v.agree() && f.by_catalog == f.action_injective && f.action_injective == v.action_injective;
      std::string why;
      if (!ok)
        why = "distinctive " + std::to_string(v.distinctive_discrete) + ", preimage " +
              std::to_string(v.preimage_discrete) + ", action " + std::to_string(v.action_injective) +
              ", catalog " + std::to_string(f.by_catalog) + "; " + f.diagnostic;
      r.add(id, ok, why);
    });
  }
  return r;
}

Report product_distinctive(int n) {
  auto r = make("product-distinctive", "T, X of " + orders(n));
  auto groups = builtin_groups(n);
  for (auto const& t : groups)
    for (auto const& x : groups) {
      auto id = t.name() + "x" + x.name();
      guarded(r, id, [&] {
        auto e = product_extension(t, x);
        auto d = distinctive_relation(e.point());
        bool ok = d.D_Y.is_indiscrete();
        std::string why = ok ? "" : "D_Y is not the indiscrete relation";
        // the lift relates (t, x) and (t', x') exactly when x = x'
        auto const& g = e.total();
        for (elem_t a = 0; ok && a < g.order(); ++a)
          for (elem_t b = 0; ok && b < g.order(); ++b)
            if (d.D_X.related(a, b) != (e.kernel_part(a) == e.kernel_part(b))) {
              ok = false;
              why = "D_X differs at (" + std::to_string(a) + "," + std::to_string(b) + ")";
            }
        r.add(id, ok, why);
      });
    }
  return r;
}

Report faithful_covers(int n) {
  auto cat = Catalog::build(n, n);
  auto r = make("faithful-cover", "points with total " + orders(n));
  for (std::size_t i = 0; i < cat.extensions.size(); ++i) {
    auto const& e = cat.extensions[i];
    auto id = extension_label(i, e);
    guarded(r, id, [&] {
      auto c = faithful_cover(e.point());
      bool cart = is_P_cartesian(c.map);
      auto f = faithful_verdict(c.cover, cat);
      bool ok = cart && f.by_catalog && f.action_injective;
      r.add(id, ok, ok ? "" : (cart ? "cover not faithful: " + f.diagnostic : "cover map not cartesian"));
    });
  }
  return r;
}

Report centralizers(int n) {
  auto r = make("centralizers", "normal subgroups of catalog groups of " + orders(n));
  for (auto const& t : builtin_groups(n))
    for (auto const& u : normal_subgroups(t)) {
      auto id = t.name() + "/" + label(u);
      guarded(r, id, [&] {
        Congruence rel(u);
        auto c = centralizer_mono(u);
        auto z = smith_centralizer(rel);
        std::string why;
        if (!c.agree()) why = "centralizer routes disagree";
        else if (!(z.normal_subgroup() == c.Z)) why = "normalization of Z[R] is " + label(z.normal_subgroup());
        else if (!normcent_check(u, rel)) why = "centralizer not normal";
        r.add(id, why.empty(), why);
      });
    }
  return r;
}

Report pullback_stability(int n, std::uint64_t seed) {
  auto cat = Catalog::build(n, n);
  auto r = make("pullback-stability", std::to_string(kPullbackSamples) + " samples over split extensions of total " +
                                          orders(n) + ", seed " + std::to_string(seed));
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t size) { return static_cast<std::size_t>(rng() % size); };
  for (int s = 0; s < kPullbackSamples; ++s) {
    std::size_t i = pick(cat.extensions.size());
    auto const& e = cat.extensions[i];
    auto subs = subgroups(e.kernel_group());
    auto const& v = subs[pick(subs.size())];
    std::vector<FiniteGroup> bases;
    for (auto const& y : cat.groups)
      if (y.order() * e.kernel_group().order() <= n) bases.push_back(y);
    auto const& y = bases[pick(bases.size())];
    auto hs = homs(y, e.base());
    auto const& p = hs[pick(hs.size())];
    auto id = "sample" + std::to_string(s) + "/" + extension_label(i, e) + "/" + label(v) + "/" + y.name() + "->" +
              e.base().name() + set_label(p.map());
    guarded(r, id, [&] {
      auto lift = lift_into(e, v);
      auto square = pullback_point(p, e.point());
      auto pulled = pullback_se_along_cartesian(lift, square.cartesian);
      auto rep = k_cartesian_report(pulled, cat);
      r.add(id, rep.cartesian, rep.witness);
    });
  }
  return r;
}

std::vector<bool> conjugation_relation(FiniteGroup const& g, Subgroup const& u, bool inverse) {
  std::vector<bool> s(static_cast<std::size_t>(g.order()) * u.order());
  for (elem_t t = 0; t < g.order(); ++t)
    for (int i = 0; i < u.order(); ++i) {
      elem_t x = u.elements()[i];
      s[t * u.order() + i] = u.contains(inverse ? g.conj(g.inv(t), x) : g.conj(t, x));
    }
  return s;
}

Report mset(int n_reduction, int n_adjunction) {
  auto r = make("mset", "trivial M over catalog groups of " + orders(n_reduction) + "; |M| <= 3 over " +
                            orders(n_adjunction));
  for (auto const& t : builtin_groups(n_reduction)) {
    auto ig = InternalGroup::trivial_action(FiniteMonoid(), t);
    for (auto const& v : m_subgroups(ig)) {
      auto id = "reduction/" + t.name() + "/" + label(v.subgroup());
      guarded(r, id, [&] {
        auto x = internal_normalizer(v).X.subgroup();
        bool ok = x == classical_normalizer(v.subgroup());
        r.add(id, ok, ok ? "" : "X is " + label(x));
      });
    }
  }
  for (int order = 1; order <= 3; ++order)
    for (auto const& m : monoids_of_order(order))
      for (auto const& t : builtin_groups(n_adjunction)) {
        auto actions = internal_groups_over(m, t);
        for (std::size_t a = 0; a < actions.size(); ++a)
          for (auto const& v : m_subgroups(actions[a])) {
            auto const& u = v.subgroup();
            auto const size = static_cast<std::size_t>(t.order()) * u.order();
            std::vector<std::pair<std::string, std::vector<bool>>> relations{
                {"conj", conjugation_relation(t, u, false)},
                {"conj-inverse", conjugation_relation(t, u, true)},
                {"full", std::vector<bool>(size, true)},
                {"empty", std::vector<bool>(size, false)}};
            for (auto const& [name, s] : relations) {
              auto id = "adjunction/" + m.name() + "/" + t.name() + "/action" + std::to_string(a) + "/" + label(u) +
                        "/" + name;
              guarded(r, id, [&] {
                auto rep = verify_adjunction(actions[a], u, s);
                auto bad = std::find_if(rep.cases.begin(), rep.cases.end(), [](auto const& c) { return !c.pass; });
                r.add(id, rep.ok(), bad == rep.cases.end() ? "" : bad->id + ": " + bad->witness);
              });
            }
          }
      }
  return r;
}

Report topological(int n) {
  auto r = make("topological", "coset topologies on catalog groups of " + orders(n));
  for (auto const& g : builtin_groups(n)) {
    auto tops = topological_groups(g);
    for (std::size_t ti = 0; ti < tops.size(); ++ti) {
      auto const& b = tops[ti];
      for (auto const& s : subgroups(g)) {
        std::vector<std::pair<std::string, FiniteTopology>> subs{
            {"discrete", FiniteTopology::discrete(s.order())},
            {"indiscrete", FiniteTopology::indiscrete(s.order())},
            {"subspace", b.topology().subspace(s.elements())}};
        for (auto const& [name, t] : subs) {
          auto id = "routes/" + g.name() + "/top" + std::to_string(ti) + "/" + label(s) + "/" + name;
          guarded(r, id, [&] {
            auto v = normal_topsub_verdicts({s, t}, b);
            r.add(id, v.by_conjugation_map == v.by_opens,
                  v.by_conjugation_map == v.by_opens ? "" : "continuity and open-set routes disagree");
          });
        }
        if (b.topology().is_discrete()) {
          auto id = "discrete-normalizer/" + g.name() + "/" + label(s);
          guarded(r, id, [&] {
            auto n_top = top_normalizer({s, FiniteTopology::discrete(s.order())}, b);
            auto classical = classical_normalizer(s);
            bool ok = n_top.sub == classical && n_top.topology.is_discrete();
            r.add(id, ok, ok ? "" : "N is " + label(n_top.sub));
          });
        }
      }
    }
  }
  return r;
}

struct SuiteInfo {
  int ceiling;
};

std::map<std::string, SuiteInfo> const& infos() {
  static std::map<std::string, SuiteInfo> const m{
      {"fibrancy", {12}},         {"monicity", {12}},     {"normalizer-universal", {12}},
      {"eccentric-faithful", {16}}, {"product-distinctive", {8}}, {"faithful-cover", {16}},
      {"centralizers", {16}},     {"pullback-stability", {12}}, {"mset", {16}},
      {"topological", {6}},
  };
  return m;
}

}  // namespace

std::vector<std::string> const& suite_names() {
  static std::vector<std::string> const names{
      "fibrancy",       "monicity",     "normalizer-universal", "eccentric-faithful", "product-distinctive",
      "faithful-cover", "centralizers", "pullback-stability",   "mset",               "topological"};
  return names;
}

int suite_bound(std::string const& name, int max_order) {
  auto it = infos().find(name);
  if (it == infos().end()) throw Error(ErrorKind::UnknownSuite, name);
  return std::min(max_order, it->second.ceiling);
}

Report run_suite(std::string const& name, int max_order, std::uint64_t seed) {
  int n = suite_bound(name, max_order);
  if (name == "fibrancy") return fibrancy(n);
  if (name == "monicity") return monicity(n);
  if (name == "normalizer-universal") return normalizer_universal(n);
  if (name == "eccentric-faithful") return eccentric_faithful(n);
  if (name == "product-distinctive") return product_distinctive(n);
  if (name == "faithful-cover") return faithful_covers(n);
  if (name == "centralizers") return centralizers(n);
  if (name == "pullback-stability") return pullback_stability(n, seed);
  if (name == "mset") return mset(n, std::min(n, 8));
  return topological(n);
}

}  // namespace catnorm
