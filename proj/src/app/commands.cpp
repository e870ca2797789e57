#include "catnorm/app/commands.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

#include "catnorm/app/suites.hpp"
#include "catnorm/centrality/centrality.hpp"
#include "catnorm/error.hpp"
#include "catnorm/mset/mset.hpp"
#include "catnorm/normalizer/normalizer.hpp"
#include "catnorm/ptcat/cartesian.hpp"
#include "catnorm/topgrp/topgrp.hpp"

namespace catnorm {

using io::json;

namespace {

json const& need(json const& j, char const* key) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "input: expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorKind::ParseError, std::string("input: missing field '") + key + "'");
  return *it;
}

// Elements of `sub` (local labels of a subgroup) in ambient labels.
std::vector<elem_t> ambient(Subgroup const& owner, Subgroup const& sub) {
  std::vector<elem_t> out;
  for (elem_t x : sub.elements()) out.push_back(owner.elements()[x]);
  return out;
}

json normalizer_doc(json const& in) {
  auto g = io::group_from_json(need(in, "group"), "group");
  auto u = io::subgroup_from_json(g, need(in, "subgroup"), "subgroup");
  auto res = normalizer(u);
  return {{"N", io::subgroup_to_json(res.N)},
          {"order", res.N.order()},
          {"w", io::hom_to_json(res.w)},
          {"w_injective", res.w.is_injective()},
          {"R_v", ambient(res.N, res.R_v.normal_subgroup())}};
}

json centralizer_doc(json const& in) {
  auto g = io::group_from_json(need(in, "group"), "group");
  auto u = io::subgroup_from_json(g, need(in, "subgroup"), "subgroup");
  auto c = centralizer_mono(u);
  return {{"Z", io::subgroup_to_json(c.Z)}, {"order", c.Z.order()}, {"routes_agree", c.agree()}};
}

json smith_doc(json const& in) {
  auto g = io::group_from_json(need(in, "group"), "group");
  auto n = io::subgroup_from_json(g, need(in, "normal"), "normal");
  auto z = smith_centralizer(Congruence(n));
  return {{"Z", io::subgroup_to_json(z.normal_subgroup())}, {"order", z.normal_subgroup().order()}};
}

json distinctive_doc(json const& in) {
  auto p = io::point_from_json(need(in, "point"), "point");
  auto d = distinctive_relation(p);
  auto v = eccentric_verdicts(p);
  return {{"D_X", io::subgroup_to_json(d.D_X.normal_subgroup())},
          {"D_Y", io::subgroup_to_json(d.D_Y.normal_subgroup())},
          {"eccentric", v.distinctive_discrete},
          {"verdicts_agree", v.agree()}};
}

json faithful_cover_doc(json const& in) {
  auto p = io::point_from_json(need(in, "point"), "point");
  auto c = faithful_cover(p);
  return {{"cover", io::point_to_json(c.cover)},
          {"map", {{"on_total", io::hom_to_json(c.map.on_total())}, {"on_base", io::hom_to_json(c.map.on_base())}}},
          {"cartesian", is_P_cartesian(c.map)},
          {"faithful", eccentric_verdicts(c.cover).action_injective}};
}

json top_normalizer_doc(json const& in) {
  auto g = io::group_from_json(need(in, "group"), "group");
  std::vector<elem_t> all(g.order());
  for (elem_t x = 0; x < g.order(); ++x) all[x] = x;
  TopGroup b(g, io::topology_from_json(all, need(in, "topology"), "topology"));
  auto s = io::subgroup_from_json(g, need(in, "subgroup"), "subgroup");
  auto sub_top = in.contains("subtopology")
                     ? io::topology_from_json(s.elements(), in["subtopology"], "subtopology")
                     : b.topology().subspace(s.elements());
  TopSubgroup a{s, sub_top};
  bool normal = is_normal_topsub(a, b);
  auto n = top_normalizer(a, b);
  return {{"N", io::subgroup_to_json(n.sub)},
          {"order", n.sub.order()},
          {"topology", io::topology_to_json(n.topology, n.sub.elements())},
          {"A_normal_in_B", normal}};
}

json mset_normalizer_doc(json const& in) {
  auto m = io::monoid_from_json(need(in, "monoid"), "monoid");
  auto g = io::group_from_json(need(in, "group"), "group");
  auto const& act_j = need(in, "action");
  auto bad_action = [] { return Error(ErrorKind::ParseError, "action: expected |M| rows of |T| labels"); };
  if (!act_j.is_array() || static_cast<int>(act_j.size()) != m.order()) throw bad_action();
  std::vector<elem_t> act;
  for (auto const& row : act_j) {
    if (!row.is_array() || static_cast<int>(row.size()) != g.order()) throw bad_action();
    for (auto const& x : row) {
      if (!x.is_number_integer() || x.get<int>() < 0 || x.get<int>() >= g.order()) throw bad_action();
      act.push_back(x.get<elem_t>());
    }
  }
  InternalGroup ig(m, g, act);
  MSubgroup v(ig, io::subgroup_from_json(g, need(in, "subgroup"), "subgroup"));
  auto res = internal_normalizer(v);
  auto to_list = [](std::vector<bool> const& mask) {
    std::vector<elem_t> xs;
    for (elem_t x = 0; x < static_cast<elem_t>(mask.size()); ++x)
      if (mask[x]) xs.push_back(x);
    return xs;
  };
  return {{"X", io::subgroup_to_json(res.X.subgroup())},
          {"order", res.X.subgroup().order()},
          {"X_v", to_list(res.X_v)},
          {"X_tilde_v", to_list(res.X_tilde_v)}};
}

}  // namespace

std::vector<std::string> const& compute_kinds() {
  static std::vector<std::string> const kinds{"normalizer",     "centralizer",    "smith",          "distinctive",
                                              "faithful-cover", "top-normalizer", "mset-normalizer"};
  return kinds;
}

json cmd_compute(std::string const& kind, json const& input) {
  json out;
  try {
    if (kind == "normalizer") out = normalizer_doc(input);
    else if (kind == "centralizer") out = centralizer_doc(input);
    else if (kind == "smith") out = smith_doc(input);
    else if (kind == "distinctive") out = distinctive_doc(input);
    else if (kind == "faithful-cover") out = faithful_cover_doc(input);
    else if (kind == "top-normalizer") out = top_normalizer_doc(input);
    else if (kind == "mset-normalizer") out = mset_normalizer_doc(input);
    else throw Error(ErrorKind::ParseError, "unknown kind '" + kind + "'");
  } catch (json::exception const& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  out["kind"] = kind;
  return out;
}

std::vector<std::string> split_list(std::string const& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, ','))
    if (!piece.empty()) out.push_back(piece);
  return out;
}

SuiteOutput cmd_suite(SuiteConfig const& cfg) {
  if (cfg.max_order < 1) throw Error(ErrorKind::ParseError, "max-order must be at least 1");
  if (cfg.format != "json" && cfg.format != "text")
    throw Error(ErrorKind::ParseError, "format must be json or text");
  for (auto const& name : cfg.suites) suite_bound(name, cfg.max_order);  // rejects unknown names

  SuiteOutput out;
  json suites = json::array();
  std::ostringstream text;
  int passed = 0, failed = 0;
  for (auto const& name : cfg.suites) {
    auto start = std::chrono::steady_clock::now();
    auto rep = run_suite(name, cfg.max_order, cfg.seed);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << name << ": " << rep.passed() << "/" << rep.cases.size() << " in " << secs << " s\n";
    passed += rep.passed();
    failed += rep.failed();
    out.ok = out.ok && rep.ok();
    suites.push_back(io::report_to_json(rep));
    text << name << " [" << rep.bound << "]: " << rep.passed() << " passed, " << rep.failed() << " failed\n";
    for (auto const& c : rep.cases)
      if (!c.pass) text << "  FAIL " << c.id << ": " << c.witness << "\n";
  }
  if (cfg.format == "json") {
    json doc{{"max_order", cfg.max_order}, {"seed", cfg.seed}, {"passed", passed},
             {"failed", failed},           {"suites", suites}};
    out.document = io::canonical(doc) + "\n";
  } else {
    text << "total: " << passed << " passed, " << failed << " failed\n";
    out.document = text.str();
  }
  return out;
}

}  // namespace catnorm
