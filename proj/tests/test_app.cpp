#include "catnorm/app/commands.hpp"
#include "catnorm/app/suites.hpp"
#include "catnorm/error.hpp"
#include "catnorm/finalg/construct.hpp"
#include "doctest.h"

using namespace catnorm;
using io::json;

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

elem_t transposition(FiniteGroup const& g) {
  for (elem_t x = 1; x < g.order(); ++x)
    if (g.element_order(x) == 2) return x;
  return 0;
}

}  // namespace

TEST_CASE("records round trip") {
  for (auto const& g : builtin_groups(8)) {
    auto back = io::group_from_json(io::group_to_json(g), "g");
    CHECK(back == g);
    CHECK(back.name() == g.name());
    for (auto const& s : subgroups(g)) CHECK(io::subgroup_from_json(g, io::subgroup_to_json(s), "s") == s);
  }
  auto e = product_extension(cyclic_group(3), cyclic_group(2));
  auto p = io::point_from_json(io::point_to_json(e.point()), "p");
  CHECK(p.f() == e.f());
  CHECK(p.s() == e.s());

  auto t = FiniteTopology::from_opens(3, {0, 1, 3, 7});
  CHECK(io::topology_to_json(t) == json::parse("[[],[0],[0,1],[0,1,2]]"));
  CHECK(io::topology_from_json({0, 1, 2}, io::topology_to_json(t), "t") == t);
  CHECK(io::topology_to_json(t, {4, 5, 9})[2] == json::parse("[4,5]"));

  auto m = monoids_of_order(3)[1];
  CHECK(io::monoid_from_json(io::monoid_to_json(m), "m") == m);

  // keys come out sorted
  CHECK(io::canonical(json{{"b", 1}, {"a", {{"d", 2}, {"c", 3}}}}) == R"({"a":{"c":3,"d":2},"b":1})");
}

TEST_CASE("record errors") {
  CHECK(kind_of([] { io::group_from_json(json::parse(R"({"table":[[0]]})"), "g"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { io::group_from_json(json::parse(R"({"order":2,"table":[[0,1]]})"), "g"); }) ==
        ErrorKind::ParseError);
  CHECK(kind_of([] { io::group_from_json(json::parse(R"({"order":2,"table":[[0,1],[1,1]]})"), "g"); }) ==
        ErrorKind::NoInverse);
  CHECK(kind_of([] { io::group_from_json(json::parse(R"({"order":2,"table":[[0,5],[1,0]]})"), "g"); }) ==
        ErrorKind::MalformedTable);
  // identity at label 1
  CHECK(kind_of([] { io::group_from_json(json::parse(R"({"order":2,"table":[[1,0],[0,1]]})"), "g"); }) ==
        ErrorKind::ParseError);
  auto z4 = cyclic_group(4);
  CHECK(kind_of([&] { io::subgroup_from_json(z4, json::parse("[0,1]"), "s"); }) == ErrorKind::NotSubgroup);
  CHECK(kind_of([&] { io::subgroup_from_json(z4, json::parse("[0,7]"), "s"); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { io::hom_from_json(z4, z4, json::parse("[0,1]"), "h"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { io::topology_from_json({0, 1}, json::parse("[[0],[0,1]]"), "t"); }) ==
        ErrorKind::NotTopology);
  CHECK(kind_of([] { io::parse_file("/nonexistent/input.json"); }) == ErrorKind::ParseError);
}

TEST_CASE("cmd_compute") {
  auto s3 = symmetric_group(3);
  elem_t tr = transposition(s3);
  json in{{"group", io::group_to_json(s3)}, {"subgroup", {0, tr}}};

  auto n = cmd_compute("normalizer", in);
  CHECK(n["order"] == 2);
  CHECK(n["w_injective"] == true);
  CHECK(n["kind"] == "normalizer");

  in["subgroup"] = {0};
  auto c = cmd_compute("centralizer", in);
  CHECK(c["order"] == 6);
  CHECK(c["routes_agree"] == true);

  json smith{{"group", io::group_to_json(s3)}, {"normal", json::array({0})}};
  CHECK(cmd_compute("smith", smith)["order"] == 6);

  auto sign = semidirect(Action(cyclic_group(2), cyclic_group(3), automorphism_group(cyclic_group(3)),
                                GroupHom(cyclic_group(2), automorphism_group(cyclic_group(3)).group, {0, 1})));
  json pt{{"point", io::point_to_json(sign.point())}};
  auto d = cmd_compute("distinctive", pt);
  CHECK(d["eccentric"] == true);
  CHECK(d["D_X"] == json::parse("[0]"));
  auto fc = cmd_compute("faithful-cover", pt);
  CHECK(fc["cartesian"] == true);
  CHECK(fc["faithful"] == true);

  json top{{"group", io::group_to_json(s3)},
           {"topology", io::topology_to_json(FiniteTopology::discrete(6))},
           {"subgroup", {0, tr}}};
  auto tn = cmd_compute("top-normalizer", top);
  CHECK(tn["order"] == 2);
  CHECK(tn["A_normal_in_B"] == false);

  json ms{{"monoid", io::monoid_to_json(FiniteMonoid())},
          {"group", io::group_to_json(s3)},
          {"action", {{0, 1, 2, 3, 4, 5}}},
          {"subgroup", {0, tr}}};
  CHECK(cmd_compute("mset-normalizer", ms)["order"] == 2);

  CHECK(kind_of([&] { cmd_compute("nonsense", in); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { cmd_compute("normalizer", json{{"group", 3}}); }) == ErrorKind::ParseError);
  ms["action"] = {{0, 1}};
  CHECK(kind_of([&] { cmd_compute("mset-normalizer", ms); }) == ErrorKind::ParseError);
}

TEST_CASE("cmd_suite") {
  SuiteConfig empty;
  auto out = cmd_suite(empty);
  CHECK(out.ok);
  CHECK(json::parse(out.document)["suites"].empty());

  SuiteConfig bad;
  bad.suites = {"monicity", "no-such-suite"};
  CHECK(kind_of([&] { cmd_suite(bad); }) == ErrorKind::UnknownSuite);
  bad.suites = {"monicity"};
  bad.format = "xml";
  CHECK(kind_of([&] { cmd_suite(bad); }) == ErrorKind::ParseError);

  SuiteConfig cfg;
  cfg.max_order = 6;
  cfg.suites = {"monicity", "topological", "pullback-stability"};
  cfg.seed = 7;
  auto a = cmd_suite(cfg);
  auto b = cmd_suite(cfg);
  CHECK(a.ok);
  CHECK(a.document == b.document);
  auto doc = json::parse(a.document);
  CHECK(doc["suites"].size() == 3);
  CHECK(doc["suites"][2]["passed"] == kPullbackSamples);

  cfg.seed = 8;
  CHECK(cmd_suite(cfg).document != a.document);
  cfg.format = "text";
  CHECK(cmd_suite(cfg).document.find("monicity [") == 0);

  CHECK(split_list("a,,b,") == std::vector<std::string>{"a", "b"});
  CHECK(suite_bound("topological", 16) == 6);
  CHECK(suite_bound("fibrancy", 4) == 4);
}
