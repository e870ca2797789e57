#include "catnorm/io/records.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "catnorm/error.hpp"

namespace catnorm::io {

namespace {

[[noreturn]] void parse_error(std::string const& where, std::string const& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

json const& field(json const& j, char const* key, std::string const& where) {
  if (!j.is_object()) parse_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_error(where, std::string("missing field '") + key + "'");
  return *it;
}

std::vector<elem_t> int_list(json const& j, std::string const& where) {
  if (!j.is_array()) parse_error(where, "expected a list of integers");
  std::vector<elem_t> out;
  for (auto const& x : j) {
    if (!x.is_number_integer()) parse_error(where, "expected a list of integers");
    out.push_back(x.get<elem_t>());
  }
  return out;
}

std::vector<std::vector<elem_t>> table_rows(json const& j, int order, std::string const& where) {
  if (!j.is_array()) parse_error(where, "expected a table");
  std::vector<std::vector<elem_t>> rows;
  if (!j.empty() && j.front().is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      rows.push_back(int_list(j[i], where + "[" + std::to_string(i) + "]"));
  } else {
    auto flat = int_list(j, where);
    if (order <= 0 || flat.size() != static_cast<std::size_t>(order) * order)
      parse_error(where, "flat table needs order*order entries");
    for (int i = 0; i < order; ++i) rows.emplace_back(flat.begin() + i * order, flat.begin() + (i + 1) * order);
  }
  if (order > 0 && static_cast<int>(rows.size()) != order)
    parse_error(where, "table has " + std::to_string(rows.size()) + " rows, order is " + std::to_string(order));
  return rows;
}

void check_range(std::vector<elem_t> const& xs, int n, std::string const& where) {
  for (elem_t x : xs)
    if (x < 0 || x >= n) parse_error(where, "label " + std::to_string(x) + " out of range");
}

}  // namespace

json group_to_json(FiniteGroup const& g) {
  return {{"name", g.name()}, {"order", g.order()}, {"table", g.rows()}};
}

FiniteGroup group_from_json(json const& j, std::string const& where) {
  auto const& order_j = field(j, "order", where);
  if (!order_j.is_number_integer() || order_j.get<int>() < 1) parse_error(where + ".order", "expected a positive integer");
  int order = order_j.get<int>();
  auto rows = table_rows(field(j, "table", where), order, where + ".table");
  std::string name;
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) parse_error(where + ".name", "expected a string");
    name = it->get<std::string>();
  }
  auto g = FiniteGroup::from_table(rows, name);
  if (g.rows() != rows) parse_error(where + ".table", "the identity must be labelled 0");
  return g;
}

json subgroup_to_json(Subgroup const& s) { return s.elements(); }

Subgroup subgroup_from_json(FiniteGroup const& g, json const& j, std::string const& where) {
  auto xs = int_list(j, where);
  check_range(xs, g.order(), where);
  return Subgroup(g, xs);
}

json hom_to_json(GroupHom const& h) { return h.map(); }

GroupHom hom_from_json(FiniteGroup const& source, FiniteGroup const& target, json const& j,
                       std::string const& where) {
  auto xs = int_list(j, where);
  if (static_cast<int>(xs.size()) != source.order()) parse_error(where, "needs one image per element");
  check_range(xs, target.order(), where);
  return GroupHom(source, target, xs);
}

json point_to_json(Point const& p) {
  return {{"total", group_to_json(p.total())},
          {"base", group_to_json(p.base())},
          {"f", hom_to_json(p.f())},
          {"s", hom_to_json(p.s())}};
}

Point point_from_json(json const& j, std::string const& where) {
  auto x = group_from_json(field(j, "total", where), where + ".total");
  auto y = group_from_json(field(j, "base", where), where + ".base");
  return Point(hom_from_json(x, y, field(j, "f", where), where + ".f"),
               hom_from_json(y, x, field(j, "s", where), where + ".s"));
}

json topology_to_json(FiniteTopology const& t, std::vector<elem_t> const& labels) {
  json out = json::array();
  for (mask_t o : t.opens()) {
    std::vector<elem_t> xs;
    for (int i = 0; i < t.size(); ++i)
      if (o >> i & 1) xs.push_back(labels.empty() ? i : labels[i]);
    std::sort(xs.begin(), xs.end());
    out.push_back(xs);
  }
  return out;
}

FiniteTopology topology_from_json(std::vector<elem_t> const& labels, json const& j,
                                  std::string const& where) {
  if (!j.is_array()) parse_error(where, "expected a list of open sets");
  std::vector<mask_t> opens;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto w = where + "[" + std::to_string(i) + "]";
    mask_t m = 0;
    for (elem_t x : int_list(j[i], w)) {
      auto it = std::find(labels.begin(), labels.end(), x);
      if (it == labels.end()) parse_error(w, "label " + std::to_string(x) + " is not a carrier point");
      m |= mask_t{1} << (it - labels.begin());
    }
    opens.push_back(m);
  }
  return FiniteTopology::from_opens(static_cast<int>(labels.size()), opens);
}

json monoid_to_json(FiniteMonoid const& m) {
  std::vector<std::vector<elem_t>> rows;
  for (int i = 0; i < m.order(); ++i) {
    rows.emplace_back();
    for (int k = 0; k < m.order(); ++k) rows.back().push_back(m.mul(i, k));
  }
  return {{"name", m.name()}, {"order", m.order()}, {"table", rows}};
}

FiniteMonoid monoid_from_json(json const& j, std::string const& where) {
  auto const& order_j = field(j, "order", where);
  if (!order_j.is_number_integer() || order_j.get<int>() < 1) parse_error(where + ".order", "expected a positive integer");
  auto rows = table_rows(field(j, "table", where), order_j.get<int>(), where + ".table");
  std::string name;
  if (auto it = j.find("name"); it != j.end() && it->is_string()) name = it->get<std::string>();
  auto m = FiniteMonoid::from_table(rows, name);
  for (int i = 0; i < m.order(); ++i)
    for (int k = 0; k < m.order(); ++k)
      if (m.mul(i, k) != rows[i][k]) parse_error(where + ".table", "the identity must be labelled 0");
  return m;
}

json report_to_json(Report const& r) {
  json cases = json::array();
  for (auto const& c : r.cases)
    cases.push_back({{"id", c.id}, {"verdict", c.pass ? "pass" : "fail"}, {"witness", c.witness}});
  return {{"name", r.name}, {"bound", r.bound}, {"passed", r.passed()}, {"failed", r.failed()},
          {"cases", cases}};
}

std::string canonical(json const& j) { return j.dump(); }

json parse_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (json::parse_error const& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

}  // namespace catnorm::io
