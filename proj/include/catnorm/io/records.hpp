#pragma once

#include <string>

#include "catnorm/finalg/group.hpp"
#include "catnorm/finalg/hom.hpp"
#include "catnorm/finalg/subgroup.hpp"
#include "catnorm/mset/mset.hpp"
#include "catnorm/ptcat/split_extension.hpp"
#include "catnorm/report.hpp"
#include "catnorm/topgrp/topgrp.hpp"
#include <json.hpp>

namespace catnorm::io {

using nlohmann::json;

// Readers throw Error{ParseError} naming `where` on shape problems; group,
// subgroup and hom validation errors propagate with their own kinds.

/// {"name", "order", "table"}; the table is a list of rows (a flat
/// row-major list is accepted on input). Identity must be labelled 0.
json group_to_json(FiniteGroup const& g);
FiniteGroup group_from_json(json const& j, std::string const& where);

/// Sorted element list.
json subgroup_to_json(Subgroup const& s);
Subgroup subgroup_from_json(FiniteGroup const& g, json const& j, std::string const& where);

/// Image list.
json hom_to_json(GroupHom const& h);
GroupHom hom_from_json(FiniteGroup const& source, FiniteGroup const& target, json const& j,
                       std::string const& where);

/// {"total", "base", "f", "s"}.
json point_to_json(Point const& p);
Point point_from_json(json const& j, std::string const& where);

/// Every open set as a sorted element list, in increasing mask order.
/// `labels` maps carrier points to output labels (empty: identity).
json topology_to_json(FiniteTopology const& t, std::vector<elem_t> const& labels = {});
/// Opens given in `labels`; the result is on positions 0..|labels|-1.
FiniteTopology topology_from_json(std::vector<elem_t> const& labels, json const& j,
                                  std::string const& where);

json monoid_to_json(FiniteMonoid const& m);
FiniteMonoid monoid_from_json(json const& j, std::string const& where);

/// {"name", "bound", "passed", "failed", "cases": [{"id", "verdict", "witness"}]}.
json report_to_json(Report const& r);

/// Sorted keys, no whitespace.
std::string canonical(json const& j);
json parse_file(std::string const& path);

}  // namespace catnorm::io
