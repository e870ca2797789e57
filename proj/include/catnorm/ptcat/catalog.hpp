#pragma once

#include <vector>

#include "catnorm/finalg/group.hpp"
#include "catnorm/ptcat/split_extension.hpp"

namespace catnorm {

/// A bounded, explicit family of groups and split extensions over which
/// universal properties are certified. Certification is only ever relative
/// to the catalog it was run against.
struct Catalog {
  int max_group_order = 0;
  int max_total_order = 0;
  std::vector<FiniteGroup> groups;
  std::vector<SplitExtension> extensions;

  /// Built-in groups of order <= max_group_order, and every semidirect
  /// product K ⋊ Y of built-in groups with |K|·|Y| <= max_total_order (one
  /// per action). Up to isomorphism this is every split extension whose
  /// kernel and base are catalog groups.
  static Catalog build(int max_group_order, int max_total_order);
};

}  // namespace catnorm
