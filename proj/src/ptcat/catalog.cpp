#include "catnorm/ptcat/catalog.hpp"

#include "catnorm/finalg/construct.hpp"

namespace catnorm {

Catalog Catalog::build(int max_group_order, int max_total_order) {
  Catalog cat;
  cat.max_group_order = max_group_order;
  cat.max_total_order = max_total_order;
  cat.groups = builtin_groups(max_group_order);
  auto const factors = builtin_groups(max_total_order);
  for (auto const& k : factors)
    for (auto const& y : factors) {
      if (k.order() * y.order() > max_total_order) continue;
      for (auto& e : enumerate_points_with_kernel(k, y)) cat.extensions.push_back(std::move(e));
    }
  return cat;
}

}  // namespace catnorm
