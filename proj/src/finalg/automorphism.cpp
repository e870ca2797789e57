#include "catnorm/finalg/automorphism.hpp"

#include <algorithm>
#include <map>

#include "catnorm/error.hpp"

namespace catnorm {

elem_t AutomorphismGroup::index_of(std::vector<elem_t> const& map) const {
  for (std::size_t i = 0; i < autos.size(); ++i)
    if (autos[i].map() == map) return static_cast<elem_t>(i);
  return -1;
}

AutomorphismGroup automorphism_group(FiniteGroup const& g) {
  std::vector<std::vector<elem_t>> maps;
  auto id = GroupHom::identity(g).map();
  maps.push_back(id);
  for (auto& h : isomorphisms(g, g))
    if (h.map() != id) maps.push_back(h.map());
  std::sort(maps.begin() + 1, maps.end());

  std::map<std::vector<elem_t>, elem_t> index;
  for (std::size_t i = 0; i < maps.size(); ++i) index.emplace(maps[i], static_cast<elem_t>(i));

  int const k = static_cast<int>(maps.size());
  std::vector<elem_t> table(static_cast<std::size_t>(k) * k);
  std::vector<elem_t> comp(g.order());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      for (elem_t x = 0; x < g.order(); ++x) comp[x] = maps[i][maps[j][x]];
      table[static_cast<std::size_t>(i) * k + j] = index.at(comp);
    }

  AutomorphismGroup out{FiniteGroup::from_trusted_table(k, std::move(table), "Aut(" + g.name() + ")"),
                        {}};
  for (auto& m : maps) out.autos.push_back(GroupHom::unchecked(g, g, std::move(m)));
  return out;
}

}  // namespace catnorm
