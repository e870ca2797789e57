#include "catnorm/finalg/hom.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "catnorm/error.hpp"

namespace catnorm {

GroupHom::GroupHom(FiniteGroup source, FiniteGroup target, std::vector<elem_t> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (static_cast<int>(map_.size()) != source_.order())
    throw Error(ErrorKind::NotHomomorphism, "image array has wrong length");
  for (elem_t x : map_)
    if (x < 0 || x >= target_.order())
      throw Error(ErrorKind::NotHomomorphism, "image out of range");
  if (!is_homomorphism(source_, target_, map_))
    throw Error(ErrorKind::NotHomomorphism, "map does not respect multiplication");
}

GroupHom::GroupHom(Unchecked, FiniteGroup source, FiniteGroup target, std::vector<elem_t> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

GroupHom GroupHom::unchecked(FiniteGroup source, FiniteGroup target, std::vector<elem_t> map) {
  return GroupHom(Unchecked{}, std::move(source), std::move(target), std::move(map));
}

GroupHom GroupHom::identity(FiniteGroup const& g) {
  std::vector<elem_t> map(g.order());
  for (elem_t a = 0; a < g.order(); ++a) map[a] = a;
  return unchecked(g, g, std::move(map));
}

GroupHom GroupHom::zero(FiniteGroup const& source, FiniteGroup const& target) {
  return unchecked(source, target, std::vector<elem_t>(source.order(), kIdentity));
}

bool GroupHom::is_injective() const {
  std::vector<bool> seen(target_.order(), false);
  for (elem_t x : map_) {
    if (seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

bool GroupHom::is_surjective() const {
  std::vector<bool> seen(target_.order(), false);
  int hit = 0;
  for (elem_t x : map_)
    if (!seen[x]) {
      seen[x] = true;
      ++hit;
    }
  return hit == target_.order();
}

GroupHom compose(GroupHom const& g, GroupHom const& f) {
  if (!(f.target() == g.source()))
    throw Error(ErrorKind::CodomainMismatch, "compose: f.target != g.source");
  std::vector<elem_t> map(f.source().order());
  for (elem_t a = 0; a < f.source().order(); ++a) map[a] = g(f(a));
  return GroupHom::unchecked(f.source(), g.target(), std::move(map));
}

bool is_homomorphism(FiniteGroup const& source, FiniteGroup const& target,
                     std::vector<elem_t> const& map) {
  if (static_cast<int>(map.size()) != source.order()) return false;
  if (map[kIdentity] != kIdentity) return false;
  // Checking every edge x -> x*g of the Cayley graph for a generating set g
  // is equivalent to the full multiplicativity check.
  for (elem_t x = 0; x < source.order(); ++x)
    for (elem_t g : source.generators())
      if (map[source.mul(x, g)] != target.mul(map[x], map[g])) return false;
  return true;
}

namespace {

// Extends generator images along the Cayley graph; false on inconsistency.
bool extend(FiniteGroup const& a, FiniteGroup const& b, std::span<elem_t const> gens,
            std::vector<elem_t> const& images, std::vector<elem_t>& map,
            std::vector<elem_t>& queue) {
  std::fill(map.begin(), map.end(), -1);
  map[0] = 0;
  queue.clear();
  queue.push_back(0);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    elem_t x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      elem_t y = a.mul(x, gens[j]);
      elem_t img = b.mul(map[x], images[j]);
      if (map[y] < 0) {
        map[y] = img;
        queue.push_back(y);
      } else if (map[y] != img) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<elem_t>> enumerate_hom_maps(FiniteGroup const& a, FiniteGroup const& b) {
  auto gens = a.generators();
  std::vector<std::vector<elem_t>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (elem_t y = 0; y < b.order(); ++y)
      if (a.element_order(gens[j]) % b.element_order(y) == 0) candidates[j].push_back(y);

  std::vector<std::vector<elem_t>> out;
  std::vector<std::size_t> idx(gens.size(), 0);
  std::vector<elem_t> images(gens.size());
  std::vector<elem_t> map(a.order());
  std::vector<elem_t> queue;
  queue.reserve(a.order());
  while (true) {
    for (std::size_t j = 0; j < gens.size(); ++j) images[j] = candidates[j][idx[j]];
    if (extend(a, b, gens, images, map, queue)) out.push_back(map);
    std::size_t j = 0;
    while (j < gens.size() && ++idx[j] == candidates[j].size()) idx[j++] = 0;
    if (j == gens.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<elem_t>> hom_maps(FiniteGroup const& a, FiniteGroup const& b) {
  // Memoized on table identity: catalog scans ask for the same pairs repeatedly.
  static std::mutex mu;
  static std::map<std::pair<void const*, void const*>,
                  std::pair<std::pair<FiniteGroup, FiniteGroup>, std::vector<std::vector<elem_t>>>>
      cache;
  auto key = std::make_pair(a.id(), b.id());
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second.second;
  }
  auto maps = enumerate_hom_maps(a, b);
  std::lock_guard lock(mu);
  // Entries hold the groups so the address keys stay valid.
  if (cache.size() > 50000) cache.clear();
  cache.emplace(key, std::make_pair(std::make_pair(a, b), maps));
  return maps;
}

std::vector<GroupHom> homs(FiniteGroup const& a, FiniteGroup const& b) {
  std::vector<GroupHom> out;
  for (auto& m : hom_maps(a, b)) out.push_back(GroupHom::unchecked(a, b, std::move(m)));
  return out;
}

std::vector<GroupHom> isomorphisms(FiniteGroup const& a, FiniteGroup const& b) {
  std::vector<GroupHom> out;
  if (a.order() != b.order()) return out;
  for (auto& h : homs(a, b))
    if (h.is_bijective()) out.push_back(std::move(h));
  return out;
}

bool is_isomorphic(FiniteGroup const& a, FiniteGroup const& b) {
  if (a.order() != b.order()) return false;
  for (auto const& m : hom_maps(a, b)) {
    std::vector<bool> seen(b.order(), false);
    bool inj = true;
    for (elem_t x : m) {
      if (seen[x]) {
        inj = false;
        break;
      }
      seen[x] = true;
    }
    if (inj) return true;
  }
  return false;
}

}  // namespace catnorm
