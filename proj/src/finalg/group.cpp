#include "catnorm/finalg/group.hpp"

#include <algorithm>
#include <numeric>

#include "catnorm/error.hpp"

namespace catnorm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::CodomainMismatch: return "CodomainMismatch";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::NotMorphism: return "NotMorphism";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::NotCartesianInput: return "NotCartesianInput";
    case ErrorKind::NoFactorization: return "NoFactorization";
    case ErrorKind::NotReflexive: return "NotReflexive";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::FactorizationMissing: return "FactorizationMissing";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::NotMonoidAction: return "NotMonoidAction";
    case ErrorKind::NotTopology: return "NotTopology";
    case ErrorKind::NotTopologicalGroup: return "NotTopologicalGroup";
    case ErrorKind::ConditionBFails: return "ConditionBFails";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

FiniteGroup::FiniteGroup() : impl_(build(1, {0}, "1")) {}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<elem_t>> const& rows,
                                    std::string name) {
  int const n = static_cast<int>(rows.size());
  if (n == 0) throw Error(ErrorKind::MalformedTable, "empty table");
  std::vector<elem_t> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (auto const& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorKind::MalformedTable, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_flat_table(n, std::move(flat), std::move(name));
}

FiniteGroup FiniteGroup::from_flat_table(int n, std::vector<elem_t> flat, std::string name) {
  if (n <= 0 || flat.size() != static_cast<std::size_t>(n) * n)
    throw Error(ErrorKind::MalformedTable, "table size does not match order");
  for (elem_t x : flat)
    if (x < 0 || x >= n) throw Error(ErrorKind::MalformedTable, "entry out of range");
  auto at = [&](elem_t a, elem_t b) { return flat[static_cast<std::size_t>(a) * n + b]; };

  elem_t e = -1;
  for (elem_t c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (elem_t a = 0; a < n && ok; ++a) ok = at(c, a) == a && at(a, c) == a;
    if (ok) e = c;
  }
  if (e < 0) throw Error(ErrorKind::NoIdentity, "no two-sided identity");

  for (elem_t a = 0; a < n; ++a) {
    bool found = false;
    for (elem_t b = 0; b < n && !found; ++b) found = at(a, b) == e && at(b, a) == e;
    if (!found)
      throw Error(ErrorKind::NoInverse, "element " + std::to_string(a) + " has no inverse");
  }
  for (elem_t a = 0; a < n; ++a)
    for (elem_t b = 0; b < n; ++b)
      for (elem_t c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw Error(ErrorKind::NotAssociative,
                      "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ")");

  if (e != 0) {
    // swap labels 0 and e
    auto relabel = [&](elem_t x) { return x == e ? 0 : (x == 0 ? e : x); };
    std::vector<elem_t> out(flat.size());
    for (elem_t a = 0; a < n; ++a)
      for (elem_t b = 0; b < n; ++b)
        out[static_cast<std::size_t>(relabel(a)) * n + relabel(b)] = relabel(at(a, b));
    flat = std::move(out);
  }
  return FiniteGroup(build(n, std::move(flat), std::move(name)));
}

FiniteGroup FiniteGroup::from_trusted_table(int n, std::vector<elem_t> flat, std::string name) {
  return FiniteGroup(build(n, std::move(flat), std::move(name)));
}

std::shared_ptr<FiniteGroup::Impl const> FiniteGroup::build(int n, std::vector<elem_t> table,
                                                             std::string name) {
  auto impl = std::make_shared<Impl>();
  impl->order = n;
  impl->table = std::move(table);
  impl->name = std::move(name);
  impl->inverse.assign(n, 0);
  impl->elem_order.assign(n, 1);
  auto mul = [&](elem_t a, elem_t b) { return impl->table[static_cast<std::size_t>(a) * n + b]; };
  for (elem_t a = 0; a < n; ++a) {
    for (elem_t b = 0; b < n; ++b)
      if (mul(a, b) == 0) {
        impl->inverse[a] = b;
        break;
      }
  }
  for (elem_t a = 1; a < n; ++a) {
    int k = 1;
    for (elem_t x = a; x != 0; x = mul(x, a)) ++k;
    impl->elem_order[a] = k;
  }

  std::vector<elem_t> by_order(n);
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(), [&](elem_t a, elem_t b) {
    return impl->elem_order[a] > impl->elem_order[b];
  });
  std::vector<bool> span(n, false);
  span[0] = true;
  int covered = 1;
  for (elem_t g : by_order) {
    if (covered == n) break;
    if (span[g]) continue;
    impl->generators.push_back(g);
    // grow span: closure of current generators
    std::vector<elem_t> members;
    for (elem_t x = 0; x < n; ++x)
      if (span[x]) members.push_back(x);
    std::vector<elem_t> queue = members;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (elem_t h : impl->generators) {
        elem_t y = mul(queue[i], h);
        if (!span[y]) {
          span[y] = true;
          ++covered;
          queue.push_back(y);
        }
      }
    }
  }
  return impl;
}

bool FiniteGroup::is_abelian() const {
  auto gens = generators();
  for (elem_t a : gens)
    for (elem_t b : gens)
      if (!commute(a, b)) return false;
  return true;
}

std::vector<std::vector<elem_t>> FiniteGroup::rows() const {
  int const n = order();
  std::vector<std::vector<elem_t>> out(n, std::vector<elem_t>(n));
  for (elem_t a = 0; a < n; ++a)
    for (elem_t b = 0; b < n; ++b) out[a][b] = mul(a, b);
  return out;
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->name = std::move(name);
  return FiniteGroup(std::move(impl));
}

bool operator==(FiniteGroup const& a, FiniteGroup const& b) {
  return a.impl_ == b.impl_ ||
         (a.impl_->order == b.impl_->order && a.impl_->table == b.impl_->table);
}

std::vector<bool> closure(FiniteGroup const& g, std::span<elem_t const> seed) {
  std::vector<bool> mask(g.order(), false);
  mask[0] = true;
  std::vector<elem_t> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (elem_t s : seed) {
      elem_t y = g.mul(queue[i], s);
      if (!mask[y]) {
        mask[y] = true;
        queue.push_back(y);
      }
    }
  }
  return mask;
}

}  // namespace catnorm
