#include "catnorm/finalg/subgroup.hpp"

#include <algorithm>
#include <set>

#include "catnorm/error.hpp"

namespace catnorm {

namespace {

std::vector<elem_t> mask_to_elements(std::vector<bool> const& mask) {
  std::vector<elem_t> out;
  for (elem_t x = 0; x < static_cast<elem_t>(mask.size()); ++x)
    if (mask[x]) out.push_back(x);
  return out;
}

}  // namespace

Subgroup::Subgroup(FiniteGroup ambient, std::vector<elem_t> elements)
    : ambient_(std::move(ambient)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  mask_.assign(ambient_.order(), false);
  for (elem_t x : elements_) {
    if (x < 0 || x >= ambient_.order()) throw Error(ErrorKind::NotSubgroup, "element out of range");
    mask_[x] = true;
  }
  if (elements_.empty() || !mask_[kIdentity])
    throw Error(ErrorKind::NotSubgroup, "missing identity");
  for (elem_t a : elements_) {
    if (!mask_[ambient_.inv(a)]) throw Error(ErrorKind::NotSubgroup, "not closed under inverse");
    for (elem_t b : elements_)
      if (!mask_[ambient_.mul(a, b)])
        throw Error(ErrorKind::NotSubgroup, "not closed under multiplication");
  }
}

Subgroup::Subgroup(Trusted, FiniteGroup ambient, std::vector<bool> mask)
    : ambient_(std::move(ambient)), elements_(mask_to_elements(mask)), mask_(std::move(mask)) {}

Subgroup Subgroup::trivial(FiniteGroup const& g) {
  std::vector<bool> mask(g.order(), false);
  mask[0] = true;
  return Subgroup(Trusted{}, g, std::move(mask));
}

Subgroup Subgroup::whole(FiniteGroup const& g) {
  return Subgroup(Trusted{}, g, std::vector<bool>(g.order(), true));
}

Subgroup Subgroup::generated_by(FiniteGroup const& g, std::span<elem_t const> gens) {
  return Subgroup(Trusted{}, g, closure(g, gens));
}

Subgroup Subgroup::from_closed_mask(FiniteGroup const& g, std::vector<bool> mask) {
  return Subgroup(Trusted{}, g, std::move(mask));
}

Subgroup Subgroup::from_mask(FiniteGroup const& g, std::vector<bool> const& mask) {
  return Subgroup(g, mask_to_elements(mask));
}

bool Subgroup::is_subset_of(Subgroup const& other) const {
  for (elem_t x : elements_)
    if (!other.contains(x)) return false;
  return true;
}

bool Subgroup::normalized_by(elem_t t) const {
  for (elem_t u : elements_)
    if (!mask_[ambient_.conj(t, u)]) return false;
  return true;
}

bool Subgroup::is_normal() const {
  for (elem_t t : ambient_.generators())
    if (!normalized_by(t)) return false;
  return true;
}

Subgroup::Materialized& Subgroup::materialized() const {
  std::call_once(cache_->once, [this] {
    int const k = order();
    cache_->local.assign(ambient_.order(), -1);
    for (int i = 0; i < k; ++i) cache_->local[elements_[i]] = i;
    std::vector<elem_t> table(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        table[static_cast<std::size_t>(i) * k + j] =
            cache_->local[ambient_.mul(elements_[i], elements_[j])];
    cache_->group = FiniteGroup::from_trusted_table(k, std::move(table));
  });
  return *cache_;
}

FiniteGroup Subgroup::as_group() const { return *materialized().group; }

GroupHom Subgroup::inclusion() const {
  return GroupHom::unchecked(as_group(), ambient_, elements_);
}

elem_t Subgroup::local_index(elem_t x) const { return materialized().local[x]; }

Subgroup intersection(Subgroup const& a, Subgroup const& b) {
  if (!(a.ambient() == b.ambient())) throw Error(ErrorKind::AmbientMismatch, "intersection");
  std::vector<elem_t> out;
  for (elem_t x : a.elements())
    if (b.contains(x)) out.push_back(x);
  return Subgroup(a.ambient(), std::move(out));
}

Subgroup join(Subgroup const& a, Subgroup const& b) {
  if (!(a.ambient() == b.ambient())) throw Error(ErrorKind::AmbientMismatch, "join");
  std::vector<elem_t> seed = a.elements();
  seed.insert(seed.end(), b.elements().begin(), b.elements().end());
  return Subgroup::generated_by(a.ambient(), seed);
}

Subgroup image(GroupHom const& h) { return image(h, Subgroup::whole(h.source())); }

Subgroup image(GroupHom const& h, Subgroup const& of) {
  std::vector<bool> mask(h.target().order(), false);
  for (elem_t x : of.elements()) mask[h(x)] = true;
  return Subgroup::from_mask(h.target(), mask);
}

Subgroup kernel(GroupHom const& h) {
  std::vector<elem_t> out;
  for (elem_t x = 0; x < h.source().order(); ++x)
    if (h(x) == kIdentity) out.push_back(x);
  return Subgroup(h.source(), std::move(out));
}

Subgroup preimage(GroupHom const& h, Subgroup const& s) {
  if (!(s.ambient() == h.target())) throw Error(ErrorKind::AmbientMismatch, "preimage");
  std::vector<elem_t> out;
  for (elem_t x = 0; x < h.source().order(); ++x)
    if (s.contains(h(x))) out.push_back(x);
  return Subgroup(h.source(), std::move(out));
}

std::vector<Subgroup> subgroups(FiniteGroup const& g) {
  int const n = g.order();
  // Every subgroup is a join of cyclic subgroups, so growing from the trivial
  // subgroup by one cyclic generator at a time reaches all of them.
  std::set<std::vector<bool>> cyclic_seen;
  std::vector<std::pair<elem_t, std::vector<bool>>> cyclic;
  for (elem_t x = 0; x < n; ++x) {
    elem_t one[] = {x};
    auto m = closure(g, one);
    if (cyclic_seen.insert(m).second) cyclic.emplace_back(x, std::move(m));
  }

  struct Found {
    std::vector<bool> mask;
    std::vector<elem_t> gens;
  };
  std::set<std::vector<bool>> seen;
  std::vector<Found> found;
  std::vector<bool> trivial(n, false);
  trivial[0] = true;
  seen.insert(trivial);
  found.push_back({trivial, {}});
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto const& [gen, c] : cyclic) {
      if (found[i].mask[gen]) continue;
      std::vector<elem_t> gens = found[i].gens;
      gens.push_back(gen);
      auto m = closure(g, gens);
      if (seen.insert(m).second) found.push_back({std::move(m), std::move(gens)});
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(Subgroup::from_closed_mask(g, std::move(f.mask)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> normal_subgroups(FiniteGroup const& g) {
  std::vector<Subgroup> out;
  for (auto& s : subgroups(g))
    if (s.is_normal()) out.push_back(std::move(s));
  return out;
}

Subgroup classical_normalizer(Subgroup const& u) {
  auto const& g = u.ambient();
  std::vector<bool> mask(g.order(), false);
  for (elem_t t = 0; t < g.order(); ++t) mask[t] = u.normalized_by(t);
  return Subgroup::from_closed_mask(g, std::move(mask));
}

Subgroup classical_centralizer(Subgroup const& u) {
  auto const& g = u.ambient();
  std::vector<bool> mask(g.order(), false);
  for (elem_t t = 0; t < g.order(); ++t) {
    bool ok = true;
    for (elem_t x : u.elements())
      if (!g.commute(t, x)) {
        ok = false;
        break;
      }
    mask[t] = ok;
  }
  return Subgroup::from_closed_mask(g, std::move(mask));
}

Subgroup center(FiniteGroup const& g) { return classical_centralizer(Subgroup::whole(g)); }

Congruence::Congruence(Subgroup normal) : normal_(std::move(normal)) {
  if (!normal_.is_normal()) throw Error(ErrorKind::NotNormal, "congruence needs a normal subgroup");
  auto const& g = normal_.ambient();
  class_of_.assign(g.order(), -1);
  for (elem_t a = 0; a < g.order(); ++a) {
    if (class_of_[a] >= 0) continue;
    for (elem_t m : normal_.elements()) class_of_[g.mul(m, a)] = num_classes_;
    ++num_classes_;
  }
}

Congruence Congruence::discrete(FiniteGroup const& g) { return Congruence(Subgroup::trivial(g)); }
Congruence Congruence::indiscrete(FiniteGroup const& g) { return Congruence(Subgroup::whole(g)); }

std::vector<Congruence> congruences(FiniteGroup const& g) {
  std::vector<Congruence> out;
  for (auto& n : normal_subgroups(g)) out.emplace_back(std::move(n));
  return out;
}

bool is_normal_to(Subgroup const& u, Congruence const& r) {
  if (!(u.ambient() == r.ambient())) throw Error(ErrorKind::AmbientMismatch, "is_normal_to");
  auto const& cls = r.class_of();
  int const c = cls[u.elements().front()];
  for (elem_t a : u.elements())
    if (cls[a] != c) return false;  // u^-1(R) != ∇_U
  for (elem_t x = 0; x < r.ambient().order(); ++x)
    if (cls[x] == c && !u.contains(x)) return false;  // an R-arrow out of U has no lift
  return true;
}

Subgroup normalization(Congruence const& r) {
  std::vector<elem_t> out;
  for (elem_t x = 0; x < r.ambient().order(); ++x)
    if (r.related(x, kIdentity)) out.push_back(x);
  return Subgroup(r.ambient(), std::move(out));
}

FiniteGroup quotient(Congruence const& r) {
  auto const& g = r.ambient();
  int const q = r.num_classes();
  std::vector<elem_t> rep(q, -1);
  for (elem_t a = 0; a < g.order(); ++a)
    if (rep[r.class_of()[a]] < 0) rep[r.class_of()[a]] = a;
  std::vector<elem_t> table(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[static_cast<std::size_t>(i) * q + j] = r.class_of()[g.mul(rep[i], rep[j])];
  return FiniteGroup::from_trusted_table(q, std::move(table));
}

GroupHom quotient_map(Congruence const& r, FiniteGroup const& q) {
  return GroupHom::unchecked(r.ambient(), q,
                             std::vector<elem_t>(r.class_of().begin(), r.class_of().end()));
}

Congruence inverse_image(GroupHom const& h, Congruence const& r) {
  return Congruence(preimage(h, r.normal_subgroup()));
}

}  // namespace catnorm
