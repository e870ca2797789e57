#include "catnorm/ptcat/split_extension.hpp"

#include "catnorm/error.hpp"
#include "catnorm/finalg/construct.hpp"

namespace catnorm {

namespace {

bool same_map(GroupHom const& a, GroupHom const& b) { return a.map() == b.map(); }

}  // namespace

Point::Point(GroupHom f, GroupHom s) : f_(std::move(f)), s_(std::move(s)) {
  if (!(f_.source() == s_.target()) || !(f_.target() == s_.source()))
    throw Error(ErrorKind::NotSplit, "f and s are not composable both ways");
  for (elem_t y = 0; y < base().order(); ++y)
    if (f_(s_(y)) != y) throw Error(ErrorKind::NotSplit, "f ∘ s != 1");
}

SplitExtension::SplitExtension(Point point, GroupHom k) : point_(std::move(point)), k_(std::move(k)) {
  if (!(k_.target() == total())) throw Error(ErrorKind::NotMorphism, "kernel map lands elsewhere");
  if (!k_.is_injective()) throw Error(ErrorKind::NotMorphism, "kernel map not injective");
  k_index_.assign(total().order(), -1);
  for (elem_t a = 0; a < kernel_group().order(); ++a) k_index_[k_(a)] = a;
  for (elem_t x = 0; x < total().order(); ++x)
    if ((f()(x) == kIdentity) != (k_index_[x] >= 0))
      throw Error(ErrorKind::NotMorphism, "kernel map image is not ker f");
}

SEMorphism::SEMorphism(SplitExtension source, SplitExtension target, GroupHom on_kernel,
                       GroupHom on_total, GroupHom on_base)
    : source_(std::move(source)),
      target_(std::move(target)),
      on_kernel_(std::move(on_kernel)),
      on_total_(std::move(on_total)),
      on_base_(std::move(on_base)) {
  if (!(on_kernel_.source() == source_.kernel_group()) ||
      !(on_kernel_.target() == target_.kernel_group()) ||
      !(on_total_.source() == source_.total()) || !(on_total_.target() == target_.total()) ||
      !(on_base_.source() == source_.base()) || !(on_base_.target() == target_.base()))
    throw Error(ErrorKind::NotMorphism, "component domains do not match");
  if (!same_map(compose(target_.f(), on_total_), compose(on_base_, source_.f())))
    throw Error(ErrorKind::NotMorphism, "f-square does not commute");
  if (!same_map(compose(on_total_, source_.s()), compose(target_.s(), on_base_)))
    throw Error(ErrorKind::NotMorphism, "s-square does not commute");
  if (!same_map(compose(on_total_, source_.k()), compose(target_.k(), on_kernel_)))
    throw Error(ErrorKind::NotMorphism, "k-square does not commute");
}

SEMorphism SEMorphism::from_components(SplitExtension const& source, SplitExtension const& target,
                                       GroupHom const& on_kernel, GroupHom const& on_base) {
  auto const& x = source.total();
  std::vector<elem_t> total(x.order());
  for (elem_t a = 0; a < x.order(); ++a)
    total[a] = target.total().mul(target.k()(on_kernel(source.kernel_part(a))),
                                  target.s()(on_base(source.f()(a))));
  if (!is_homomorphism(x, target.total(), total))
    throw Error(ErrorKind::NotMorphism, "forced total map is not a homomorphism");
  return SEMorphism(source, target, on_kernel,
                    GroupHom::unchecked(x, target.total(), std::move(total)), on_base);
}

SEMorphism SEMorphism::from_total(SplitExtension const& source, SplitExtension const& target,
                                  GroupHom const& on_total, GroupHom const& on_base) {
  std::vector<elem_t> kmap(source.kernel_group().order());
  for (elem_t a = 0; a < source.kernel_group().order(); ++a) {
    elem_t img = target.kernel_label(on_total(source.k()(a)));
    if (img < 0) throw Error(ErrorKind::NotMorphism, "total map does not preserve kernels");
    kmap[a] = img;
  }
  return SEMorphism(source, target,
                    GroupHom::unchecked(source.kernel_group(), target.kernel_group(), std::move(kmap)),
                    on_total, on_base);
}

SEMorphism SEMorphism::identity(SplitExtension const& e) {
  return SEMorphism(e, e, GroupHom::identity(e.kernel_group()), GroupHom::identity(e.total()),
                    GroupHom::identity(e.base()));
}

SEMorphism compose(SEMorphism const& g, SEMorphism const& f) {
  return SEMorphism(f.source(), g.target(), compose(g.on_kernel(), f.on_kernel()),
                    compose(g.on_total(), f.on_total()), compose(g.on_base(), f.on_base()));
}

PtMorphism::PtMorphism(Point source, Point target, GroupHom on_total, GroupHom on_base)
    : source_(std::move(source)),
      target_(std::move(target)),
      on_total_(std::move(on_total)),
      on_base_(std::move(on_base)) {
  if (!(on_total_.source() == source_.total()) || !(on_total_.target() == target_.total()) ||
      !(on_base_.source() == source_.base()) || !(on_base_.target() == target_.base()))
    throw Error(ErrorKind::NotMorphism, "component domains do not match");
  if (!same_map(compose(target_.f(), on_total_), compose(on_base_, source_.f())))
    throw Error(ErrorKind::NotMorphism, "f-square does not commute");
  if (!same_map(compose(on_total_, source_.s()), compose(target_.s(), on_base_)))
    throw Error(ErrorKind::NotMorphism, "s-square does not commute");
}

Action::Action(FiniteGroup base_, FiniteGroup kernel_group_, AutomorphismGroup aut_, GroupHom act_)
    : base(std::move(base_)),
      kernel_group(std::move(kernel_group_)),
      aut(std::move(aut_)),
      act(std::move(act_)) {
  if (!(act.source() == base) || !(act.target() == aut.group) ||
      !is_homomorphism(base, aut.group, act.map()))
    throw Error(ErrorKind::NotHomomorphism, "action is not a hom Y -> Aut(K)");
  if (!aut.autos.empty() && !(aut.autos[0].source() == kernel_group))
    throw Error(ErrorKind::NotHomomorphism, "automorphisms act on a different group");
}

Action::Action(FiniteGroup base_, FiniteGroup kernel_group_, GroupHom act_)
    : Action(base_, kernel_group_, automorphism_group(kernel_group_), std::move(act_)) {}

Action Action::trivial(FiniteGroup const& base, FiniteGroup const& kernel_group) {
  auto aut = automorphism_group(kernel_group);
  auto zero = GroupHom::zero(base, aut.group);
  return Action(base, kernel_group, std::move(aut), std::move(zero));
}

SplitExtension make_split_extension(Point const& p) {
  if (!p.f().is_surjective()) throw Error(ErrorKind::NotSurjective, "f is not onto");
  auto ker = kernel(p.f());
  return SplitExtension(p, ker.inclusion());
}

SplitExtension semidirect(Action const& act) {
  auto const& kg = act.kernel_group;
  auto const& yg = act.base;
  int const nk = kg.order(), ny = yg.order(), n = nk * ny;
  std::vector<elem_t> table(static_cast<std::size_t>(n) * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      elem_t k1 = p % nk, y1 = p / nk, k2 = q % nk, y2 = q / nk;
      elem_t k = kg.mul(k1, act.apply(y1, k2));
      elem_t y = yg.mul(y1, y2);
      table[static_cast<std::size_t>(p) * n + q] = k + nk * y;
    }
  std::string name;
  if (!kg.name().empty() && !yg.name().empty()) name = kg.name() + ":" + yg.name();
  auto x = FiniteGroup::from_trusted_table(n, std::move(table), std::move(name));
  std::vector<elem_t> f(n), s(ny), k(nk);
  for (int p = 0; p < n; ++p) f[p] = p / nk;
  for (int y = 0; y < ny; ++y) s[y] = nk * y;
  for (int a = 0; a < nk; ++a) k[a] = a;
  Point pt(GroupHom::unchecked(x, yg, std::move(f)), GroupHom::unchecked(yg, x, std::move(s)));
  return SplitExtension(std::move(pt), GroupHom::unchecked(kg, x, std::move(k)));
}

std::vector<SplitExtension> enumerate_points_with_kernel(FiniteGroup const& kernel_group,
                                                         FiniteGroup const& base) {
  auto aut = automorphism_group(kernel_group);
  std::vector<SplitExtension> out;
  for (auto& act : homs(base, aut.group)) out.push_back(semidirect(Action(base, kernel_group, aut, act)));
  return out;
}

SplitExtension J(FiniteGroup const& t) {
  auto prod = direct_product(t, t);
  Point pt(prod.p0(), prod.diagonal());
  return SplitExtension(std::move(pt), prod.in1());
}

SEMorphism J(GroupHom const& h) {
  auto src = J(h.source());
  auto tgt = J(h.target());
  int const na = h.source().order(), nb = h.target().order();
  std::vector<elem_t> total(static_cast<std::size_t>(na) * na);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b) total[a * na + b] = h(a) * nb + h(b);
  return SEMorphism(src, tgt, h, GroupHom::unchecked(src.total(), tgt.total(), std::move(total)), h);
}

SplitExtension product_extension(FiniteGroup const& t, FiniteGroup const& x) {
  auto prod = direct_product(t, x);
  Point pt(prod.p0(), prod.in0());
  return SplitExtension(std::move(pt), prod.in1());
}

GroupHom conjugation_action(SplitExtension const& e, AutomorphismGroup const& aut) {
  auto const& kg = e.kernel_group();
  std::vector<elem_t> act(e.base().order());
  std::vector<elem_t> map(kg.order());
  for (elem_t y = 0; y < e.base().order(); ++y) {
    elem_t sy = e.s()(y);
    for (elem_t a = 0; a < kg.order(); ++a) map[a] = e.kernel_label(e.total().conj(sy, e.k()(a)));
    act[y] = aut.index_of(map);
    ensure(act[y] >= 0, "conjugation is not an automorphism of the kernel");
  }
  return GroupHom(e.base(), aut.group, std::move(act));
}

std::vector<SEComponents> se_morphism_components(SplitExtension const& e1,
                                                 SplitExtension const& e2) {
  auto const& x1 = e1.total();
  auto const& x2 = e2.total();
  // Each x in X1 is k1(kernel part) · s1(f1 x); cache the decomposition.
  std::vector<elem_t> kpart(x1.order()), bpart(x1.order());
  for (elem_t x = 0; x < x1.order(); ++x) {
    kpart[x] = e1.kernel_part(x);
    bpart[x] = e1.f()(x);
  }
  auto kernel_maps = hom_maps(e1.kernel_group(), e2.kernel_group());
  auto base_maps = hom_maps(e1.base(), e2.base());

  std::vector<SEComponents> out;
  std::vector<elem_t> total(x1.order());
  for (auto const& km : kernel_maps) {
    for (auto const& bm : base_maps) {
      for (elem_t x = 0; x < x1.order(); ++x)
        total[x] = x2.mul(e2.k()(km[kpart[x]]), e2.s()(bm[bpart[x]]));
      if (is_homomorphism(x1, x2, total)) out.push_back({km, bm});
    }
  }
  return out;
}

std::vector<SEMorphism> se_morphisms(SplitExtension const& e1, SplitExtension const& e2) {
  std::vector<SEMorphism> out;
  for (auto const& c : se_morphism_components(e1, e2))
    out.push_back(SEMorphism::from_components(
        e1, e2, GroupHom::unchecked(e1.kernel_group(), e2.kernel_group(), c.on_kernel),
        GroupHom::unchecked(e1.base(), e2.base(), c.on_base)));
  return out;
}

}  // namespace catnorm
