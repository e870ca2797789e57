#include "catnorm/ptcat/cartesian.hpp"

#include <map>
#include <set>

#include "catnorm/error.hpp"
#include "catnorm/finalg/construct.hpp"

namespace catnorm {

namespace {

std::vector<elem_t> compose_maps(std::vector<elem_t> const& g, std::vector<elem_t> const& f) {
  std::vector<elem_t> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

bool is_bijection(std::vector<elem_t> const& map, int target_order) {
  if (static_cast<int>(map.size()) != target_order) return false;
  std::vector<bool> hit(target_order, false);
  for (auto y : map) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool same_point(Point const& a, Point const& b) {
  return a.f() == b.f() && a.s() == b.s();
}

}  // namespace

KCartesianReport k_cartesian_report(SEMorphism const& m, Catalog const& cat,
                                    KernelFactorization mode) {
  bool const iso_only = mode == KernelFactorization::Iso;
  KCartesianReport report;
  auto const& src = m.source();
  auto const& tgt = m.target();
  auto const& mk = m.on_kernel().map();
  auto const& mb = m.on_base().map();

  for (std::size_t idx = 0; idx < cat.extensions.size(); ++idx) {
    auto const& probe = cat.extensions[idx];
    ++report.extensions_checked;
    if (iso_only && probe.kernel_group().order() != src.kernel_group().order()) continue;

    auto psis = se_morphism_components(probe, tgt);
    auto chis = se_morphism_components(probe, src);

    // How many κ: K(E'') -> K(E) lie over each kernel map K(E'') -> K(E').
    std::map<std::vector<elem_t>, long long> kappas_over;
    for (auto const& kappa : hom_maps(probe.kernel_group(), src.kernel_group()))
      if (!iso_only || is_bijection(kappa, src.kernel_group().order()))
        ++kappas_over[compose_maps(mk, kappa)];

    long long problems = 0;
    for (auto const& psi : psis)
      if (auto it = kappas_over.find(psi.on_kernel); it != kappas_over.end())
        problems += it->second;
    report.queries += problems;

    // χ solves the problem (m∘χ, K(χ)); m∘χ is fixed by (K(χ), m_Y∘χ_Y).
    std::set<std::pair<std::vector<elem_t>, std::vector<elem_t>>> solved;
    for (auto const& chi : chis) {
      if (iso_only && !is_bijection(chi.on_kernel, src.kernel_group().order())) continue;
      if (!solved.emplace(chi.on_kernel, compose_maps(mb, chi.on_base)).second) {
        report.cartesian = false;
        report.witness = "two factorizations from catalog extension #" + std::to_string(idx) +
                         " (total order " + std::to_string(probe.total().order()) + ")";
        return report;
      }
    }
    if (static_cast<long long>(solved.size()) != problems) {
      report.cartesian = false;
      report.witness = "missing factorization from catalog extension #" + std::to_string(idx) +
                       " (" + std::to_string(problems - static_cast<long long>(solved.size())) +
                       " of " + std::to_string(problems) + " unsolved)";
      return report;
    }
  }
  return report;
}

bool is_K_cartesian(SEMorphism const& m, Catalog const& cat, KernelFactorization mode) {
  return k_cartesian_report(m, cat, mode).cartesian;
}

bool is_P_cartesian(PtMorphism const& square) {
  auto const& src = square.source();
  auto const& tgt = square.target();
  auto const& alpha = square.on_total();
  auto const& beta = square.on_base();
  long long fibre_product = 0;
  for (elem_t y = 0; y < src.base().order(); ++y)
    for (elem_t x = 0; x < tgt.total().order(); ++x)
      if (tgt.f()(x) == beta(y)) ++fibre_product;
  if (fibre_product != src.total().order()) return false;
  std::set<std::pair<elem_t, elem_t>> seen;
  for (elem_t x = 0; x < src.total().order(); ++x)
    if (!seen.emplace(alpha(x), src.f()(x)).second) return false;
  return true;
}

PointPullback pullback_point(GroupHom const& p, Point const& pt) {
  if (!(p.target() == pt.base()))
    throw Error(ErrorKind::CodomainMismatch, "pullback_point: p does not land in the base");
  auto const& x = pt.total();
  auto const& yp = p.source();
  std::vector<std::pair<elem_t, elem_t>> pairs;
  for (elem_t a = 0; a < x.order(); ++a)
    for (elem_t b = 0; b < yp.order(); ++b)
      if (pt.f()(a) == p(b)) pairs.emplace_back(a, b);
  auto pg = pair_group(x, yp, std::move(pairs));
  std::vector<elem_t> s(yp.order());
  for (elem_t b = 0; b < yp.order(); ++b) s[b] = pg.index_of(pt.s()(p(b)), b);
  Point pulled(pg.p1(), GroupHom::unchecked(yp, pg.group, std::move(s)));
  PtMorphism cart(pulled, pt, pg.p0(), p);
  return {std::move(pulled), std::move(cart)};
}

SEPullback pullback_se(SEMorphism const& m, SEMorphism const& t) {
  if (!same_point(m.target().point(), t.target().point()))
    throw Error(ErrorKind::CodomainMismatch, "pullback_se: cospan legs have different targets");
  auto const& e1 = m.source();
  auto const& e2 = t.source();

  std::vector<std::pair<elem_t, elem_t>> tpairs, bpairs;
  for (elem_t a = 0; a < e1.total().order(); ++a)
    for (elem_t b = 0; b < e2.total().order(); ++b)
      if (m.on_total()(a) == t.on_total()(b)) tpairs.emplace_back(a, b);
  for (elem_t a = 0; a < e1.base().order(); ++a)
    for (elem_t b = 0; b < e2.base().order(); ++b)
      if (m.on_base()(a) == t.on_base()(b)) bpairs.emplace_back(a, b);
  auto tg = pair_group(e1.total(), e2.total(), std::move(tpairs));
  auto bg = pair_group(e1.base(), e2.base(), std::move(bpairs));

  std::vector<elem_t> f(tg.pairs.size()), s(bg.pairs.size());
  for (std::size_t i = 0; i < tg.pairs.size(); ++i)
    f[i] = bg.index_of(e1.f()(tg.pairs[i].first), e2.f()(tg.pairs[i].second));
  for (std::size_t i = 0; i < bg.pairs.size(); ++i)
    s[i] = tg.index_of(e1.s()(bg.pairs[i].first), e2.s()(bg.pairs[i].second));
  Point pt(GroupHom::unchecked(tg.group, bg.group, std::move(f)),
           GroupHom::unchecked(bg.group, tg.group, std::move(s)));
  auto ext = make_split_extension(pt);
  auto first = SEMorphism::from_total(ext, e1, tg.p0(), bg.p0());
  auto second = SEMorphism::from_total(ext, e2, tg.p1(), bg.p1());
  return {std::move(ext), std::move(first), std::move(second)};
}

SEMorphism pullback_se_along_cartesian(SEMorphism const& m, PtMorphism const& cart) {
  if (!same_point(cart.target(), m.target().point()))
    throw Error(ErrorKind::NotCartesianInput, "cartesian square does not land in m's target");
  if (!is_P_cartesian(cart))
    throw Error(ErrorKind::NotCartesianInput, "square is not a pullback");
  auto along = SEMorphism::from_total(make_split_extension(cart.source()), m.target(),
                                      cart.on_total(), cart.on_base());
  return pullback_se(m, along).to_second;
}

}  // namespace catnorm
