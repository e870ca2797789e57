#pragma once

#include <optional>
#include <string>

#include "catnorm/finalg/subgroup.hpp"
#include "catnorm/normalizer/normalizer.hpp"
#include "catnorm/ptcat/cartesian.hpp"
#include "catnorm/ptcat/catalog.hpp"
#include "catnorm/report.hpp"

namespace catnorm {

/// Witness that t: T̄ -> T and the subgroup U of T commute: phi(x, u) = t(x)·u,
/// a hom out of T̄ × U (labels x·|U| + local index of u).
struct Cooperator {
  GroupHom t;
  Subgroup v;
  GroupHom phi;
};

/// Present iff every element of t's image commutes with every element of U.
std::optional<Cooperator> commutes(GroupHom const& t, Subgroup const& v);

/// ψ: T̄ × U -> R with d0ψ = t p0, d1ψ = φ, ψ(0,1) = (0,u), ψ(1,0) = s0 t.
/// Throws Error{NotNormal} unless c.v is normal to rel.r.
GroupHom cooperator_to_psi(Cooperator const& c, RelationExtension const& rel);
/// φ = d1 ψ, with t = d0 ψ (1,0) on T̄. Throws Error{NotMorphism} when ψ is
/// not of the shape above.
Cooperator psi_to_cooperator(GroupHom const& psi, RelationExtension const& rel,
                             FiniteGroup const& tbar);

struct CentralizerResult {
  Subgroup Z;
  GroupHom zeta;      // Z.as_group() -> T
  Subgroup via_pair;  // normalizer of {(u,u)} in T×T pulled back along (0,1)
  Subgroup via_scan;  // { t : tu = ut }
  bool agree() const { return via_pair == via_scan; }
};
CentralizerResult centralizer_mono(Subgroup const& v);

/// Every hom out of a catalog group that commutes with v factors uniquely
/// through ζ_v, and only those do.
Report verify_centralizer_universal(Subgroup const& v, CentralizerResult const& c,
                                    Catalog const& cat);

/// Largest congruence whose normal subgroup commutes elementwise with that of R.
Congruence smith_centralizer(Congruence const& r);

struct DistinctiveRelation {
  Point point;
  Congruence D_X;
  Congruence D_Y;
};

/// Greatest pair of congruences forming a relation on the point whose legs
/// are pullback squares, found by scanning congruence pairs.
DistinctiveRelation distinctive_relation_by_scan(Point const& p);
/// Read off the lift above the diagonal of K[f] into the square of the point:
/// R_Y = { (y, y') : s(y), s(y') act alike on K[f] }, R_X those pairs over R_Y
/// with equal kernel parts.
DistinctiveRelation distinctive_relation_by_lift(Point const& p);
/// Both routes; throws Error{InvariantViolation} when they differ.
DistinctiveRelation distinctive_relation(Point const& p);

struct EccentricVerdicts {
  bool distinctive_discrete = false;  // D[f,s] = Δ
  bool preimage_discrete = false;     // s^-1(Z[R[f]]) = Δ_Y
  bool action_injective = false;      // Y -> Aut(K[f]) injective
  bool agree() const {
    return distinctive_discrete == preimage_discrete && preimage_discrete == action_injective;
  }
};
EccentricVerdicts eccentric_verdicts(Point const& p);

/// Both characterizations; throws Error{InvariantViolation} when they differ.
bool is_eccentric(Point const& p);

struct FaithfulVerdict {
  bool by_catalog = false;        // no two parallel cartesian maps agree on kernels
  bool action_injective = false;  // Y -> Aut(K[f]) injective
  std::string diagnostic;         // witness of non-faithfulness or of disagreement
};
FaithfulVerdict faithful_verdict(Point const& p, Catalog const& cat);
/// Throws Error{InvariantViolation} carrying the diagnostic when the routes differ.
bool is_faithful(Point const& p, Catalog const& cat);

struct FaithfulCover {
  Point cover;
  PtMorphism map;
};
/// Quotient of p by its distinctive relation.
FaithfulCover faithful_cover(Point const& p);

/// normalization(Z[R]) = ζ_u and it is normal. Throws Error{NotNormal} unless
/// u is normal to R.
bool normcent_check(Subgroup const& u, Congruence const& r);

/// The unique h' with w h' = t. Throws Error{NotCommuting} when t does not
/// commute with v and Error{FactorizationMissing} when no h' exists.
GroupHom acc_factor_check(Subgroup const& v, GroupHom const& t);

}  // namespace catnorm
