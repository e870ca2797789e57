#pragma once

#include <cstdint>
#include <vector>

#include "catnorm/finalg/group.hpp"
#include "catnorm/finalg/subgroup.hpp"
#include "catnorm/report.hpp"

namespace catnorm {

using mask_t = std::uint64_t;

/// A topology on {0..n-1}, n <= 64, stored by the minimal open neighbourhood
/// of each point; the opens are exactly the unions of those.
class FiniteTopology {
 public:
  static FiniteTopology discrete(int n);
  static FiniteTopology indiscrete(int n);
  /// Throws Error{NotTopology} unless the family contains ∅ and the carrier
  /// and is closed under pairwise unions and intersections.
  static FiniteTopology from_opens(int n, std::vector<mask_t> const& opens);
  /// Opens are the unions of the classes of a partition (e.g. cosets).
  static FiniteTopology from_partition(int n, std::vector<int> const& block_of);
  /// Product topology on pairs labelled a * |B| + b; needs |A|·|B| <= 64.
  static FiniteTopology product(FiniteTopology const& a, FiniteTopology const& b);
  /// Subspace topology on `points`, relabelled 0..k-1 in the given order.
  FiniteTopology subspace(std::vector<elem_t> const& points) const;

  int size() const { return n_; }
  mask_t carrier() const { return n_ == 64 ? ~mask_t{0} : (mask_t{1} << n_) - 1; }
  mask_t minimal_open(elem_t x) const { return minimal_[x]; }
  bool is_open(mask_t m) const;
  /// Every open set, sorted. Throws Error{InvariantViolation} past 2^20 opens.
  std::vector<mask_t> opens() const;
  bool is_discrete() const;
  bool is_indiscrete() const;

  friend bool operator==(FiniteTopology const& a, FiniteTopology const& b) {
    return a.n_ == b.n_ && a.minimal_ == b.minimal_;
  }

 private:
  int n_ = 0;
  std::vector<mask_t> minimal_;
};

/// Preimage of every open of `tgt` is open in `src`.
bool is_continuous(std::vector<elem_t> const& map, FiniteTopology const& src, FiniteTopology const& tgt);
/// The same test through minimal neighbourhoods: f(min(x)) ⊆ min(f(x)).
bool is_continuous_local(std::vector<elem_t> const& map, FiniteTopology const& src,
                         FiniteTopology const& tgt);

/// A group with a topology making multiplication and inversion continuous.
class TopGroup {
 public:
  /// Throws Error{NotTopologicalGroup}.
  TopGroup(FiniteGroup group, FiniteTopology topology);

  FiniteGroup const& group() const { return group_; }
  FiniteTopology const& topology() const { return topology_; }

 private:
  FiniteGroup group_;
  FiniteTopology topology_;
};

/// Discrete, indiscrete and every left or right coset topology of a subgroup
/// that makes G a topological group, without repeats.
std::vector<TopGroup> topological_groups(FiniteGroup const& g);

/// A subgroup A of B with its own topology, on the local labels of A.
struct TopSubgroup {
  Subgroup sub;
  FiniteTopology topology;
  static TopSubgroup with_subspace(Subgroup const& s, TopGroup const& b);
};

struct NormalityVerdicts {
  bool by_conjugation_map = false;  // normal subgroup and φ(a, b) = b^-1 a b continuous
  bool by_opens = false;            // conditions (a) and (b) over every open of A
};
/// Throws Error{NotSubgroup} when A's subgroup lives in another group or its
/// topology has the wrong carrier.
NormalityVerdicts normal_topsub_verdicts(TopSubgroup const& a, TopGroup const& b);
/// Throws Error{InvariantViolation} when the two verdicts differ.
bool is_normal_topsub(TopSubgroup const& a, TopGroup const& b);

/// Condition (b): every a in an open U of A has an open V ∋ 1 of B and an
/// open U_a ∋ a of A with b^-1 U_a b ⊆ U for all b in V.
bool condition_b(TopSubgroup const& a, TopGroup const& b);

/// N = { b : bUb^-1 and b^-1Ub are open in A for every open U of A } with the
/// subspace topology. Throws Error{ConditionBFails}.
TopSubgroup top_normalizer(TopSubgroup const& a, TopGroup const& b);

/// A is normal in N (both routes), and every subgroup of B containing A in
/// which A is normal, with the subspace topology, lies inside N.
Report verify_top_normalizer(TopSubgroup const& a, TopGroup const& b, TopSubgroup const& n);

}  // namespace catnorm
