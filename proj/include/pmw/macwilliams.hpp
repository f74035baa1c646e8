#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pmw/bigint.hpp"
#include "pmw/codes.hpp"
#include "pmw/gf.hpp"
#include "pmw/poset.hpp"
#include "pmw/relations.hpp"

namespace pmw {

/// The four disjointness conditions relating an ideal I of P and the
/// complement J^c of an ideal J (an ideal of P*). Maximal/nonmaximal parts of
/// J^c are taken in P*.
struct EmptinessConditions {
  bool support_all = false;   // supp(u) ∩ (J^c)_M = ∅ for every u in S_I
  bool support_some = false;  // ... for some u in S_I
  bool maximal = false;       // M(I) ∩ (J^c)_M = ∅
  bool ideal = false;         // I ∩ (J^c)_M = ∅
  bool nonmaximal = false;    // I_M ∩ J^c = ∅

  bool agree() const {
    return support_all == support_some && support_all == maximal && maximal == ideal && ideal == nonmaximal;
  }
};

EmptinessConditions ideal_emptiness_equiv(const Poset& poset, Mask ideal, Mask other_ideal);

/// sum over v in S_{J^c} of chi(u . v), for any u with <supp(u)>_P = `ideal`,
/// where `dual_ideal` = J^c is an ideal of P*. Always a rational integer:
///   (-1)^{|I ∩ J^c|} (q-1)^{|M(J^c)| - |I ∩ J^c|} q^{|(J^c)_M|}  if I_M ∩ J^c = ∅,
///   0                                                          otherwise.
BigInt char_sum_closed(const Poset& poset, std::uint32_t q, Mask ideal, Mask dual_ideal);

enum class MatrixKind { P, Q };
enum class Strictness { Strict, Lenient };

/// P_E has rows indexed by the classes of E* and columns by the classes of E,
/// with p[J^c class][I class] = sum over v in S_{J^c class} of chi(u . v) for
/// u in S_{I class}. Q_{E*} has rows indexed by E and columns by E*, with
/// q[I class][J^c class] = sum over u in S_{I class} of chi(u . v) for v in
/// S_{J^c class}.
///
/// With these entries the transforms read
///   W(C^perp, P*, E*) = (1/|C|) W(C, P, E) P_E^T
///   W(C, P, E)        = (1/|C^perp|) W(C^perp, P*, E*) Q_{E*}^T.
struct ClassMatrix {
  MatrixKind which;
  IdealPartition rows;
  IdealPartition cols;
  BigMatrix entries;
  /// False when some entry depends on the member ideal chosen within a class;
  /// the entries then come from the canonical representatives.
  bool representative_independent = true;
};

ClassMatrix pq_matrix(std::uint32_t q, const IdealPartition& partition, MatrixKind which,
                      Strictness strictness = Strictness::Strict);

/// P_k(x; n) = sum_j (-1)^j (q-1)^{k-j} C(x, j) C(n-x, k-j).
BigInt krawtchouk(int k, int x, int n, std::uint32_t q);

enum class Condition { A, B };

/// A failure of the class-constancy conditions. For condition A, `klass`
/// indexes E, the members are ideals of P and `across` indexes E*; for
/// condition B the roles are swapped.
struct MacWilliamsWitness {
  Condition condition;
  std::size_t klass;
  Mask first;
  Mask second;
  std::size_t across;
  BigInt first_sum;
  BigInt second_sum;
};

struct MacWilliamsVerdict {
  bool holds = true;
  std::optional<MacWilliamsWitness> witness;
};

/// Decides whether E is of MacWilliams type over F_q: for each class, every
/// nonzero vector in its sphere union gives the same character sum over each
/// dual class, and symmetrically for E*. Zero vectors are excluded: they span
/// no one-dimensional code.
MacWilliamsVerdict check_macwilliams_type(std::uint32_t q, const IdealPartition& partition);

struct IdentityReport {
  WeightDistribution code;        // W(C, P, E)
  WeightDistribution dual;        // W(C^perp, P*, E*), by enumeration
  BigVector dual_from_transform;  // (1/|C|) W(C) P_E^T
  BigVector code_from_transform;  // (1/|C^perp|) W(C^perp) Q_{E*}^T
  BigInt code_size;
  BigInt dual_size;
  bool holds_a = false;
  bool holds_b = false;

  bool pass() const { return holds_a && holds_b; }
};

IdentityReport verify_identity(const GeneratorMatrix& g, const IdealPartition& partition,
                               std::size_t cap = kDefaultCodewordCap);

struct OneDimDistributions {
  WeightDistribution code;
  WeightDistribution dual;
};

/// Weight distributions of the code spanned by a nonzero `u` and of its dual,
/// from the closed forms (no enumeration).
OneDimDistributions one_dim_distributions(const Field& field, const Vector& u, const IdealPartition& partition);

/// |I class| p / ((q-1)^{|M(J^c)|} q^{|(J^c)_M|}) = |J^c class| q / ((q-1)^{|M(I)|} q^{|I_M|})
/// for every class pair, cross-multiplied.
bool reciprocity_check(std::uint32_t q, const IdealPartition& partition);

struct StabilizerReport {
  std::size_t group_order = 0;
  std::size_t orbit = 0;            // |I class| under E_H
  std::size_t dual_orbit = 0;       // |J^c class| under E_H*
  std::size_t stabilizer = 0;       // |{s in H : s(I) = I}|
  std::size_t dual_stabilizer = 0;  // |{s in H : s(J^c) = J^c}|
  bool orbit_stabilizer = false;
  bool identity = false;

  bool holds() const { return orbit_stabilizer && identity; }
};

StabilizerReport stabilizer_identity(std::uint32_t q, const Poset& poset, std::span<const Permutation> group,
                                     Mask ideal, Mask dual_ideal);

/// Code spanned by the unit vectors on `subset`: {x : supp(x) ⊆ subset}.
GeneratorMatrix support_code(const Field& field, int n, Mask subset);

struct SupportCodeWitness {
  Mask first;
  Mask second;
  WeightDistribution first_code;
  WeightDistribution second_code;
  WeightDistribution first_dual;
  WeightDistribution second_dual;
};

/// Searches ideal pairs I1, I2 in a common class of E for support codes
/// C_i = {x : supp(x) ⊆ I_i} with equal E-distributions but different
/// E*-distributions of their duals.
std::optional<SupportCodeWitness> support_code_witness(const Field& field, const IdealPartition& partition);

}  // namespace pmw
