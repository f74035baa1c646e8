#pragma once

// Brute-force reference implementations. Everything here enumerates vectors
// directly and recomputes closures from the order relation; nothing is
// shared with the closed-form code paths beyond field arithmetic.

#include <cstddef>
#include <optional>
#include <vector>

#include "pmw/codes.hpp"
#include "pmw/gf.hpp"
#include "pmw/poset.hpp"
#include "pmw/relations.hpp"

namespace pmw::oracle {

inline constexpr std::size_t kDefaultSpaceCap = std::size_t{1} << 20;

/// sum over v with <supp(v)>_{P*} = `dual_ideal` of chi(u . v), by scanning F_q^n.
CycSum char_sum_brute(const Poset& poset, const Field& field, const Vector& u, Mask dual_ideal,
                      std::size_t cap = kDefaultSpaceCap);

/// W(C^perp, P*, E*) from the character triple sum over C and the dual
/// sphere classes.
WeightDistribution dual_dist_brute(const GeneratorMatrix& g, const IdealPartition& partition,
                                   std::size_t cap = kDefaultSpaceCap);

/// Every subspace of F_q^n exactly once, as reduced echelon generators.
std::vector<GeneratorMatrix> all_subspaces(const Field& field, int n);

struct DefinitionVerdict {
  bool holds = true;
  /// Indices into all_subspaces(): two codes agreeing on one side of the
  /// duality and differing on the other.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Direct test over all pairs of linear codes: W(C1, P, E) = W(C2, P, E) iff
/// W(C1^perp, P*, E*) = W(C2^perp, P*, E*).
DefinitionVerdict definition_check(const Field& field, const IdealPartition& partition);

}  // namespace pmw::oracle
