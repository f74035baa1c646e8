#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pmw/poset.hpp"

namespace pmw {

enum class RelationKind { Cardinality, Automorphism, Isomorphism, Custom };

std::string_view to_string(RelationKind kind);

/// A partition of the order-ideal family of a poset.
///
/// Ideals are indexed in canonical order (see `enumerate_ideals`). Blocks are
/// sorted and ordered by their first member, i.e. by (cardinality, bitmask) of
/// their smallest ideal; this block order indexes every weight vector and
/// every class matrix.
class IdealPartition {
 public:
  /// Validates that `blocks` (ideal bitmasks) partition the ideal family of
  /// `poset` and canonicalizes their order.
  static IdealPartition from_blocks(const Poset& poset, const std::vector<std::vector<Mask>>& blocks,
                                    RelationKind kind = RelationKind::Custom, std::size_t cap = kDefaultIdealCap);

  const Poset& poset() const noexcept { return poset_; }
  RelationKind kind() const noexcept { return kind_; }
  const std::vector<Mask>& ideals() const noexcept { return ideals_; }
  std::size_t num_blocks() const noexcept { return blocks_.size(); }
  /// Member ideal indices of a block, ascending.
  const std::vector<std::size_t>& block(std::size_t b) const { return blocks_.at(b); }
  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
  std::size_t class_of(std::size_t ideal_index) const { return class_of_.at(ideal_index); }

  /// Index of an ideal in the canonical list; nullopt if `ideal` is not one.
  std::optional<std::size_t> index_of(Mask ideal) const;
  /// Block containing `ideal`; throws NotAnIdeal for other subsets.
  std::size_t class_of_ideal(Mask ideal) const;
  /// Smallest member ideal of a block.
  Mask representative(std::size_t b) const { return ideals_[blocks_.at(b).front()]; }
  std::vector<Mask> block_ideals(std::size_t b) const;

  bool operator==(const IdealPartition& other) const {
    return poset_ == other.poset_ && blocks_ == other.blocks_;
  }

 private:
  IdealPartition(Poset poset, std::vector<Mask> ideals, std::vector<std::vector<std::size_t>> blocks,
                 RelationKind kind);

  Poset poset_;
  RelationKind kind_;
  std::vector<Mask> ideals_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> class_of_;
};

/// E_C: ideals grouped by cardinality.
IdealPartition partition_cardinality(const Poset& poset, std::size_t cap = kDefaultIdealCap);

/// Verifies that `group` is a subgroup of Aut(poset): every element an
/// automorphism, identity present, closed under composition.
void validate_subgroup(const Poset& poset, std::span<const Permutation> group);

/// E_H: orbits of a subgroup H of Aut(poset) on the ideal family.
IdealPartition partition_aut(const Poset& poset, std::span<const Permutation> group,
                             std::size_t cap = kDefaultIdealCap);

/// E_S: ideals grouped by isomorphism of the induced subposets.
IdealPartition partition_iso(const Poset& poset, std::size_t cap = kDefaultIdealCap);

/// The partition of I(P*) whose blocks are the complements of the blocks of
/// `partition`. Involutive.
IdealPartition dual_partition(const IdealPartition& partition);

/// Whether the rule defining `partition` carries over to the complements: the
/// dual partition equals the same rule applied on the dual poset. Always true
/// for cardinality and automorphism partitions; for isomorphism partitions it
/// is complement-isomorphism of the poset. Custom partitions have no rule.
std::optional<bool> dual_respects_rule(const IdealPartition& partition);

/// Every block of `finer` lies inside a block of `coarser`.
bool refines(const IdealPartition& finer, const IdealPartition& coarser);

/// The partition into singletons.
IdealPartition partition_discrete(const Poset& poset, std::size_t cap = kDefaultIdealCap);

}  // namespace pmw
