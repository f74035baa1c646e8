#include "pmw/relations.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pmw/error.hpp"

namespace pmw {

std::string_view to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::Cardinality: return "cardinality";
    case RelationKind::Automorphism: return "aut";
    case RelationKind::Isomorphism: return "iso";
    case RelationKind::Custom: return "custom";
  }
  return "unknown";
}

IdealPartition::IdealPartition(Poset poset, std::vector<Mask> ideals, std::vector<std::vector<std::size_t>> blocks,
                               RelationKind kind)
    : poset_(std::move(poset)), kind_(kind), ideals_(std::move(ideals)), blocks_(std::move(blocks)) {
  for (auto& b : blocks_) std::sort(b.begin(), b.end());
  std::sort(blocks_.begin(), blocks_.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  class_of_.assign(ideals_.size(), 0);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (std::size_t i : blocks_[b]) class_of_[i] = b;
}

namespace {

// Groups ideal indices by an arbitrary key; used by the rule-based builders.
template <typename Key>
std::vector<std::vector<std::size_t>> group_by(const std::vector<Key>& keys) {
  std::map<Key, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < keys.size(); ++i) groups[keys[i]].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [k, v] : groups) out.push_back(std::move(v));
  return out;
}

}  // namespace

IdealPartition IdealPartition::from_blocks(const Poset& poset, const std::vector<std::vector<Mask>>& blocks,
                                           RelationKind kind, std::size_t cap) {
  std::vector<Mask> ideals = enumerate_ideals(poset, cap);
  std::vector<std::vector<std::size_t>> index_blocks;
  std::vector<bool> seen(ideals.size(), false);
  for (const auto& block : blocks) {
    if (block.empty()) throw Error(ErrorCode::InvalidPartition, "empty block");
    std::vector<std::size_t> idx;
    for (Mask m : block) {
      auto it = std::lower_bound(ideals.begin(), ideals.end(), m, canonical_less);
      if (it == ideals.end() || *it != m) throw Error(ErrorCode::NotAnIdeal, "block member is not an order ideal");
      const auto i = static_cast<std::size_t>(it - ideals.begin());
      if (seen[i]) throw Error(ErrorCode::InvalidPartition, "blocks overlap");
      seen[i] = true;
      idx.push_back(i);
    }
    index_blocks.push_back(std::move(idx));
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw Error(ErrorCode::InvalidPartition, "blocks do not cover every ideal");
  return IdealPartition(poset, std::move(ideals), std::move(index_blocks), kind);
}

std::optional<std::size_t> IdealPartition::index_of(Mask ideal) const {
  auto it = std::lower_bound(ideals_.begin(), ideals_.end(), ideal, canonical_less);
  if (it == ideals_.end() || *it != ideal) return std::nullopt;
  return static_cast<std::size_t>(it - ideals_.begin());
}

std::size_t IdealPartition::class_of_ideal(Mask ideal) const {
  auto i = index_of(ideal);
  if (!i) throw Error(ErrorCode::NotAnIdeal, "subset is not an order ideal of the partitioned poset");
  return class_of_[*i];
}

std::vector<Mask> IdealPartition::block_ideals(std::size_t b) const {
  std::vector<Mask> out;
  for (std::size_t i : blocks_.at(b)) out.push_back(ideals_[i]);
  return out;
}

IdealPartition partition_cardinality(const Poset& poset, std::size_t cap) {
  std::vector<Mask> ideals = enumerate_ideals(poset, cap);
  std::vector<int> keys;
  for (Mask m : ideals) keys.push_back(popcount(m));
  auto blocks = group_by(keys);
  return IdealPartition::from_blocks(poset, [&] {
    std::vector<std::vector<Mask>> b;
    for (auto& blk : blocks) {
      b.emplace_back();
      for (auto i : blk) b.back().push_back(ideals[i]);
    }
    return b;
  }(), RelationKind::Cardinality, cap);
}

void validate_subgroup(const Poset& poset, std::span<const Permutation> group) {
  for (const auto& s : group)
    if (!is_automorphism(poset, s)) throw Error(ErrorCode::NotAutomorphisms, "permutation is not an automorphism");
  std::set<Permutation> members(group.begin(), group.end());
  if (!members.count(Permutation::identity(poset.size())))
    throw Error(ErrorCode::NotASubgroup, "subgroup lacks the identity");
  for (const auto& a : members)
    for (const auto& b : members)
      if (!members.count(a.compose(b))) throw Error(ErrorCode::NotASubgroup, "not closed under composition");
}

IdealPartition partition_aut(const Poset& poset, std::span<const Permutation> group, std::size_t cap) {
  validate_subgroup(poset, group);
  std::vector<Mask> ideals = enumerate_ideals(poset, cap);
  // Orbit key: the canonically smallest image of the ideal.
  std::vector<Mask> keys;
  for (Mask m : ideals) {
    Mask best = m;
    for (const auto& s : group) {
      Mask img = s.apply(m);
      if (canonical_less(img, best)) best = img;
    }
    keys.push_back(best);
  }
  std::vector<std::vector<Mask>> blocks;
  for (auto& blk : group_by(keys)) {
    blocks.emplace_back();
    for (auto i : blk) blocks.back().push_back(ideals[i]);
  }
  return IdealPartition::from_blocks(poset, blocks, RelationKind::Automorphism, cap);
}

IdealPartition partition_iso(const Poset& poset, std::size_t cap) {
  std::vector<Mask> ideals = enumerate_ideals(poset, cap);
  const auto ids = isomorphism_class_ids(poset, ideals);
  std::vector<std::vector<Mask>> blocks;
  for (auto& blk : group_by(ids)) {
    blocks.emplace_back();
    for (auto i : blk) blocks.back().push_back(ideals[i]);
  }
  return IdealPartition::from_blocks(poset, blocks, RelationKind::Isomorphism, cap);
}

IdealPartition partition_discrete(const Poset& poset, std::size_t cap) {
  std::vector<std::vector<Mask>> blocks;
  for (Mask m : enumerate_ideals(poset, cap)) blocks.push_back({m});
  return IdealPartition::from_blocks(poset, blocks, RelationKind::Custom, cap);
}

IdealPartition dual_partition(const IdealPartition& partition) {
  const Mask full = full_mask(partition.poset().size());
  std::vector<std::vector<Mask>> blocks;
  for (std::size_t b = 0; b < partition.num_blocks(); ++b) {
    blocks.emplace_back();
    for (Mask m : partition.block_ideals(b)) blocks.back().push_back(full & ~m);
  }
  // The ideal family of the dual poset has the same size, so the original
  // cap is never the binding constraint here.
  return IdealPartition::from_blocks(partition.poset().dual(), blocks, partition.kind(),
                                     partition.ideals().size() + 1);
}

std::optional<bool> dual_respects_rule(const IdealPartition& partition) {
  switch (partition.kind()) {
    case RelationKind::Cardinality:
      return dual_partition(partition) == partition_cardinality(partition.poset().dual());
    case RelationKind::Isomorphism:
      return dual_partition(partition) == partition_iso(partition.poset().dual());
    case RelationKind::Automorphism: {
      // The group is not stored; Aut(P*) = Aut(P) and complementation commutes
      // with every permutation, so H-orbits of complements are complements of
      // H-orbits.
      return true;
    }
    case RelationKind::Custom:
      return std::nullopt;
  }
  return std::nullopt;
}

bool refines(const IdealPartition& finer, const IdealPartition& coarser) {
  if (!(finer.poset() == coarser.poset())) throw Error(ErrorCode::PosetMismatch, "partitions of different posets");
  for (const auto& block : finer.blocks()) {
    const std::size_t target = coarser.class_of(block.front());
    for (std::size_t i : block)
      if (coarser.class_of(i) != target) return false;
  }
  return true;
}

}  // namespace pmw
