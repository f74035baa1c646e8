#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pmw {

/// Subsets of the ground set. Bit i stands for element i + 1.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSet = 16;
inline constexpr std::size_t kDefaultIdealCap = std::size_t{1} << 22;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Canonical order on subsets: cardinality first, then the bitmask value.
inline bool canonical_less(Mask a, Mask b) {
  const int ca = popcount(a), cb = popcount(b);
  return ca != cb ? ca < cb : a < b;
}

/// A finite poset on {0, ..., n-1}. Externally (files, printing) elements
/// are 1-based.
class Poset {
 public:
  /// Pairs are 1-based (a, b) meaning a < b; they need not be covers, the
  /// order is the reflexive-transitive closure.
  static Poset from_covers(int n, std::span<const std::pair<int, int>> pairs);
  static Poset antichain(int n);
  static Poset chain(int n);

  int size() const noexcept { return n_; }
  /// 0-based: a <= b.
  bool leq(int a, int b) const { return (below_[b] >> a) & 1u; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  /// Elements <= a (including a).
  Mask down_set(int a) const { return below_[a]; }
  /// Elements >= a (including a).
  Mask up_set(int a) const { return above_[a]; }
  /// Transitive reduction as 1-based pairs, sorted.
  const std::vector<std::pair<int, int>>& covers() const noexcept { return covers_; }

  Poset dual() const;

  bool operator==(const Poset& other) const { return n_ == other.n_ && below_ == other.below_; }

 private:
  Poset() = default;
  void finish();

  int n_ = 0;
  std::vector<Mask> below_;
  std::vector<Mask> above_;
  std::vector<std::pair<int, int>> covers_;
};

bool is_ideal(const Poset& poset, Mask subset);
/// The smallest ideal containing `subset`.
Mask ideal_closure(const Poset& poset, Mask subset);

/// All order ideals in canonical order (cardinality, then bitmask).
std::vector<Mask> enumerate_ideals(const Poset& poset, std::size_t cap = kDefaultIdealCap);

struct MaximalSplit {
  Mask maximal = 0;     // M(I)
  Mask nonmaximal = 0;  // I_M
};
MaximalSplit maximal_split(const Poset& poset, Mask ideal);

/// Maximal elements of an arbitrary subset under the induced order.
Mask maximal_elements(const Poset& poset, Mask subset);

/// Longest chain strictly below each element.
std::vector<int> levels(const Poset& poset);

/// A permutation of {0, ..., n-1}; image[i] is the image of i.
struct Permutation {
  std::vector<int> image;

  static Permutation identity(int n);
  int size() const noexcept { return static_cast<int>(image.size()); }
  Mask apply(Mask subset) const;
  Permutation compose(const Permutation& inner) const;  // this ∘ inner
  Permutation inverse() const;
  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;
};

bool is_automorphism(const Poset& poset, const Permutation& sigma);
/// The whole automorphism group, in lexicographic order of image vectors.
std::vector<Permutation> automorphisms(const Poset& poset);
/// {sigma^k}, sorted.
std::vector<Permutation> cyclic_subgroup(const Permutation& generator);

/// Order isomorphism between the induced subposets on two arbitrary subsets.
bool induced_isomorphic(const Poset& poset, Mask a, Mask b);
/// As above, for order ideals (checked).
bool ideal_isomorphic(const Poset& poset, Mask i, Mask j);
/// Groups subsets by isomorphism of their induced subposets. Ids are dense
/// and numbered in order of first appearance.
std::vector<std::size_t> isomorphism_class_ids(const Poset& poset, std::span<const Mask> subsets);

bool is_hierarchical(const Poset& poset);

struct ComplementIsomorphism {
  bool holds = true;
  /// Smallest ideal pair (canonical order) with I ≅ J but I^c ≇ J^c or vice versa.
  std::optional<std::pair<Mask, Mask>> witness;
};
ComplementIsomorphism is_complement_isomorphism(const Poset& poset, std::size_t cap = kDefaultIdealCap);
/// Every violating pair (I, J) with I before J in canonical order.
std::vector<std::pair<Mask, Mask>> complement_isomorphism_violations(const Poset& poset,
                                                                     std::size_t cap = kDefaultIdealCap);

}  // namespace pmw
