#include "pmw/poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pmw/error.hpp"

namespace pmw {

namespace {

Mask bit(int i) { return Mask{1} << i; }

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

// Linear extension: a < b implies down-set(a) is a proper subset of down-set(b).
std::vector<int> linear_extension(const Poset& poset) {
  std::vector<int> order(poset.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return popcount(poset.down_set(a)) < popcount(poset.down_set(b));
  });
  return order;
}

}  // namespace

Poset Poset::from_covers(int n, std::span<const std::pair<int, int>> pairs) {
  if (n < 0 || n > kMaxGroundSet)
    throw Error(ErrorCode::GroundSetTooLarge, "ground set size " + std::to_string(n) + " outside [0, " +
                                                  std::to_string(kMaxGroundSet) + "]");
  Poset p;
  p.n_ = n;
  p.below_.resize(n);
  for (int i = 0; i < n; ++i) p.below_[i] = bit(i);
  for (auto [a, b] : pairs) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw Error(ErrorCode::OutOfRangeElement,
                  "relation " + std::to_string(a) + "<" + std::to_string(b) + " outside [1, " + std::to_string(n) + "]");
    if (a == b) throw Error(ErrorCode::CycleDetected, "element " + std::to_string(a) + " below itself");
    p.below_[b - 1] |= bit(a - 1);
  }
  // Transitive closure over down-sets.
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      Mask acc = p.below_[x];
      for (int y : elements_of(p.below_[x])) acc |= p.below_[y];
      if (acc != p.below_[x]) {
        p.below_[x] = acc;
        changed = true;
      }
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (p.leq(a, b) && p.leq(b, a))
        throw Error(ErrorCode::CycleDetected,
                    "elements " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " lie on a cycle");
  p.finish();
  return p;
}

Poset Poset::antichain(int n) { return from_covers(n, {}); }

Poset Poset::chain(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) pairs.emplace_back(i, i + 1);
  return from_covers(n, pairs);
}

void Poset::finish() {
  above_.assign(n_, 0);
  for (int b = 0; b < n_; ++b)
    for (int a : elements_of(below_[b])) above_[a] |= bit(b);
  covers_.clear();
  for (int b = 0; b < n_; ++b)
    for (int a : elements_of(below_[b] & ~bit(b))) {
      // a is covered by b iff no c strictly between them.
      const Mask between = above_[a] & below_[b] & ~bit(a) & ~bit(b);
      if (!between) covers_.emplace_back(a + 1, b + 1);
    }
  std::sort(covers_.begin(), covers_.end());
}

Poset Poset::dual() const {
  Poset d;
  d.n_ = n_;
  d.below_ = above_;
  d.finish();
  return d;
}

bool is_ideal(const Poset& poset, Mask subset) {
  if (subset & ~full_mask(poset.size())) return false;
  for (int x : elements_of(subset))
    if (poset.down_set(x) & ~subset) return false;
  return true;
}

Mask ideal_closure(const Poset& poset, Mask subset) {
  Mask out = 0;
  for (int x : elements_of(subset & full_mask(poset.size()))) out |= poset.down_set(x);
  return out;
}

std::vector<Mask> enumerate_ideals(const Poset& poset, std::size_t cap) {
  const std::vector<int> order = linear_extension(poset);
  std::vector<Mask> out;
  // Elements are decided in linear-extension order, so an element may be
  // added only when everything strictly below it is already in.
  auto dfs = [&](auto&& self, std::size_t k, Mask current) -> void {
    if (k == order.size()) {
      if (out.size() >= cap)
        throw Error(ErrorCode::IdealCountCapExceeded, "more than " + std::to_string(cap) + " order ideals");
      out.push_back(current);
      return;
    }
    const int x = order[k];
    self(self, k + 1, current);
    if ((poset.down_set(x) & ~bit(x) & ~current) == 0) self(self, k + 1, current | bit(x));
  };
  dfs(dfs, 0, 0);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Mask maximal_elements(const Poset& poset, Mask subset) {
  Mask out = 0;
  for (int x : elements_of(subset))
    if ((poset.up_set(x) & subset) == bit(x)) out |= bit(x);
  return out;
}

MaximalSplit maximal_split(const Poset& poset, Mask ideal) {
  if (!is_ideal(poset, ideal)) throw Error(ErrorCode::NotAnIdeal, "subset is not an order ideal");
  const Mask top = maximal_elements(poset, ideal);
  return {top, ideal & ~top};
}

std::vector<int> levels(const Poset& poset) {
  std::vector<int> level(poset.size(), 0);
  for (int x : linear_extension(poset))
    for (int y : elements_of(poset.down_set(x) & ~bit(x))) level[x] = std::max(level[x], level[y] + 1);
  return level;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.image.resize(n);
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

Mask Permutation::apply(Mask subset) const {
  Mask out = 0;
  for (int x : elements_of(subset)) out |= bit(image[x]);
  return out;
}

Permutation Permutation::compose(const Permutation& inner) const {
  Permutation out;
  out.image.resize(inner.image.size());
  for (std::size_t i = 0; i < inner.image.size(); ++i) out.image[i] = image[inner.image[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) out.image[image[i]] = static_cast<int>(i);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != static_cast<int>(i)) return false;
  return true;
}

bool is_automorphism(const Poset& poset, const Permutation& sigma) {
  const int n = poset.size();
  if (sigma.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : sigma.image) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (poset.leq(a, b) != poset.leq(sigma.image[a], sigma.image[b])) return false;
  return true;
}

std::vector<Permutation> automorphisms(const Poset& poset) {
  const int n = poset.size();
  if (n > kMaxGroundSet) throw Error(ErrorCode::GroundSetTooLarge, "automorphism search limited to 16 elements");
  const std::vector<int> level = levels(poset);
  std::vector<Permutation> out;
  std::vector<int> image(n, -1);
  Mask used = 0;
  auto fits = [&](int x, int c) {
    if (popcount(poset.down_set(x)) != popcount(poset.down_set(c)) ||
        popcount(poset.up_set(x)) != popcount(poset.up_set(c)) || level[x] != level[c])
      return false;
    for (int y = 0; y < x; ++y)
      if (poset.leq(y, x) != poset.leq(image[y], c) || poset.leq(x, y) != poset.leq(c, image[y])) return false;
    return true;
  };
  auto search = [&](auto&& self, int x) -> void {
    if (x == n) {
      out.push_back(Permutation{image});
      return;
    }
    for (int c = 0; c < n; ++c) {
      if ((used & bit(c)) || !fits(x, c)) continue;
      image[x] = c;
      used |= bit(c);
      self(self, x + 1);
      used &= ~bit(c);
    }
    image[x] = -1;
  };
  search(search, 0);
  return out;
}

std::vector<Permutation> cyclic_subgroup(const Permutation& generator) {
  std::vector<Permutation> out{Permutation::identity(generator.size())};
  for (Permutation p = generator; !p.is_identity(); p = generator.compose(p)) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct InducedInvariant {
  int down = 0;
  int up = 0;
  int level = 0;
  auto operator<=>(const InducedInvariant&) const = default;
};

std::vector<InducedInvariant> induced_invariants(const Poset& poset, const std::vector<int>& elems, Mask subset) {
  std::vector<InducedInvariant> inv(elems.size());
  // Elements come in increasing index order, which need not be a linear
  // extension, so levels are computed by relaxation.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    inv[i].down = popcount(poset.down_set(elems[i]) & subset);
    inv[i].up = popcount(poset.up_set(elems[i]) & subset);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j)
        if (poset.less(elems[j], elems[i]) && inv[i].level < inv[j].level + 1) {
          inv[i].level = inv[j].level + 1;
          changed = true;
        }
  }
  return inv;
}

}  // namespace

bool induced_isomorphic(const Poset& poset, Mask a, Mask b) {
  if (popcount(a) != popcount(b)) return false;
  if (a == b) return true;
  const std::vector<int> ea = elements_of(a), eb = elements_of(b);
  const auto ia = induced_invariants(poset, ea, a), ib = induced_invariants(poset, eb, b);
  {
    auto sa = ia, sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  const std::size_t k = ea.size();
  std::vector<int> image(k, -1);  // index into eb
  std::vector<bool> used(k, false);
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) return true;
    for (std::size_t c = 0; c < k; ++c) {
      if (used[c] || ia[i] != ib[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const int x = ea[i], y = ea[j], fx = eb[c], fy = eb[image[j]];
        ok = poset.leq(y, x) == poset.leq(fy, fx) && poset.leq(x, y) == poset.leq(fx, fy);
      }
      if (!ok) continue;
      image[i] = static_cast<int>(c);
      used[c] = true;
      if (self(self, i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return search(search, 0);
}

bool ideal_isomorphic(const Poset& poset, Mask i, Mask j) {
  if (!is_ideal(poset, i) || !is_ideal(poset, j)) throw Error(ErrorCode::NotAnIdeal, "subset is not an order ideal");
  return induced_isomorphic(poset, i, j);
}

std::vector<std::size_t> isomorphism_class_ids(const Poset& poset, std::span<const Mask> subsets) {
  std::vector<std::size_t> ids(subsets.size());
  std::vector<Mask> reps;
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    std::size_t id = reps.size();
    for (std::size_t r = 0; r < reps.size(); ++r)
      if (induced_isomorphic(poset, reps[r], subsets[s])) {
        id = r;
        break;
      }
    if (id == reps.size()) reps.push_back(subsets[s]);
    ids[s] = id;
  }
  return ids;
}

bool is_hierarchical(const Poset& poset) {
  const std::vector<int> level = levels(poset);
  for (int x = 0; x < poset.size(); ++x)
    for (int y = 0; y < poset.size(); ++y)
      if (x != y && poset.less(x, y) != (level[x] < level[y])) return false;
  return true;
}

std::vector<std::pair<Mask, Mask>> complement_isomorphism_violations(const Poset& poset, std::size_t cap) {
  const std::vector<Mask> ideals = enumerate_ideals(poset, cap);
  const Mask full = full_mask(poset.size());
  std::vector<Mask> complements(ideals.size());
  for (std::size_t i = 0; i < ideals.size(); ++i) complements[i] = full & ~ideals[i];
  // Isomorphism of complements in the dual poset is the same relation as in
  // the poset itself: reversing both orders preserves isomorphism.
  const auto id = isomorphism_class_ids(poset, ideals);
  const auto cid = isomorphism_class_ids(poset, complements);
  std::vector<std::pair<Mask, Mask>> out;
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = i + 1; j < ideals.size(); ++j)
      if ((id[i] == id[j]) != (cid[i] == cid[j])) out.emplace_back(ideals[i], ideals[j]);
  return out;
}

ComplementIsomorphism is_complement_isomorphism(const Poset& poset, std::size_t cap) {
  auto violations = complement_isomorphism_violations(poset, cap);
  ComplementIsomorphism r;
  if (!violations.empty()) {
    r.holds = false;
    r.witness = violations.front();
  }
  return r;
}

}  // namespace pmw
