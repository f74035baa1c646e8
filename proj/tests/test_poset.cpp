#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "corpus.hpp"
#include "pmw/error.hpp"
#include "pmw/poset.hpp"

using namespace pmw;

namespace {

Mask m(std::initializer_list<int> elems) {
  Mask out = 0;
  for (int e : elems) out |= Mask{1} << (e - 1);
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::vector<Permutation> out;
  do out.push_back(Permutation{image});
  while (std::next_permutation(image.begin(), image.end()));
  return out;
}

// Isomorphism of induced subposets by trying every bijection.
bool brute_isomorphic(const Poset& p, Mask a, Mask b) {
  if (popcount(a) != popcount(b)) return false;
  std::vector<int> xs, ys;
  for (int i = 0; i < p.size(); ++i) {
    if (a >> i & 1u) xs.push_back(i);
    if (b >> i & 1u) ys.push_back(i);
  }
  do {
    bool ok = true;
    for (std::size_t i = 0; i < xs.size() && ok; ++i)
      for (std::size_t j = 0; j < xs.size() && ok; ++j) ok = p.leq(xs[i], xs[j]) == p.leq(ys[i], ys[j]);
    if (ok) return true;
  } while (std::next_permutation(ys.begin(), ys.end()));
  return false;
}

}  // namespace

TEST_CASE("labeled poset counts") {
  CHECK(corpus::labeled_posets(1).size() == 1);
  CHECK(corpus::labeled_posets(2).size() == 3);
  CHECK(corpus::labeled_posets(3).size() == 19);
  CHECK(corpus::labeled_posets(4).size() == 219);
}

TEST_CASE("construction and closure") {
  const std::vector<std::pair<int, int>> rel{{1, 2}, {2, 3}};
  const Poset p = Poset::from_covers(3, rel);
  CHECK(p.leq(0, 2));
  CHECK_FALSE(p.leq(2, 0));
  CHECK(p == Poset::chain(3));
  CHECK(p.covers() == rel);
  const std::vector<std::pair<int, int>> redundant{{1, 2}, {2, 3}, {1, 3}};
  CHECK(Poset::from_covers(3, redundant).covers() == rel);

  const std::vector<std::pair<int, int>> cycle{{1, 2}, {2, 1}};
  CHECK_THROWS_AS(Poset::from_covers(2, cycle), Error);
  try {
    Poset::from_covers(2, cycle);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CycleDetected);
  }
  const std::vector<std::pair<int, int>> bad{{1, 4}};
  CHECK_THROWS_AS(Poset::from_covers(3, bad), Error);
  CHECK_THROWS_AS(Poset::antichain(17), Error);
}

TEST_CASE("ideal enumeration") {
  CHECK(enumerate_ideals(Poset::antichain(4)).size() == 16);
  CHECK(enumerate_ideals(Poset::chain(5)).size() == 6);
  const auto ideals = enumerate_ideals(corpus::chain_plus_pair());
  REQUIRE(ideals.size() == 12);
  CHECK(ideals.front() == 0);
  CHECK(ideals[1] == m({1}));
  CHECK(ideals[2] == m({4}));
  CHECK(ideals.back() == m({1, 2, 3, 4, 5}));
  CHECK(std::is_sorted(ideals.begin(), ideals.end(), canonical_less));
  CHECK_THROWS_AS(enumerate_ideals(Poset::antichain(12), 100), Error);
}

TEST_CASE("ideal enumeration matches subset filtering on the corpus") {
  for (const auto& p : corpus::labeled_posets_up_to(4)) {
    std::vector<Mask> brute;
    for (Mask s = 0; s <= full_mask(p.size()); ++s) {
      bool closed = true;
      for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
          if ((s >> a & 1u) && p.leq(b, a) && !(s >> b & 1u)) closed = false;
      if (closed) brute.push_back(s);
    }
    std::sort(brute.begin(), brute.end(), canonical_less);
    CHECK(enumerate_ideals(p) == brute);
  }
}

TEST_CASE("maximal split and closures") {
  const Poset p = corpus::chain_plus_pair();
  const auto split = maximal_split(p, m({1, 2, 4}));
  CHECK(split.maximal == m({2, 4}));
  CHECK(split.nonmaximal == m({1}));
  CHECK(ideal_closure(p, m({3})) == m({1, 2, 3}));
  CHECK(is_ideal(p, m({1, 4, 5})));
  CHECK_FALSE(is_ideal(p, m({2})));
  CHECK_THROWS_AS(maximal_split(p, m({2})), Error);
  CHECK(levels(p) == std::vector<int>{0, 1, 2, 0, 1});
}

TEST_CASE("dual poset and complements") {
  for (const auto& p : corpus::labeled_posets_up_to(4)) {
    CHECK(p.dual().dual() == p);
    const Poset d = p.dual();
    for (Mask i : enumerate_ideals(p)) CHECK(is_ideal(d, full_mask(p.size()) & ~i));
  }
}

TEST_CASE("automorphism groups") {
  CHECK(automorphisms(Poset::antichain(4)).size() == 24);
  CHECK(automorphisms(Poset::chain(4)).size() == 1);
  CHECK(automorphisms(corpus::chain_plus_pair()).size() == 1);
  const auto aut = automorphisms(corpus::two_chains());
  REQUIRE(aut.size() == 2);
  CHECK(aut[1].image == std::vector<int>{1, 0, 3, 2});
  for (const auto& p : corpus::labeled_posets_up_to(4)) {
    std::vector<Permutation> brute;
    for (const auto& s : all_permutations(p.size()))
      if (is_automorphism(p, s)) brute.push_back(s);
    CHECK(automorphisms(p) == brute);
  }
}

TEST_CASE("permutations") {
  const Permutation a{{1, 2, 0}};
  CHECK(a.compose(a.inverse()).is_identity());
  CHECK(a.compose(a).image == std::vector<int>{2, 0, 1});
  CHECK(a.apply(m({1})) == m({2}));
  CHECK(cyclic_subgroup(a).size() == 3);
  CHECK(cyclic_subgroup(Permutation{{1, 0, 3, 2}}).size() == 2);
}

TEST_CASE("induced isomorphism agrees with exhaustive bijection search") {
  for (const auto& p : corpus::labeled_posets_up_to(4)) {
    const Mask all = full_mask(p.size());
    for (Mask a = 0; a <= all; ++a)
      for (Mask b = 0; b <= all; ++b) CHECK(induced_isomorphic(p, a, b) == brute_isomorphic(p, a, b));
  }
}

TEST_CASE("hierarchical posets") {
  CHECK(is_hierarchical(Poset::antichain(3)));
  CHECK(is_hierarchical(Poset::chain(3)));
  CHECK_FALSE(is_hierarchical(corpus::chain_plus_pair()));
  CHECK_FALSE(is_hierarchical(corpus::two_chains()));
  const std::vector<std::pair<int, int>> v{{1, 3}, {2, 3}};
  CHECK(is_hierarchical(Poset::from_covers(3, v)));
}

TEST_CASE("complement isomorphism") {
  const Poset p = corpus::chain_plus_pair();
  const auto ci = is_complement_isomorphism(p);
  CHECK_FALSE(ci.holds);
  REQUIRE(ci.witness);
  CHECK(*ci.witness == std::make_pair(m({1}), m({4})));
  const auto violations = complement_isomorphism_violations(p);
  CHECK(std::find(violations.begin(), violations.end(), std::make_pair(m({1, 2}), m({4, 5}))) != violations.end());
  CHECK(is_complement_isomorphism(corpus::two_chains()).holds);
  CHECK(is_complement_isomorphism(Poset::antichain(4)).holds);
}
