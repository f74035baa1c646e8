#include <doctest.h>

#include <functional>

#include "corpus.hpp"
#include "pmw/error.hpp"
#include "pmw/relations.hpp"

using namespace pmw;

namespace {

Mask m(std::initializer_list<int> elems) {
  Mask out = 0;
  for (int e : elems) out |= Mask{1} << (e - 1);
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("the three rules on the worked posets") {
  const Poset p = corpus::chain_plus_pair();
  const auto ec = partition_cardinality(p);
  const auto es = partition_iso(p);
  const auto ea = partition_aut(p, automorphisms(p));
  CHECK(ec.num_blocks() == 6);
  CHECK(es.num_blocks() == 9);
  CHECK(ea == partition_discrete(p));
  CHECK(ec.block_ideals(2) == std::vector<Mask>{m({1, 2}), m({1, 4}), m({4, 5})});
  CHECK(es.class_of_ideal(m({1, 2})) == es.class_of_ideal(m({4, 5})));
  CHECK(es.class_of_ideal(m({1, 2})) != es.class_of_ideal(m({1, 4})));
  CHECK(ec.kind() == RelationKind::Cardinality);
  CHECK(to_string(es.kind()) == "iso");

  const Poset t = corpus::two_chains();
  const auto eh = partition_aut(t, automorphisms(t));
  CHECK(eh.num_blocks() == 6);
  CHECK(eh.class_of_ideal(m({1, 3})) == eh.class_of_ideal(m({2, 4})));
}

TEST_CASE("refinement chain E_Aut <= E_S <= E_C, with equality for hierarchical posets") {
  for (const auto& p : corpus::labeled_posets_up_to(4)) {
    const auto ec = partition_cardinality(p);
    const auto es = partition_iso(p);
    const auto ea = partition_aut(p, automorphisms(p));
    CHECK(refines(ea, es));
    CHECK(refines(es, ec));
    if (is_hierarchical(p)) {
      CHECK(ea == ec);
      CHECK(es == ec);
    }
  }
}

TEST_CASE("dual partitions") {
  for (const auto& p : corpus::labeled_posets_up_to(3)) {
    for (const auto& e : {partition_cardinality(p), partition_iso(p), partition_aut(p, automorphisms(p))}) {
      const auto d = dual_partition(e);
      CHECK(d.poset() == p.dual());
      CHECK(d.num_blocks() == e.num_blocks());
      CHECK(dual_partition(d) == e);
    }
  }
  const Poset p = corpus::chain_plus_pair();
  const auto d = dual_partition(partition_iso(p));
  CHECK(d.class_of_ideal(m({3, 4, 5})) == d.class_of_ideal(m({1, 2, 3})));
}

TEST_CASE("whether the dual relation follows the same rule") {
  const Poset p = corpus::chain_plus_pair();
  CHECK(dual_respects_rule(partition_cardinality(p)) == true);
  CHECK(dual_respects_rule(partition_iso(p)) == false);
  CHECK(dual_respects_rule(partition_iso(corpus::two_chains())) == true);
  CHECK(dual_respects_rule(partition_aut(p, automorphisms(p))) == true);
  std::vector<std::vector<Mask>> singletons;
  for (Mask i : enumerate_ideals(p)) singletons.push_back({i});
  CHECK_FALSE(dual_respects_rule(IdealPartition::from_blocks(p, singletons)).has_value());
}

TEST_CASE("invalid partitions") {
  const Poset p = Poset::chain(2);
  CHECK(code_of([&] { IdealPartition::from_blocks(p, {{0}, {m({1})}}); }) == ErrorCode::InvalidPartition);
  CHECK(code_of([&] { IdealPartition::from_blocks(p, {{0, m({1})}, {m({1}), m({1, 2})}}); }) ==
        ErrorCode::InvalidPartition);
  CHECK(code_of([&] { IdealPartition::from_blocks(p, {{0}, {m({1})}, {m({1, 2}), m({2})}}); }) ==
        ErrorCode::NotAnIdeal);
  const auto e = IdealPartition::from_blocks(p, {{m({1, 2}), 0}, {m({1})}});
  CHECK(e.num_blocks() == 2);
  CHECK(e.representative(0) == 0);
  CHECK_FALSE(e.index_of(m({2})).has_value());
}

TEST_CASE("subgroup validation") {
  const Poset t = corpus::two_chains();
  const std::vector<Permutation> not_aut{Permutation::identity(4), Permutation{{2, 1, 0, 3}}};
  CHECK(code_of([&] { validate_subgroup(t, not_aut); }) == ErrorCode::NotAutomorphisms);
  const Poset a = Poset::antichain(3);
  const std::vector<Permutation> not_closed{Permutation::identity(3), Permutation{{1, 2, 0}}};
  CHECK(code_of([&] { validate_subgroup(a, not_closed); }) == ErrorCode::NotASubgroup);
  const std::vector<Permutation> no_identity{Permutation{{1, 0, 2}}};
  CHECK(code_of([&] { validate_subgroup(a, no_identity); }) == ErrorCode::NotASubgroup);
  const std::vector<Permutation> trivial{Permutation::identity(3)};
  CHECK(partition_aut(a, trivial) == partition_discrete(a));
  CHECK(partition_aut(a, automorphisms(a)) == partition_cardinality(a));
}
