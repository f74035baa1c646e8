#include <doctest.h>

#include <functional>

#include "corpus.hpp"
#include "pmw/error.hpp"
#include "pmw/macwilliams.hpp"
#include "pmw/oracle.hpp"

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

IdealPartition coarsest(const Poset& p) { return IdealPartition::from_blocks(p, {enumerate_ideals(p)}); }

}  // namespace

TEST_CASE("emptiness conditions on the worked poset") {
  const Poset p = corpus::chain_plus_pair();
  auto c = ideal_emptiness_equiv(p, m({1, 2}), m({1, 2, 3}));
  CHECK(c.agree());
  CHECK(c.maximal);
  c = ideal_emptiness_equiv(p, m({1, 2, 3}), m({1}));
  CHECK(c.agree());
  CHECK_FALSE(c.nonmaximal);
  for (Mask j : enumerate_ideals(p)) {
    c = ideal_emptiness_equiv(p, 0, j);
    CHECK(c.agree());
    CHECK(c.ideal);
  }
  CHECK(code_of([&] { ideal_emptiness_equiv(p, m({2}), 0); }) == ErrorCode::NotAnIdeal);
  CHECK(code_of([&] { ideal_emptiness_equiv(p, 0, m({2})); }) == ErrorCode::NotAnIdeal);
}

TEST_CASE("closed character sums") {
  const Poset p = corpus::chain_plus_pair();
  const Poset d = p.dual();
  for (Mask j : enumerate_ideals(p)) {
    const Mask jc = full_mask(5) & ~j;
    const auto s = maximal_split(d, jc);
    CHECK(char_sum_closed(p, 3, 0, jc) == big_pow(2, popcount(s.maximal)) * big_pow(3, popcount(s.nonmaximal)));
  }
  CHECK(char_sum_closed(p, 2, m({1, 2, 3}), m({2, 3, 4, 5})) == 0);
  const Field f2 = Field::of_order(2);
  CHECK(char_sum_closed(p, 2, m({4}), m({3, 5})) == *oracle::char_sum_brute(p, f2, {0, 0, 0, 1, 0}, m({3, 5})).to_integer());
  CHECK(char_sum_closed(p, 2, m({4}), m({3, 5})) == 1);
  CHECK(code_of([&] { char_sum_closed(p, 2, 0, m({1})); }) == ErrorCode::NotAnIdeal);
}

TEST_CASE("closed character sums agree with brute force over F_4 and F_5") {
  for (std::uint32_t q : {4u, 5u}) {
    const Field f = Field::of_order(q);
    for (const auto& p : corpus::labeled_posets(3)) {
      const auto ideals = enumerate_ideals(p);
      for (Mask i : ideals)
        for (const auto& u : sphere(p, f, i))
          for (Mask j : ideals) {
            const Mask jc = full_mask(3) & ~j;
            CHECK(oracle::char_sum_brute(p, f, u, jc).to_integer() == char_sum_closed(p, q, i, jc));
          }
    }
  }
}

TEST_CASE("Krawtchouk values") {
  for (int x = 0; x <= 4; ++x) CHECK(krawtchouk(0, x, 4, 3) == 1);
  CHECK(krawtchouk(1, 1, 3, 2) == 1);
  CHECK(krawtchouk(2, 0, 3, 3) == 12);
  CHECK(code_of([] { krawtchouk(4, 0, 3, 2); }) == ErrorCode::OutOfRange);
}

TEST_CASE("class matrices") {
  const auto e1 = partition_cardinality(Poset::antichain(1));
  const auto q1 = pq_matrix(2, e1, MatrixKind::Q);
  CHECK(q1.entries == BigMatrix{{1, 1}, {1, -1}});

  const auto e3 = partition_cardinality(Poset::antichain(3));
  const auto q3 = pq_matrix(2, e3, MatrixKind::Q);
  const auto p3 = pq_matrix(2, e3, MatrixKind::P);
  for (int k = 0; k <= 3; ++k)
    for (int x = 0; x <= 3; ++x) {
      CHECK(q3.entries[k][x] == krawtchouk(k, x, 3, 2));
      CHECK(p3.entries[x][k] == krawtchouk(x, k, 3, 2));
    }
}

TEST_CASE("class matrix sanity on MacWilliams-type relations") {
  for (const auto& p : corpus::labeled_posets_up_to(3)) {
    for (std::uint32_t q : {2u, 3u}) {
      const auto e = partition_aut(p, automorphisms(p));
      const auto pm = pq_matrix(q, e, MatrixKind::P);
      const auto qm = pq_matrix(q, e, MatrixKind::Q);
      const auto sizes = sphere_class_sizes(e, q);
      const auto dual_sizes = sphere_class_sizes(pm.rows, q);
      // Q's column at the empty dual ideal and P's column at the empty ideal.
      for (std::size_t c = 0; c < e.num_blocks(); ++c) CHECK(qm.entries[c][0] == sizes[c]);
      for (std::size_t d = 0; d < pm.rows.num_blocks(); ++d) CHECK(pm.entries[d][0] == dual_sizes[d]);
      // Transforming the full space gives {0}.
      const BigInt qn = big_pow(q, p.size());
      for (std::size_t d = 0; d < pm.rows.num_blocks(); ++d) {
        BigInt s = 0;
        for (std::size_t c = 0; c < e.num_blocks(); ++c) s += sizes[c] * pm.entries[d][c];
        CHECK(s == (d == 0 ? qn : BigInt(0)));
      }
    }
  }
}

TEST_CASE("MacWilliams-type decisions") {
  const Poset p = corpus::chain_plus_pair();
  const auto verdict = check_macwilliams_type(2, partition_cardinality(p));
  CHECK_FALSE(verdict.holds);
  REQUIRE(verdict.witness);
  CHECK(verdict.witness->first_sum != verdict.witness->second_sum);
  CHECK(check_macwilliams_type(2, partition_discrete(p)).holds);
  CHECK_FALSE(check_macwilliams_type(3, partition_iso(p)).holds);

  const Poset t = corpus::two_chains();
  CHECK(check_macwilliams_type(2, partition_iso(t)).holds);
  CHECK(check_macwilliams_type(3, partition_aut(t, automorphisms(t))).holds);
  CHECK(check_macwilliams_type(4, partition_cardinality(Poset::antichain(3))).holds);
}

TEST_CASE("the verdict is the same for a relation and its dual") {
  for (const auto& p : corpus::labeled_posets_up_to(3))
    for (const auto& e : {partition_cardinality(p), partition_iso(p), partition_aut(p, automorphisms(p))})
      for (std::uint32_t q : {2u, 3u})
        CHECK(check_macwilliams_type(q, e).holds == check_macwilliams_type(q, dual_partition(e)).holds);
}

TEST_CASE("zero vectors are excluded from the class conditions") {
  const Poset p = Poset::antichain(2);
  const auto all = coarsest(p);
  const Field f2 = Field::of_order(2);
  CHECK(check_macwilliams_type(2, all).holds);
  CHECK(oracle::definition_check(f2, all).holds);
  CHECK(code_of([&] { pq_matrix(2, all, MatrixKind::P); }) == ErrorCode::NotMacWilliamsType);
  const auto lenient = pq_matrix(2, all, MatrixKind::P, Strictness::Lenient);
  CHECK_FALSE(lenient.representative_independent);
}

TEST_CASE("identity checks") {
  const Field f3 = Field::of_order(3);
  const auto e = partition_cardinality(Poset::antichain(3));
  const GeneratorMatrix full(f3, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto r = verify_identity(full, e);
  CHECK(r.pass());
  CHECK(r.dual_from_transform == BigVector{1, 0, 0, 0});
  const GeneratorMatrix zero(f3, 3, {});
  r = verify_identity(zero, e);
  CHECK(r.pass());
  CHECK(r.dual_from_transform == sphere_class_sizes(dual_partition(e), 3));

  const Poset p = corpus::chain_plus_pair();
  const GeneratorMatrix g(Field::of_order(2), 5, {{1, 1, 0, 0, 0}});
  CHECK(code_of([&] { verify_identity(g, partition_cardinality(p)); }) == ErrorCode::NotMacWilliamsType);
  CHECK(verify_identity(g, partition_discrete(p)).pass());
}

TEST_CASE("identity over F_4 and F_9 for every code of small length") {
  for (std::uint32_t q : {4u, 9u}) {
    const Field f = Field::of_order(q);
    const auto e = partition_cardinality(Poset::antichain(2));
    for (Element a = 0; a < q; ++a)
      for (Element b = 0; b < q; ++b) {
        const GeneratorMatrix g(f, 2, {{a, b}});
        CHECK(verify_identity(g, e).pass());
      }
    const Poset t = corpus::two_chains();
    const auto et = partition_aut(t, automorphisms(t));
    const GeneratorMatrix g(f, 4, {{1, 2, 0, 3}, {0, 1, 1, 1}});
    CHECK(verify_identity(g, et).pass());
  }
}

TEST_CASE("one-dimensional codes") {
  const Poset p = corpus::chain_plus_pair();
  const Field f2 = Field::of_order(2);
  const auto ec = partition_cardinality(p);
  const auto d = one_dim_distributions(f2, {1, 1, 0, 0, 0}, ec);
  CHECK(d.code.counts == BigVector{1, 0, 1, 0, 0, 0});

  const Field f3 = Field::of_order(3);
  const auto e2 = partition_cardinality(Poset::antichain(2));
  const auto d2 = one_dim_distributions(f3, {1, 0}, e2);
  CHECK(d2.code.counts == BigVector{1, 2, 0});
  CHECK(d2.dual.counts == BigVector{1, 2, 0});
  CHECK(code_of([&] { one_dim_distributions(f3, {0, 0}, e2); }) == ErrorCode::ZeroGenerator);

  // Matches enumeration for every generator even when the relation is not of MacWilliams type.
  for (Element x = 1; x < 32; ++x) {
    Vector u(5);
    for (int i = 0; i < 5; ++i) u[i] = x >> i & 1u;
    const GeneratorMatrix g(f2, 5, {u});
    const auto closed = one_dim_distributions(f2, u, ec);
    CHECK(closed.code == weight_distribution(g, ec));
    CHECK(closed.dual == weight_distribution(dual_code(g), dual_partition(ec)));
  }
}

TEST_CASE("reciprocity") {
  CHECK(reciprocity_check(2, partition_cardinality(Poset::antichain(4))));
  CHECK(reciprocity_check(3, partition_cardinality(Poset::antichain(4))));
  const Poset t = corpus::two_chains();
  CHECK(reciprocity_check(2, partition_aut(t, automorphisms(t))));
  CHECK(code_of([] { reciprocity_check(2, partition_cardinality(corpus::chain_plus_pair())); }) ==
        ErrorCode::NotMacWilliamsType);
}

TEST_CASE("stabilizer identity") {
  const Poset t = corpus::two_chains();
  const auto aut = automorphisms(t);
  const auto r = stabilizer_identity(2, t, aut, m({1, 3}), m({2, 4}));
  CHECK(r.group_order == 2);
  CHECK(r.orbit == 2);
  CHECK(r.stabilizer == 1);
  CHECK(r.holds());
  const std::vector<Permutation> trivial{Permutation::identity(4)};
  const auto s = stabilizer_identity(3, t, trivial, m({1}), m({3, 4}));
  CHECK(s.orbit == 1);
  CHECK(s.stabilizer == 1);
  CHECK(s.holds());
  const std::vector<Permutation> bogus{Permutation::identity(4), Permutation{{2, 1, 0, 3}}};
  CHECK_THROWS_AS(stabilizer_identity(2, t, bogus, 0, 0), Error);
}

TEST_CASE("support-code witnesses") {
  const Field f2 = Field::of_order(2);
  const Poset p = corpus::chain_plus_pair();
  const auto w = support_code_witness(f2, partition_iso(p));
  REQUIRE(w);
  CHECK(w->first_code == w->second_code);
  CHECK_FALSE(w->first_dual == w->second_dual);
  const auto sc = support_code(f2, 5, m({1, 2}));
  CHECK(codewords(sc).size() == 4);
  const Poset t = corpus::two_chains();
  CHECK_FALSE(support_code_witness(f2, partition_iso(t)).has_value());
}
