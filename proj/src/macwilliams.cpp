#include "pmw/macwilliams.hpp"

#include <string>

#include "pmw/error.hpp"

namespace pmw {

namespace {

struct Split {
  Mask ideal = 0;
  Mask maximal = 0;
  Mask nonmaximal = 0;
};

Split split_of(const Poset& poset, Mask ideal) {
  const MaximalSplit s = maximal_split(poset, ideal);
  return {ideal, s.maximal, s.nonmaximal};
}

// `u_side` is an ideal of some poset Q, `sphere_side` an ideal of Q* with its
// maximal/nonmaximal parts taken in Q*.
BigInt closed_value(std::uint32_t q, const Split& u_side, const Split& sphere_side) {
  if (u_side.nonmaximal & sphere_side.ideal) return 0;
  const int overlap = popcount(u_side.ideal & sphere_side.ideal);
  BigInt v = big_pow(q - 1, popcount(sphere_side.maximal) - overlap) * big_pow(q, popcount(sphere_side.nonmaximal));
  if (overlap % 2) v = -v;
  return v;
}

BigInt sphere_weight(std::uint32_t q, const Split& s) {
  return big_pow(q - 1, popcount(s.maximal)) * big_pow(q, popcount(s.nonmaximal));
}

// Per-ideal character sums between I(P) and I(P*), indexed in the canonical
// ideal orders of the partition and its dual.
struct SumTables {
  IdealPartition partition;
  IdealPartition dual;
  std::vector<Split> primal_splits;
  std::vector<Split> dual_splits;
  BigMatrix over_dual_sphere;    // [i][k]: sum over v in S_{K_k}, u in S_{I_i}
  BigMatrix over_primal_sphere;  // [k][i]: sum over u in S_{I_i}, v in S_{K_k}

  SumTables(std::uint32_t q, const IdealPartition& e) : partition(e), dual(dual_partition(e)) {
    const Poset& p = partition.poset();
    const Poset& pd = dual.poset();
    for (Mask m : partition.ideals()) primal_splits.push_back(split_of(p, m));
    for (Mask m : dual.ideals()) dual_splits.push_back(split_of(pd, m));
    const std::size_t ni = primal_splits.size(), nk = dual_splits.size();
    over_dual_sphere.assign(ni, BigVector(nk));
    over_primal_sphere.assign(nk, BigVector(ni));
    for (std::size_t i = 0; i < ni; ++i)
      for (std::size_t k = 0; k < nk; ++k) {
        over_dual_sphere[i][k] = closed_value(q, primal_splits[i], dual_splits[k]);
        over_primal_sphere[k][i] = closed_value(q, dual_splits[k], primal_splits[i]);
      }
  }

  // sum over v in the sphere union of dual class d, for u in S_{I_i}.
  BigInt p_entry(std::size_t i, std::size_t d) const {
    BigInt s = 0;
    for (std::size_t k : dual.block(d)) s += over_dual_sphere[i][k];
    return s;
  }

  // sum over u in the sphere union of class c, for v in S_{K_k}.
  BigInt q_entry(std::size_t k, std::size_t c) const {
    BigInt s = 0;
    for (std::size_t i : partition.block(c)) s += over_primal_sphere[k][i];
    return s;
  }
};

}  // namespace

EmptinessConditions ideal_emptiness_equiv(const Poset& poset, Mask ideal, Mask other_ideal) {
  const Split i = split_of(poset, ideal);
  if (!is_ideal(poset, other_ideal)) throw Error(ErrorCode::NotAnIdeal, "subset is not an order ideal");
  const Mask jc = full_mask(poset.size()) & ~other_ideal;
  const Split c = split_of(poset.dual(), jc);
  EmptinessConditions out;
  // Supports of vectors in S_I are exactly M(I) ∪ T for T ⊆ I_M.
  out.support_all = true;
  out.support_some = false;
  for (Mask t = i.nonmaximal;; t = (t - 1) & i.nonmaximal) {
    const bool disjoint = ((i.maximal | t) & c.nonmaximal) == 0;
    out.support_all = out.support_all && disjoint;
    out.support_some = out.support_some || disjoint;
    if (t == 0) break;
  }
  out.maximal = (i.maximal & c.nonmaximal) == 0;
  out.ideal = (i.ideal & c.nonmaximal) == 0;
  out.nonmaximal = (i.nonmaximal & jc) == 0;
  return out;
}

BigInt char_sum_closed(const Poset& poset, std::uint32_t q, Mask ideal, Mask dual_ideal) {
  const Poset dual = poset.dual();
  if (!is_ideal(dual, dual_ideal)) throw Error(ErrorCode::NotAnIdeal, "sphere subset is not an ideal of the dual poset");
  return closed_value(q, split_of(poset, ideal), split_of(dual, dual_ideal));
}

BigInt krawtchouk(int k, int x, int n, std::uint32_t q) {
  if (n < 0 || k < 0 || k > n || x < 0 || x > n)
    throw Error(ErrorCode::OutOfRange, "Krawtchouk arguments need 0 <= k, x <= n");
  BigInt sum = 0;
  for (int j = 0; j <= k; ++j) {
    BigInt term = big_pow(q - 1, k - j) * binomial(x, j) * binomial(n - x, k - j);
    if (j % 2) term = -term;
    sum += term;
  }
  return sum;
}

ClassMatrix pq_matrix(std::uint32_t q, const IdealPartition& partition, MatrixKind which, Strictness strictness) {
  const SumTables t(q, partition);
  const std::size_t nc = t.partition.num_blocks(), nd = t.dual.num_blocks();
  ClassMatrix m{which, which == MatrixKind::P ? t.dual : t.partition, which == MatrixKind::P ? t.partition : t.dual,
                {}, true};
  if (which == MatrixKind::P) {
    m.entries.assign(nd, BigVector(nc));
    for (std::size_t c = 0; c < nc; ++c)
      for (std::size_t d = 0; d < nd; ++d) {
        const auto& members = t.partition.block(c);
        m.entries[d][c] = t.p_entry(members.front(), d);
        for (std::size_t i : members)
          if (t.p_entry(i, d) != m.entries[d][c]) m.representative_independent = false;
      }
  } else {
    m.entries.assign(nc, BigVector(nd));
    for (std::size_t d = 0; d < nd; ++d)
      for (std::size_t c = 0; c < nc; ++c) {
        const auto& members = t.dual.block(d);
        m.entries[c][d] = t.q_entry(members.front(), c);
        for (std::size_t k : members)
          if (t.q_entry(k, c) != m.entries[c][d]) m.representative_independent = false;
      }
  }
  if (strictness == Strictness::Strict && !m.representative_independent)
    throw Error(ErrorCode::NotMacWilliamsType,
                std::string(which == MatrixKind::P ? "P" : "Q") + "-matrix entries depend on the class representative");
  return m;
}

MacWilliamsVerdict check_macwilliams_type(std::uint32_t q, const IdealPartition& partition) {
  const SumTables t(q, partition);
  const std::size_t nc = t.partition.num_blocks(), nd = t.dual.num_blocks();
  // Index 0 is the empty ideal in both canonical orders; its sphere is {0}.
  auto nonzero_members = [](const std::vector<std::size_t>& block) {
    std::vector<std::size_t> out;
    for (std::size_t i : block)
      if (i != 0) out.push_back(i);
    return out;
  };
  for (std::size_t c = 0; c < nc; ++c) {
    const auto members = nonzero_members(t.partition.block(c));
    for (std::size_t a = 1; a < members.size(); ++a)
      for (std::size_t d = 0; d < nd; ++d) {
        BigInt s0 = t.p_entry(members.front(), d), s1 = t.p_entry(members[a], d);
        if (s0 != s1)
          return {false, MacWilliamsWitness{Condition::A, c, t.partition.ideals()[members.front()],
                                            t.partition.ideals()[members[a]], d, s0, s1}};
      }
  }
  for (std::size_t d = 0; d < nd; ++d) {
    const auto members = nonzero_members(t.dual.block(d));
    for (std::size_t a = 1; a < members.size(); ++a)
      for (std::size_t c = 0; c < nc; ++c) {
        BigInt s0 = t.q_entry(members.front(), c), s1 = t.q_entry(members[a], c);
        if (s0 != s1)
          return {false, MacWilliamsWitness{Condition::B, d, t.dual.ideals()[members.front()],
                                            t.dual.ideals()[members[a]], c, s0, s1}};
      }
  }
  return {};
}

IdentityReport verify_identity(const GeneratorMatrix& g, const IdealPartition& partition, std::size_t cap) {
  const std::uint32_t q = g.field().order();
  if (!check_macwilliams_type(q, partition).holds)
    throw Error(ErrorCode::NotMacWilliamsType, "relation is not of MacWilliams type");
  const ClassMatrix pm = pq_matrix(q, partition, MatrixKind::P);
  const ClassMatrix qm = pq_matrix(q, partition, MatrixKind::Q);
  const IdealPartition& dual = pm.rows;

  IdentityReport r;
  r.code = weight_distribution(g, partition, cap);
  r.dual = weight_distribution(dual_code(g), dual, cap);
  r.code_size = r.code.total();
  r.dual_size = r.dual.total();

  const std::size_t nc = partition.num_blocks(), nd = dual.num_blocks();
  r.dual_from_transform.assign(nd, 0);
  for (std::size_t d = 0; d < nd; ++d) {
    BigInt s = 0;
    for (std::size_t c = 0; c < nc; ++c) s += r.code.counts[c] * pm.entries[d][c];
    if (!mpz_divisible_p(s.get_mpz_t(), r.code_size.get_mpz_t()))
      throw Error(ErrorCode::NonIntegralQuotient, "transform of W(C) not divisible by |C|");
    r.dual_from_transform[d] = s / r.code_size;
  }
  r.code_from_transform.assign(nc, 0);
  for (std::size_t c = 0; c < nc; ++c) {
    BigInt s = 0;
    for (std::size_t d = 0; d < nd; ++d) s += r.dual.counts[d] * qm.entries[c][d];
    if (!mpz_divisible_p(s.get_mpz_t(), r.dual_size.get_mpz_t()))
      throw Error(ErrorCode::NonIntegralQuotient, "transform of W(C^perp) not divisible by |C^perp|");
    r.code_from_transform[c] = s / r.dual_size;
  }
  r.holds_a = r.dual_from_transform == r.dual.counts;
  r.holds_b = r.code_from_transform == r.code.counts;
  return r;
}

OneDimDistributions one_dim_distributions(const Field& field, const Vector& u, const IdealPartition& partition) {
  const Poset& poset = partition.poset();
  const Mask closure = ideal_of(poset, u);
  if (closure == 0) throw Error(ErrorCode::ZeroGenerator, "generator is the zero vector");
  const std::uint32_t q = field.order();
  const IdealPartition dual = dual_partition(partition);

  OneDimDistributions out{{BigVector(partition.num_blocks())}, {BigVector(dual.num_blocks())}};
  out.code.counts[partition.class_of_ideal(0)] += 1;
  out.code.counts[partition.class_of_ideal(closure)] += q - 1;

  const Split us = split_of(poset, closure);
  const Poset& pd = dual.poset();
  for (std::size_t d = 0; d < dual.num_blocks(); ++d) {
    BigInt size = 0, chars = 0;
    for (Mask k : dual.block_ideals(d)) {
      const Split ks = split_of(pd, k);
      size += sphere_weight(q, ks);
      chars += closed_value(q, us, ks);
    }
    BigInt numer = size + BigInt(q - 1) * chars;
    if (!mpz_divisible_p(numer.get_mpz_t(), BigInt(q).get_mpz_t()))
      throw Error(ErrorCode::NonIntegralQuotient, "one-dimensional dual count not divisible by q");
    out.dual.counts[d] = numer / q;
  }
  return out;
}

bool reciprocity_check(std::uint32_t q, const IdealPartition& partition) {
  if (!check_macwilliams_type(q, partition).holds)
    throw Error(ErrorCode::NotMacWilliamsType, "relation is not of MacWilliams type");
  const ClassMatrix pm = pq_matrix(q, partition, MatrixKind::P);
  const ClassMatrix qm = pq_matrix(q, partition, MatrixKind::Q);
  const IdealPartition& dual = pm.rows;
  for (std::size_t c = 0; c < partition.num_blocks(); ++c) {
    const BigInt weight_i = sphere_weight(q, split_of(partition.poset(), partition.representative(c)));
    const BigInt size_i = static_cast<unsigned long>(partition.block(c).size());
    for (std::size_t d = 0; d < dual.num_blocks(); ++d) {
      const BigInt weight_j = sphere_weight(q, split_of(dual.poset(), dual.representative(d)));
      const BigInt size_j = static_cast<unsigned long>(dual.block(d).size());
      if (size_i * pm.entries[d][c] * weight_i != size_j * qm.entries[c][d] * weight_j) return false;
    }
  }
  return true;
}

StabilizerReport stabilizer_identity(std::uint32_t q, const Poset& poset, std::span<const Permutation> group,
                                     Mask ideal, Mask dual_ideal) {
  const IdealPartition e = partition_aut(poset, group);
  const ClassMatrix pm = pq_matrix(q, e, MatrixKind::P);
  const ClassMatrix qm = pq_matrix(q, e, MatrixKind::Q);
  const IdealPartition& dual = pm.rows;
  const std::size_t c = e.class_of_ideal(ideal);
  const std::size_t d = dual.class_of_ideal(dual_ideal);

  StabilizerReport r;
  r.group_order = group.size();
  r.orbit = e.block(c).size();
  r.dual_orbit = dual.block(d).size();
  for (const auto& s : group) {
    if (s.apply(ideal) == ideal) ++r.stabilizer;
    if (s.apply(dual_ideal) == dual_ideal) ++r.dual_stabilizer;
  }
  r.orbit_stabilizer = r.group_order == r.orbit * r.stabilizer && r.group_order == r.dual_orbit * r.dual_stabilizer;
  const BigInt weight_i = sphere_weight(q, split_of(poset, ideal));
  const BigInt weight_j = sphere_weight(q, split_of(dual.poset(), dual_ideal));
  r.identity = BigInt(static_cast<unsigned long>(r.dual_stabilizer)) * pm.entries[d][c] * weight_i ==
               BigInt(static_cast<unsigned long>(r.stabilizer)) * qm.entries[c][d] * weight_j;
  return r;
}

GeneratorMatrix support_code(const Field& field, int n, Mask subset) {
  std::vector<Vector> rows;
  for (int i = 0; i < n; ++i)
    if (subset >> i & 1u) {
      Vector e(n, 0);
      e[i] = 1;
      rows.push_back(std::move(e));
    }
  return GeneratorMatrix(field, n, std::move(rows));
}

std::optional<SupportCodeWitness> support_code_witness(const Field& field, const IdealPartition& partition) {
  const IdealPartition dual = dual_partition(partition);
  const int n = partition.poset().size();
  for (std::size_t c = 0; c < partition.num_blocks(); ++c) {
    const auto members = partition.block_ideals(c);
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const GeneratorMatrix g1 = support_code(field, n, members[a]);
        const GeneratorMatrix g2 = support_code(field, n, members[b]);
        SupportCodeWitness w{members[a], members[b], weight_distribution(g1, partition),
                             weight_distribution(g2, partition), {}, {}};
        if (!(w.first_code == w.second_code)) continue;
        w.first_dual = weight_distribution(dual_code(g1), dual);
        w.second_dual = weight_distribution(dual_code(g2), dual);
        if (!(w.first_dual == w.second_dual)) return w;
      }
  }
  return std::nullopt;
}

}  // namespace pmw
