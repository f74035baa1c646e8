#include "pmw/oracle.hpp"

#include <map>
#include <set>
#include <string>

#include "pmw/error.hpp"

namespace pmw::oracle {

namespace {

std::size_t space_size(const Field& field, int n, std::size_t cap) {
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= field.order();
    if (total > cap) throw Error(ErrorCode::SphereTooLarge, "ambient space larger than " + std::to_string(cap));
  }
  return total;
}

Vector nth_vector(const Field& field, int n, std::size_t index) {
  Vector v(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    v[i] = static_cast<Element>(index % field.order());
    index /= field.order();
  }
  return v;
}

// Down-closure in P of the support, straight from the order relation.
Mask closure_below(const Poset& poset, const Vector& v) {
  Mask out = 0;
  for (int a = 0; a < poset.size(); ++a)
    if (v[a] != 0)
      for (int b = 0; b < poset.size(); ++b)
        if (poset.leq(b, a)) out |= Mask{1} << b;
  return out;
}

// Down-closure in P*, i.e. up-closure in P.
Mask closure_above(const Poset& poset, const Vector& v) {
  Mask out = 0;
  for (int a = 0; a < poset.size(); ++a)
    if (v[a] != 0)
      for (int b = 0; b < poset.size(); ++b)
        if (poset.leq(a, b)) out |= Mask{1} << b;
  return out;
}

std::vector<Vector> span_of(const GeneratorMatrix& g) {
  const Field& f = g.field();
  std::set<Vector> words{Vector(g.length(), 0)};
  for (const auto& row : g.rows()) {
    std::set<Vector> next;
    for (const auto& w : words)
      for (Element a = 0; a < f.order(); ++a) {
        Vector x = w;
        for (int i = 0; i < g.length(); ++i) x[i] = f.add(x[i], f.mul(a, row[i]));
        next.insert(std::move(x));
      }
    words = std::move(next);
  }
  return {words.begin(), words.end()};
}

std::vector<Vector> orthogonal_of(const Field& field, int n, const std::vector<Vector>& words) {
  std::vector<Vector> out;
  const std::size_t total = space_size(field, n, kDefaultSpaceCap);
  for (std::size_t idx = 0; idx < total; ++idx) {
    Vector x = nth_vector(field, n, idx);
    bool orth = true;
    for (const auto& w : words)
      if (field.dot(x, w) != 0) {
        orth = false;
        break;
      }
    if (orth) out.push_back(std::move(x));
  }
  return out;
}

BigVector count_below(const IdealPartition& partition, const std::vector<Vector>& words) {
  BigVector counts(partition.num_blocks());
  for (const auto& w : words) ++counts[partition.class_of_ideal(closure_below(partition.poset(), w))];
  return counts;
}

// `dual` partitions the ideals of P*, and `poset` is P.
BigVector count_above(const Poset& poset, const IdealPartition& dual, const std::vector<Vector>& words) {
  BigVector counts(dual.num_blocks());
  for (const auto& w : words) ++counts[dual.class_of_ideal(closure_above(poset, w))];
  return counts;
}

}  // namespace

CycSum char_sum_brute(const Poset& poset, const Field& field, const Vector& u, Mask dual_ideal, std::size_t cap) {
  if (static_cast<int>(u.size()) != poset.size()) throw Error(ErrorCode::LengthMismatch, "vector length mismatch");
  const int n = poset.size();
  const std::size_t total = space_size(field, n, cap);
  CycSum s(field.characteristic());
  for (std::size_t idx = 0; idx < total; ++idx) {
    const Vector v = nth_vector(field, n, idx);
    if (closure_above(poset, v) == dual_ideal) s.add_power(field.trace(field.dot(u, v)));
  }
  return s;
}

WeightDistribution dual_dist_brute(const GeneratorMatrix& g, const IdealPartition& partition, std::size_t cap) {
  const Field& field = g.field();
  const Poset& poset = partition.poset();
  const IdealPartition dual = dual_partition(partition);
  const int n = poset.size();
  const std::vector<Vector> code = span_of(g);
  const std::size_t total = space_size(field, n, cap);

  // Group the code by E-class first, as in the triple sum; the grouping does
  // not change the total but keeps the summation order explicit.
  std::vector<std::vector<const Vector*>> by_class(partition.num_blocks());
  for (const auto& u : code) by_class[partition.class_of_ideal(closure_below(poset, u))].push_back(&u);

  std::vector<CycSum> sums(dual.num_blocks(), CycSum(field.characteristic()));
  for (std::size_t idx = 0; idx < total; ++idx) {
    const Vector v = nth_vector(field, n, idx);
    CycSum& target = sums[dual.class_of_ideal(closure_above(poset, v))];
    for (const auto& cls : by_class)
      for (const Vector* u : cls) target.add_power(field.trace(field.dot(*u, v)));
  }
  WeightDistribution w{BigVector(dual.num_blocks())};
  const BigInt size = static_cast<unsigned long>(code.size());
  for (std::size_t d = 0; d < sums.size(); ++d) {
    auto value = sums[d].to_integer();
    if (!value) throw Error(ErrorCode::NonIntegralQuotient, "character sum is not a rational integer");
    if (!mpz_divisible_p(value->get_mpz_t(), size.get_mpz_t()))
      throw Error(ErrorCode::NonIntegralQuotient, "character sum not divisible by |C|");
    w.counts[d] = *value / size;
  }
  return w;
}

std::vector<GeneratorMatrix> all_subspaces(const Field& field, int n) {
  if (n < 0 || n > 6) throw Error(ErrorCode::TooLarge, "subspace enumeration limited to n <= 6");
  space_size(field, n, 729);
  std::vector<GeneratorMatrix> out;
  const std::uint32_t q = field.order();
  for (Mask pivots = 0; pivots < (Mask{1} << n); ++pivots) {
    std::vector<int> pivot_cols;
    for (int c = 0; c < n; ++c)
      if (pivots >> c & 1u) pivot_cols.push_back(c);
    // Free positions: in row r, columns right of the pivot that are not pivots.
    std::vector<std::pair<std::size_t, int>> free;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r)
      for (int c = pivot_cols[r] + 1; c < n; ++c)
        if (!(pivots >> c & 1u)) free.emplace_back(r, c);
    std::size_t combos = 1;
    for (std::size_t i = 0; i < free.size(); ++i) combos *= q;
    for (std::size_t idx = 0; idx < combos; ++idx) {
      std::vector<Vector> rows(pivot_cols.size(), Vector(n, 0));
      for (std::size_t r = 0; r < pivot_cols.size(); ++r) rows[r][pivot_cols[r]] = 1;
      std::size_t t = idx;
      for (auto [r, c] : free) {
        rows[r][c] = static_cast<Element>(t % q);
        t /= q;
      }
      out.emplace_back(field, n, std::move(rows));
    }
  }
  return out;
}

DefinitionVerdict definition_check(const Field& field, const IdealPartition& partition) {
  const Poset& poset = partition.poset();
  const IdealPartition dual = dual_partition(partition);
  const int n = poset.size();
  const auto spaces = all_subspaces(field, n);

  std::vector<BigVector> primal(spaces.size()), dual_w(spaces.size());
  for (std::size_t s = 0; s < spaces.size(); ++s) {
    const auto words = span_of(spaces[s]);
    primal[s] = count_below(partition, words);
    dual_w[s] = count_above(poset, dual, orthogonal_of(field, n, words));
  }
  // Equal distributions on one side must force equal distributions on the other.
  auto first_conflict = [&](const std::vector<BigVector>& key, const std::vector<BigVector>& value)
      -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::map<BigVector, std::size_t> seen;
    for (std::size_t s = 0; s < spaces.size(); ++s) {
      auto [it, inserted] = seen.emplace(key[s], s);
      if (!inserted && value[it->second] != value[s]) return std::make_pair(it->second, s);
    }
    return std::nullopt;
  };
  DefinitionVerdict v;
  v.witness = first_conflict(primal, dual_w);
  if (!v.witness) v.witness = first_conflict(dual_w, primal);
  v.holds = !v.witness.has_value();
  return v;
}

}  // namespace pmw::oracle
