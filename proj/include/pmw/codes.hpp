#pragma once

#include <cstddef>
#include <vector>

#include "pmw/bigint.hpp"
#include "pmw/gf.hpp"
#include "pmw/poset.hpp"
#include "pmw/relations.hpp"

namespace pmw {

inline constexpr std::size_t kDefaultCodewordCap = std::size_t{1} << 24;
inline constexpr std::size_t kDefaultSphereCap = std::size_t{1} << 24;

/// A linear code given by generator rows (possibly dependent).
class GeneratorMatrix {
 public:
  GeneratorMatrix(Field field, int length, std::vector<Vector> rows);

  const Field& field() const noexcept { return field_; }
  int length() const noexcept { return n_; }
  const std::vector<Vector>& rows() const noexcept { return rows_; }
  std::size_t num_rows() const noexcept { return rows_.size(); }

 private:
  Field field_;
  int n_;
  std::vector<Vector> rows_;
};

struct RowReduction {
  GeneratorMatrix reduced;   // nonzero rows of the reduced row-echelon form
  int rank = 0;
  bool dropped_rows = false;  // the input had dependent rows
  std::vector<int> pivots;
};

RowReduction rref(const GeneratorMatrix& g);

/// Generator of {x : G x^T = 0}, of dimension n - rank(G).
GeneratorMatrix dual_code(const GeneratorMatrix& g);

/// All codewords, zero first, in lexicographic order of the message over the
/// reduced basis.
std::vector<Vector> codewords(const GeneratorMatrix& g, std::size_t cap = kDefaultCodewordCap);

Mask support(const Vector& x);
/// <supp(x)>_P.
Mask ideal_of(const Poset& poset, const Vector& x);
int p_weight(const Poset& poset, const Vector& x);
int p_distance(const Poset& poset, const Field& field, const Vector& x, const Vector& y);

/// (q-1)^{|M(I)|} q^{|I_M|}, the number of vectors whose support closure is I.
BigInt sphere_size(const Poset& poset, std::uint32_t q, Mask ideal);
/// The vectors v with <supp(v)>_P = I: nonzero on M(I), free on I_M, zero elsewhere.
std::vector<Vector> sphere(const Poset& poset, const Field& field, Mask ideal, std::size_t cap = kDefaultSphereCap);
/// |S_{B,E}| for every block B of a partition.
BigVector sphere_class_sizes(const IdealPartition& partition, std::uint32_t q);

/// E-weight distribution: counts[b] = number of codewords whose support
/// closure in the partition's poset lies in block b.
struct WeightDistribution {
  BigVector counts;

  BigInt total() const;
  bool operator==(const WeightDistribution&) const = default;
};

WeightDistribution weight_distribution(const GeneratorMatrix& g, const IdealPartition& partition,
                                       std::size_t cap = kDefaultCodewordCap);
WeightDistribution weight_distribution(std::span<const Vector> words, const IdealPartition& partition);

}  // namespace pmw
