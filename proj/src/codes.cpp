#include "pmw/codes.hpp"

#include <string>

#include "pmw/error.hpp"

namespace pmw {

GeneratorMatrix::GeneratorMatrix(Field field, int length, std::vector<Vector> rows)
    : field_(std::move(field)), n_(length), rows_(std::move(rows)) {
  if (n_ < 0 || n_ > kMaxGroundSet) throw Error(ErrorCode::GroundSetTooLarge, "code length outside [0, 16]");
  for (const auto& r : rows_) {
    if (static_cast<int>(r.size()) != n_) throw Error(ErrorCode::LengthMismatch, "generator row has wrong length");
    for (Element e : r)
      if (e >= field_.order()) throw Error(ErrorCode::OutOfRangeElement, "generator entry out of range");
  }
}

RowReduction rref(const GeneratorMatrix& g) {
  const Field& f = g.field();
  std::vector<Vector> m = g.rows();
  const int n = g.length();
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int col = 0; col < n && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Element scale = f.inv(m[row][col]);
    for (auto& e : m[row]) e = f.mul(e, scale);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Element factor = m[r][col];
      for (int c = 0; c < n; ++c) m[r][c] = f.sub(m[r][c], f.mul(factor, m[row][c]));
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  const int rank = static_cast<int>(row);
  const bool dropped = g.num_rows() > row;
  return RowReduction{GeneratorMatrix(f, n, std::move(m)), rank, dropped, std::move(pivots)};
}

GeneratorMatrix dual_code(const GeneratorMatrix& g) {
  const Field& f = g.field();
  const int n = g.length();
  const RowReduction red = rref(g);
  std::vector<bool> is_pivot(n, false);
  for (int c : red.pivots) is_pivot[c] = true;
  std::vector<Vector> rows;
  // One basis vector per free column: x_free = 1, x_pivot = -R[r][free].
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector x(n, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < red.pivots.size(); ++r) x[red.pivots[r]] = f.neg(red.reduced.rows()[r][free]);
    rows.push_back(std::move(x));
  }
  return GeneratorMatrix(f, n, std::move(rows));
}

std::vector<Vector> codewords(const GeneratorMatrix& g, std::size_t cap) {
  const RowReduction red = rref(g);
  const Field& f = g.field();
  const std::uint32_t q = f.order();
  std::size_t count = 1;
  for (int i = 0; i < red.rank; ++i) {
    if (count > cap / q) throw Error(ErrorCode::CodeTooLarge, "code has more than " + std::to_string(cap) + " words");
    count *= q;
  }
  if (count > cap) throw Error(ErrorCode::CodeTooLarge, "code has more than " + std::to_string(cap) + " words");
  const auto& basis = red.reduced.rows();
  std::vector<Vector> out;
  out.reserve(count);
  Vector msg(red.rank, 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    // msg is idx written in base q, most significant digit first.
    std::size_t t = idx;
    for (int i = red.rank - 1; i >= 0; --i) {
      msg[i] = static_cast<Element>(t % q);
      t /= q;
    }
    Vector word(g.length(), 0);
    for (int i = 0; i < red.rank; ++i) {
      if (msg[i] == 0) continue;
      for (int c = 0; c < g.length(); ++c) word[c] = f.add(word[c], f.mul(msg[i], basis[i][c]));
    }
    out.push_back(std::move(word));
  }
  return out;
}

Mask support(const Vector& x) {
  Mask m = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) m |= Mask{1} << i;
  return m;
}

Mask ideal_of(const Poset& poset, const Vector& x) {
  if (static_cast<int>(x.size()) != poset.size())
    throw Error(ErrorCode::LengthMismatch, "vector length differs from the poset size");
  return ideal_closure(poset, support(x));
}

int p_weight(const Poset& poset, const Vector& x) { return popcount(ideal_of(poset, x)); }

int p_distance(const Poset& poset, const Field& field, const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::LengthMismatch, "vectors of different lengths");
  Vector d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = field.sub(x[i], y[i]);
  return p_weight(poset, d);
}

BigInt sphere_size(const Poset& poset, std::uint32_t q, Mask ideal) {
  const MaximalSplit split = maximal_split(poset, ideal);
  return big_pow(q - 1, popcount(split.maximal)) * big_pow(q, popcount(split.nonmaximal));
}

std::vector<Vector> sphere(const Poset& poset, const Field& field, Mask ideal, std::size_t cap) {
  const MaximalSplit split = maximal_split(poset, ideal);
  if (sphere_size(poset, field.order(), ideal) > BigInt(static_cast<unsigned long>(cap)))
    throw Error(ErrorCode::SphereTooLarge, "sphere has more than " + std::to_string(cap) + " vectors");
  const int n = poset.size();
  std::vector<int> coords;
  std::vector<Element> lowest;
  for (int i = 0; i < n; ++i) {
    if (split.maximal >> i & 1u) {
      coords.push_back(i);
      lowest.push_back(1);
    } else if (split.nonmaximal >> i & 1u) {
      coords.push_back(i);
      lowest.push_back(0);
    }
  }
  std::vector<Vector> out;
  Vector v(n, 0);
  for (std::size_t k = 0; k < coords.size(); ++k) v[coords[k]] = lowest[k];
  // Odometer over the free coordinates.
  while (true) {
    out.push_back(v);
    std::size_t k = coords.size();
    while (k > 0) {
      --k;
      if (v[coords[k]] + 1 < field.order()) {
        ++v[coords[k]];
        break;
      }
      v[coords[k]] = lowest[k];
      if (k == 0) return out;
    }
    if (coords.empty()) return out;
  }
}

BigVector sphere_class_sizes(const IdealPartition& partition, std::uint32_t q) {
  BigVector out(partition.num_blocks());
  for (std::size_t b = 0; b < partition.num_blocks(); ++b)
    for (Mask m : partition.block_ideals(b)) out[b] += sphere_size(partition.poset(), q, m);
  return out;
}

BigInt WeightDistribution::total() const {
  BigInt s = 0;
  for (const auto& c : counts) s += c;
  return s;
}

WeightDistribution weight_distribution(std::span<const Vector> words, const IdealPartition& partition) {
  WeightDistribution w{BigVector(partition.num_blocks())};
  for (const auto& x : words) ++w.counts[partition.class_of_ideal(ideal_of(partition.poset(), x))];
  return w;
}

WeightDistribution weight_distribution(const GeneratorMatrix& g, const IdealPartition& partition, std::size_t cap) {
  if (g.length() != partition.poset().size())
    throw Error(ErrorCode::LengthMismatch, "code length differs from the poset size");
  const auto words = codewords(g, cap);
  return weight_distribution(words, partition);
}

}  // namespace pmw
