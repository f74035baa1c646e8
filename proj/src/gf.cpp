#include "pmw/gf.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "pmw/error.hpp"

namespace pmw {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::OutOfRangeElement: return "OutOfRangeElement";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::IdealCountCapExceeded: return "IdealCountCapExceeded";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::GroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotAutomorphisms: return "NotAutomorphisms";
    case ErrorCode::PosetMismatch: return "PosetMismatch";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::CodeTooLarge: return "CodeTooLarge";
    case ErrorCode::SphereTooLarge: return "SphereTooLarge";
    case ErrorCode::NotMacWilliamsType: return "NotMacWilliamsType";
    case ErrorCode::NonIntegralQuotient: return "NonIntegralQuotient";
    case ErrorCode::ZeroGenerator: return "ZeroGenerator";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime and small; Fermat.
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of f modulo g over F_p; g nonzero.
Poly poly_rem(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t c = static_cast<std::uint64_t>(f.back()) * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t sub = c * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    // Every monic polynomial of degree d.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

const std::map<std::uint32_t, std::pair<std::uint32_t, Poly>>& builtin_moduli() {
  static const std::map<std::uint32_t, std::pair<std::uint32_t, Poly>> table = {
      {4, {2, {1, 1, 1}}},      // x^2 + x + 1
      {8, {2, {1, 1, 0, 1}}},   // x^3 + x + 1
      {9, {3, {2, 1, 1}}},      // x^2 + x + 2
      {16, {2, {1, 1, 0, 0, 1}}},  // x^4 + x + 1
      {25, {5, {2, 1, 1}}},     // x^2 + x + 2
      {27, {3, {1, 2, 0, 1}}},  // x^3 + 2x + 1
  };
  return table;
}

}  // namespace

Field Field::make(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorCode::OutOfRange, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(ErrorCode::TooLarge, "field order exceeds " + std::to_string(kMaxOrder));
  }

  Field f;
  f.p_ = p;
  f.m_ = m;
  f.q_ = static_cast<std::uint32_t>(q);
  if (m > 1) {
    if (!modulus) {
      auto it = builtin_moduli().find(f.q_);
      if (it == builtin_moduli().end())
        throw Error(ErrorCode::OutOfRange, "no built-in modulus for q = " + std::to_string(q));
      modulus = it->second.second;
    }
    if (modulus->size() != m + 1 || modulus->back() != 1)
      throw Error(ErrorCode::OutOfRange, "modulus must be monic of degree " + std::to_string(m));
    for (auto c : *modulus)
      if (c >= p) throw Error(ErrorCode::OutOfRangeElement, "modulus coefficient out of range");
    if (!is_irreducible(*modulus, p)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_p");
    f.modulus_ = *modulus;
  }
  f.build_tables();
  return f;
}

Field Field::of_order(std::uint32_t q) {
  if (is_prime(q)) return make(q);
  auto it = builtin_moduli().find(q);
  if (it == builtin_moduli().end()) throw Error(ErrorCode::OutOfRange, "no built-in field of order " + std::to_string(q));
  std::uint32_t p = it->second.first;
  std::uint32_t m = static_cast<std::uint32_t>(it->second.second.size() - 1);
  return make(p, m, it->second.second);
}

Element Field::poly_mul(Element a, Element b) const {
  Poly x(m_), y(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    x[i] = a % p_;
    a /= p_;
    y[i] = b % p_;
    b /= p_;
  }
  Poly prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i)
    for (std::uint32_t j = 0; j < m_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_);
  Poly r = poly_rem(std::move(prod), modulus_, p_);
  Element out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
  return out;
}

void Field::build_tables() {
  if (m_ > 1) {
    mul_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Element a = 0; a < q_; ++a)
      for (Element b = a; b < q_; ++b) {
        Element c = poly_mul(a, b);
        mul_table_[a * q_ + b] = c;
        mul_table_[b * q_ + a] = c;
      }
  }
  inv_table_.assign(q_, 0);
  for (Element a = 1; a < q_; ++a) {
    if (inv_table_[a] != 0) continue;
    for (Element b = 1; b < q_; ++b)
      if (mul(a, b) == 1) {
        inv_table_[a] = b;
        inv_table_[b] = a;
        break;
      }
  }
  trace_table_.assign(q_, 0);
  for (Element a = 0; a < q_; ++a) {
    Element sum = 0, power = a;
    for (std::uint32_t i = 0; i < m_; ++i) {
      sum = add(sum, power);
      // Frobenius: power <- power^p
      Element next = 1;
      for (std::uint32_t k = 0; k < p_; ++k) next = mul(next, power);
      power = next;
    }
    // The trace lies in the prime subfield, whose elements are the digits 0..p-1.
    trace_table_[a] = sum;
  }
}

void Field::check(Element a) const {
  if (a >= q_) throw Error(ErrorCode::OutOfRangeElement, std::to_string(a) + " not in F_" + std::to_string(q_));
}

Element Field::add(Element a, Element b) const {
  check(a);
  check(b);
  if (m_ == 1) return (a + b) % p_;
  Element r = 0, scale = 1;
  while (a > 0 || b > 0) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Element Field::neg(Element a) const {
  check(a);
  if (m_ == 1) return (p_ - a) % p_;
  Element r = 0, scale = 1;
  while (a > 0) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Element Field::mul(Element a, Element b) const {
  check(a);
  check(b);
  if (m_ == 1) return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  return mul_table_[a * q_ + b];
}

Element Field::inv(Element a) const {
  check(a);
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return inv_table_[a];
}

std::uint32_t Field::trace(Element a) const {
  check(a);
  return trace_table_[a];
}

Element Field::dot(std::span<const Element> u, std::span<const Element> v) const {
  if (u.size() != v.size()) throw Error(ErrorCode::LengthMismatch, "dot product of vectors with different lengths");
  Element s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s = add(s, mul(u[i], v[i]));
  return s;
}

CycSum::CycSum(std::uint32_t p) : p_(p), coeffs_(p) {}

CycSum::CycSum(std::uint32_t p, std::vector<BigInt> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != p_) throw Error(ErrorCode::LengthMismatch, "cyclotomic sum needs exactly p coefficients");
  normalize();
}

void CycSum::normalize() {
  const BigInt shift = coeffs_.back();
  if (shift == 0) return;
  for (auto& c : coeffs_) c -= shift;
}

void CycSum::add_power(std::uint32_t exponent, const BigInt& count) {
  coeffs_[exponent % p_] += count;
  normalize();
}

CycSum& CycSum::operator+=(const CycSum& other) {
  if (other.p_ != p_) throw Error(ErrorCode::LengthMismatch, "adding cyclotomic sums of different orders");
  for (std::uint32_t c = 0; c < p_; ++c) coeffs_[c] += other.coeffs_[c];
  normalize();
  return *this;
}

bool CycSum::is_integer() const {
  // Normalized: the last coefficient is zero, so every nonconstant one must be too.
  for (std::uint32_t c = 1; c < p_; ++c)
    if (coeffs_[c] != 0) return false;
  return true;
}

std::optional<BigInt> CycSum::to_integer() const {
  if (!is_integer()) return std::nullopt;
  return coeffs_[0];
}

bool CycSum::operator==(const CycSum& other) const { return p_ == other.p_ && coeffs_ == other.coeffs_; }

CycSum char_sum(const Field& field, std::span<const Element> values) {
  CycSum s(field.characteristic());
  std::vector<std::uint64_t> hist(field.characteristic(), 0);
  for (Element a : values) ++hist[field.trace(a)];
  for (std::uint32_t c = 0; c < field.characteristic(); ++c)
    if (hist[c]) s.add_power(c, BigInt(static_cast<unsigned long>(hist[c])));
  return s;
}

}  // namespace pmw
