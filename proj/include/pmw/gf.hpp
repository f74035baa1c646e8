#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pmw/bigint.hpp"

namespace pmw {

/// Field elements are canonical integers in [0, q): the base-p digits of the
/// integer are the polynomial-basis coefficients, constant term first.
using Element = std::uint32_t;
using Vector = std::vector<Element>;

/// F_q with q = p^m. Prime fields use modular arithmetic directly; extension
/// fields are F_p[x]/(modulus) with precomputed tables.
class Field {
 public:
  /// Largest field the library will build tables for.
  static constexpr std::uint32_t kMaxOrder = 1u << 10;

  /// `modulus` is the monic degree-m polynomial, coefficients listed from the
  /// constant term upward (m + 1 entries). Required for m > 1 unless q has a
  /// built-in modulus (4, 8, 9, 16, 25, 27).
  static Field make(std::uint32_t p, std::uint32_t m = 1,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Convenience: F_q for a prime power q, using the built-in modulus.
  static Field of_order(std::uint32_t q);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Constant term first; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element mul(Element a, Element b) const;
  Element neg(Element a) const;
  Element inv(Element a) const;
  /// Absolute trace to F_p, returned as an integer in [0, p).
  std::uint32_t trace(Element a) const;

  Element dot(std::span<const Element> u, std::span<const Element> v) const;

  bool operator==(const Field& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
  }

 private:
  Field() = default;
  void check(Element a) const;
  Element poly_mul(Element a, Element b) const;
  void build_tables();

  std::uint32_t p_ = 2;
  std::uint32_t m_ = 1;
  std::uint32_t q_ = 2;
  std::vector<std::uint32_t> modulus_;
  std::vector<Element> mul_table_;
  std::vector<Element> inv_table_;
  std::vector<std::uint32_t> trace_table_;
};

bool is_prime(std::uint64_t n);

/// Exact element of Z[zeta_p]: sum of coeffs[c] * zeta_p^c. Stored normalized
/// modulo the all-ones vector (last coefficient zero).
class CycSum {
 public:
  explicit CycSum(std::uint32_t p);
  CycSum(std::uint32_t p, std::vector<BigInt> coeffs);

  std::uint32_t root_order() const noexcept { return p_; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  /// Adds count * zeta^exponent.
  void add_power(std::uint32_t exponent, const BigInt& count = 1);
  CycSum& operator+=(const CycSum& other);

  bool is_integer() const;
  /// Rational integer value, if the sum is one.
  std::optional<BigInt> to_integer() const;

  bool operator==(const CycSum& other) const;

 private:
  void normalize();

  std::uint32_t p_;
  std::vector<BigInt> coeffs_;
};

/// Sum of chi(a) over `values`, with chi(a) = zeta_p^{Tr(a)}.
CycSum char_sum(const Field& field, std::span<const Element> values);

}  // namespace pmw
