#pragma once

// Exact arithmetic in the cyclotomic field Q(ζ_M).
//
// Elements are polynomials in ζ of degree < deg Φ_M with rational coefficients,
// stored sparsely as sorted (power, coefficient) pairs with no zero entries.
// Every value carries a shared handle to its field so that conductor
// mismatches are detected at the point of use.

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ngc {

/// Root-of-unity order available in the working field. Must be even and ≥ 2.
class Conductor {
 public:
  explicit Conductor(int m);
  int value() const noexcept { return m_; }
  friend bool operator==(Conductor, Conductor) = default;

 private:
  int m_;
};

/// Immutable description of Q(ζ_M): the cyclotomic polynomial and the reduced
/// power basis expansion of every ζ^k, 0 ≤ k < M.
class CycloField {
 public:
  explicit CycloField(Conductor conductor);

  int conductor() const noexcept { return m_; }
  int degree() const noexcept { return degree_; }
  bool power_of_two() const noexcept { return power_of_two_; }

  /// Coefficients of Φ_M, constant term first (monic, length degree+1).
  const std::vector<long>& cyclotomic_polynomial() const noexcept { return phi_; }
  /// ζ^k written in the power basis; k is reduced mod M.
  const std::vector<long>& monomial(long k) const;

 private:
  int m_;
  int degree_;
  bool power_of_two_;
  std::vector<long> phi_;
  std::vector<std::vector<long>> monomials_;
};

using FieldPtr = std::shared_ptr<const CycloField>;

FieldPtr make_field(int conductor);

/// ζ_M^exponent with the exponent canonicalised into [0, M).
struct RootOfUnity {
  int conductor = 2;
  int exponent = 0;

  RootOfUnity() = default;
  RootOfUnity(int conductor, long exponent);
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

class CycloNum {
 public:
  /// The zero element of `field`.
  explicit CycloNum(FieldPtr field);
  /// Takes coefficients in the power basis; longer vectors are reduced mod Φ_M.
  CycloNum(FieldPtr field, std::vector<mpq_class> coeffs);

  static CycloNum rational(FieldPtr field, const mpq_class& q);
  static CycloNum integer(FieldPtr field, long n) { return rational(std::move(field), mpq_class(n)); }
  static CycloNum root(FieldPtr field, long exponent);
  static CycloNum embed(FieldPtr field, const RootOfUnity& r);

  int conductor() const noexcept { return field_->conductor(); }
  const FieldPtr& field() const noexcept { return field_; }
  /// Dense coefficients in the power basis 1, ζ, ..., ζ^{d-1}.
  std::vector<mpq_class> coeffs() const;
  /// Nonzero (power, coefficient) pairs in increasing power.
  const std::vector<std::pair<int, mpq_class>>& terms() const noexcept { return terms_; }

  bool is_zero() const;
  bool is_one() const;

  CycloNum& operator+=(const CycloNum& rhs);
  CycloNum& operator-=(const CycloNum& rhs);
  CycloNum& operator*=(const CycloNum& rhs);
  CycloNum operator-() const;

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend bool operator==(const CycloNum& a, const CycloNum& b);

  /// Throws DivisionByZero for zero.
  CycloNum inverse() const;
  /// Integer power; negative exponents go through inverse().
  CycloNum pow(long k) const;

  CycloNum scaled(const mpq_class& q) const;

  /// Human readable polynomial in z, e.g. "1/2*z^2 - 1/2*z^6".
  std::string to_string() const;

 private:
  void check_same_field(const CycloNum& other) const;
  static CycloNum from_dense(FieldPtr field, std::vector<mpq_class>& dense);

  FieldPtr field_;
  std::vector<std::pair<int, mpq_class>> terms_;
};

/// Exponent e with a = ζ_M^e, or empty when a is not a root of unity.
std::optional<RootOfUnity> as_root_of_unity(const CycloNum& a);

/// Square root ζ^t of ζ^{2t} with 0 ≤ 2t < M. Throws NotAnEvenPowerRoot.
CycloNum principal_sqrt_even_power(const CycloNum& a);

/// Least k ≥ 1 with a^k = 1, or empty when a is not a root of unity.
std::optional<int> root_order(const CycloNum& a);

/// Positive square root of |G| = 2^n, built from √2 = ζ_8 + ζ_8^{-1}.
/// Requires 8 | M so that ζ_8 lives in the field. Throws UnsupportedGroup.
CycloNum sqrt_group_order(const FieldPtr& field, int group_order);

}  // namespace ngc
