#pragma once

// Exact coefficient ring for the contour representation.
//
// Elements are quotients of finite Laurent sums in q and in formal weight
// variables z_1..z_N:
//
//     sum_k c_k * q^{a_k} * z_1^{m_k1} ... z_N^{m_kN}
//
// with c_k and a_k exact rationals and m_k integer vectors. N (the arity) is
// fixed per computation and never coerced: r for a single module, 2r for a
// double tensor, 0 for pure q-scalars such as algebra-element coefficients.

#include "qsuper/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsuper {

class ArityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The key q^q * prod z_k^{z[k]}.
struct Monomial {
  Rational q;
  std::vector<int> z;

  static Monomial unit(std::size_t arity) { return Monomial{Rational(0), std::vector<int>(arity, 0)}; }

  std::size_t arity() const { return z.size(); }
  bool is_unit() const;
  Monomial inverse() const;
  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const { return *this * other.inverse(); }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.q == b.q && a.z == b.z; }
};

/// Storage and rendering order: higher q-power first, then z exponent
/// vectors ascending lexicographically.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Finite sum of monomials with nonzero rational coefficients.
class LaurentSum {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  explicit LaurentSum(std::size_t arity = 0) : arity_(arity) {}

  static LaurentSum constant(const Rational& value, std::size_t arity);
  static LaurentSum monomial(const Monomial& key, const Rational& coeff = Rational(1));

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds coeff * key, dropping the entry if it cancels.
  void add_term(const Monomial& key, const Rational& coeff);

  LaurentSum scaled(const Rational& factor) const;
  LaurentSum shifted(const Monomial& factor) const;

  LaurentSum& operator+=(const LaurentSum& other);
  LaurentSum& operator-=(const LaurentSum& other);
  friend LaurentSum operator+(LaurentSum a, const LaurentSum& b) { return a += b; }
  friend LaurentSum operator-(LaurentSum a, const LaurentSum& b) { return a -= b; }
  friend LaurentSum operator*(const LaurentSum& a, const LaurentSum& b);
  LaurentSum operator-() const { return scaled(Rational(-1)); }

  friend bool operator==(const LaurentSum& a, const LaurentSum& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  std::size_t arity_;
  Terms terms_;
};

/// Exact quotient `numerator / denominator` of Laurent sums.
///
/// Every operation returns a normalized value: zero is 0/1, a denominator that
/// divides the numerator exactly is divided out, and otherwise the
/// denominator is centered (its exponent range is symmetric about zero in
/// each variable, rounding down) and has leading coefficient 1. No gcd is
/// taken, so equality is decided by cross-multiplication.
class PhaseScalar {
 public:
  explicit PhaseScalar(std::size_t arity = 0);
  PhaseScalar(LaurentSum numerator);  // NOLINT(google-explicit-constructor)
  PhaseScalar(LaurentSum numerator, LaurentSum denominator);

  static PhaseScalar zero(std::size_t arity) { return PhaseScalar(arity); }
  static PhaseScalar one(std::size_t arity) { return constant(Rational(1), arity); }
  static PhaseScalar constant(const Rational& value, std::size_t arity);

  std::size_t arity() const { return num_.arity(); }
  const LaurentSum& numerator() const { return num_; }
  const LaurentSum& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  /// True when the denominator is the constant 1.
  bool is_laurent() const;

  /// Throws std::domain_error on zero.
  PhaseScalar inverse() const;

  /// Explicit promotion of a pure q-scalar (arity 0) into an N-variable context.
  PhaseScalar lifted(std::size_t arity) const;

  /// Substitutes z_k -> q^{exponents[k]} for every k, giving an arity-0 value.
  /// Returns nullopt when the denominator vanishes under the substitution.
  std::optional<PhaseScalar> specialized(std::span<const Rational> exponents) const;

  PhaseScalar& operator+=(const PhaseScalar& other);
  PhaseScalar& operator-=(const PhaseScalar& other);
  PhaseScalar& operator*=(const PhaseScalar& other);
  PhaseScalar& operator/=(const PhaseScalar& other);
  friend PhaseScalar operator+(PhaseScalar a, const PhaseScalar& b) { return a += b; }
  friend PhaseScalar operator-(PhaseScalar a, const PhaseScalar& b) { return a -= b; }
  friend PhaseScalar operator*(PhaseScalar a, const PhaseScalar& b) { return a *= b; }
  friend PhaseScalar operator/(PhaseScalar a, const PhaseScalar& b) { return a /= b; }
  PhaseScalar operator-() const;

  friend bool operator==(const PhaseScalar& a, const PhaseScalar& b);
  friend bool operator!=(const PhaseScalar& a, const PhaseScalar& b) { return !(a == b); }

  /// "num" when the denominator is 1, else "(num)/(den)" with parentheses
  /// only around multi-term sums.
  std::string to_string() const;

 private:
  void normalize();

  LaurentSum num_;
  LaurentSum den_;
};

/// q^a with coefficient 1.
PhaseScalar q_power(const Rational& a, std::size_t arity = 0);
/// z_k^n with coefficient 1; k is zero-based and must be < arity.
PhaseScalar z_power(std::size_t k, int n, std::size_t arity);
/// Integer power, negative exponents allowed for nonzero base.
PhaseScalar pow(const PhaseScalar& base, int n);
/// [a]_base = 1 + base + ... + base^{a-1}.
PhaseScalar q_number(unsigned a, const PhaseScalar& base);

/// Exact division of Laurent sums; nullopt when `divisor` does not divide
/// `dividend` in the Laurent ring.
std::optional<LaurentSum> exact_divide(const LaurentSum& dividend, const LaurentSum& divisor);

}  // namespace qsuper
