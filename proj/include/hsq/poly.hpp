#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsq/bigint.hpp"

namespace hsq {

/// Polynomial in t with arbitrary-precision integer coefficients, index = degree.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  /// c * t^degree
  static IntPoly monomial(const BigInt& c, int degree);
  /// Accepts "t^4+2t^3+2t+1", "-(t-1)", "3", "(1-t^2)(1+t)^2"; the variable is t.
  static IntPoly parse(std::string_view text);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int k) const;
  BigInt leading() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

  /// Gcd of the coefficients, nonnegative.
  BigInt content() const;
  /// Divided by its content, leading coefficient made positive.
  IntPoly primitive_part() const;
  /// Multiplied by t^k.
  IntPoly shifted(int k) const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& c, const IntPoly& p);
  IntPoly& operator+=(const IntPoly& other) { return *this = *this + other; }
  IntPoly& operator-=(const IntPoly& other) { return *this = *this - other; }
  IntPoly& operator*=(const IntPoly& other) { return *this = *this * other; }
  bool operator==(const IntPoly&) const = default;

  /// Descending powers, e.g. "t^4+2t^3+2t+1"; "0" for zero.
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;
};

/// Division with remainder over the integers. Each step must divide exactly by
/// the divisor's leading coefficient (always true for monic divisors).
PolyDivision divrem(const IntPoly& a, const IntPoly& b);
/// Exact quotient, or nullopt when b does not divide a over the integers.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);
/// Greatest common divisor over the rationals, as a primitive integer
/// polynomial with positive leading coefficient. gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Phi_d, the d-th cyclotomic polynomial (d >= 1).
const IntPoly& cyclotomic(int d);
/// Euler's totient.
int totient(int d);

struct CycloFactorization {
  std::vector<std::pair<int, int>> factors;  // (order d, multiplicity), ascending d
  IntPoly remainder;

  bool fully_cyclotomic() const;
};

/// Strips every Phi_d with totient(d) <= degree by repeated exact division.
CycloFactorization factor_cyclotomic(const IntPoly& p);

/// num / den in lowest terms: gcd(num, den) = 1, no common integer content,
/// den(0) != 0 and the leading coefficient of den positive.
class RationalGF {
 public:
  RationalGF(IntPoly num, IntPoly den);

  /// Skips the polynomial gcd; the caller guarantees the pair is coprime.
  static RationalGF from_coprime(IntPoly num, IntPoly den);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool operator==(const RationalGF&) const = default;

  /// "(num) / (den)"
  std::string to_string() const;
  /// Table-style rendering with the denominator as a product of Phi_d(t),
  /// e.g. "-(t^2+1) / Phi_1(t)Phi_2(t)^2".
  std::string to_factored_string() const;

 private:
  RationalGF() = default;
  void normalize_units();
  IntPoly num_;
  IntPoly den_;
};

/// Coefficients of t^0 .. t^(terms-1).
std::vector<BigInt> series_expand(const RationalGF& gf, int terms);

enum class FitStatus { kFound, kInconclusive };

struct FitResult {
  FitStatus status;
  std::optional<RationalGF> gf;
  int order = 0;  // linear complexity of the sequence
};

/// Shortest linear recurrence by exact rational Berlekamp-Massey. Found only
/// when the sequence has at least 2 * order + 4 terms and the resulting
/// rational function reproduces every supplied term.
FitResult fit_recurrence(const std::vector<BigInt>& seq);

}  // namespace hsq
