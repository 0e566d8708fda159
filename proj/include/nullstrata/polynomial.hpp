#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "nullstrata/scalar.hpp"

namespace nullstrata {

/// Integer polynomial in t with coefficients indexed by degree. Always kept
/// trimmed: no trailing zero coefficients, so the zero polynomial has none.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<Integer> coeffs);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(int degree, const Integer& c = 1);
  /// [d]_t = 1 + t + ... + t^{d-1}
  static IntPolynomial q_integer(int d);

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Integer coefficient(int d) const;
  Integer leading() const;

  Integer evaluate(const Integer& t) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator-(IntPolynomial a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Exact quotient by a divisor with unit leading coefficient, or nullopt
  /// when the remainder is nonzero.
  std::optional<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;

  IntPolynomial shifted(int by) const;  // multiply by t^by

  std::string to_string() const;  // e.g. "t^6 - t^4 - t^3 + t"

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

}  // namespace nullstrata
