#pragma once

#include <set>
#include <string>
#include <vector>

#include "polyrec/bigint.hpp"

namespace polyrec {

// Exact polynomial with rational coefficients; coefficient i multiplies x^i.
// Trailing zero coefficients are dropped, so the zero polynomial has no
// coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> ascending);
  static RationalPolynomial from_integers(const std::vector<BigInt>& ascending);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  // Coefficient of x^i (zero past the degree).
  Rational coefficient(std::size_t i) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Degree; 0 for constants and for the zero polynomial.
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const BigInt& x) const;
  // Value at x, which must be an integer.
  BigInt integer_at(const BigInt& x) const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  // Comma-separated rationals, highest degree first ("0" for zero).
  std::string to_coefficient_list() const;
  // Human-readable form such as "1/3*x^4 - 2*x^3 + 4".
  std::string to_expression() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

// P(x+1) − P(x).
RationalPolynomial difference(const RationalPolynomial& p);

// Throws NotIntegerValued, NegativeLeadingCoefficient or NegativeValue
// (with the witness argument) unless P maps N into N.
void validate(const RationalPolynomial& p);

// Smallest integer B ≥ 0 such that P has no real root above B
// (1 + max |c_j / c_k|, rounded up).
BigInt root_bound(const RationalPolynomial& p);

struct ScaledPolynomial {
  std::vector<BigInt> coefficients;  // ascending; s · P
  BigInt scale;                      // lcm of the denominators of P
};
ScaledPolynomial scale_to_integers(const RationalPolynomial& p);

// P(N) ∩ [0, max_value]. P must satisfy validate().
std::set<BigInt> image_up_to(const RationalPolynomial& p, const BigInt& max_value);

}  // namespace polyrec
