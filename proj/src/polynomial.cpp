#include "polyrec/polynomial.hpp"

#include <boost/integer/common_factor_rt.hpp>
#include <sstream>

#include "polyrec/constructors.hpp"
#include "polyrec/error.hpp"

namespace polyrec {

namespace {

std::string rational_text(const Rational& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << '/' << denominator(r);
  return out.str();
}

long long witness_of(const BigInt& n) {
  return n > BigInt(std::numeric_limits<long long>::max()) ? std::numeric_limits<long long>::max()
                                                            : n.convert_to<long long>();
}

BigInt ceil_of(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (q * denominator(r) < numerator(r)) ++q;
  return q;
}

}  // namespace

RationalPolynomial::RationalPolynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { normalize(); }

RationalPolynomial RationalPolynomial::from_integers(const std::vector<BigInt>& ascending) {
  std::vector<Rational> c(ascending.begin(), ascending.end());
  return RationalPolynomial(std::move(c));
}

void RationalPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational RationalPolynomial::operator()(const BigInt& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * Rational(x) + *it;
  return acc;
}

BigInt RationalPolynomial::integer_at(const BigInt& x) const {
  Rational v = (*this)(x);
  if (denominator(v) != 1) throw Error(ErrorCode::NotIntegerValued, "non-integer value", witness_of(x));
  return numerator(v);
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  return a + Rational(-1) * b;
}

RationalPolynomial operator*(const Rational& k, const RationalPolynomial& p) {
  std::vector<Rational> c = p.coeffs_;
  for (auto& x : c) x *= k;
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPolynomial(std::move(c));
}

std::string RationalPolynomial::to_coefficient_list() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    out += rational_text(coeffs_[i]);
    if (i) out += ',';
  }
  return out;
}

std::string RationalPolynomial::to_expression() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    bool unit = mag == 1 && i > 0;
    if (!unit) out += rational_text(mag);
    if (i > 0) {
      if (!unit) out += '*';
      out += 'x';
      if (i > 1) out += '^' + std::to_string(i);
    }
  }
  return out;
}

RationalPolynomial difference(const RationalPolynomial& p) {
  // (x+1)^i − x^i = Σ_{j<i} binom(i, j) x^j
  std::vector<Rational> c(p.coefficients().size());
  for (std::size_t i = 1; i < p.coefficients().size(); ++i)
    for (std::size_t j = 0; j < i; ++j) c[j] += p.coefficients()[i] * Rational(binomial(i, j));
  return RationalPolynomial(std::move(c));
}

BigInt root_bound(const RationalPolynomial& p) {
  if (p.is_constant()) return 0;
  Rational best = 0;
  const Rational lead = p.leading() < 0 ? Rational(-p.leading()) : p.leading();
  for (std::size_t j = 0; j < p.degree(); ++j) {
    Rational r = p.coefficients()[j] / lead;
    if (r < 0) r = -r;
    if (r > best) best = r;
  }
  return ceil_of(1 + best);
}

void validate(const RationalPolynomial& p) {
  for (std::size_t n = 0; n <= p.degree(); ++n) {
    Rational v = p(BigInt(n));
    if (denominator(v) != 1)
      throw Error(ErrorCode::NotIntegerValued, "P(" + std::to_string(n) + ") = " + rational_text(v),
                  static_cast<long long>(n));
  }
  if (p.is_constant()) {
    if (p.coefficient(0) < 0) throw Error(ErrorCode::NegativeValue, "P(0) < 0", 0);
    return;
  }
  if (p.leading() < 0) throw Error(ErrorCode::NegativeLeadingCoefficient, "leading coefficient is negative");
  const BigInt bound = root_bound(p);
  for (BigInt n = 0; n <= bound; ++n)
    if (p(n) < 0) throw Error(ErrorCode::NegativeValue, "P(" + n.str() + ") < 0", witness_of(n));
}

ScaledPolynomial scale_to_integers(const RationalPolynomial& p) {
  BigInt s = 1;
  for (const auto& c : p.coefficients()) s = boost::integer::lcm(s, BigInt(denominator(c)));
  ScaledPolynomial out{{}, s};
  for (const auto& c : p.coefficients()) out.coefficients.push_back(numerator(c) * (s / denominator(c)));
  return out;
}

std::set<BigInt> image_up_to(const RationalPolynomial& p, const BigInt& max_value) {
  std::set<BigInt> out;
  if (p.is_constant()) {
    BigInt d = p.integer_at(0);
    if (d <= max_value) out.insert(d);
    return out;
  }
  // Beyond this argument P is strictly increasing.
  const BigInt monotone_from = root_bound(difference(p));
  for (BigInt n = 0;; ++n) {
    BigInt v = p.integer_at(n);
    if (v <= max_value) out.insert(v);
    if (n > monotone_from && v > max_value) break;
  }
  return out;
}

}  // namespace polyrec
