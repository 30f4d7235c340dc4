#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace hecke {

using Rational = boost::rational<long long>;

double to_double(const Rational& r);
std::string to_string(const Rational& r);

/// Parses "n", "-n", "n/d" or "-n/d". Throws std::invalid_argument on junk.
Rational parse_rational(const std::string& s);

/// Polynomial in the deformation symbol p with exact rational coefficients.
/// All algebra identities in this library are decided exactly in this ring;
/// numeric evaluation substitutes p = (q-1)/sqrt(q).
class PolyScalar {
 public:
  PolyScalar() = default;
  PolyScalar(long long constant);  // NOLINT: implicit by design
  PolyScalar(const Rational& constant);  // NOLINT

  /// The monomial c * p^degree.
  static PolyScalar monomial(int degree, const Rational& c = Rational(1));
  /// p^degree.
  static PolyScalar p_power(int degree);

  bool is_zero() const { return coeff_.empty(); }
  /// Degree of the polynomial, -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeff_.size()) - 1; }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeff_; }

  PolyScalar& operator+=(const PolyScalar& o);
  PolyScalar& operator-=(const PolyScalar& o);
  PolyScalar& operator*=(const PolyScalar& o);
  PolyScalar operator-() const;

  friend PolyScalar operator+(PolyScalar a, const PolyScalar& b) { return a += b; }
  friend PolyScalar operator-(PolyScalar a, const PolyScalar& b) { return a -= b; }
  friend PolyScalar operator*(PolyScalar a, const PolyScalar& b) { return a *= b; }
  bool operator==(const PolyScalar& o) const { return coeff_ == o.coeff_; }

  /// Numeric value at deformation parameter q > 0.
  double eval_at_q(double q) const;

  /// Prints as "a0 + a1 p + a2 p^2" with zero coefficients omitted; "0" when zero.
  std::string str() const;
  /// Inverse of str(); accepts any term order and implicit unit coefficients.
  static PolyScalar parse(const std::string& s);

 private:
  std::vector<Rational> coeff_;  // coeff_[k] multiplies p^k; no trailing zeros
  void trim();
};

}  // namespace hecke
