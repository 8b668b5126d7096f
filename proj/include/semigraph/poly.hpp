#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace semigraph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Lowest-terms rendering: "p/q", or plain "p" when the denominator is 1.
std::string rational_str(const Rational& r);

// Dense univariate polynomial over exact rationals, coefficients stored
// ascending (c[0] + c[1] x + ...). Normalized so the leading coefficient is
// nonzero; the zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);

  static Polynomial constant(Rational c);
  // c1 * x + c0
  static Polynomial linear(Rational c0, Rational c1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  // Coefficient of x^k; zero beyond the degree.
  Rational coeff(int k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial pow(unsigned k) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

}  // namespace semigraph
