#pragma once

#include <array>
#include <string>
#include <vector>

#include "semigraph/poly.hpp"
#include "semigraph/semigraph.hpp"
#include "semigraph/types.hpp"

namespace semigraph {

// Exact eigenvalue a + b*sqrt(d) with rational a, b and a nonnegative
// integer d; b == 0 (or d <= 1 trivially rational) means a plain rational.
// Surds appear in conjugate pairs of equal multiplicity, so products of
// their linear factors stay rational.
struct ExactEigenvalue {
  Rational a;
  Rational b;
  std::int64_t d = 0;

  bool is_rational() const { return b == 0 || d == 0; }
  double value() const;
  std::string str() const;  // "0", "1/2", "5/2 - 1/2*sqrt(5)"
};

// Spectrum of a parametric family: eigenvalues known in closed form with
// their multiplicities, plus a residual polynomial whose real roots
// complete the spectrum. Total multiplicity + degree(residual) = order.
struct ClosedFormSpectrum {
  Eigen::Index order = 0;
  std::vector<std::pair<ExactEigenvalue, std::int64_t>> fixed;
  Polynomial residual;  // monic, exact rational coefficients, degree <= 3

  // Full characteristic polynomial: product of the fixed linear factors
  // (conjugate surd pairs multiplied jointly into rational quadratics)
  // times the residual, in exact arithmetic.
  Polynomial expand() const;

  // Every eigenvalue numerically, ascending, multiplicities expanded.
  std::vector<double> values() const;
};

// Star on n+3 vertices: one 3-edge (v2, v1, v3) through the center v1 plus
// n spokes (v1, v_k). The center is middle-end, so every spoke is a half
// edge with adjacency weight 1/2.
Semigraph gen_star(std::int64_t n);

// Rooted 3-uniform tree on 2n+1 vertices: n full 3-edges
// (v1, v_{2i}, v_{2i+1}) sharing the pure-end root v1.
Semigraph gen_tree3(std::int64_t n);

// Star Laplacian spectrum: 0, 1/2 with multiplicity n-1, and the roots of
// lambda^3 - ((n+17)/2) lambda^2 + (19+3n) lambda - (5n+15)/2.
ClosedFormSpectrum star_spectrum_closed(std::int64_t n);

// Tree Laplacian spectrum: 0, (5 +- sqrt(5))/2 each with multiplicity n-1,
// and the roots of lambda^2 - (3n+5) lambda + 10n+5.
ClosedFormSpectrum tree3_spectrum_closed(std::int64_t n);

// Real roots of the monic cubic x^3 + c2 x^2 + c1 x + c0, ascending.
// Trigonometric solution with one Newton polish per root. The coefficients
// must describe a cubic with three real roots (discriminant computed in
// exact arithmetic; a significantly negative value throws, a tiny negative
// one is clamped to the repeated-root configuration).
std::array<double, 3> solve_cubic_real(const Rational& c2, const Rational& c1, const Rational& c0);

// Real roots of the monic quadratic x^2 + c1 x + c0, ascending; same
// discriminant policy as solve_cubic_real.
std::array<double, 2> solve_quadratic_real(const Rational& c1, const Rational& c0);

}  // namespace semigraph
