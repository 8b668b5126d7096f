#include "semigraph/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace semigraph {

namespace {

std::vector<std::string> numbered_labels(std::int64_t n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  return labels;
}

void require_positive(std::int64_t n) {
  if (n < 1) throw ValidationError("family parameter must satisfy n >= 1");
}

double to_d(const Rational& r) { return r.convert_to<double>(); }

// One guarded Newton step; kept only when it does not worsen the residual.
double polish_root(double x, const Polynomial& f, const Polynomial& df) {
  const double fx = f(x);
  const double dfx = df(x);
  if (dfx == 0.0) return x;
  const double candidate = x - fx / dfx;
  return std::abs(f(candidate)) <= std::abs(fx) ? candidate : x;
}

}  // namespace

double ExactEigenvalue::value() const {
  double v = to_d(a);
  if (!is_rational()) v += to_d(b) * std::sqrt(static_cast<double>(d));
  return v;
}

std::string ExactEigenvalue::str() const {
  if (is_rational()) return rational_str(a);
  std::string s;
  if (a != 0) s = rational_str(a) + (b < 0 ? " - " : " + ");
  else if (b < 0) s = "-";
  const Rational mag = b < 0 ? Rational(-b) : b;
  if (mag != 1) s += rational_str(mag) + "*";
  return s + "sqrt(" + std::to_string(d) + ")";
}

Polynomial ClosedFormSpectrum::expand() const {
  Polynomial p = residual;
  for (const auto& [value, mult] : fixed) {
    if (value.is_rational()) {
      p = p * Polynomial::linear(-value.a, 1).pow(static_cast<unsigned>(mult));
      continue;
    }
    if (value.b < 0) continue;  // handled with its conjugate below
    const auto partner = std::find_if(fixed.begin(), fixed.end(), [&](const auto& entry) {
      return entry.first.a == value.a && entry.first.b == -value.b && entry.first.d == value.d;
    });
    if (partner == fixed.end() || partner->second != mult)
      throw std::logic_error("surd eigenvalue without a matching conjugate");
    // (x - (a+b*sqrt(d)))(x - (a-b*sqrt(d))) = x^2 - 2a x + a^2 - b^2 d
    Polynomial quad({value.a * value.a - value.b * value.b * value.d, -2 * value.a, Rational(1)});
    p = p * quad.pow(static_cast<unsigned>(mult));
  }
  return p;
}

std::vector<double> ClosedFormSpectrum::values() const {
  std::vector<double> out;
  for (const auto& [value, mult] : fixed)
    out.insert(out.end(), static_cast<std::size_t>(mult), value.value());

  switch (residual.degree()) {
    case -1:
    case 0: break;
    case 1: out.push_back(to_d(-residual.coeff(0) / residual.coeff(1))); break;
    case 2: {
      auto r = solve_quadratic_real(residual.coeff(1), residual.coeff(0));
      out.insert(out.end(), r.begin(), r.end());
      break;
    }
    case 3: {
      auto r = solve_cubic_real(residual.coeff(2), residual.coeff(1), residual.coeff(0));
      out.insert(out.end(), r.begin(), r.end());
      break;
    }
    default: throw std::logic_error("residual degree above 3 is not supported");
  }
  std::sort(out.begin(), out.end());
  return out;
}

Semigraph gen_star(std::int64_t n) {
  require_positive(n);
  std::vector<Edge> edges;
  edges.emplace_back(std::vector<VertexIndex>{1, 0, 2});
  for (std::int64_t k = 3; k < n + 3; ++k)
    edges.emplace_back(std::vector<VertexIndex>{0, static_cast<VertexIndex>(k)});
  return Semigraph(numbered_labels(n + 3), std::move(edges));
}

Semigraph gen_tree3(std::int64_t n) {
  require_positive(n);
  std::vector<Edge> edges;
  for (std::int64_t i = 1; i <= n; ++i) {
    edges.emplace_back(std::vector<VertexIndex>{0, static_cast<VertexIndex>(2 * i - 1),
                                                static_cast<VertexIndex>(2 * i)});
  }
  return Semigraph(numbered_labels(2 * n + 1), std::move(edges));
}

ClosedFormSpectrum star_spectrum_closed(std::int64_t n) {
  require_positive(n);
  ClosedFormSpectrum s;
  s.order = static_cast<Eigen::Index>(n + 3);
  s.fixed.push_back({ExactEigenvalue{Rational(0), Rational(0), 0}, 1});
  if (n >= 2) s.fixed.push_back({ExactEigenvalue{Rational(1, 2), Rational(0), 0}, n - 1});
  s.residual = Polynomial({Rational(-(5 * n + 15), 2), Rational(19 + 3 * n),
                           Rational(-(n + 17), 2), Rational(1)});
  return s;
}

ClosedFormSpectrum tree3_spectrum_closed(std::int64_t n) {
  require_positive(n);
  ClosedFormSpectrum s;
  s.order = static_cast<Eigen::Index>(2 * n + 1);
  s.fixed.push_back({ExactEigenvalue{Rational(0), Rational(0), 0}, 1});
  if (n >= 2) {
    s.fixed.push_back({ExactEigenvalue{Rational(5, 2), Rational(-1, 2), 5}, n - 1});
    s.fixed.push_back({ExactEigenvalue{Rational(5, 2), Rational(1, 2), 5}, n - 1});
  }
  s.residual = Polynomial({Rational(10 * n + 5), Rational(-(3 * n + 5)), Rational(1)});
  return s;
}

std::array<double, 3> solve_cubic_real(const Rational& c2, const Rational& c1,
                                       const Rational& c0) {
  // Depressed form t^3 + p t + q via x = t - c2/3, in exact arithmetic so
  // the discriminant sign test is not subject to cancellation.
  const Rational p = c1 - c2 * c2 / 3;
  const Rational q = c2 * c2 * c2 * 2 / 27 - c2 * c1 / 3 + c0;
  const Rational four_p3 = 4 * p * p * p;
  const Rational twenty7_q2 = 27 * q * q;
  const Rational disc = -four_p3 - twenty7_q2;

  const double scale = std::abs(to_d(four_p3)) + std::abs(to_d(twenty7_q2));
  if (disc < 0 && scale > 0.0 && -to_d(disc) > 1e-6 * scale)
    throw ValidationError("cubic has complex roots (negative discriminant)");

  const double shift = to_d(c2) / 3.0;
  std::array<double, 3> roots{};
  if (p >= 0) {
    // Only reachable with p and q both essentially zero: a triple root.
    const double t = std::cbrt(-to_d(q));
    roots = {t - shift, t - shift, t - shift};
  } else {
    const double pd = to_d(p);
    const double m = 2.0 * std::sqrt(-pd / 3.0);
    const double cos_arg =
        std::clamp(3.0 * to_d(q) / (2.0 * pd) * std::sqrt(-3.0 / pd), -1.0, 1.0);
    const double theta = std::acos(cos_arg);
    for (int k = 0; k < 3; ++k) {
      const double t =
          m * std::cos(theta / 3.0 - 2.0 * std::numbers::pi * static_cast<double>(k) / 3.0);
      roots[static_cast<std::size_t>(k)] = t - shift;
    }
  }

  const Polynomial f({c0, c1, c2, Rational(1)});
  const Polynomial df({c1, 2 * c2, Rational(3)});
  for (double& r : roots) r = polish_root(r, f, df);
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::array<double, 2> solve_quadratic_real(const Rational& c1, const Rational& c0) {
  const Rational disc = c1 * c1 - 4 * c0;
  const double scale = std::abs(to_d(c1 * c1)) + std::abs(to_d(4 * c0));
  if (disc < 0 && scale > 0.0 && -to_d(disc) > 1e-6 * scale)
    throw ValidationError("quadratic has complex roots (negative discriminant)");

  const double sd = disc > 0 ? std::sqrt(to_d(disc)) : 0.0;
  const double b = to_d(c1);
  if (sd == 0.0) return {-b / 2.0, -b / 2.0};
  const double q = -(b + std::copysign(sd, b)) / 2.0;
  std::array<double, 2> roots{q, q != 0.0 ? to_d(c0) / q : -b};
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace semigraph
